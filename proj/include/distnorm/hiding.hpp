// Copyright 2026 The distnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTNORM_HIDING_HPP
#define DISTNORM_HIDING_HPP

#include <string>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/permutation.hpp"

namespace distnorm::hiding {

using hilbert::HermitianOp;
using hilbert::MultiSpace;
using hilbert::SubsetMask;

inline constexpr Index kMaxHidingDim = 1024;

/// Permutes the K = pi.size() tensor factors of (C^d)^{(x)K}.
Matrix perm_operator_K(int d, const Permutation& pi);

/// |{i in I : pi(i) not in I}|.
int f_count(SubsetMask parties, const Permutation& pi);

struct PtNormCheck {
  double computed = 0.0;   ///< ||U_pi^{Gamma_I}||_1
  double predicted = 0.0;  ///< d^{K - f(I, pi)}
  bool pass = false;       ///< relative error <= 1e-9
};
PtNormCheck perm_pt_trace_norm_check(int d, const Permutation& pi, SubsetMask parties);

/// (1, m+1)(2, m+2)...(m, 2m) with m = floor(K/2).
Permutation canonical_pi(int parties);

struct HidingPair {
  HermitianOp rho0;
  HermitianOp rho1;
  std::string tag;     ///< "perm" or "werner"
  std::string params;
  /// Partial transposes that define the PPT class considered.
  std::vector<SubsetMask> constraints;
  /// min_I ||(rho0 - rho1)^{Gamma_I}||_1 over `constraints`.
  double dual_upper = 0.0;
  SubsetMask dual_argmin;
  /// perm: 2/(d^floor(K/2) - 1) ||rho0 - rho1||_1.
  /// werner: 2/(sqrt(D) + 1) ||rho0 - rho1||_1, the PPT value across the cut.
  double predicted_value = 0.0;

  /// rho0 - rho1 (trace norm 2).
  HermitianOp delta() const { return rho0 - rho1; }
  /// rho0/2 - rho1/2 (trace norm 1).
  HermitianOp delta_half() const { return (rho0 - rho1) * 0.5; }
};

/// rho0 = (1 + U_pi)/(d^K + d^ceil(K/2)), rho1 = (1 - U_pi)/(d^K - d^ceil(K/2))
/// with the canonical pi. Requires d >= 2, K >= 2.
HidingPair hiding_pair_perm(int d, int parties);

/// Symmetric and antisymmetric Werner states across the bipartition
/// (cut, complement); both sides must have dimension sqrt(D).
HidingPair hiding_pair_werner(const MultiSpace& space, SubsetMask cut);

/// (diag(1/2, -1/2))^{(x)K} on K qubits.
HermitianOp product_example_prop4(int parties);

/// (x)_j (P_j - Q_j)/d_j with P_j, Q_j complementary rank d_j/2 diagonal
/// projectors; every d_j must be even.
HermitianOp product_example_prop6(const std::vector<int>& dims);

}  // namespace distnorm::hiding

#endif  // DISTNORM_HIDING_HPP
