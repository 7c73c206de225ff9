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

#ifndef DISTNORM_SPLITMAP_HPP
#define DISTNORM_SPLITMAP_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/perm4.hpp"

namespace distnorm::splitmap {

// Four-copy traces are contractions
//   tr U_sigma (M1 (x) M2 (x) M3 (x) M4) = sum_i prod_a <i_a| M_a |i_{sigma(a)}>,
// i.e. the column index of copy a is wired to the row index of copy
// sigma(a). Every function in this module and in moments uses this wiring.

struct SplitPair {
  Perm4 left;
  Perm4 right;
  bool operator==(const SplitPair&) const = default;
};

/// One row of the splitting table, in cycle notation.
struct SplitRow {
  const char* conjugacy_class;
  const char* sigma;
  const char* left;
  const char* right;
};

/// The 24 rows of the splitting table, grouped by conjugacy class.
std::span<const SplitRow> split_table();

/// {id, (14), (23), (1234), (1432), (12)(34), (14)(23)}.
const std::array<Perm4, 7>& set_a();
/// {id, (12)(34), (14)(23)}.
const std::array<Perm4, 3>& set_a0();
bool in_a(const Perm4& p);
bool in_a0(const Perm4& p);

/// Table lookup of (sigma^L, sigma^R).
SplitPair split(const Perm4& sigma);

/// Rebuilds (sigma^L, sigma^R) from the contraction wiring: X is the
/// network of copies 1, 2 and Y^dag that of copies 3, 4; tr XX^dag places
/// the mirror of copy 2 in slot 3 and of copy 1 in slot 4, tr YY^dag
/// places the mirror of copy 4 in slot 1 and of copy 3 in slot 2.
SplitPair derive_split(const Perm4& sigma);

/// Rows where derive_split disagrees with the table (empty when the
/// transcription is consistent).
std::vector<std::string> table_discrepancies();

/// sum_i prod_a <i_a| M_a |i_{sigma(a)}> for d x d matrices.
Complex contract4(const Perm4& sigma, const Matrix& m1, const Matrix& m2, const Matrix& m3, const Matrix& m4);

struct SplitCsCheck {
  double lhs = 0.0;          ///< |tr U_sigma (M1 M2 M3 M4)|
  double rhs = 0.0;          ///< sqrt(tr XX^dag tr YY^dag)
  Complex left_trace;        ///< tr U_{sigma^L}(M1 M2 M2 M1)
  Complex right_trace;       ///< tr U_{sigma^R}(M4 M3 M3 M4)
  bool traces_nonnegative = false;
  bool pass = false;
};

/// Cauchy-Schwarz step of the splitting map for four Hermitian d x d
/// matrices; passes iff lhs <= rhs (1 + 1e-9) and both right-hand traces
/// are real and non-negative.
SplitCsCheck verify_split_cs(const Perm4& sigma, const Matrix& m1, const Matrix& m2, const Matrix& m3,
                             const Matrix& m4);

/// Componentwise tau pi_j tau^-1.
PermTuple conj_diag(const PermTuple& pi, const Perm4& tau);

/// Componentwise split of a tuple.
std::pair<PermTuple, PermTuple> split(const PermTuple& pi);

struct ClosureResult {
  bool closed = false;     ///< split(tau sigma tau^-1) in A0 x A0 for all sigma in A0, tau
  bool reachable = false;  ///< every tuple of S_4^K reduces to A0^K leaves
  int rounds = 0;          ///< fixed-point rounds needed for reachability
  std::vector<std::string> failures;
};

/// Exhaustive stability check of A0 under diagonal conjugation followed by
/// splitting, and reachability of A0^K from every K-tuple: a tuple is
/// reducible if it lies in A0^K, or if some diagonal conjugation makes
/// both halves of its split reducible.
ClosureResult a0_closure_check(int parties = 1);

struct CountingResult {
  int count_id = 0;          ///< #{sigma : sigma^L = id}
  int count_14 = 0;          ///< #{sigma : sigma^L = (14)}
  bool binomial_ok = false;  ///< sum_I 6^|I| 18^(K-|I|) == 24^K for K <= max_parties
  bool enumeration_ok = false;  ///< per-subset counts match 6^|I| 18^(K-|I|) by enumeration
  bool pass = false;
};

/// The counting argument behind the 18^K constant. Enumeration of S_4^K
/// is done for K <= min(max_parties, 3).
CountingResult counting_lemma(int max_parties = 6);

}  // namespace distnorm::splitmap

#endif  // DISTNORM_SPLITMAP_HPP
