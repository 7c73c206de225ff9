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

#ifndef DISTNORM_MOMENTS_HPP
#define DISTNORM_MOMENTS_HPP

#include <cstddef>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/perm4.hpp"

namespace distnorm::moments {

using hilbert::HermitianOp;
using hilbert::SubsetMask;

/// Default cap on the estimated number of scalar multiplications of a
/// sum over S_4^K.
inline constexpr double kDefaultBudget = 1e9;

/// tr Delta^{(x)4} U_pi with the contraction wiring of splitmap: copy q
/// of Delta has row index i_q and column index whose party-j digit is
/// taken from i_{pi_j(q)}. Summed directly over the D^4 index tuples.
/// Throws NumericalError if pi lies in A^K and the result is not real.
Complex perm_trace(const HermitianOp& delta, const PermTuple& pi);

/// perm_trace for every tuple of S_4^K, in tuple_from_index order.
/// Throws ScaleLimitError when 4 * 24^K * D^4 exceeds `budget`.
std::vector<Complex> all_perm_traces(const HermitianOp& delta, double budget = kDefaultBudget);

/// 4 * 24^K * D^4.
double perm_sum_work(const HermitianOp& delta);

/// tr (tr_I Delta)^2 for every I, indexed by the bits of I.
std::vector<double> subset_square_traces(const HermitianOp& delta);
/// sum_I tr (tr_I Delta)^2 = ||Delta||_2(K)^2.
double sum_subset_square_traces(const HermitianOp& delta);

/// E S^2 over a product of 2-designs, in closed form.
double second_moment(const HermitianOp& delta);

/// E S^4 over a product of 4-designs: the sum of perm_trace over S_4^K
/// divided by prod_j d_j (d_j+1)(d_j+2)(d_j+3).
double fourth_moment(const HermitianOp& delta, double budget = kDefaultBudget);

struct MomentPair {
  double s2 = 0.0;
  double s4 = 0.0;
  /// s2^3 / s4, or 0 when s4 == 0.
  double berger_bound() const { return s4 > 0.0 ? s2 * s2 * s2 / s4 : 0.0; }
};

MomentPair moment_pair(const HermitianOp& delta, double budget = kDefaultBudget);

/// D sqrt(E S^2^3 / E S^4), a lower bound on ||Delta||_M for every product
/// of 4-designs. Zero for Delta = 0; NumericalError if s4 = 0 < s2.
double berger_lower_bound(const HermitianOp& delta, double budget = kDefaultBudget);

struct PropA1Result {
  double lhs = 0.0;  ///< Re sum_pi tr Delta^{(x)4} U_pi
  double imag = 0.0;
  double rhs = 0.0;  ///< 18^K [sum_I tr (tr_I Delta)^2]^2
  bool pass = false;
};

/// The 18^K fourth-versus-second moment inequality, by brute force.
PropA1Result prop_a1_check(const HermitianOp& delta, double budget = kDefaultBudget);

struct WeakA1Result {
  double max_t = 0.0;           ///< max_pi |perm_trace|
  PermTuple argmax;
  double bound = 0.0;           ///< max_I [tr (tr_I Delta)^2]^2
  bool pass = false;
  double aggregate_lhs = 0.0;   ///< Re sum_pi perm_trace
  double aggregate_rhs = 0.0;   ///< 24^K [sum_I tr (tr_I Delta)^2]^2
  bool aggregate_pass = false;
};

/// Per-tuple max form and the 24^K aggregate form of the weak bound.
WeakA1Result weak_a1_check(const HermitianOp& delta, double budget = kDefaultBudget);

/// Outcome of a check that runs over many permutation tuples.
struct SweepResult {
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Smallest (rhs - lhs) / scale seen; negative on violation.
  double worst_margin = 0.0;
  bool pass() const { return violations == 0; }
};

/// |t(pi)| <= sqrt(t(pi^L) t(pi^R)) <= t(pi^L)/2 + t(pi^R)/2 for every pi,
/// with t(pi^L), t(pi^R) real and non-negative.
SweepResult split_chain_check(const HermitianOp& delta, double budget = kDefaultBudget);

/// t(pi) <= max over A0^K of t(sigma) for every pi, and for every sigma in
/// A0^K, t(sigma) <= [tr (tr_I Delta)^2]^2 with I the parties where
/// sigma_j = id.
SweepResult bound_t_check(const HermitianOp& delta, double budget = kDefaultBudget);

/// perm_trace(conj_diag(pi, tau)) == perm_trace(pi) for all pi and tau.
SweepResult conjugation_invariance_check(const HermitianOp& delta, double budget = kDefaultBudget);

struct SeptempartiteResult {
  double lhs = 0.0;   ///< tr Delta^{(x)4} U_sigma (real for sigma in A^K)
  double rhs = 0.0;   ///< [tr (tr_{A,B} Delta)^2] [tr (tr_{A,C} Delta)^2]
  double trace_r = 0.0;
  double trace_s = 0.0;
  double min_eig_r = 0.0;
  double min_eig_s = 0.0;
  bool r_s_positive = false;   ///< R, S >= 0 and tr R, tr S match the factors
  bool pass = false;
};

/// Groups the parties of sigma in A^K into the seven blocks A..G by their
/// permutation, builds R = (P (x) 1_F')(1_J (x) Phi_FF')(P (x) 1_F') with
/// P = (tr_{A,B} Delta)^{Gamma_E} (and S likewise from tr_{A,C}), and
/// compares t(sigma) with tr R tr S.
SeptempartiteResult septempartite_check(const HermitianOp& delta, const PermTuple& sigma);

}  // namespace distnorm::moments

#endif  // DISTNORM_MOMENTS_HPP
