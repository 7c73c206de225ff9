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

#ifndef DISTNORM_NORMS_HPP
#define DISTNORM_NORMS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/povm.hpp"

namespace distnorm::norms {

using hilbert::HermitianOp;
using hilbert::SubsetMask;
using povm::DesignEnsemble;
using povm::Povm;

/// sum_x |tr Delta M_x|.
double povm_norm(const HermitianOp& delta, const Povm& m);

/// sqrt(sum_{I subset [K]} tr (tr_I Delta)^2).
double norm_2K(const HermitianOp& delta);

/// A party measured with the unitarily invariant (Haar) rank-one POVM.
struct HaarParty {
  int dim = 2;
};
using PartySampler = std::variant<DesignEnsemble, HaarParty>;

inline constexpr std::size_t kDefaultSamples = 1000000;

struct SamplingResult {
  std::size_t samples = 0;
  double estimate = 0.0;   ///< D * mean |S|
  double std_error = 0.0;
  double mean_s2 = 0.0;    ///< mean S^2 (no factor D)
  double se_s2 = 0.0;
  double mean_s4 = 0.0;
  double se_s4 = 0.0;
};

/// Monte-Carlo estimate of the norm of the product POVM whose party j
/// draws P_j from samplers[j]; S = tr Delta (P_1 (x) ... (x) P_K).
/// Samples are drawn in fixed chunks, each seeded from (seed, chunk), so
/// results do not depend on the thread count.
SamplingResult povm_norm_sampling(const HermitianOp& delta, const std::vector<PartySampler>& samplers,
                                  std::size_t samples, std::uint64_t seed);
/// Every party Haar.
SamplingResult uniform_norm_sampling(const HermitianOp& delta, std::size_t samples, std::uint64_t seed);

/// Uniform-POVM norm of a qubit operator by 1-D quadrature.
double uniform_norm_qubit_exact(const HermitianOp& delta);
/// Product of uniform_norm_qubit_exact over single-qubit factors; equals
/// the uniform norm of their tensor product.
double uniform_norm_product_exact(std::span<const HermitianOp> factors);

struct AscentConfig {
  double initial_step = 1.0;
  double decay = 0.5;             ///< eta_k = initial_step / k^decay
  std::size_t max_iterations = 5000;
  std::size_t dykstra_sweeps = 50;
  double tolerance = 1e-8;
};

struct AscentResult {
  double lower_bound = 0.0;   ///< |tr A Delta| for the returned witness
  Matrix witness;             ///< feasible: every A^{Gamma_I} in [-1, 1]
  double max_violation = 0.0; ///< max_I ||A^{Gamma_I}||_inf - 1 (<= 0 up to rounding)
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lower bound on ||Delta||_PPT by projected ascent over
/// {A : -1 <= A^{Gamma_I} <= 1 for all I}.
AscentResult ppt_norm_ascent(const HermitianOp& delta, const AscentConfig& cfg = {});
/// Same with only the listed partial transposes constrained (the
/// constraint for I is implied by that for its complement).
AscentResult ppt_norm_ascent(const HermitianOp& delta, std::span<const SubsetMask> constraints,
                             const AscentConfig& cfg = {});

struct DualBound {
  double value = 0.0;   ///< min_I ||Delta^{Gamma_I}||_1
  SubsetMask argmin;
};
DualBound ppt_norm_dual_upper(const HermitianOp& delta);
DualBound ppt_norm_dual_upper(const HermitianOp& delta, std::span<const SubsetMask> constraints);

struct SepWitness {
  Matrix witness;          ///< 2^{1-K/2} Delta / ||Delta||_2
  double value = 0.0;      ///< tr A Delta
  double min_eigenvalue = 0.0;  ///< over (1 +- A)^{Gamma_I} / 2, all I
  bool ppt = false;        ///< min_eigenvalue >= -1e-9
};
SepWitness sep_ball_witness(const HermitianOp& delta);

struct ErrorProbability {
  double value = 0.0;
  bool clamped = false;
};
/// 1/2 (1 - norm_value) for Delta = q rho0 - (1 - q) rho1.
ErrorProbability error_probability(const hilbert::DiscriminationInstance& inst, double norm_value);

}  // namespace distnorm::norms

#endif  // DISTNORM_NORMS_HPP
