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

#ifndef DISTNORM_POVM_HPP
#define DISTNORM_POVM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distnorm/hilbert.hpp"

namespace distnorm::povm {

using hilbert::MultiSpace;

class DesignEnsemble;

/// A finite POVM: positive semidefinite M_x with sum_x M_x = 1.
///
/// When the POVM was built from certified t-design ensembles (directly or
/// as a tensor product of such), certified_design_order() reports the
/// smallest certified order over all tensor factors.
class Povm {
 public:
  /// Validates completeness (entrywise 1e-10) and positivity (min
  /// eigenvalue >= -1e-10) of every element.
  Povm(MultiSpace space, std::vector<Matrix> elements);

  static Povm trivial(const MultiSpace& space);

  const MultiSpace& space() const { return space_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<int> certified_design_order() const { return certified_order_; }
  const std::string& label() const { return label_; }

 private:
  friend Povm design_from_ensemble(const DesignEnsemble& ens);
  friend Povm tensor_povm(std::span<const Povm> parts);

  MultiSpace space_;
  std::vector<Matrix> elements_;
  std::optional<int> certified_order_;
  std::string label_;
};

/// Weighted ensemble {p_x, P_x = |psi_x><psi_x|} of rank-one projectors on
/// C^d, with the design order it is claimed to have.
class DesignEnsemble {
 public:
  DesignEnsemble(int dim, std::vector<double> weights, std::vector<Vector> states,
                 int claimed_order, std::string name = {});

  int dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Vector>& states() const { return states_; }
  Matrix projector(std::size_t x) const { return states_[x] * states_[x].adjoint(); }
  int claimed_order() const { return claimed_order_; }
  const std::string& name() const { return name_; }

 private:
  int dim_;
  std::vector<double> weights_;
  std::vector<Vector> states_;
  int claimed_order_;
  std::string name_;
};

struct Certification {
  int order = 0;
  bool certified = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Tolerance for exact (algebraic) designs.
inline constexpr double kCertifyTolerance = 1e-9;
/// Largest d^t for which the t-th moment operator is materialized.
inline constexpr Index kCertifyMaxDim = 1024;

/// M_x = d p_x P_x. Throws InvalidArgumentError when sum_x p_x P_x differs
/// from 1/d by more than 1e-10 entrywise. The claimed order is certified
/// on the way and recorded on the POVM when it passes.
Povm design_from_ensemble(const DesignEnsemble& ens);

/// Hilbert-Schmidt norm of sum_x p_x P_x^{(x)t} - Pi_Sym / C(d+t-1, t);
/// certified iff the residual is at most `tolerance`.
Certification design_certify(const DesignEnsemble& ens, int t, double tolerance = kCertifyTolerance);

/// As design_certify, with tolerance three times the root-mean-square
/// residual expected from sampling noise (estimated from the empirical
/// variance of the ensemble's entries). Meant for Haar surrogates.
Certification design_certify_statistical(const DesignEnsemble& ens, int t);

/// Pi_Sym on (C^d)^{(x)t}, built as (1/t!) sum over S_t of U_pi.
Matrix symmetric_projector(int d, int t);

/// All products M1_{x1} (x) ... (x) MK_{xK}, first part most significant.
Povm tensor_povm(std::span<const Povm> parts);

/// n Haar-random pure states with uniform weights, from a generator
/// seeded with `seed` only.
DesignEnsemble haar_sample_ensemble(int d, std::size_t n, std::uint64_t seed);

/// Inverse of design_from_ensemble for rank-one single-party POVMs:
/// p_x = tr M_x / d, P_x = M_x / tr M_x.
DesignEnsemble ensemble_from_povm(const Povm& m);

namespace catalog {

/// Qubit state with the given Bloch vector (unit length).
Vector bloch_state(double x, double y, double z);

DesignEnsemble tetrahedron();  ///< qubit SIC, exact 2-design
DesignEnsemble octahedron();   ///< six Pauli eigenstates, exact 3-design
DesignEnsemble icosahedron();  ///< twelve states, exact 5-design
DesignEnsemble hesse_sic();    ///< qutrit SIC (9 states), exact 2-design
/// Complete set of p + 1 mutually unbiased bases for prime p (2-design).
DesignEnsemble mub(int p);
/// Computational basis, a 1-design only.
DesignEnsemble computational_basis(int d);

/// "tetra", "octa", "icosa", "hesse", "mub<p>", "basis<d>".
DesignEnsemble by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace catalog

}  // namespace distnorm::povm

#endif  // DISTNORM_POVM_HPP
