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

#include "distnorm/povm.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "distnorm/errors.hpp"

namespace distnorm::povm {

namespace {

constexpr double kPovmTolerance = 1e-10;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Index checked_power(int d, int t) {
  Index n = 1;
  for (int i = 0; i < t; ++i) {
    n *= d;
    if (n > kCertifyMaxDim) {
      throw ScaleLimitError("design_certify: d^t = " + std::to_string(d) + "^" + std::to_string(t) +
                            " exceeds the limit of " + std::to_string(kCertifyMaxDim));
    }
  }
  return n;
}

Vector tensor_power_state(const Vector& v, int t) {
  Vector out = Vector::Ones(1);
  for (int c = 0; c < t; ++c) {
    Vector next(out.size() * v.size());
    for (Index i = 0; i < out.size(); ++i) next.segment(i * v.size(), v.size()) = out(i) * v;
    out = std::move(next);
  }
  return out;
}

Matrix moment_operator(const DesignEnsemble& ens, int t, Index n) {
  Matrix g = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < ens.size(); ++x) {
    Vector v = tensor_power_state(ens.states()[x], t);
    g.selfadjointView<Eigen::Lower>().rankUpdate(v, ens.weights()[x]);
  }
  return g.selfadjointView<Eigen::Lower>();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Povm::Povm(MultiSpace space, std::vector<Matrix> elements)
    : space_(std::move(space)), elements_(std::move(elements)) {
  const Index n = space_.total_dim();
  if (elements_.empty()) throw InvalidArgumentError("povm: no elements");
  Matrix total = Matrix::Zero(n, n);
  for (const Matrix& m : elements_) {
    if (m.rows() != n || m.cols() != n) throw InvalidArgumentError("povm: element does not match the space");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > hilbert::kHermitianTolerance)
      throw InvalidArgumentError("povm: element is not Hermitian");
    if (hilbert::eigenvalues(m).minCoeff() < -kPovmTolerance)
      throw InvalidArgumentError("povm: element is not positive semidefinite");
    total += m;
  }
  if ((total - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kPovmTolerance)
    throw InvalidArgumentError("povm: elements do not sum to the identity");
}

Povm Povm::trivial(const MultiSpace& space) {
  return Povm(space, {Matrix::Identity(space.total_dim(), space.total_dim())});
}

DesignEnsemble::DesignEnsemble(int dim, std::vector<double> weights, std::vector<Vector> states,
                               int claimed_order, std::string name)
    : dim_(dim),
      weights_(std::move(weights)),
      states_(std::move(states)),
      claimed_order_(claimed_order),
      name_(std::move(name)) {
  if (dim_ < 1) throw InvalidArgumentError("ensemble: dimension must be >= 1");
  if (states_.empty() || weights_.size() != states_.size())
    throw InvalidArgumentError("ensemble: need one weight per state");
  long double total = 0.0L;
  for (double p : weights_) {
    if (!(p >= 0.0)) throw InvalidArgumentError("ensemble: negative weight");
    total += p;
  }
  if (std::abs(static_cast<double>(total - 1.0L)) > 1e-12) throw InvalidArgumentError("ensemble: weights do not sum to 1");
  for (const Vector& v : states_) {
    if (v.size() != dim_) throw InvalidArgumentError("ensemble: state has wrong dimension");
    if (std::abs(v.norm() - 1.0) > 1e-10) throw InvalidArgumentError("ensemble: state is not normalized");
  }
}

Povm design_from_ensemble(const DesignEnsemble& ens) {
  const int d = ens.dim();
  Matrix first = Matrix::Zero(d, d);
  std::vector<Matrix> elements;
  elements.reserve(ens.size());
  for (std::size_t x = 0; x < ens.size(); ++x) {
    Matrix p = ens.projector(x);
    first += ens.weights()[x] * p;
    elements.push_back(d * ens.weights()[x] * p);
  }
  double gap = (first - Matrix::Identity(d, d) / d).cwiseAbs().maxCoeff();
  if (gap > kPovmTolerance) {
    throw InvalidArgumentError("design_from_ensemble: ensemble '" + ens.name() +
                               "' is not a 1-design (completeness violated by " + std::to_string(gap) + ")");
  }
  Povm m(MultiSpace({d}), std::move(elements));
  m.label_ = ens.name();
  if (ens.claimed_order() >= 1) {
    Certification c = design_certify(ens, ens.claimed_order());
    if (c.certified) m.certified_order_ = ens.claimed_order();
  }
  return m;
}

Matrix symmetric_projector(int d, int t) {
  const Index n = checked_power(d, t);
  Matrix sym = Matrix::Zero(n, n);
  std::vector<Permutation> perms = Permutation::all(static_cast<std::size_t>(t));
  for (const Permutation& pi : perms) sym += hilbert::permutation_operator(d, pi);
  return sym / static_cast<double>(perms.size());
}

Certification design_certify(const DesignEnsemble& ens, int t, double tolerance) {
  if (t < 1) throw InvalidArgumentError("design_certify: order must be >= 1");
  const Index n = checked_power(ens.dim(), t);
  Matrix target = symmetric_projector(ens.dim(), t) / binomial(ens.dim() + t - 1, t);
  Matrix g = moment_operator(ens, t, n);
  Certification c;
  c.order = t;
  c.residual = (g - target).norm();
  c.tolerance = tolerance;
  c.certified = c.residual <= tolerance;
  return c;
}

Certification design_certify_statistical(const DesignEnsemble& ens, int t) {
  if (t < 1) throw InvalidArgumentError("design_certify: order must be >= 1");
  const Index n = checked_power(ens.dim(), t);
  Matrix g = moment_operator(ens, t, n);
  // Every sample contributes a rank-one unit-norm matrix X, so the summed
  // entrywise variance is E||X||^2 - ||E X||^2 = 1 - ||G||^2.
  double sum_sq = 0.0;
  for (double p : ens.weights()) sum_sq += p * p;
  double variance = std::max(0.0, 1.0 - g.squaredNorm());
  double rms = std::sqrt(variance * sum_sq);
  Matrix target = symmetric_projector(ens.dim(), t) / binomial(ens.dim() + t - 1, t);
  Certification c;
  c.order = t;
  c.residual = (g - target).norm();
  c.tolerance = 3.0 * rms;
  c.certified = c.residual <= c.tolerance;
  return c;
}

Povm tensor_povm(std::span<const Povm> parts) {
  if (parts.empty()) throw InvalidArgumentError("tensor_povm: no parts");
  std::vector<int> dims;
  std::vector<Matrix> elements{Matrix::Identity(1, 1)};
  std::optional<int> order = parts.front().certified_design_order();
  std::string label;
  for (const Povm& part : parts) {
    dims.insert(dims.end(), part.space().dims().begin(), part.space().dims().end());
    std::vector<Matrix> next;
    next.reserve(elements.size() * part.size());
    for (const Matrix& a : elements) {
      for (const Matrix& b : part.elements()) {
        Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
        for (Index i = 0; i < a.rows(); ++i)
          for (Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        next.push_back(std::move(k));
      }
    }
    elements = std::move(next);
    if (!part.certified_design_order() || !order) {
      order.reset();
    } else {
      order = std::min(*order, *part.certified_design_order());
    }
    label += (label.empty() ? "" : "(x)") + part.label();
  }
  Povm m(MultiSpace(std::move(dims)), std::move(elements));
  m.certified_order_ = order;
  m.label_ = std::move(label);
  return m;
}

DesignEnsemble haar_sample_ensemble(int d, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgumentError("haar_sample_ensemble: need at least one sample");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vector> states;
  states.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(normal(rng), normal(rng));
    states.push_back(v / v.norm());
  }
  return DesignEnsemble(d, std::vector<double>(n, 1.0 / static_cast<double>(n)), std::move(states), 0,
                        "haar" + std::to_string(d));
}

DesignEnsemble ensemble_from_povm(const Povm& m) {
  if (m.space().parties() > 1) throw InvalidArgumentError("ensemble_from_povm: POVM must act on a single party");
  const int d = static_cast<int>(m.space().total_dim());
  std::vector<double> weights;
  std::vector<Vector> states;
  for (const Matrix& element : m.elements()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(element);
    if (solver.info() != Eigen::Success) throw NumericalError("ensemble_from_povm: eigensolver failed");
    const double top = solver.eigenvalues()(d - 1);
    if (top <= 0.0 || (d > 1 && std::abs(solver.eigenvalues()(d - 2)) > 1e-10 * top))
      throw InvalidArgumentError("ensemble_from_povm: element is not rank one");
    weights.push_back(element.trace().real() / d);
    states.push_back(solver.eigenvectors().col(d - 1));
  }
  // Absorb rounding so that the weights sum to one exactly enough.
  double total = 0.0;
  for (double p : weights) total += p;
  for (double& p : weights) p /= total;
  return DesignEnsemble(d, std::move(weights), std::move(states), m.certified_design_order().value_or(1),
                        m.label());
}

namespace catalog {

Vector bloch_state(double x, double y, double z) {
  Vector v(2);
  if (z > -1.0 + 1e-15) {
    v(0) = std::sqrt((1.0 + z) / 2.0);
    v(1) = Complex(x, y) / std::sqrt(2.0 * (1.0 + z));
  } else {
    v(0) = 0.0;
    v(1) = 1.0;
  }
  return v / v.norm();
}

namespace {

DesignEnsemble uniform_qubit(const std::vector<std::array<double, 3>>& bloch, int order, std::string name) {
  std::vector<Vector> states;
  for (const auto& b : bloch) {
    const double r = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    states.push_back(bloch_state(b[0] / r, b[1] / r, b[2] / r));
  }
  std::vector<double> weights(states.size(), 1.0 / static_cast<double>(states.size()));
  return DesignEnsemble(2, std::move(weights), std::move(states), order, std::move(name));
}

}  // namespace

DesignEnsemble tetrahedron() {
  return uniform_qubit({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, 2, "tetra");
}

DesignEnsemble octahedron() {
  return uniform_qubit({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, 3, "octa");
}

DesignEnsemble icosahedron() {
  const double phi = std::numbers::phi;
  std::vector<std::array<double, 3>> bloch;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      bloch.push_back({0.0, s1, s2 * phi});
      bloch.push_back({s1, s2 * phi, 0.0});
      bloch.push_back({s2 * phi, 0.0, s1});
    }
  }
  return uniform_qubit(bloch, 5, "icosa");
}

DesignEnsemble hesse_sic() {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex w2 = w * w;
  const std::vector<std::array<Complex, 3>> raw = {
      {0.0, 1.0, -1.0}, {0.0, w, -w2}, {0.0, w2, -w},  {-1.0, 0.0, 1.0}, {-w, 0.0, w2},
      {-w2, 0.0, w},    {1.0, -1.0, 0.0}, {w, -w2, 0.0}, {w2, -w, 0.0}};
  std::vector<Vector> states;
  for (const auto& r : raw) {
    Vector v(3);
    v << r[0], r[1], r[2];
    states.push_back(v / std::sqrt(2.0));
  }
  return DesignEnsemble(3, std::vector<double>(9, 1.0 / 9.0), std::move(states), 2, "hesse");
}

DesignEnsemble mub(int p) {
  if (!is_prime(p)) throw InvalidArgumentError("mub: dimension must be prime");
  std::vector<Vector> states;
  for (int i = 0; i < p; ++i) states.push_back(Vector::Unit(p, i));
  if (p == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    for (Complex phase : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
      Vector v(2);
      v << s, s * phase;
      states.push_back(v);
    }
  } else {
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        Vector v(p);
        for (int k = 0; k < p; ++k) {
          const int e = (a * k * k + b * k) % p;
          v(k) = std::polar(1.0 / std::sqrt(static_cast<double>(p)), 2.0 * std::numbers::pi * e / p);
        }
        states.push_back(v);
      }
    }
  }
  std::vector<double> weights(states.size(), 1.0 / static_cast<double>(states.size()));
  return DesignEnsemble(p, std::move(weights), std::move(states), 2, "mub" + std::to_string(p));
}

DesignEnsemble computational_basis(int d) {
  std::vector<Vector> states;
  for (int i = 0; i < d; ++i) states.push_back(Vector::Unit(d, i));
  return DesignEnsemble(d, std::vector<double>(static_cast<std::size_t>(d), 1.0 / d), std::move(states), 1,
                        "basis" + std::to_string(d));
}

DesignEnsemble by_name(std::string_view name) {
  auto suffix_number = [&](std::string_view prefix) -> int {
    std::string rest(name.substr(prefix.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgumentError("catalog: '" + std::string(name) + "' needs a numeric dimension");
    return std::stoi(rest);
  };
  if (name == "tetra") return tetrahedron();
  if (name == "octa") return octahedron();
  if (name == "icosa") return icosahedron();
  if (name == "hesse") return hesse_sic();
  if (name.starts_with("mub")) return mub(suffix_number("mub"));
  if (name.starts_with("basis")) return computational_basis(suffix_number("basis"));
  throw InvalidArgumentError("catalog: unknown design '" + std::string(name) + "'");
}

std::vector<std::string> names() { return {"tetra", "octa", "icosa", "hesse", "mub<p>", "basis<d>"}; }

}  // namespace catalog

}  // namespace distnorm::povm
