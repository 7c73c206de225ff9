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

#include "distnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "distnorm/detail/parallel.hpp"
#include "distnorm/errors.hpp"

namespace distnorm::norms {

namespace {

void require_space(const HermitianOp& delta, const hilbert::MultiSpace& space, const char* what) {
  if (delta.space().dims() != space.dims()) throw InvalidArgumentError(std::string(what) + ": space mismatch");
}

constexpr std::size_t kChunk = 65536;

/// Draws one normalized ket per party.
class ProductSampler {
 public:
  explicit ProductSampler(const std::vector<PartySampler>& samplers) {
    for (const PartySampler& s : samplers) {
      if (const auto* ens = std::get_if<DesignEnsemble>(&s)) {
        parties_.push_back({ens->dim(), &ens->states(),
                            std::discrete_distribution<std::size_t>(ens->weights().begin(), ens->weights().end())});
      } else {
        parties_.push_back({std::get<HaarParty>(s).dim, nullptr, {}});
      }
    }
  }

  Vector draw(std::mt19937_64& rng) {
    Vector psi = Vector::Ones(1);
    for (Party& p : parties_) {
      Vector v;
      if (p.states) {
        v = (*p.states)[p.pick(rng)];
      } else {
        v.resize(p.dim);
        for (int i = 0; i < p.dim; ++i) v(i) = Complex(gauss_(rng), gauss_(rng));
        v /= v.norm();
      }
      Vector next(psi.size() * v.size());
      for (Index a = 0; a < psi.size(); ++a) next.segment(a * v.size(), v.size()) = psi(a) * v;
      psi.swap(next);
    }
    return psi;
  }

 private:
  struct Party {
    int dim;
    const std::vector<Vector>* states;
    std::discrete_distribution<std::size_t> pick;
  };
  std::vector<Party> parties_;
  std::normal_distribution<double> gauss_;
};

struct Moments {
  double s1 = 0, s1sq = 0, s2 = 0, s2sq = 0, s4 = 0, s4sq = 0;
};

std::vector<SubsetMask> representatives(int parties, std::span<const SubsetMask> constraints) {
  std::vector<SubsetMask> out;
  const std::uint32_t top = parties > 0 ? 1u << (parties - 1) : 0u;
  for (SubsetMask m : constraints) {
    if (!m.valid_for(hilbert::MultiSpace(std::vector<int>(static_cast<std::size_t>(parties), 1))))
      throw InvalidArgumentError("ppt constraint references a party beyond K");
    const SubsetMask rep = (m.bits() & top) ? m.complement(parties) : m;
    if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
  }
  if (out.empty()) out.push_back(SubsetMask());
  return out;
}

double spectral_radius(const Matrix& hermitian) {
  const Eigen::VectorXd ev = hilbert::eigenvalues(hermitian);
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

Matrix clip_unit(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

class PptProblem {
 public:
  PptProblem(const HermitianOp& delta, std::vector<SubsetMask> sets, std::size_t sweeps)
      : delta_(delta), sets_(std::move(sets)), sweeps_(sweeps) {}

  Matrix transpose(const Matrix& a, SubsetMask m) const {
    return m.empty() ? a : hilbert::partial_transpose(delta_.space(), a, m);
  }

  /// Dykstra's alternating projections onto the spectral boxes.
  Matrix project(const Matrix& start) const {
    Matrix x = start;
    std::vector<Matrix> incr(sets_.size(), Matrix::Zero(x.rows(), x.cols()));
    for (std::size_t sweep = 0; sweep < sweeps_; ++sweep) {
      const Matrix before = x;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const Matrix y = x + incr[i];
        Matrix p = transpose(clip_unit(transpose(y, sets_[i])), sets_[i]);
        p = (p + p.adjoint()) * 0.5;
        incr[i] = y - p;
        x = p;
      }
      if (sets_.size() == 1 || (x - before).norm() <= 1e-13 * std::max(1.0, x.norm())) break;
    }
    return x;
  }

  double radius(const Matrix& a) const {
    double r = 0.0;
    for (SubsetMask m : sets_) r = std::max(r, spectral_radius(transpose(a, m)));
    return r;
  }

  /// Rescales into the feasible set.
  Matrix feasible(const Matrix& a) const { return a / std::max(1.0, radius(a)); }

  double value(const Matrix& a) const { return std::abs((a * delta_.matrix()).trace().real()); }

 private:
  const HermitianOp& delta_;
  std::vector<SubsetMask> sets_;
  std::size_t sweeps_;
};

}  // namespace

double povm_norm(const HermitianOp& delta, const Povm& m) {
  require_space(delta, m.space(), "povm_norm");
  double sum = 0.0;
  for (const Matrix& e : m.elements()) sum += std::abs((delta.matrix() * e).trace().real());
  return sum;
}

double norm_2K(const HermitianOp& delta) {
  double sum = 0.0;
  for (SubsetMask traced : hilbert::all_subsets(delta.space().parties()))
    sum += hilbert::partial_trace(delta.space(), delta.matrix(), traced).squaredNorm();
  return std::sqrt(sum);
}

SamplingResult povm_norm_sampling(const HermitianOp& delta, const std::vector<PartySampler>& samplers,
                                  std::size_t samples, std::uint64_t seed) {
  if (static_cast<int>(samplers.size()) != delta.space().parties())
    throw InvalidArgumentError("povm_norm_sampling: need one sampler per party");
  for (std::size_t j = 0; j < samplers.size(); ++j) {
    const int d = std::visit([](const auto& s) {
      if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HaarParty>) return s.dim;
      else return s.dim();
    }, samplers[j]);
    if (d != delta.space().dim(static_cast<int>(j)))
      throw InvalidArgumentError("povm_norm_sampling: sampler dimension differs from party " + std::to_string(j + 1));
  }
  if (samples == 0) throw InvalidArgumentError("povm_norm_sampling: samples must be positive");

  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> partial(chunks);
  const Matrix& dm = delta.matrix();
  detail::parallel_for(chunks, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 rng(seq);
    ProductSampler sampler(samplers);
    const std::size_t n = std::min(kChunk, samples - c * kChunk);
    Moments acc;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector psi = sampler.draw(rng);
      const double s = psi.dot(dm * psi).real();
      const double a = std::abs(s), s2 = s * s, s4 = s2 * s2;
      acc.s1 += a;
      acc.s1sq += a * a;
      acc.s2 += s2;
      acc.s2sq += s2 * s2;
      acc.s4 += s4;
      acc.s4sq += s4 * s4;
    }
    partial[c] = acc;
  });
  Moments tot;
  for (const Moments& m : partial) {
    tot.s1 += m.s1;
    tot.s1sq += m.s1sq;
    tot.s2 += m.s2;
    tot.s2sq += m.s2sq;
    tot.s4 += m.s4;
    tot.s4sq += m.s4sq;
  }
  const double n = static_cast<double>(samples);
  auto se = [n](double sum, double sumsq) {
    if (n < 2) return 0.0;
    const double mean = sum / n;
    const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1));
    return std::sqrt(var / n);
  };
  const double d = static_cast<double>(delta.dim());
  SamplingResult r;
  r.samples = samples;
  r.estimate = d * tot.s1 / n;
  r.std_error = d * se(tot.s1, tot.s1sq);
  r.mean_s2 = tot.s2 / n;
  r.se_s2 = se(tot.s2, tot.s2sq);
  r.mean_s4 = tot.s4 / n;
  r.se_s4 = se(tot.s4, tot.s4sq);
  return r;
}

SamplingResult uniform_norm_sampling(const HermitianOp& delta, std::size_t samples, std::uint64_t seed) {
  std::vector<PartySampler> samplers;
  for (int d : delta.space().dims()) samplers.emplace_back(HaarParty{d});
  return povm_norm_sampling(delta, samplers, samples, seed);
}

double uniform_norm_qubit_exact(const HermitianOp& delta) {
  if (delta.dim() != 2) throw InvalidArgumentError("uniform_norm_qubit_exact: operator is not a single qubit");
  // Delta = (a 1 + r . sigma) / 2; tr Delta psi = (a + |r| u) / 2 with u
  // uniform on [-1, 1].
  const Matrix& m = delta.matrix();
  const double a = (m(0, 0) + m(1, 1)).real();
  const double rx = 2.0 * m(0, 1).real(), ry = -2.0 * m(0, 1).imag(), rz = (m(0, 0) - m(1, 1)).real();
  const double rho = std::sqrt(rx * rx + ry * ry + rz * rz);
  auto f = [a, rho](double u) { return std::abs(a + rho * u); };
  using boost::math::quadrature::gauss_kronrod;
  double integral;
  if (rho > 0.0 && std::abs(a) < rho) {
    const double kink = -a / rho;
    integral = gauss_kronrod<double, 15>::integrate(f, -1.0, kink) + gauss_kronrod<double, 15>::integrate(f, kink, 1.0);
  } else {
    integral = gauss_kronrod<double, 15>::integrate(f, -1.0, 1.0);
  }
  // d * E|tr Delta psi| = 2 * (1/2) * (1/2) * integral.
  return 0.5 * integral;
}

double uniform_norm_product_exact(std::span<const HermitianOp> factors) {
  double v = 1.0;
  for (const HermitianOp& f : factors) v *= uniform_norm_qubit_exact(f);
  return v;
}

AscentResult ppt_norm_ascent(const HermitianOp& delta, const AscentConfig& cfg) {
  const std::vector<SubsetMask> all = hilbert::all_subsets(delta.space().parties());
  return ppt_norm_ascent(delta, all, cfg);
}

AscentResult ppt_norm_ascent(const HermitianOp& delta, std::span<const SubsetMask> constraints,
                             const AscentConfig& cfg) {
  if (!(cfg.initial_step > 0) || !(cfg.decay >= 0) || cfg.max_iterations == 0 || cfg.dykstra_sweeps == 0 ||
      !(cfg.tolerance > 0))
    throw InvalidArgumentError("ppt_norm_ascent: configuration values must be positive");
  const int parties = delta.space().parties();
  const PptProblem prob(delta, representatives(parties, constraints), cfg.dykstra_sweeps);
  const Index n = delta.dim();
  AscentResult r;
  const double hs = delta.matrix().norm();
  if (hs == 0.0) {
    r.witness = Matrix::Zero(n, n);
    r.converged = true;
    r.max_violation = -1.0;
    return r;
  }

  Matrix best;
  double best_value = -1.0;
  auto consider = [&](const Matrix& a) {
    const Matrix f = prob.feasible(a);
    const double v = prob.value(f);
    if (v > best_value) {
      best_value = v;
      best = f;
    }
    return v;
  };
  // ||A||_2 <= 1 implies every ||A^{Gamma_I}||_inf <= 1.
  consider(delta.matrix() / hs);
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(delta.matrix());
    const Eigen::VectorXd sign = es.eigenvalues().unaryExpr([](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); });
    consider(es.eigenvectors() * sign.asDiagonal() * es.eigenvectors().adjoint());
  }

  const Matrix g = delta.matrix() / hs;
  Matrix a = prob.project(delta.matrix() / spectral_radius(delta.matrix()));
  double previous = consider(a);
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    const double eta = cfg.initial_step / std::pow(static_cast<double>(k), cfg.decay);
    a = prob.project(a + eta * g);
    const double current = consider(a);
    r.iterations = k;
    const bool flat = std::abs(current - previous) <= cfg.tolerance * std::max(1.0, current);
    previous = current;
    if (flat) {
      r.converged = true;
      break;
    }
  }
  r.witness = best;
  r.lower_bound = best_value;
  r.max_violation = prob.radius(best) - 1.0;
  return r;
}

DualBound ppt_norm_dual_upper(const HermitianOp& delta) {
  const std::vector<SubsetMask> all = hilbert::all_subsets(delta.space().parties());
  return ppt_norm_dual_upper(delta, all);
}

DualBound ppt_norm_dual_upper(const HermitianOp& delta, std::span<const SubsetMask> constraints) {
  const std::vector<SubsetMask> reps = representatives(delta.space().parties(), constraints);
  std::vector<double> values(reps.size());
  detail::parallel_for(reps.size(), [&](std::size_t i) {
    values[i] = hilbert::trace_norm(hilbert::partial_transpose(delta.space(), delta.matrix(), reps[i]));
  });
  DualBound b;
  b.value = INFINITY;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (values[i] < b.value) {
      b.value = values[i];
      b.argmin = reps[i];
    }
  }
  return b;
}

SepWitness sep_ball_witness(const HermitianOp& delta) {
  const double hs = hilbert::schatten_2(delta);
  if (hs == 0.0) throw InvalidArgumentError("sep_ball_witness: zero operator");
  const int parties = delta.space().parties();
  SepWitness w;
  const double c = std::pow(2.0, 1.0 - 0.5 * parties);
  w.witness = delta.matrix() * (c / hs);
  w.value = (w.witness * delta.matrix()).trace().real();
  const Matrix id = Matrix::Identity(delta.dim(), delta.dim());
  w.min_eigenvalue = INFINITY;
  for (SubsetMask m : hilbert::all_subsets(parties)) {
    for (double s : {1.0, -1.0}) {
      const Matrix e = hilbert::partial_transpose(delta.space(), Matrix((id + s * w.witness) * 0.5), m);
      w.min_eigenvalue = std::min(w.min_eigenvalue, hilbert::eigenvalues(e).minCoeff());
    }
  }
  w.ppt = w.min_eigenvalue >= -1e-9;
  return w;
}

ErrorProbability error_probability(const hilbert::DiscriminationInstance&, double norm_value) {
  if (!(norm_value >= 0.0)) throw InvalidArgumentError("error_probability: norm value must be nonnegative");
  if (norm_value > 1.0 + 1e-9)
    throw NumericalError("error_probability: norm value " + std::to_string(norm_value) +
                         " exceeds 1 for unit-trace states");
  ErrorProbability p;
  p.value = 0.5 * (1.0 - norm_value);
  if (p.value < 0.0) {
    p.value = 0.0;
    p.clamped = true;
  }
  return p;
}

}  // namespace distnorm::norms
