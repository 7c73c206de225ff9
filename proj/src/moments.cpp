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

#include "distnorm/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "distnorm/detail/parallel.hpp"
#include "distnorm/errors.hpp"
#include "distnorm/splitmap.hpp"

namespace distnorm::moments {

namespace {

std::size_t tuple_count(int parties) {
  std::size_t n = 1;
  for (int j = 0; j < parties; ++j) n *= 24;
  return n;
}

/// Precomputed wiring data for repeated perm_trace evaluations on one
/// operator. Complex products are spelled out on doubles; std::complex
/// multiplication carries NaN recovery code that dominates this loop.
class PermTraceKernel {
 public:
  explicit PermTraceKernel(const HermitianOp& delta)
      : dim_(static_cast<std::size_t>(delta.dim())), parties_(delta.space().parties()) {
    re_.resize(dim_ * dim_);
    im_.resize(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) {
        const Complex v = delta.matrix()(static_cast<Index>(r), static_cast<Index>(c));
        re_[r * dim_ + c] = v.real();
        im_[r * dim_ + c] = v.imag();
      }
    part_.resize(static_cast<std::size_t>(parties_) * dim_);
    for (int j = 0; j < parties_; ++j)
      for (std::size_t i = 0; i < dim_; ++i)
        part_[static_cast<std::size_t>(j) * dim_ + i] =
            static_cast<std::size_t>(delta.space().digit(static_cast<Index>(i), j) * delta.space().stride(j));
  }

  Complex operator()(const PermTuple& pi) const {
    if (static_cast<int>(pi.size()) != parties_)
      throw InvalidArgumentError("perm_trace: tuple has " + std::to_string(pi.size()) + " entries for " +
                                 std::to_string(parties_) + " parties");
    const std::size_t n = dim_;
    // contrib[a][q][i]: the part of copy q's column index supplied by
    // copy a sitting at index i.
    std::vector<std::size_t> contrib(16 * n, 0);
    for (int j = 0; j < parties_; ++j) {
      for (int q = 0; q < 4; ++q) {
        const int a = pi[static_cast<std::size_t>(j)](q);
        std::size_t* dst = &contrib[(static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(q)) * n];
        const std::size_t* src = &part_[static_cast<std::size_t>(j) * n];
        for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
      }
    }
    auto c = [&](int a, int q, std::size_t i) {
      return contrib[(static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(q)) * n + i];
    };
    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t i0 = 0; i0 < n; ++i0) {
      std::array<std::size_t, 4> b0;
      for (int q = 0; q < 4; ++q) b0[static_cast<std::size_t>(q)] = c(0, q, i0);
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        std::array<std::size_t, 4> b1;
        for (int q = 0; q < 4; ++q) b1[static_cast<std::size_t>(q)] = b0[static_cast<std::size_t>(q)] + c(1, q, i1);
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          std::array<std::size_t, 4> b2;
          for (int q = 0; q < 4; ++q) b2[static_cast<std::size_t>(q)] = b1[static_cast<std::size_t>(q)] + c(2, q, i2);
          const std::size_t* c30 = &contrib[(3 * 4 + 0) * n];
          const std::size_t* c31 = &contrib[(3 * 4 + 1) * n];
          const std::size_t* c32 = &contrib[(3 * 4 + 2) * n];
          const std::size_t* c33 = &contrib[(3 * 4 + 3) * n];
          for (std::size_t i3 = 0; i3 < n; ++i3) {
            const std::size_t e0 = i0 * n + b2[0] + c30[i3];
            const std::size_t e1 = i1 * n + b2[1] + c31[i3];
            const std::size_t e2 = i2 * n + b2[2] + c32[i3];
            const std::size_t e3 = i3 * n + b2[3] + c33[i3];
            const double ar = re_[e0] * re_[e1] - im_[e0] * im_[e1];
            const double ai = re_[e0] * im_[e1] + im_[e0] * re_[e1];
            const double br = re_[e2] * re_[e3] - im_[e2] * im_[e3];
            const double bi = re_[e2] * im_[e3] + im_[e2] * re_[e3];
            sum_re += ar * br - ai * bi;
            sum_im += ar * bi + ai * br;
          }
        }
      }
    }
    return {sum_re, sum_im};
  }

 private:
  std::size_t dim_;
  int parties_;
  std::vector<double> re_, im_;
  std::vector<std::size_t> part_;
};

double hs4(const HermitianOp& delta) {
  const double n2 = delta.matrix().squaredNorm();
  return n2 * n2;
}

void check_budget(const HermitianOp& delta, double budget) {
  const double work = perm_sum_work(delta);
  if (work > budget) {
    throw ScaleLimitError("sum over S_4^K needs about " + std::to_string(work) +
                          " multiplications, above the budget of " + std::to_string(budget));
  }
}

bool all_in_a(const PermTuple& pi) {
  return std::all_of(pi.begin(), pi.end(), [](const Perm4& p) { return splitmap::in_a(p); });
}

/// Re-indexes `mask` (over all parties) onto the parties kept in `keep`.
SubsetMask restrict_mask(SubsetMask mask, SubsetMask keep, int parties) {
  std::uint32_t bits = 0;
  int r = 0;
  for (int j = 0; j < parties; ++j) {
    if (!keep.contains(j)) continue;
    if (mask.contains(j)) bits |= 1u << r;
    ++r;
  }
  return SubsetMask(bits);
}

/// (P (x) 1_F')(1_J (x) Phi_FF')(P (x) 1_F') where F' is a copy of the
/// parties `f` of P's space appended at the end, and Phi_FF' is the
/// unnormalized maximally entangled projector sum_{f,f'} |ff><f'f'|.
Matrix build_r(const Matrix& p, const hilbert::MultiSpace& space, SubsetMask f) {
  const Index dp = space.total_dim();
  const Index df = space.dim_of(f);
  const Index dext = dp * df;
  // Flat F-index and J-part of every index of P's space.
  std::vector<Index> f_index(static_cast<std::size_t>(dp), 0), j_part(static_cast<std::size_t>(dp), 0);
  for (Index i = 0; i < dp; ++i) {
    Index fi = 0, jp = 0;
    for (int j = 0; j < space.parties(); ++j) {
      const int dig = space.digit(i, j);
      if (f.contains(j)) {
        fi = fi * space.dim(j) + dig;
      } else {
        jp += dig * space.stride(j);
      }
    }
    f_index[static_cast<std::size_t>(i)] = fi;
    j_part[static_cast<std::size_t>(i)] = jp;
  }
  Matrix phi = Matrix::Zero(dext, dext);
  for (Index x = 0; x < dext; ++x) {
    const Index px = x / df, fx = x % df;
    if (f_index[static_cast<std::size_t>(px)] != fx) continue;
    for (Index y = 0; y < dext; ++y) {
      const Index py = y / df, fy = y % df;
      if (f_index[static_cast<std::size_t>(py)] != fy) continue;
      if (j_part[static_cast<std::size_t>(px)] != j_part[static_cast<std::size_t>(py)]) continue;
      phi(x, y) = 1.0;
    }
  }
  Matrix pp = Matrix::Zero(dext, dext);
  for (Index r = 0; r < dp; ++r)
    for (Index c = 0; c < dp; ++c)
      for (Index k = 0; k < df; ++k) pp(r * df + k, c * df + k) = p(r, c);
  return pp * phi * pp;
}

}  // namespace

double perm_sum_work(const HermitianOp& delta) {
  const double d = static_cast<double>(delta.dim());
  return 4.0 * static_cast<double>(tuple_count(delta.space().parties())) * d * d * d * d;
}

Complex perm_trace(const HermitianOp& delta, const PermTuple& pi) {
  const Complex t = PermTraceKernel(delta)(pi);
  if (all_in_a(pi) && std::abs(t.imag()) > 1e-9 * std::max(hs4(delta), 1e-300)) {
    throw NumericalError("perm_trace: trace over A^K tuple " + to_string(pi) + " has imaginary part " +
                         std::to_string(t.imag()));
  }
  return t;
}

std::vector<Complex> all_perm_traces(const HermitianOp& delta, double budget) {
  check_budget(delta, budget);
  const int parties = delta.space().parties();
  const std::size_t count = tuple_count(parties);
  const PermTraceKernel kernel(delta);
  std::vector<Complex> out(count);
  detail::parallel_for(count, [&](std::size_t idx) { out[idx] = kernel(tuple_from_index(idx, parties)); });
  return out;
}

std::vector<double> subset_square_traces(const HermitianOp& delta) {
  const int parties = delta.space().parties();
  std::vector<double> out;
  for (SubsetMask traced : hilbert::all_subsets(parties)) {
    const Matrix m = hilbert::partial_trace(delta.space(), delta.matrix(), traced);
    out.push_back(m.squaredNorm());
  }
  return out;
}

double sum_subset_square_traces(const HermitianOp& delta) {
  double s = 0.0;
  for (double v : subset_square_traces(delta)) s += v;
  return s;
}

double second_moment(const HermitianOp& delta) {
  double norm = 1.0;
  for (int d : delta.space().dims()) norm *= static_cast<double>(d) * (d + 1);
  return sum_subset_square_traces(delta) / norm;
}

namespace {

double sum_traces_real(const HermitianOp& delta, const std::vector<Complex>& traces, double* imag_out) {
  double re = 0.0, im = 0.0;
  for (const Complex& t : traces) {
    re += t.real();
    im += t.imag();
  }
  if (imag_out) *imag_out = im;
  if (std::abs(im) > 1e-9 * std::max(hs4(delta), 1e-300)) {
    throw NumericalError("sum over S_4^K has imaginary part " + std::to_string(im));
  }
  return re;
}

}  // namespace

namespace {

struct OrbitRep {
  std::size_t index;
  std::size_t size;
};

/// Orbits of S_4^K under simultaneous conjugation of every entry by one
/// tau in S_4, joined with their inverses. t is constant on the first and
/// conjugated by the second, so the real part of the sum only needs one
/// representative per orbit.
std::vector<OrbitRep> compute_orbits(int parties) {
  const std::size_t count = tuple_count(parties);
  std::vector<std::size_t> rep(count, count);
  std::vector<OrbitRep> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (rep[idx] != count) continue;
    const PermTuple pi = tuple_from_index(idx, parties);
    PermTuple inv(pi.size());
    for (std::size_t j = 0; j < pi.size(); ++j) inv[j] = pi[j].inverse();
    std::size_t size = 0;
    for (const Perm4& tau : Perm4::all()) {
      for (const PermTuple* base : std::array<const PermTuple*, 2>{&pi, &inv}) {
        const std::size_t other = tuple_index(splitmap::conj_diag(*base, tau));
        if (rep[other] == count) {
          rep[other] = idx;
          ++size;
        }
      }
    }
    out.push_back({idx, size});
  }
  return out;
}

const std::vector<OrbitRep>& orbits(int parties) {
  static std::mutex mutex;
  static std::map<int, std::vector<OrbitRep>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(parties);
  if (it == cache.end()) it = cache.emplace(parties, compute_orbits(parties)).first;
  return it->second;
}

}  // namespace

double fourth_moment(const HermitianOp& delta, double budget) {
  check_budget(delta, budget);
  double norm = 1.0;
  for (int d : delta.space().dims()) norm *= static_cast<double>(d) * (d + 1) * (d + 2) * (d + 3);
  const int parties = delta.space().parties();
  const std::vector<OrbitRep>& reps = orbits(parties);
  const PermTraceKernel kernel(delta);
  std::vector<double> part(reps.size());
  detail::parallel_for(reps.size(), [&](std::size_t r) {
    part[r] = static_cast<double>(reps[r].size) * kernel(tuple_from_index(reps[r].index, parties)).real();
  });
  double sum = 0.0;
  for (double v : part) sum += v;
  return sum / norm;
}

MomentPair moment_pair(const HermitianOp& delta, double budget) {
  return {second_moment(delta), fourth_moment(delta, budget)};
}

double berger_lower_bound(const HermitianOp& delta, double budget) {
  const MomentPair m = moment_pair(delta, budget);
  if (m.s4 <= 0.0) {
    if (m.s2 > 1e-300) throw NumericalError("berger_lower_bound: fourth moment vanishes while the second does not");
    return 0.0;
  }
  return static_cast<double>(delta.dim()) * std::sqrt(m.s2 * m.s2 * m.s2 / m.s4);
}

PropA1Result prop_a1_check(const HermitianOp& delta, double budget) {
  const std::vector<Complex> traces = all_perm_traces(delta, budget);
  PropA1Result r;
  r.lhs = sum_traces_real(delta, traces, &r.imag);
  const double s = sum_subset_square_traces(delta);
  r.rhs = std::pow(18.0, delta.space().parties()) * s * s;
  r.pass = r.lhs <= r.rhs + 1e-9 * r.rhs;
  return r;
}

WeakA1Result weak_a1_check(const HermitianOp& delta, double budget) {
  const std::vector<Complex> traces = all_perm_traces(delta, budget);
  const int parties = delta.space().parties();
  WeakA1Result r;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (std::abs(traces[i]) > r.max_t) {
      r.max_t = std::abs(traces[i]);
      arg = i;
    }
  }
  r.argmax = tuple_from_index(arg, parties);
  const std::vector<double> sq = subset_square_traces(delta);
  double sum = 0.0;
  for (double v : sq) {
    r.bound = std::max(r.bound, v * v);
    sum += v;
  }
  r.pass = r.max_t <= r.bound * (1.0 + 1e-9) + 1e-15 * hs4(delta);
  r.aggregate_lhs = sum_traces_real(delta, traces, nullptr);
  r.aggregate_rhs = std::pow(24.0, parties) * sum * sum;
  r.aggregate_pass = r.aggregate_lhs <= r.aggregate_rhs * (1.0 + 1e-9);
  return r;
}

SweepResult split_chain_check(const HermitianOp& delta, double budget) {
  const std::vector<Complex> traces = all_perm_traces(delta, budget);
  const int parties = delta.space().parties();
  const double scale = std::max(hs4(delta), 1e-300);
  SweepResult r;
  r.worst_margin = INFINITY;
  for (std::size_t idx = 0; idx < traces.size(); ++idx) {
    const auto [left, right] = splitmap::split(tuple_from_index(idx, parties));
    const Complex tl = traces[tuple_index(left)], tr = traces[tuple_index(right)];
    const double lhs = std::abs(traces[idx]);
    const double geometric = std::sqrt(std::max(0.0, tl.real()) * std::max(0.0, tr.real()));
    const double arithmetic = 0.5 * tl.real() + 0.5 * tr.real();
    const bool real_nonneg = std::abs(tl.imag()) <= 1e-9 * scale && std::abs(tr.imag()) <= 1e-9 * scale &&
                             tl.real() >= -1e-12 * scale && tr.real() >= -1e-12 * scale;
    const bool ok = real_nonneg && lhs <= geometric * (1.0 + 1e-9) + 1e-12 * scale &&
                    geometric <= arithmetic * (1.0 + 1e-9) + 1e-12 * scale;
    ++r.checked;
    if (!ok) ++r.violations;
    r.worst_margin = std::min(r.worst_margin, (geometric - lhs) / scale);
  }
  return r;
}

SweepResult bound_t_check(const HermitianOp& delta, double budget) {
  const std::vector<Complex> traces = all_perm_traces(delta, budget);
  const int parties = delta.space().parties();
  const double scale = std::max(hs4(delta), 1e-300);
  const std::vector<double> sq = subset_square_traces(delta);
  SweepResult r;
  r.worst_margin = INFINITY;

  // Enumerate A0^K as base-3 words.
  std::size_t a0_count = 1;
  for (int j = 0; j < parties; ++j) a0_count *= 3;
  double a0_max = 0.0;
  for (std::size_t w = 0; w < a0_count; ++w) {
    PermTuple sigma(static_cast<std::size_t>(parties));
    std::uint32_t id_mask = 0;
    std::size_t rest = w;
    for (int j = parties - 1; j >= 0; --j) {
      sigma[static_cast<std::size_t>(j)] = splitmap::set_a0()[rest % 3];
      if (rest % 3 == 0) id_mask |= 1u << j;
      rest /= 3;
    }
    const double t = std::abs(traces[tuple_index(sigma)]);
    a0_max = std::max(a0_max, t);
    // The parties where sigma_j = id are traced out.
    const double bound = sq[id_mask] * sq[id_mask];
    ++r.checked;
    if (!(t <= bound * (1.0 + 1e-9) + 1e-12 * scale)) ++r.violations;
    r.worst_margin = std::min(r.worst_margin, (bound - t) / scale);
  }
  for (const Complex& t : traces) {
    ++r.checked;
    const double lhs = std::abs(t);
    if (!(lhs <= a0_max * (1.0 + 1e-9) + 1e-12 * scale)) ++r.violations;
    r.worst_margin = std::min(r.worst_margin, (a0_max - lhs) / scale);
  }
  return r;
}

SweepResult conjugation_invariance_check(const HermitianOp& delta, double budget) {
  const std::vector<Complex> traces = all_perm_traces(delta, budget);
  const int parties = delta.space().parties();
  const double scale = std::max(hs4(delta), 1e-300);
  SweepResult r;
  r.worst_margin = INFINITY;
  for (std::size_t idx = 0; idx < traces.size(); ++idx) {
    const PermTuple pi = tuple_from_index(idx, parties);
    for (const Perm4& tau : Perm4::all()) {
      const double diff = std::abs(traces[tuple_index(splitmap::conj_diag(pi, tau))] - traces[idx]);
      ++r.checked;
      if (diff > 1e-10 * scale) ++r.violations;
      r.worst_margin = std::min(r.worst_margin, -diff / scale);
    }
  }
  return r;
}

SeptempartiteResult septempartite_check(const HermitianOp& delta, const PermTuple& sigma) {
  const int parties = delta.space().parties();
  if (static_cast<int>(sigma.size()) != parties) throw InvalidArgumentError("septempartite_check: tuple size");
  std::array<std::uint32_t, 7> blocks{};
  for (int j = 0; j < parties; ++j) {
    bool found = false;
    for (std::size_t b = 0; b < 7; ++b) {
      if (sigma[static_cast<std::size_t>(j)] == splitmap::set_a()[b]) {
        blocks[b] |= 1u << j;
        found = true;
      }
    }
    if (!found) throw InvalidArgumentError("septempartite_check: tuple entry outside A");
  }
  const SubsetMask a(blocks[0]), b(blocks[1]), c(blocks[2]), e(blocks[4]), f(blocks[5]);

  SeptempartiteResult r;
  r.lhs = perm_trace(delta, sigma).real();

  auto factor = [&](SubsetMask traced, double& trace_out, double& min_eig_out) {
    const SubsetMask keep = traced.complement(parties);
    const hilbert::MultiSpace space = delta.space().restricted(keep);
    Matrix p = hilbert::partial_trace(delta.space(), delta.matrix(), traced);
    const double square = p.squaredNorm();
    p = hilbert::partial_transpose(space, p, restrict_mask(e, keep, parties));
    const Matrix big = build_r(p, space, restrict_mask(f, keep, parties));
    trace_out = big.trace().real();
    min_eig_out = hilbert::eigenvalues(Matrix((big + big.adjoint()) * 0.5)).minCoeff();
    return square;
  };
  const double sq_ab = factor(a | b, r.trace_r, r.min_eig_r);
  const double sq_ac = factor(a | c, r.trace_s, r.min_eig_s);
  r.rhs = sq_ab * sq_ac;

  const double scale = std::max(hs4(delta), 1e-300);
  const double tol_r = 1e-10 * std::max(sq_ab, 1e-300), tol_s = 1e-10 * std::max(sq_ac, 1e-300);
  r.r_s_positive = r.min_eig_r >= -tol_r && r.min_eig_s >= -tol_s && std::abs(r.trace_r - sq_ab) <= tol_r &&
                   std::abs(r.trace_s - sq_ac) <= tol_s;
  r.pass = r.r_s_positive && r.lhs >= -1e-12 * scale && r.lhs <= r.rhs * (1.0 + 1e-9) + 1e-12 * scale;
  return r;
}

}  // namespace distnorm::moments
