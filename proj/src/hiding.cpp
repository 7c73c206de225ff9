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

#include "distnorm/hiding.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "distnorm/errors.hpp"
#include "distnorm/norms.hpp"

namespace distnorm::hiding {

namespace {

Index checked_power(int d, int k) {
  Index n = 1;
  for (int i = 0; i < k; ++i) {
    n *= d;
    if (n > kMaxHidingDim)
      throw ScaleLimitError("dimension " + std::to_string(d) + "^" + std::to_string(k) + " exceeds " +
                            std::to_string(kMaxHidingDim));
  }
  return n;
}

void validate(HidingPair& p) {
  for (const HermitianOp* rho : {&p.rho0, &p.rho1}) {
    if (!hilbert::is_density_operator(*rho)) throw NumericalError(p.tag + " pair: state is not a density operator");
  }
  const double overlap = (p.rho0.matrix() * p.rho1.matrix()).trace().real();
  if (overlap > 1e-10) throw NumericalError(p.tag + " pair: supports are not orthogonal");
  const HermitianOp delta = p.delta();
  if (std::abs(hilbert::schatten_1(delta) - 2.0) > 1e-9) throw NumericalError(p.tag + " pair: ||rho0 - rho1||_1 != 2");
  const norms::DualBound b = norms::ppt_norm_dual_upper(delta, p.constraints);
  p.dual_upper = b.value;
  p.dual_argmin = b.argmin;
}

}  // namespace

Matrix perm_operator_K(int d, const Permutation& pi) {
  if (d < 1) throw InvalidArgumentError("perm_operator_K: local dimension must be positive");
  checked_power(d, static_cast<int>(pi.size()));
  return hilbert::permutation_operator(d, pi);
}

int f_count(SubsetMask parties, const Permutation& pi) {
  int f = 0;
  for (int i = 0; i < static_cast<int>(pi.size()); ++i)
    if (parties.contains(i) && !parties.contains(pi(i))) ++f;
  return f;
}

PtNormCheck perm_pt_trace_norm_check(int d, const Permutation& pi, SubsetMask parties) {
  const int k = static_cast<int>(pi.size());
  const MultiSpace space = MultiSpace::uniform(d, k);
  if (!parties.valid_for(space)) throw InvalidArgumentError("perm_pt_trace_norm_check: invalid subset");
  const Matrix u = perm_operator_K(d, pi);
  PtNormCheck c;
  c.computed = hilbert::trace_norm(hilbert::partial_transpose(space, u, parties));
  c.predicted = std::pow(static_cast<double>(d), k - f_count(parties, pi));
  c.pass = std::abs(c.computed - c.predicted) <= 1e-9 * c.predicted;
  return c;
}

Permutation canonical_pi(int parties) {
  if (parties < 1) throw InvalidArgumentError("canonical_pi: need at least one party");
  std::vector<int> images(static_cast<std::size_t>(parties));
  for (int i = 0; i < parties; ++i) images[static_cast<std::size_t>(i)] = i;
  const int m = parties / 2;
  for (int i = 0; i < m; ++i) {
    images[static_cast<std::size_t>(i)] = i + m;
    images[static_cast<std::size_t>(i + m)] = i;
  }
  return Permutation(images);
}

HidingPair hiding_pair_perm(int d, int parties) {
  if (d < 2 || parties < 2) throw InvalidArgumentError("hiding_pair_perm: need d >= 2 and K >= 2");
  const Index n = checked_power(d, parties);
  const MultiSpace space = MultiSpace::uniform(d, parties);
  const Matrix u = perm_operator_K(d, canonical_pi(parties));
  const Matrix id = Matrix::Identity(n, n);
  const double dk = static_cast<double>(n);
  const double dc = std::pow(static_cast<double>(d), (parties + 1) / 2);
  HidingPair p{.rho0 = HermitianOp(space, (id + u) / (dk + dc)),
               .rho1 = HermitianOp(space, (id - u) / (dk - dc)),
               .tag = "perm",
               .params = "d=" + std::to_string(d) + " K=" + std::to_string(parties),
               .constraints = hilbert::all_subsets(parties),
               .dual_upper = 0.0,
               .dual_argmin = SubsetMask(),
               .predicted_value = 0.0};
  validate(p);
  p.predicted_value = 2.0 / (std::pow(static_cast<double>(d), parties / 2) - 1.0) * 2.0;
  return p;
}

HidingPair hiding_pair_werner(const MultiSpace& space, SubsetMask cut) {
  const int parties = space.parties();
  if (!cut.valid_for(space) || parties == 0) throw InvalidArgumentError("hiding_pair_werner: invalid cut");
  const SubsetMask rest = cut.complement(parties);
  const Index da = space.dim_of(cut), db = space.dim_of(rest);
  if (da != db || da < 2)
    throw InvalidArgumentError("hiding_pair_werner: cut dimensions " + std::to_string(da) + " and " +
                               std::to_string(db) + " are not balanced");
  const Index n = space.total_dim();
  if (n > kMaxHidingDim) throw ScaleLimitError("hiding_pair_werner: dimension too large");
  // Split each flat index into (cut part, complement part), then swap them.
  std::vector<Index> part_a(static_cast<std::size_t>(n)), part_b(static_cast<std::size_t>(n));
  std::vector<Index> join(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    Index a = 0, b = 0;
    for (int j = 0; j < parties; ++j) {
      if (cut.contains(j)) a = a * space.dim(j) + space.digit(i, j);
      else b = b * space.dim(j) + space.digit(i, j);
    }
    part_a[static_cast<std::size_t>(i)] = a;
    part_b[static_cast<std::size_t>(i)] = b;
    join[static_cast<std::size_t>(a * db + b)] = i;
  }
  Matrix f = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Index a = part_a[static_cast<std::size_t>(i)], b = part_b[static_cast<std::size_t>(i)];
    f(join[static_cast<std::size_t>(b * db + a)], i) = 1.0;
  }
  const Matrix id = Matrix::Identity(n, n);
  const double r = static_cast<double>(da);
  std::string params = "dims=[";
  for (int j = 0; j < parties; ++j) params += (j ? "," : "") + std::to_string(space.dim(j));
  params += "] cut={";
  bool first = true;
  for (int j : cut.members()) {
    params += (first ? "" : ",") + std::to_string(j + 1);
    first = false;
  }
  params += "}";
  HidingPair p{.rho0 = HermitianOp(space, (id + f) / (r * (r + 1.0))),
               .rho1 = HermitianOp(space, (id - f) / (r * (r - 1.0))),
               .tag = "werner",
               .params = params,
               .constraints = {SubsetMask(), cut},
               .dual_upper = 0.0,
               .dual_argmin = SubsetMask(),
               .predicted_value = 0.0};
  validate(p);
  p.predicted_value = 2.0 / (r + 1.0) * 2.0;
  return p;
}

HermitianOp product_example_prop4(int parties) {
  if (parties < 1) throw InvalidArgumentError("product_example_prop4: need K >= 1");
  const HermitianOp dj = HermitianOp::diagonal(MultiSpace({2}), {0.5, -0.5});
  return hilbert::tensor_power(dj, parties);
}

HermitianOp product_example_prop6(const std::vector<int>& dims) {
  if (dims.empty()) throw InvalidArgumentError("product_example_prop6: need at least one party");
  std::optional<HermitianOp> out;
  for (int d : dims) {
    if (d < 2 || d % 2 != 0)
      throw InvalidArgumentError("product_example_prop6: local dimension " + std::to_string(d) + " is not even");
    std::vector<double> diag(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) diag[static_cast<std::size_t>(i)] = (i < d / 2 ? 1.0 : -1.0) / d;
    const HermitianOp dj = HermitianOp::diagonal(MultiSpace({d}), diag);
    out = out ? hilbert::tensor(*out, dj) : dj;
  }
  if (out->dim() > kMaxHidingDim) throw ScaleLimitError("product_example_prop6: dimension too large");
  return *out;
}

}  // namespace distnorm::hiding
