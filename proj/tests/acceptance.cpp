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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "distnorm/errors.hpp"
#include "distnorm/hiding.hpp"
#include "distnorm/moments.hpp"
#include "distnorm/norms.hpp"
#include "distnorm/povm.hpp"
#include "distnorm/splitmap.hpp"
#include "oracles.hpp"

using namespace distnorm;
using hilbert::HermitianOp;
using hilbert::MultiSpace;
using hilbert::SubsetMask;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

HermitianOp random_unit(const MultiSpace& s, std::mt19937_64& rng) {
  return HermitianOp(s, oracle::random_unit_hermitian(s.total_dim(), rng));
}

povm::Povm product_povm(const povm::DesignEnsemble& e, int k) {
  return povm::tensor_povm(std::vector<povm::Povm>(static_cast<std::size_t>(k), povm::design_from_ensemble(e)));
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome design_certification() {
  namespace cat = povm::catalog;
  struct Case {
    povm::DesignEnsemble e;
    int t;
    bool pass;
  };
  const std::vector<Case> cases{{cat::tetrahedron(), 2, true}, {cat::tetrahedron(), 3, false},
                                {cat::octahedron(), 3, true},  {cat::icosahedron(), 4, true},
                                {cat::icosahedron(), 5, true}, {cat::hesse_sic(), 2, true}};
  double worst_pass = 0.0, best_fail = 1e300;
  bool ok = true;
  for (const Case& c : cases) {
    const povm::Certification r = povm::design_certify(c.e, c.t);
    if (c.pass) {
      ok = ok && r.certified && r.residual < 1e-9;
      worst_pass = std::max(worst_pass, r.residual);
    } else {
      ok = ok && !r.certified && r.residual > 1e-2;
      best_fail = std::min(best_fail, r.residual);
    }
  }
  return {ok, fmt("max pass residual %.2e, min designed-failure residual %.2e", worst_pass, best_fail)};
}

Outcome upper_two_design() {
  std::mt19937_64 rng(1001);
  std::size_t violations = 0;
  double worst = 1e300;
  for (int k = 1; k <= 3; ++k) {
    const MultiSpace s = MultiSpace::uniform(2, k);
    const povm::Povm m = product_povm(povm::catalog::tetrahedron(), k);
    const double c = std::sqrt(std::pow(2.0 / 3.0, k));
    for (int t = 0; t < 500; ++t) {
      const HermitianOp d = random_unit(s, rng);
      const double margin = c * norms::norm_2K(d) + 1e-9 - norms::povm_norm(d, m);
      worst = std::min(worst, margin);
      if (margin < 0) ++violations;
    }
  }
  return {violations == 0, fmt("1500 samples, %.0f violations, min margin %.3e", double(violations), worst)};
}

Outcome four_design_sandwich() {
  std::mt19937_64 rng(1002);
  std::size_t violations = 0;
  double worst = 1e300;
  for (int k = 1; k <= 3; ++k) {
    const MultiSpace s = MultiSpace::uniform(2, k);
    const povm::Povm m = product_povm(povm::catalog::icosahedron(), k);
    const double c = std::pow(1.0 / 18.0, 0.5 * k);
    for (int t = 0; t < 500; ++t) {
      const HermitianOp d = random_unit(s, rng);
      const double n2 = norms::norm_2K(d), nm = norms::povm_norm(d, m), b = moments::berger_lower_bound(d);
      const double m1 = nm - (c * n2 - 1e-9), m2 = n2 + 1e-9 - nm, m3 = nm + 1e-9 - b;
      worst = std::min({worst, m1, m2, m3});
      if (m1 < 0 || m2 < 0 || m3 < 0) ++violations;
    }
  }
  return {violations == 0, fmt("1500 samples, %.0f violations, min margin %.3e", double(violations), worst)};
}

Outcome prop_a1() {
  std::mt19937_64 rng(1003);
  std::size_t violations = 0;
  double worst = 1e300;
  for (const auto& [k, n] : {std::pair{2, 200}, std::pair{3, 50}}) {
    const MultiSpace s = MultiSpace::uniform(2, k);
    for (int t = 0; t < n; ++t) {
      const HermitianOp d = random_unit(s, rng);
      const moments::PropA1Result a = moments::prop_a1_check(d);
      const moments::WeakA1Result w = moments::weak_a1_check(d);
      worst = std::min(worst, (a.rhs - a.lhs) / a.rhs);
      if (!a.pass || !w.pass || !w.aggregate_pass) ++violations;
    }
  }
  return {violations == 0, fmt("250 samples, %.0f violations, min relative margin %.3e", double(violations), worst)};
}

Outcome splitting() {
  using namespace splitmap;
  bool ok = table_discrepancies().empty();
  for (const SplitRow& row : split_table()) ok = ok && in_a(Perm4::parse(row.left)) && in_a(Perm4::parse(row.right));
  std::mt19937_64 rng(1004);
  std::size_t failures = 0;
  for (int d : {2, 3}) {
    for (int t = 0; t < 100; ++t) {
      std::vector<Matrix> m;
      for (int i = 0; i < 4; ++i) m.push_back(oracle::random_unit_hermitian(d, rng));
      for (const Perm4& s : Perm4::all())
        if (!verify_split_cs(s, m[0], m[1], m[2], m[3]).pass) ++failures;
    }
  }
  const CountingResult c = counting_lemma(6);
  ok = ok && failures == 0 && c.count_id == 2 && c.count_14 == 4 && c.pass;
  for (int k : {1, 2}) {
    const ClosureResult r = a0_closure_check(k);
    ok = ok && r.closed && r.reachable;
  }
  return {ok, fmt("counting (%.0f, %.0f)", c.count_id, c.count_14) + ", " + std::to_string(failures) +
                  " split failures over 4800 contractions"};
}

Outcome moment_identities() {
  std::mt19937_64 rng(1005);
  double worst = 0.0;
  const auto ico = povm::catalog::icosahedron();
  for (int k : {1, 2}) {
    for (int t = 0; t < 20; ++t) {
      const HermitianOp d = random_unit(MultiSpace::uniform(2, k), rng);
      const std::vector<povm::DesignEnsemble> parts(static_cast<std::size_t>(k), ico);
      const double s2 = oracle::design_sum(d.matrix(), parts, 2), s4 = oracle::design_sum(d.matrix(), parts, 4);
      worst = std::max({worst, std::abs(moments::second_moment(d) - s2) / s2,
                        std::abs(moments::fourth_moment(d) - s4) / s4});
    }
  }
  double worst_trace = 0.0;
  for (const MultiSpace& s : {MultiSpace({2}), MultiSpace({3}), MultiSpace({4}), MultiSpace({2, 2})}) {
    const HermitianOp d = random_unit(s, rng);
    const Matrix d2 = oracle::kron(d.matrix(), d.matrix());
    const Matrix d4 = oracle::kron(d2, d2);
    const std::vector<Complex> all = moments::all_perm_traces(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
      PermTuple inv = tuple_from_index(i, s.parties());
      for (Perm4& p : inv) p = p.inverse();
      const Complex ref = d4.cwiseProduct(oracle::dense_perm_operator(inv, s.dims()).transpose()).sum();
      worst_trace = std::max(worst_trace, std::abs(all[i] - ref));
    }
  }
  return {worst <= 1e-10 && worst_trace <= 1e-10,
          fmt("max relative moment error %.2e, max trace error %.2e", worst, worst_trace)};
}

Outcome product_tightness() {
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 3; ++k) {
    const HermitianOp d = hiding::product_example_prop4(k);
    const norms::SamplingResult r = norms::uniform_norm_sampling(d, 1000000, 2000 + k);
    const double target = std::pow(2.0, -k);
    const std::vector<HermitianOp> f(static_cast<std::size_t>(k), hiding::product_example_prop4(1));
    const double ratio = norms::uniform_norm_product_exact(f) / norms::norm_2K(d);
    ok = ok && std::abs(r.estimate - target) <= 3.0 * r.std_error && std::abs(ratio - std::pow(2.0, -0.5 * k)) <= 1e-3;
    detail += fmt("K=%.0f: %.5f", k, r.estimate) + fmt(" +/- %.5f", r.std_error) + fmt(", ratio %.6f; ", ratio);
  }
  return {ok, detail};
}

Outcome pt_law() {
  std::size_t checked = 0, bad = 0;
  for (int k = 1; k <= 4; ++k)
    for (const Permutation& pi : Permutation::all(static_cast<std::size_t>(k)))
      for (std::uint32_t b = 0; b < (1u << k); ++b) {
        const hiding::PtNormCheck c = hiding::perm_pt_trace_norm_check(2, pi, SubsetMask(b));
        ++checked;
        if (std::abs(c.computed - c.predicted) > 1e-9 * c.predicted) ++bad;
      }
  bool ok = bad == 0;
  std::string detail = std::to_string(checked) + " (pi, I) pairs, " + std::to_string(bad) + " mismatches";
  for (int k : {2, 3}) {
    const hiding::HidingPair p = hiding::hiding_pair_perm(2, k);
    ok = ok && p.dual_upper <= p.predicted_value + 1e-9;
    detail += fmt("; K=%.0f bound %.6f", k, p.dual_upper) + fmt(" <= %.6f", p.predicted_value);
  }
  return {ok, detail};
}

Outcome werner() {
  bool ok = true;
  std::string detail;
  for (int d : {2, 3}) {
    const hiding::HidingPair p = hiding::hiding_pair_werner(MultiSpace({d, d}), SubsetMask::of({0}));
    const norms::AscentResult r = norms::ppt_norm_ascent(p.delta(), p.constraints);
    const double target = 4.0 / (d + 1.0) * hilbert::schatten_1(p.delta()) / 2.0;
    ok = ok && std::abs(r.lower_bound - target) <= 1e-3 && r.lower_bound <= p.dual_upper + 1e-9;
    detail += fmt("D=%.0f: ", d * d) + fmt("%.6f in [.., %.6f]", r.lower_bound, p.dual_upper) +
              fmt(" target %.6f; ", target);
  }
  return {ok, detail};
}

Outcome sep_ball() {
  std::mt19937_64 rng(1006);
  bool ok = true;
  double min_eig = 1e300, min_gap = 1e300;
  for (int k : {2, 3}) {
    const MultiSpace s = MultiSpace::uniform(2, k);
    for (int t = 0; t < 20; ++t) {
      const HermitianOp d = random_unit(s, rng);
      const norms::SepWitness w = norms::sep_ball_witness(d);
      const norms::AscentResult r = norms::ppt_norm_ascent(d);
      min_eig = std::min(min_eig, w.min_eigenvalue);
      min_gap = std::min(min_gap, r.lower_bound - hilbert::schatten_2(d));
      ok = ok && w.ppt && r.lower_bound >= hilbert::schatten_2(d) - 1e-6;
    }
  }
  return {ok, fmt("min eigenvalue %.3e, min ascent - ||D||_2 %.3e", min_eig, min_gap)};
}

Outcome hiding_floor() {
  bool ok = true;
  std::string detail;
  const auto check = [&](const hiding::HidingPair& p, double nm, double slack, const std::string& label) {
    const HermitianOp d = p.delta();
    const int k = d.space().parties();
    const double floor =
        std::pow(1.0 / 18.0, 0.5 * k) * hilbert::schatten_1(d) / std::sqrt(static_cast<double>(d.dim()));
    ok = ok && nm >= floor - 1e-9 - slack;
    detail += label + fmt(" %.5f >= %.5f; ", nm, floor);
  };
  for (int k : {2, 3}) {
    const hiding::HidingPair p = hiding::hiding_pair_perm(2, k);
    check(p, norms::povm_norm(p.delta(), product_povm(povm::catalog::icosahedron(), k)), 0.0,
          "perm K=" + std::to_string(k));
  }
  const hiding::HidingPair w2 = hiding::hiding_pair_werner(MultiSpace({2, 2}), SubsetMask::of({0}));
  check(w2, norms::povm_norm(w2.delta(), product_povm(povm::catalog::icosahedron(), 2)), 0.0, "werner D=4");
  const hiding::HidingPair w3 = hiding::hiding_pair_werner(MultiSpace({3, 3}), SubsetMask::of({0}));
  const norms::SamplingResult r = norms::uniform_norm_sampling(w3.delta(), 1000000, 3003);
  check(w3, r.estimate, 3.0 * r.std_error, "werner D=9 (Haar MC)");
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "design certification", 1.0, design_certification},
      {2, "2-design upper bound", 30.0, upper_two_design},
      {3, "4-design sandwich and moment lower bound", 60.0, four_design_sandwich},
      {4, "18^K fourth-moment inequality", 600.0, prop_a1},
      {5, "splitting machinery", 10.0, splitting},
      {6, "moment identities", 30.0, moment_identities},
      {7, "product tightness", 60.0, product_tightness},
      {8, "partial-transpose law and hiding bound", 60.0, pt_law},
      {9, "Werner PPT value", 120.0, werner},
      {10, "separable ball and PPT lower bound", 120.0, sep_ball},
      {11, "hiding floor", 30.0, hiding_floor},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s criterion %2d %-42s %8.2fs (limit %.0fs)  %s\n", pass ? "PASS" : "FAIL", c.number, c.title, secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
