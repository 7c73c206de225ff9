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

#include "suites.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>

#include "distnorm/errors.hpp"
#include "distnorm/hiding.hpp"
#include "distnorm/io.hpp"
#include "distnorm/norms.hpp"
#include "distnorm/povm.hpp"
#include "distnorm/splitmap.hpp"

namespace distnorm::tools {

namespace {

using hilbert::HermitianOp;
using hilbert::MultiSpace;
using hilbert::SubsetMask;

constexpr double kTol = 1e-9;

HermitianOp random_unit(const MultiSpace& space, std::mt19937_64& rng) {
  HermitianOp d = hilbert::random_hermitian(space, rng);
  return d * (1.0 / hilbert::schatten_2(d));
}

Matrix random_matrix(int d, std::mt19937_64& rng) {
  const MultiSpace s({d});
  return hilbert::random_hermitian(s, rng).matrix();
}

povm::Povm product(const std::string& name, int parties) {
  const povm::Povm one = povm::design_from_ensemble(povm::catalog::by_name(name));
  std::vector<povm::Povm> parts(static_cast<std::size_t>(parties), one);
  return povm::tensor_povm(parts);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void thm3(SuiteReport& rep, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const MultiSpace space = MultiSpace::uniform(2, opt.parties);
  const povm::Povm m = product("tetra", opt.parties);
  const double c = std::pow(2.0 / 3.0, 0.5 * opt.parties);
  CheckLine& line = rep.line("thm3_upper");
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HermitianOp d = random_unit(space, rng);
    const double lhs = norms::povm_norm(d, m), rhs = c * norms::norm_2K(d);
    line.record(rhs - lhs, lhs <= rhs + kTol, &d);
  }
}

void thm4(SuiteReport& rep, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const MultiSpace space = MultiSpace::uniform(2, opt.parties);
  const povm::Povm m = product("icosa", opt.parties);
  const double c = std::pow(1.0 / 18.0, 0.5 * opt.parties);
  CheckLine& lower = rep.line("thm4_lower");
  CheckLine& upper = rep.line("thm4_upper");
  CheckLine& berger = rep.line("berger_le_povm");
  CheckLine& jensen = rep.line("fourth_moment_ge_square");
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HermitianOp d = random_unit(space, rng);
    const double mv = norms::povm_norm(d, m), n2k = norms::norm_2K(d);
    lower.record(mv - c * n2k, c * n2k <= mv + kTol, &d);
    upper.record(n2k - mv, mv <= n2k + kTol, &d);
    const moments::MomentPair mp = moments::moment_pair(d, opt.budget);
    const double b = static_cast<double>(d.dim()) * std::sqrt(mp.berger_bound());
    berger.record(mv - b, b <= mv + kTol, &d);
    jensen.record(mp.s4 - mp.s2 * mp.s2, mp.s4 >= mp.s2 * mp.s2 - 1e-12, &d);
  }
}

void prop_a1(SuiteReport& rep, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const MultiSpace space = MultiSpace::uniform(2, opt.parties);
  CheckLine& main = rep.line("prop_a1");
  CheckLine& max_form = rep.line("max_form");
  CheckLine& aggregate = rep.line("aggregate_24k");
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HermitianOp d = random_unit(space, rng);
    const moments::PropA1Result a = moments::prop_a1_check(d, opt.budget);
    main.record((a.rhs - a.lhs) / std::max(a.rhs, 1e-300), a.pass, &d);
    const moments::WeakA1Result w = moments::weak_a1_check(d, opt.budget);
    max_form.record(w.bound - w.max_t, w.pass, &d);
    aggregate.record((w.aggregate_rhs - w.aggregate_lhs) / std::max(w.aggregate_rhs, 1e-300), w.aggregate_pass, &d);
  }
}

void splitmap_suite(SuiteReport& rep, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  {
    CheckLine& image = rep.line("table_image_in_A");
    for (const Perm4& s : Perm4::all()) {
      const splitmap::SplitPair p = splitmap::split(s);
      const bool ok = splitmap::in_a(p.left) && splitmap::in_a(p.right);
      image.record(ok ? 0.0 : -1.0, ok);
    }
    CheckLine& transcription = rep.line("table_matches_derivation");
    const std::vector<std::string> diff = splitmap::table_discrepancies();
    transcription.record(diff.empty() ? 0.0 : -static_cast<double>(diff.size()), diff.empty());
    for (const std::string& s : diff) transcription.note += s + "; ";
    CheckLine& stable = rep.line("A_stable_under_(14)(23)");
    const Perm4 tau = Perm4::parse("(14)(23)");
    for (const Perm4& s : splitmap::set_a()) {
      const bool ok = splitmap::in_a(tau * s * tau.inverse());
      stable.record(ok ? 0.0 : -1.0, ok);
    }
  }
  for (int d : {2, 3}) {
    CheckLine& cs = rep.line("split_cauchy_schwarz_d" + std::to_string(d));
    for (std::size_t t = 0; t < opt.trials; ++t) {
      const Matrix m1 = random_matrix(d, rng), m2 = random_matrix(d, rng), m3 = random_matrix(d, rng),
                   m4 = random_matrix(d, rng);
      for (const Perm4& s : Perm4::all()) {
        const splitmap::SplitCsCheck c = splitmap::verify_split_cs(s, m1, m2, m3, m4);
        cs.record((c.rhs - c.lhs) / std::max(c.rhs, 1e-300), c.pass);
      }
    }
  }
  {
    const splitmap::CountingResult c = splitmap::counting_lemma(6);
    CheckLine& line = rep.line("counting_lemma");
    line.record(c.pass ? 0.0 : -1.0, c.pass);
    line.note = "count_id=" + std::to_string(c.count_id) + " count_14=" + std::to_string(c.count_14);
    const splitmap::ClosureResult cl = splitmap::a0_closure_check(std::min(opt.parties, 4));
    rep.line("a0_closure").record(cl.closed ? 0.0 : -1.0, cl.closed);
    CheckLine& reach = rep.line("a0_reachability");
    reach.record(cl.reachable ? 0.0 : -1.0, cl.reachable);
    reach.note = "K=" + std::to_string(std::min(opt.parties, 4)) + " rounds=" + std::to_string(cl.rounds);
  }
  const MultiSpace space = MultiSpace::uniform(2, opt.parties);
  CheckLine& chain = rep.line("split_chain");
  CheckLine& bound = rep.line("bound_t");
  CheckLine& conj = rep.line("conjugation_invariance");
  CheckLine& sept = rep.line("septempartite");
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HermitianOp d = random_unit(space, rng);
    const moments::SweepResult a = moments::split_chain_check(d, opt.budget);
    chain.record(a.worst_margin, a.pass(), &d);
    const moments::SweepResult b = moments::bound_t_check(d, opt.budget);
    bound.record(b.worst_margin, b.pass(), &d);
    const moments::SweepResult c = moments::conjugation_invariance_check(d, opt.budget);
    conj.record(c.worst_margin, c.pass(), &d);
    if (t < 10) {
      std::size_t count = 1;
      for (int j = 0; j < opt.parties; ++j) count *= 7;
      for (std::size_t w = 0; w < count; ++w) {
        PermTuple sigma(static_cast<std::size_t>(opt.parties));
        std::size_t rest = w;
        for (int j = opt.parties - 1; j >= 0; --j) {
          sigma[static_cast<std::size_t>(j)] = splitmap::set_a()[rest % 7];
          rest /= 7;
        }
        const moments::SeptempartiteResult s = moments::septempartite_check(d, sigma);
        sept.record(s.rhs - s.lhs, s.pass, &d);
      }
    }
  }
}

void hiding_suite(SuiteReport& rep, const SuiteOptions& opt) {
  CheckLine& law = rep.line("pt_trace_norm_law");
  for (int k = 1; k <= 4; ++k) {
    for (const Permutation& pi : Permutation::all(static_cast<std::size_t>(k))) {
      for (SubsetMask m : hilbert::all_subsets(k)) {
        const hiding::PtNormCheck c = hiding::perm_pt_trace_norm_check(2, pi, m);
        law.record(1e-9 - std::abs(c.computed - c.predicted) / c.predicted, c.pass);
      }
    }
  }
  CheckLine& cycles = rep.line("canonical_pi_cycles");
  for (int k = 2; k <= 8; ++k) {
    const bool ok = hiding::canonical_pi(k).cycle_count() == (k + 1) / 2;
    cycles.record(ok ? 0.0 : -1.0, ok);
  }
  CheckLine& dual_bound = rep.line("perm_dual_le_predicted");
  CheckLine& sandwich = rep.line("ppt_ascent_le_dual");
  CheckLine& perfect = rep.line("trace_norm_perfect");
  CheckLine& floor = rep.line("data_hiding_floor");
  CheckLine& werner = rep.line("werner_ppt_target");
  auto common = [&](const hiding::HidingPair& p) {
    const HermitianOp d = p.delta();
    const norms::AscentResult a = norms::ppt_norm_ascent(d, p.constraints);
    sandwich.record(p.dual_upper - a.lower_bound, a.lower_bound <= p.dual_upper + 1e-6, &d);
    const hilbert::DiscriminationInstance inst(p.rho0, p.rho1, 0.5);
    const norms::ErrorProbability e = norms::error_probability(inst, hilbert::schatten_1(inst.delta()));
    perfect.record(-e.value, e.value <= 1e-9, &d);
    return a;
  };
  for (auto [dd, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const hiding::HidingPair p = hiding::hiding_pair_perm(dd, k);
    dual_bound.record(p.predicted_value - p.dual_upper, p.dual_upper <= p.predicted_value + kTol);
    common(p);
    if (dd == 2) {
      const povm::Povm m = product("icosa", k);
      const HermitianOp d = p.delta();
      const double lhs = std::pow(1.0 / 18.0, 0.5 * k) * hilbert::schatten_1(d) / std::sqrt(double(d.dim()));
      const double mv = norms::povm_norm(d, m);
      floor.record(mv - lhs, lhs <= mv + kTol, &d);
    }
  }
  for (int dd : {2, 3}) {
    const hiding::HidingPair p = hiding::hiding_pair_werner(MultiSpace({dd, dd}), SubsetMask::of({0}));
    const norms::AscentResult a = common(p);
    const HermitianOp d = p.delta();
    werner.record(1e-3 - std::abs(a.lower_bound - p.predicted_value), std::abs(a.lower_bound - p.predicted_value) <= 1e-3,
                  &d);
    if (dd == 2) {
      const povm::Povm m = product("icosa", 2);
      const double lhs = std::pow(1.0 / 18.0, 1.0) * hilbert::schatten_1(d) / 2.0;
      const double mv = norms::povm_norm(d, m);
      floor.record(mv - lhs, lhs <= mv + kTol, &d);
    }
  }
  (void)opt;
}

}  // namespace

void CheckLine::record(double margin, bool ok, const HermitianOp* delta) {
  ++count;
  worst_margin = std::min(worst_margin, margin);
  if (!ok) {
    ++failures;
    if (delta && !witness) witness = *delta;
  }
}

CheckLine& SuiteReport::line(const std::string& name) {
  for (CheckLine& l : lines_)
    if (l.name == name) return l;
  CheckLine fresh;
  fresh.name = name;
  lines_.push_back(std::move(fresh));
  return lines_.back();
}

bool SuiteReport::pass() const {
  for (const CheckLine& l : lines_)
    if (!l.pass()) return false;
  return !lines_.empty();
}

void SuiteReport::print(std::ostream& os, const std::string& suite, const std::string& out_dir) const {
  for (const CheckLine& l : lines_) {
    os << (l.pass() ? "PASS " : "FAIL ") << l.name << "  checks=" << l.count << "  failures=" << l.failures
       << "  worst_margin=" << fmt(l.worst_margin);
    if (!l.note.empty()) os << "  " << l.note;
    if (!l.pass() && l.witness) {
      std::string base = l.name;
      for (char& c : base)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') c = '_';
      const std::string path = out_dir + "/verify-" + suite + "-" + base + ".op.json";
      io::write_operator(path, *l.witness, {"verify " + suite + " " + l.name, "random"});
      os << "  witness=" << path;
    }
    os << "\n";
  }
}

std::vector<std::string> suite_names() { return {"thm3", "thm4", "prop-a1", "splitmap", "hiding", "all"}; }

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (opt.parties < 1) throw InvalidArgumentError("--k must be at least 1");
  if (opt.trials < 1) throw InvalidArgumentError("--trials must be at least 1");
  SuiteReport rep;
  if (suite == "thm3") thm3(rep, opt);
  else if (suite == "thm4") thm4(rep, opt);
  else if (suite == "prop-a1") prop_a1(rep, opt);
  else if (suite == "splitmap") splitmap_suite(rep, opt);
  else if (suite == "hiding") hiding_suite(rep, opt);
  else if (suite == "all") {
    for (const char* s : {"thm3", "thm4", "prop-a1", "splitmap", "hiding"}) {
      const SuiteReport part = run_suite(s, opt);
      for (const CheckLine& l : part.lines()) {
        CheckLine copy = l;
        copy.name = std::string(s) + "/" + l.name;
        rep.line(copy.name) = copy;
      }
    }
  } else {
    throw InvalidArgumentError("unknown suite '" + suite + "'");
  }
  return rep;
}

}  // namespace distnorm::tools
