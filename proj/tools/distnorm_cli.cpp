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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distnorm/errors.hpp"
#include "distnorm/hiding.hpp"
#include "distnorm/io.hpp"
#include "distnorm/moments.hpp"
#include "distnorm/norms.hpp"
#include "distnorm/povm.hpp"
#include "distnorm/report.hpp"
#include "suites.hpp"

namespace {

using namespace distnorm;
using hilbert::HermitianOp;
using hilbert::MultiSpace;

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kScale = 3, kNumerical = 4 };

std::string f12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& item : split_commas(s)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// A catalog name for every party, a comma list with one name per party,
/// or a .povm.json file.
povm::Povm resolve_povm(const std::string& spec, const MultiSpace& space) {
  if (ends_with(spec, ".json")) {
    io::PovmFile f = io::read_povm(spec);
    if (f.povm.space().dims() != space.dims()) throw InvalidArgumentError("POVM file dims differ from the operator");
    return std::move(f.povm);
  }
  std::vector<std::string> names = split_commas(spec);
  if (names.size() == 1) names.assign(static_cast<std::size_t>(space.parties()), names[0]);
  if (static_cast<int>(names.size()) != space.parties())
    throw InvalidArgumentError("POVM list has " + std::to_string(names.size()) + " entries for " +
                               std::to_string(space.parties()) + " parties");
  std::vector<povm::Povm> parts;
  for (const std::string& n : names) parts.push_back(povm::design_from_ensemble(povm::catalog::by_name(n)));
  for (int j = 0; j < space.parties(); ++j)
    if (parts[static_cast<std::size_t>(j)].space().dim(0) != space.dim(j))
      throw InvalidArgumentError("POVM '" + names[static_cast<std::size_t>(j)] + "' does not match party " +
                                 std::to_string(j + 1));
  return povm::tensor_povm(parts);
}

struct NormArgs {
  std::string file;
  std::vector<std::string> states;
  double q = 0.5;
  std::string kind;
  std::size_t samples = norms::kDefaultSamples;
  std::optional<std::uint64_t> seed;
  bool error_probability = false;
};

int cmd_norm(const NormArgs& a) {
  std::optional<hilbert::DiscriminationInstance> inst;
  std::optional<HermitianOp> delta;
  if (!a.states.empty()) {
    if (a.states.size() != 2) throw ParseError("--states takes two operator files");
    inst.emplace(io::read_operator(a.states[0]).op, io::read_operator(a.states[1]).op, a.q);
    delta = inst->delta();
  } else if (!a.file.empty()) {
    delta = io::read_operator(a.file).op;
  } else {
    throw ParseError("norm: give an operator file or --states");
  }
  if (a.error_probability && !inst) throw ParseError("--error-probability needs --states RHO0 RHO1");

  double value = 0.0;
  if (a.kind == "trace") {
    value = hilbert::schatten_1(*delta);
    std::cout << f12(value) << "\n";
  } else if (a.kind == "hs") {
    value = hilbert::schatten_2(*delta);
    std::cout << f12(value) << "\n";
  } else if (a.kind == "2k") {
    value = norms::norm_2K(*delta);
    std::cout << f12(value) << "\n";
  } else if (a.kind.rfind("povm:", 0) == 0) {
    const povm::Povm m = resolve_povm(a.kind.substr(5), delta->space());
    value = norms::povm_norm(*delta, m);
    std::cout << f12(value) << "\n";
  } else if (a.kind == "uniform-mc") {
    if (!a.seed) throw ParseError("uniform-mc needs --seed");
    const norms::SamplingResult r = norms::uniform_norm_sampling(*delta, a.samples, *a.seed);
    value = r.estimate;
    std::cout << f12(r.estimate) << " +/- " << f12(r.std_error) << "\n";
  } else if (a.kind == "uniform-exact") {
    value = norms::uniform_norm_qubit_exact(*delta);
    std::cout << f12(value) << "\n";
  } else if (a.kind == "ppt") {
    const norms::AscentResult r = norms::ppt_norm_ascent(*delta);
    const norms::DualBound b = norms::ppt_norm_dual_upper(*delta);
    if (!r.converged)
      std::cerr << "warning: ascent stopped after " << r.iterations << " iterations without converging\n";
    value = r.lower_bound;
    std::cout << "[" << f12(r.lower_bound) << ", " << f12(b.value) << "]\n";
  } else {
    throw ParseError("unknown norm '" + a.kind + "'");
  }
  if (a.error_probability) {
    const norms::ErrorProbability p = norms::error_probability(*inst, value);
    std::cout << "error probability " << f12(p.value) << (p.clamped ? " (clamped)" : "") << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const tools::SuiteOptions& opt) {
  const tools::SuiteReport rep = tools::run_suite(suite, opt);
  rep.print(std::cout, suite, opt.out_dir);
  std::cout << (rep.pass() ? "verify " + suite + ": PASS" : "verify " + suite + ": FAIL") << "\n";
  return rep.pass() ? kOk : kVerifyFail;
}

struct ReportArgs {
  std::string file;
  std::string povm = "icosa";
  std::string out;
  std::size_t samples = norms::kDefaultSamples;
  std::optional<std::uint64_t> seed;
  double budget = moments::kDefaultBudget;
};

int cmd_report(const ReportArgs& a) {
  const io::OperatorFile f = io::read_operator(a.file);
  report::ReportOptions opt;
  opt.budget = a.budget;
  const std::string name = f.metadata.name.empty() ? a.file : f.metadata.name;
  report::NormReport r;
  if (a.povm == "uniform") {
    if (!a.seed) throw ParseError("report with the uniform POVM needs --seed");
    r = report::bound_report_uniform(f.op, a.samples, *a.seed, opt, name);
  } else {
    r = report::bound_report(f.op, resolve_povm(a.povm, f.op.space()), opt, name);
  }
  std::cout << report::to_text(r);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InvalidArgumentError("cannot write " + a.out);
    out << report::to_json(r);
  }
  return r.all_pass() ? kOk : kVerifyFail;
}

struct DesignArgs {
  std::string name;
  int t = 2;
  int d = 2;
  std::size_t n = 100000;
  std::uint64_t seed = 1;
};

int cmd_design(const DesignArgs& a) {
  povm::Certification c;
  if (a.name == "haar") {
    const povm::DesignEnsemble e = povm::haar_sample_ensemble(a.d, a.n, a.seed);
    c = povm::design_certify_statistical(e, a.t);
    std::cout << "haar d=" << a.d << " n=" << a.n << " seed=" << a.seed;
  } else {
    const povm::DesignEnsemble e = povm::catalog::by_name(a.name);
    c = povm::design_certify(e, a.t);
    std::cout << e.name() << " d=" << e.dim() << " states=" << e.size();
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, " t=%d residual=%.3e tolerance=%.3e", a.t, c.residual, c.tolerance);
  std::cout << buf << (c.certified ? " certified" : " NOT certified") << (a.name == "haar" ? " (statistical)" : "")
            << "\n";
  return c.certified ? kOk : kVerifyFail;
}

struct HidingArgs {
  std::string which;
  int d = 2;
  int k = 2;
  std::string dims;
  std::string cut = "1";
  std::string out;
  std::size_t samples = norms::kDefaultSamples;
  std::optional<std::uint64_t> seed;
};

void maybe_write(const std::string& path, const HermitianOp& op, const std::string& name, const std::string& tag) {
  if (!path.empty()) io::write_operator(path, op, {name, tag});
}

int cmd_hiding(const HidingArgs& a) {
  if (a.which == "perm" || a.which == "werner") {
    hiding::HidingPair p = [&] {
      if (a.which == "perm") return hiding::hiding_pair_perm(a.d, a.k);
      const std::vector<int> dims = parse_int_list(a.dims.empty() ? "2,2" : a.dims, "--dims");
      std::vector<int> cut = parse_int_list(a.cut, "--cut");
      for (int& c : cut) c -= 1;
      return hiding::hiding_pair_werner(MultiSpace(dims), hilbert::SubsetMask::of(cut));
    }();
    const HermitianOp d = p.delta();
    const norms::AscentResult r = norms::ppt_norm_ascent(d, p.constraints);
    std::cout << p.tag << " " << p.params << "\n";
    std::cout << "  delta = rho0 - rho1\n";
    std::cout << "  trace norm      " << f12(hilbert::schatten_1(d)) << "\n";
    std::cout << "  hs norm         " << f12(hilbert::schatten_2(d)) << "\n";
    std::cout << "  ppt ascent      " << f12(r.lower_bound) << "\n";
    std::cout << "  ppt dual upper  " << f12(p.dual_upper) << "\n";
    std::cout << (p.tag == "perm" ? "  predicted bound " : "  ppt target      ") << f12(p.predicted_value) << "\n";
    if (p.tag == "perm") {
      const int parity = a.k % 2;
      std::cout << "  parity          " << parity << "  (sqrt(D) / d^floor(K/2) = "
                << f12(std::sqrt(static_cast<double>(d.dim())) / std::pow(a.d, a.k / 2)) << ")\n";
    }
    maybe_write(a.out, d, p.tag + " " + p.params, p.tag);
    return kOk;
  }
  if (a.which == "qubit-product") {
    const HermitianOp d = hiding::product_example_prop4(a.k);
    const double n2k = norms::norm_2K(d);
    std::vector<HermitianOp> factors(static_cast<std::size_t>(a.k), HermitianOp::diagonal(MultiSpace({2}), {0.5, -0.5}));
    const double exact = norms::uniform_norm_product_exact(factors);
    std::cout << "qubit-product K=" << a.k << "\n";
    std::cout << "  2k norm         " << f12(n2k) << "\n";
    std::cout << "  uniform exact   " << f12(exact) << "\n";
    std::cout << "  ratio           " << f12(exact / n2k) << "  (2^(-K/2) = " << f12(std::pow(0.5, 0.5 * a.k)) << ")\n";
    if (a.seed) {
      const norms::SamplingResult s = norms::uniform_norm_sampling(d, a.samples, *a.seed);
      std::cout << "  uniform mc      " << f12(s.estimate) << " +/- " << f12(s.std_error) << "\n";
    }
    maybe_write(a.out, d, "qubit-product K=" + std::to_string(a.k), "product");
    return kOk;
  }
  if (a.which == "balanced-product") {
    const std::vector<int> dims = parse_int_list(a.dims.empty() ? "2" : a.dims, "--dims");
    const HermitianOp d = hiding::product_example_prop6(dims);
    const double bound = std::pow(std::sqrt(2.0 / M_PI), static_cast<double>(dims.size())) /
                         std::sqrt(static_cast<double>(d.dim()));
    std::cout << "balanced-product dims=" << a.dims << "\n";
    std::cout << "  trace norm      " << f12(hilbert::schatten_1(d)) << "\n";
    std::cout << "  sqrt(2/pi)^K/sqrt(D) " << f12(bound) << "\n";
    if (a.seed) {
      const norms::SamplingResult s = norms::uniform_norm_sampling(d, a.samples, *a.seed);
      std::cout << "  uniform mc      " << f12(s.estimate) << " +/- " << f12(s.std_error) << "\n";
    }
    maybe_write(a.out, d, "balanced-product dims=" + a.dims, "product");
    return kOk;
  }
  throw ParseError("unknown construction '" + a.which + "'");
}

int cmd_moments(const std::string& file, const std::string& perm, double budget) {
  const HermitianOp d = io::read_operator(file).op;
  if (!perm.empty()) {
    const PermTuple pi = parse_perm_tuple(perm);
    const Complex t = moments::perm_trace(d, pi);
    std::cout << "perm_trace " << to_string(pi) << " = " << f12(t.real()) << " " << (t.imag() < 0 ? "- " : "+ ")
              << f12(std::abs(t.imag())) << "i\n";
    return kOk;
  }
  const moments::MomentPair m = moments::moment_pair(d, budget);
  std::cout << "E S^2  " << f12(m.s2) << "\n";
  std::cout << "E S^4  " << f12(m.s4) << "\n";
  std::cout << "berger " << f12(static_cast<double>(d.dim()) * std::sqrt(m.berger_bound())) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distnorm: distinguishability norms of multipartite Hermitian operators"};
  app.require_subcommand(1);

  NormArgs norm;
  auto* c_norm = app.add_subcommand("norm", "compute one norm of an operator");
  c_norm->add_option("file", norm.file, "operator file (.op.json)");
  c_norm->add_option("--states", norm.states, "rho0 and rho1 files; the operator is q rho0 - (1-q) rho1")->expected(2);
  c_norm->add_option("--q", norm.q, "prior of rho0")->check(CLI::Range(0.0, 1.0));
  c_norm->add_option("--norm", norm.kind, "trace|hs|2k|povm:<names or file>|uniform-mc|uniform-exact|ppt")->required();
  c_norm->add_option("--samples", norm.samples, "Monte-Carlo samples");
  c_norm->add_option("--seed", norm.seed, "Monte-Carlo seed");
  c_norm->add_flag("--error-probability", norm.error_probability, "also print 1/2 (1 - norm)");

  std::string suite;
  tools::SuiteOptions vopt;
  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite, "thm3|thm4|prop-a1|splitmap|hiding|all")
      ->required()
      ->check(CLI::IsMember(tools::suite_names()));
  c_verify->add_option("--k", vopt.parties, "number of qubit parties");
  c_verify->add_option("--seed", vopt.seed, "seed for random inputs")->required();
  c_verify->add_option("--trials", vopt.trials, "random inputs per check");
  c_verify->add_option("--budget", vopt.budget, "multiplication budget for S_4^K sums");
  c_verify->add_option("--out-dir", vopt.out_dir, "directory for failing inputs");

  ReportArgs rep;
  auto* c_report = app.add_subcommand("report", "bound lattice and tightness ratios for an operator");
  c_report->add_option("file", rep.file, "operator file")->required();
  c_report->add_option("--povm", rep.povm, "certified 4-design names (e.g. icosa) or 'uniform'");
  c_report->add_option("--out", rep.out, "write the report as JSON");
  c_report->add_option("--samples", rep.samples, "Monte-Carlo samples for 'uniform'");
  c_report->add_option("--seed", rep.seed, "Monte-Carlo seed for 'uniform'");
  c_report->add_option("--budget", rep.budget, "multiplication budget for the fourth moment");

  DesignArgs des;
  auto* c_design = app.add_subcommand("design-check", "certify a catalog ensemble as a t-design");
  c_design->add_option("name", des.name, "catalog name or 'haar'")->required();
  c_design->add_option("--t", des.t, "design order")->required();
  c_design->add_option("--d", des.d, "dimension for 'haar'");
  c_design->add_option("--n", des.n, "sample count for 'haar'");
  c_design->add_option("--seed", des.seed, "seed for 'haar'");

  HidingArgs hid;
  auto* c_hiding = app.add_subcommand("hiding", "build a data-hiding construction");
  c_hiding->add_option("construction", hid.which, "perm|werner|qubit-product|balanced-product")->required();
  c_hiding->add_option("--d", hid.d, "local dimension (perm)");
  c_hiding->add_option("--k", hid.k, "number of parties (perm, qubit-product)");
  c_hiding->add_option("--dims", hid.dims, "local dimensions, comma separated (werner, balanced-product)");
  c_hiding->add_option("--cut", hid.cut, "parties on one side of the cut, 1-based (werner)");
  c_hiding->add_option("--out", hid.out, "write delta as an operator file");
  c_hiding->add_option("--samples", hid.samples, "Monte-Carlo samples");
  c_hiding->add_option("--seed", hid.seed, "Monte-Carlo seed (enables sampling)");

  std::string mfile, mperm;
  double mbudget = moments::kDefaultBudget;
  auto* c_moments = app.add_subcommand("moments", "second and fourth moments, or one permutation trace");
  c_moments->add_option("file", mfile, "operator file")->required();
  c_moments->add_option("--perm", mperm, "permutation tuple, e.g. \"(123),(12)(34)\"");
  c_moments->add_option("--budget", mbudget, "multiplication budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*c_norm) return cmd_norm(norm);
    if (*c_verify) return cmd_verify(suite, vopt);
    if (*c_report) return cmd_report(rep);
    if (*c_design) return cmd_design(des);
    if (*c_hiding) return cmd_hiding(hid);
    if (*c_moments) return cmd_moments(mfile, mperm, mbudget);
  } catch (const ScaleLimitError& e) {
    std::cerr << "scale limit: " << e.what() << "\n";
    return kScale;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
