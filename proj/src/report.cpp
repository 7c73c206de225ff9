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

#include "distnorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "distnorm/errors.hpp"

namespace distnorm::report {

namespace {

constexpr double kSlack = 1e-9;
constexpr double kPptSlack = 1e-6;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void add(NormReport& r, std::string id, std::string statement, double lhs, double rhs, double slack) {
  InequalityCheck c{std::move(id), std::move(statement), lhs, rhs, slack, rhs - lhs + slack, false};
  c.pass = c.margin >= 0.0;
  r.checks.push_back(std::move(c));
}

struct MeasuredValue {
  std::string label;
  double value;      ///< for the normalized operator
  double std_error;  ///< likewise
  bool approximate;
};

NormReport build(const HermitianOp& delta, const std::string& name, const ReportOptions& opt,
                 const MeasuredValue& measured, double scale, std::optional<double> berger) {
  const hilbert::MultiSpace& space = delta.space();
  const int parties = space.parties();
  const double dim = static_cast<double>(delta.dim());
  const double s = scale > 0.0 ? scale : 1.0;

  NormReport r;
  r.name = name;
  r.dims = space.dims();
  r.scale = scale;
  // delta here is already normalized (or zero).
  const double tr = hilbert::schatten_1(delta);
  const double hs = hilbert::schatten_2(delta);
  const double n2k = norms::norm_2K(delta);
  const norms::AscentResult ascent = norms::ppt_norm_ascent(delta, opt.ascent);
  const double ppt_up = norms::ppt_norm_dual_upper(delta).value;
  std::optional<double> sep;
  if (parties >= 2 && scale > 0.0) sep = norms::sep_ball_witness(delta).value;

  r.trace_norm = tr * s;
  r.hs_norm = hs * s;
  r.norm_2k = n2k * s;
  r.povm_label = measured.label;
  r.povm_value = measured.value * s;
  r.povm_std_error = measured.std_error * s;
  r.povm_approximate = measured.approximate;
  if (berger) r.berger = *berger * s;
  r.ppt_lower = ascent.lower_bound * s;
  r.ppt_upper = ppt_up * s;
  if (sep) r.sep_lower = *sep * s;

  const double m = measured.value;
  const double ms = kSlack + 3.0 * measured.std_error;
  const double c18 = std::pow(1.0 / 18.0, 0.5 * parties);
  double c3 = 1.0;
  for (int d : space.dims()) c3 *= static_cast<double>(d) / (d + 1.0);
  c3 = std::sqrt(c3);

  add(r, "hs_vs_trace", "||D||_1 / sqrt(D) <= ||D||_2", tr / std::sqrt(dim), hs, kSlack);
  add(r, "hs_le_trace", "||D||_2 <= ||D||_1", hs, tr, kSlack);
  add(r, "povm_le_trace", "||D||_M <= ||D||_1", m, tr, ms);
  add(r, "four_design_lower", "(1/18)^(K/2) ||D||_2(K) <= ||D||_M", c18 * n2k, m, ms);
  add(r, "four_design_upper", "||D||_M <= ||D||_2(K)", m, n2k, ms);
  add(r, "two_design_upper", "||D||_M <= sqrt(prod d/(d+1)) ||D||_2(K)", m, c3 * n2k, ms);
  add(r, "data_hiding_floor", "(1/18)^(K/2) ||D||_1 / sqrt(D) <= ||D||_M", c18 * tr / std::sqrt(dim), m, ms);
  if (berger) add(r, "berger_le_povm", "sqrt(E S^2^3 / E S^4) D <= ||D||_M", *berger, m, ms);
  add(r, "povm_le_ppt", "||D||_M <= ||D||_PPT (dual upper)", m, ppt_up, ms);
  add(r, "ppt_sandwich", "ascent lower <= dual upper", ascent.lower_bound, ppt_up, kPptSlack);
  add(r, "ppt_le_trace", "||D||_PPT (dual upper) <= ||D||_1", ppt_up, tr, kSlack);
  if (parties >= 2) add(r, "hs_le_ppt", "||D||_2 <= ||D||_PPT (ascent lower)", hs, ascent.lower_bound, kPptSlack);
  if (sep) add(r, "sep_le_ppt", "2^(1-K/2) ||D||_2 <= ||D||_PPT (ascent lower)", *sep, ascent.lower_bound, kPptSlack);

  auto ratio = [](double num, double den) -> std::optional<double> {
    if (den <= 0.0) return std::nullopt;
    return num / den;
  };
  r.ratios.push_back({"povm_over_2k", "||D||_M / ||D||_2(K)", ratio(m, n2k), std::pow(0.5, 0.5 * parties),
                      "2^(-K/2), uniform POVM on a product of traceless qubit operators"});
  r.ratios.push_back({"povm_over_2k_floor", "||D||_M / ||D||_2(K)", ratio(m, n2k), c18, "(1/18)^(K/2) floor"});
  r.ratios.push_back({"povm_over_trace", "||D||_M / ||D||_1", ratio(m, tr),
                      std::pow(std::sqrt(2.0 / M_PI), parties) / std::sqrt(dim),
                      "sqrt(2/pi)^K / sqrt(D), uniform POVM on balanced even-dimension products"});
  r.ratios.push_back({"ppt_over_trace", "||D||_PPT (ascent lower) / ||D||_1", ratio(ascent.lower_bound, tr),
                      2.0 / (std::sqrt(dim) + 1.0), "2 / (sqrt(D) + 1), Werner pair across a balanced cut"});
  return r;
}

struct Normalized {
  HermitianOp op;
  double scale;
};

Normalized normalize(const HermitianOp& delta) {
  const double scale = hilbert::schatten_2(delta);
  if (scale == 0.0) return {delta, 0.0};
  return {delta * (1.0 / scale), scale};
}

}  // namespace

bool NormReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.pass; });
}

NormReport bound_report(const HermitianOp& delta, const povm::Povm& m4, const ReportOptions& opt, std::string name) {
  if (delta.space().dims() != m4.space().dims()) throw InvalidArgumentError("bound_report: space mismatch");
  if (!m4.certified_design_order() || *m4.certified_design_order() < 4)
    throw CertificationError("bound_report: POVM '" + m4.label() + "' is not a certified 4-design product");
  const Normalized n = normalize(delta);
  std::optional<double> berger;
  if (moments::perm_sum_work(n.op) <= opt.budget && n.scale > 0.0)
    berger = moments::berger_lower_bound(n.op, opt.budget);
  const MeasuredValue mv{m4.label(), norms::povm_norm(n.op, m4), 0.0, false};
  return build(n.op, name, opt, mv, n.scale, berger);
}

NormReport bound_report_uniform(const HermitianOp& delta, std::size_t samples, std::uint64_t seed,
                                const ReportOptions& opt, std::string name) {
  const Normalized n = normalize(delta);
  const norms::SamplingResult s = norms::uniform_norm_sampling(n.op, samples, seed);
  const MeasuredValue mv{"uniform (Monte-Carlo, " + std::to_string(samples) + " samples)", s.estimate,
                         s.std_error, true};
  return build(n.op, name, opt, mv, n.scale, std::nullopt);
}

std::string to_text(const NormReport& r) {
  std::ostringstream os;
  os << "operator " << (r.name.empty() ? "(unnamed)" : r.name) << "  dims [";
  for (std::size_t i = 0; i < r.dims.size(); ++i) os << (i ? "," : "") << r.dims[i];
  os << "]  ||D||_2 = " << fmt(r.scale) << "\n";
  os << "norms\n";
  os << "  trace        " << fmt(r.trace_norm) << "\n";
  os << "  hs           " << fmt(r.hs_norm) << "\n";
  os << "  2k           " << fmt(r.norm_2k) << "\n";
  os << "  povm         " << fmt(r.povm_value);
  if (r.povm_approximate) os << " +- " << fmt(r.povm_std_error) << " (approximate)";
  os << "  [" << r.povm_label << "]\n";
  if (r.berger) os << "  berger       " << fmt(*r.berger) << "\n";
  os << "  ppt          [" << fmt(r.ppt_lower) << ", " << fmt(r.ppt_upper) << "]\n";
  if (r.sep_lower) os << "  sep >=       " << fmt(*r.sep_lower) << "\n";
  os << "inequalities (normalized to ||D||_2 = 1)\n";
  for (const InequalityCheck& c : r.checks) {
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.statement << "  lhs " << fmt(c.lhs) << "  rhs "
       << fmt(c.rhs) << "  margin " << fmt(c.margin) << "\n";
  }
  os << "ratios\n";
  for (const Ratio& q : r.ratios) {
    os << "  " << q.id << "  " << q.statement << " = " << (q.value ? fmt(*q.value) : std::string("undefined"))
       << "  (reference " << fmt(q.reference) << ": " << q.reference_label << ")\n";
  }
  os << (r.all_pass() ? "all inequalities pass" : "some inequalities FAIL") << "\n";
  return os.str();
}

std::string to_json(const NormReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "distnorm-report";
  j["version"] = 1;
  j["name"] = r.name;
  j["dims"] = r.dims;
  j["scale"] = r.scale;
  j["norms"] = {{"trace", r.trace_norm},
                {"hs", r.hs_norm},
                {"2k", r.norm_2k},
                {"povm", {{"label", r.povm_label},
                          {"value", r.povm_value},
                          {"std_error", r.povm_std_error},
                          {"approximate", r.povm_approximate}}},
                {"ppt", {{"lower", r.ppt_lower}, {"upper", r.ppt_upper}}}};
  j["norms"]["berger"] = r.berger ? nlohmann::ordered_json(*r.berger) : nlohmann::ordered_json();
  j["norms"]["sep_lower"] = r.sep_lower ? nlohmann::ordered_json(*r.sep_lower) : nlohmann::ordered_json();
  j["checks"] = nlohmann::ordered_json::array();
  for (const InequalityCheck& c : r.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"statement", c.statement},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"slack", c.slack},
                           {"margin", c.margin},
                           {"pass", c.pass}});
  }
  j["ratios"] = nlohmann::ordered_json::array();
  for (const Ratio& q : r.ratios) {
    j["ratios"].push_back({{"id", q.id},
                           {"statement", q.statement},
                           {"value", q.value ? nlohmann::ordered_json(*q.value) : nlohmann::ordered_json("undefined")},
                           {"reference", q.reference},
                           {"reference_label", q.reference_label}});
  }
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace distnorm::report
