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

#ifndef DISTNORM_REPORT_HPP
#define DISTNORM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/moments.hpp"
#include "distnorm/norms.hpp"
#include "distnorm/povm.hpp"

namespace distnorm::report {

using hilbert::HermitianOp;

/// One inequality lhs <= rhs, evaluated on the operator normalized to
/// ||Delta||_2 = 1. margin = rhs - lhs + slack; pass iff margin >= 0.
struct InequalityCheck {
  std::string id;
  std::string statement;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double margin = 0.0;
  bool pass = false;
};

/// A tightness ratio compared to a reference value. value is empty when
/// the denominator vanishes.
struct Ratio {
  std::string id;
  std::string statement;
  std::optional<double> value;
  double reference = 0.0;
  std::string reference_label;
};

struct NormReport {
  std::string name;
  std::vector<int> dims;
  double scale = 0.0;  ///< ||Delta||_2 of the input; values below are for the input itself

  double trace_norm = 0.0;
  double hs_norm = 0.0;
  double norm_2k = 0.0;
  std::string povm_label;
  double povm_value = 0.0;
  double povm_std_error = 0.0;   ///< 0 for exact finite POVMs
  bool povm_approximate = false;
  std::optional<double> berger;  ///< empty when over budget
  double ppt_lower = 0.0;
  double ppt_upper = 0.0;
  std::optional<double> sep_lower;

  std::vector<InequalityCheck> checks;
  std::vector<Ratio> ratios;

  bool all_pass() const;
};

struct ReportOptions {
  double budget = moments::kDefaultBudget;
  norms::AscentConfig ascent;
};

/// Requires a POVM with certified design order >= 4.
NormReport bound_report(const HermitianOp& delta, const povm::Povm& m4, const ReportOptions& opt = {},
                        std::string name = {});
/// Same lattice with the uniform POVM estimated by Monte-Carlo; the
/// inequalities involving ||Delta||_M get 3 standard errors of slack.
NormReport bound_report_uniform(const HermitianOp& delta, std::size_t samples, std::uint64_t seed,
                                const ReportOptions& opt = {}, std::string name = {});

std::string to_text(const NormReport& r);
std::string to_json(const NormReport& r);

}  // namespace distnorm::report

#endif  // DISTNORM_REPORT_HPP
