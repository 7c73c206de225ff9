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

#ifndef DISTNORM_TOOLS_SUITES_HPP
#define DISTNORM_TOOLS_SUITES_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "distnorm/hilbert.hpp"
#include "distnorm/moments.hpp"

namespace distnorm::tools {

struct SuiteOptions {
  int parties = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  double budget = moments::kDefaultBudget;
  std::string out_dir = ".";
};

/// Aggregated verdict for one named check.
struct CheckLine {
  std::string name;
  std::size_t count = 0;
  std::size_t failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<hilbert::HermitianOp> witness;  ///< first failing operator
  std::string note;

  void record(double margin, bool ok, const hilbert::HermitianOp* delta = nullptr);
  bool pass() const { return failures == 0 && count > 0; }
};

class SuiteReport {
 public:
  CheckLine& line(const std::string& name);
  bool pass() const;
  /// Prints one line per check; writes failing witnesses to out_dir.
  void print(std::ostream& os, const std::string& suite, const std::string& out_dir) const;
  const std::deque<CheckLine>& lines() const { return lines_; }

 private:
  std::deque<CheckLine> lines_;
};

/// thm3 | thm4 | prop-a1 | splitmap | hiding | all.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt);
std::vector<std::string> suite_names();

}  // namespace distnorm::tools

#endif  // DISTNORM_TOOLS_SUITES_HPP
