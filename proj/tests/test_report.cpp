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

#include <gtest/gtest.h>

#include <random>

#include "distnorm/errors.hpp"
#include "distnorm/report.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace distnorm;
using hilbert::HermitianOp;
using hilbert::MultiSpace;

namespace {

povm::Povm icosa_product(int k) {
  return povm::tensor_povm(
      std::vector<povm::Povm>(static_cast<std::size_t>(k), povm::design_from_ensemble(povm::catalog::icosahedron())));
}

}  // namespace

TEST(Report, RandomOperatorsPassEveryCheck) {
  std::mt19937_64 rng(61);
  for (int k : {1, 2}) {
    const MultiSpace s = MultiSpace::uniform(2, k);
    for (int t = 0; t < 3; ++t) {
      const HermitianOp d(s, oracle::random_unit_hermitian(s.total_dim(), rng) * 2.0);
      const report::NormReport r = report::bound_report(d, icosa_product(k));
      EXPECT_TRUE(r.all_pass()) << report::to_text(r);
      EXPECT_NEAR(r.scale, 2.0, 1e-12);
      EXPECT_NEAR(r.hs_norm, 2.0, 1e-12);
      EXPECT_NEAR(r.trace_norm, hilbert::schatten_1(d), 1e-12);
      EXPECT_LE(r.ppt_lower, r.ppt_upper + 1e-9);
    }
  }
}

TEST(Report, UniformVariant) {
  const HermitianOp d = HermitianOp::diagonal(MultiSpace({2}), {0.5, -0.5});
  const report::NormReport r = report::bound_report_uniform(d, 200000, 7);
  EXPECT_TRUE(r.povm_approximate);
  EXPECT_NEAR(r.povm_value, 0.5, 3.0 * r.povm_std_error);
  EXPECT_TRUE(r.all_pass());
}

TEST(Report, ZeroOperatorHasUndefinedRatios) {
  const report::NormReport r = report::bound_report(HermitianOp::zero(MultiSpace({2, 2})), icosa_product(2));
  ASSERT_FALSE(r.ratios.empty());
  for (const report::Ratio& x : r.ratios) EXPECT_FALSE(x.value.has_value()) << x.id;
  EXPECT_NE(report::to_text(r).find("undefined"), std::string::npos);
}

TEST(Report, RequiresCertifiedFourDesign) {
  const HermitianOp d = HermitianOp::diagonal(MultiSpace({2}), {0.5, -0.5});
  EXPECT_THROW(report::bound_report(d, povm::design_from_ensemble(povm::catalog::tetrahedron())), CertificationError);
  EXPECT_THROW(report::bound_report(d, povm::Povm::trivial(MultiSpace({2}))), CertificationError);
}

TEST(Report, JsonShape) {
  const HermitianOp d = HermitianOp::diagonal(MultiSpace({2}), {0.25, -0.75});
  const report::NormReport r = report::bound_report(d, icosa_product(1), {}, "skew");
  const nlohmann::json j = nlohmann::json::parse(report::to_json(r));
  EXPECT_EQ(j["format"], "distnorm-report");
  EXPECT_EQ(j["name"], "skew");
  EXPECT_EQ(j["checks"].size(), r.checks.size());
}
