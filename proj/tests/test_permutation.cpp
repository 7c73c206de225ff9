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

#include "distnorm/errors.hpp"
#include "distnorm/perm4.hpp"
#include "distnorm/permutation.hpp"

using distnorm::Perm4;
using distnorm::Permutation;

TEST(Permutation, ParsesCycleNotation) {
  const Permutation p = Permutation::parse("(123)", 4);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p(3), 3);
  EXPECT_EQ(p.to_string(), "(123)");
  EXPECT_EQ(Permutation::parse("id", 3), Permutation::identity(3));
  EXPECT_EQ(Permutation::parse("(12)(34)", 4).cycle_count(), 2);
  EXPECT_THROW(Permutation::parse("(15)", 4), distnorm::ParseError);
  EXPECT_THROW(Permutation::parse("(11)", 4), distnorm::ParseError);
}

TEST(Permutation, CompositionAndInverse) {
  for (const Permutation& a : Permutation::all(4)) {
    EXPECT_TRUE((a * a.inverse()).is_identity());
    for (const Permutation& b : Permutation::all(4))
      for (int i = 0; i < 4; ++i) EXPECT_EQ((a * b)(i), a(b(i)));
  }
  EXPECT_EQ(Permutation::all(4).size(), 24u);
  EXPECT_EQ(Permutation::all(5).size(), 120u);
}

TEST(Perm4, RankMatchesLexicographicOrder) {
  const auto& all = Perm4::all();
  for (int r = 0; r < 24; ++r) EXPECT_EQ(all[static_cast<std::size_t>(r)].rank(), r);
  EXPECT_EQ(Perm4::parse("id").rank(), 0);
  EXPECT_EQ(Perm4::parse("(1234)").cycle_type(), "4");
  EXPECT_EQ(Perm4::parse("(12)(34)").cycle_type(), "22");
  EXPECT_EQ(Perm4::parse("(132)").cycle_type(), "31");
}

TEST(Perm4, TupleIndexRoundTrip) {
  for (std::size_t i = 0; i < 576; ++i) EXPECT_EQ(distnorm::tuple_index(distnorm::tuple_from_index(i, 2)), i);
  const distnorm::PermTuple t = distnorm::parse_perm_tuple("(123),(12)(34),id");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(distnorm::to_string(t), "(123),(12)(34),id");
  EXPECT_EQ(distnorm::tuple_from_index(1, 2)[0], Perm4());
}
