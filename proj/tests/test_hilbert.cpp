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
#include "distnorm/hilbert.hpp"
#include "oracles.hpp"

using namespace distnorm;
using namespace distnorm::hilbert;

namespace {

HermitianOp z_half() { return HermitianOp::diagonal(MultiSpace({2}), {0.5, -0.5}); }

HermitianOp random_op(const std::vector<int>& dims, std::mt19937_64& rng) {
  return random_hermitian(MultiSpace(dims), rng);
}

}  // namespace

TEST(MultiSpace, MixedRadixPartyOneMostSignificant) {
  const MultiSpace s({2, 3});
  EXPECT_EQ(s.total_dim(), 6);
  EXPECT_EQ(s.digit(4, 0), 1);
  EXPECT_EQ(s.digit(4, 1), 1);
  EXPECT_EQ(s.stride(0), 3);
  EXPECT_THROW(MultiSpace({2, 0}), InvalidArgumentError);
}

TEST(HermitianOp, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(HermitianOp(MultiSpace({2}), m), InvalidArgumentError);
  m(1, 0) = 1.0 + 1e-13;
  EXPECT_NO_THROW(HermitianOp(MultiSpace({2}), m));
}

TEST(HermitianOp, RejectsOverflowingMagnitude) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1e200;
  EXPECT_THROW(HermitianOp(MultiSpace({2}), m), NumericalError);
  m(0, 0) = 1e50;
  EXPECT_NO_THROW(HermitianOp(MultiSpace({2}), m));
}

TEST(PartialTrace, TracelessFactorVanishes) {
  const HermitianOp d = tensor(z_half(), z_half());
  EXPECT_LT(partial_trace(d, SubsetMask::of({0})).matrix().norm(), 1e-15);
  EXPECT_EQ(partial_trace(d, SubsetMask()).matrix(), d.matrix());
  const HermitianOp id = HermitianOp::identity(MultiSpace({2, 2})) * 0.25;
  EXPECT_LT((partial_trace(id, SubsetMask::of({1})).matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(PartialTrace, MatchesExplicitLoopsAndTelescopes) {
  std::mt19937_64 rng(11);
  const std::vector<int> dims{2, 3, 2};
  for (int trial = 0; trial < 5; ++trial) {
    const HermitianOp d = random_op(dims, rng);
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      const HermitianOp r = partial_trace(d, SubsetMask(bits));
      EXPECT_LT((r.matrix() - oracle::partial_trace(d.matrix(), dims, bits)).norm(), 1e-12);
      EXPECT_NEAR(r.trace(), d.trace(), 1e-12);
    }
    // tr_{1} tr_{3} = tr_{1,3}; after tracing party 3 the remaining party 1 is still bit 0.
    const HermitianOp a = partial_trace(partial_trace(d, SubsetMask::of({2})), SubsetMask::of({0}));
    EXPECT_LT((a.matrix() - partial_trace(d, SubsetMask::of({0, 2})).matrix()).norm(), 1e-12);
  }
  EXPECT_THROW(partial_trace(HermitianOp::identity(MultiSpace({2})), SubsetMask::of({1})), InvalidArgumentError);
}

TEST(PartialTranspose, MatchesOracleAndComposes) {
  std::mt19937_64 rng(12);
  const std::vector<int> dims{2, 2, 3};
  const HermitianOp d = random_op(dims, rng);
  for (std::uint32_t i = 0; i < 8; ++i) {
    const HermitianOp t = partial_transpose(d, SubsetMask(i));
    EXPECT_LT((t.matrix() - oracle::partial_transpose(d.matrix(), dims, i)).norm(), 1e-14);
    EXPECT_NEAR(schatten_2(t), schatten_2(d), 1e-12);
    EXPECT_LT((partial_transpose(t, SubsetMask(i)).matrix() - d.matrix()).norm(), 1e-14);
    for (std::uint32_t j = 0; j < 8; ++j) {
      const HermitianOp tj = partial_transpose(t, SubsetMask(j));
      EXPECT_LT((tj.matrix() - partial_transpose(d, SubsetMask(i ^ j)).matrix()).norm(), 1e-14);
    }
  }
  EXPECT_LT((partial_transpose(d, SubsetMask(7)).matrix() - d.matrix().transpose()).norm(), 1e-14);
}

TEST(PartialTranspose, SwapBecomesScaledMaximallyEntangledProjector) {
  const HermitianOp f(MultiSpace({2, 2}), swap_operator(2, 2));
  const Matrix t = partial_transpose(f, SubsetMask::of({1})).matrix();
  Vector phi = Vector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  EXPECT_LT((t - 2.0 * phi * phi.adjoint()).norm(), 1e-15);
}

TEST(SchattenNorms, KnownValuesAndOrdering) {
  EXPECT_NEAR(schatten_1(z_half()), 1.0, 1e-15);
  EXPECT_NEAR(schatten_2(z_half()), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(schatten_1(HermitianOp::identity(MultiSpace({3, 2}))), 6.0, 1e-13);
  EXPECT_EQ(schatten_2(HermitianOp::zero(MultiSpace({2}))), 0.0);
  EXPECT_NEAR(schatten_2(tensor_power(z_half(), 3)), std::pow(2.0, -1.5), 1e-15);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const HermitianOp d = random_op({2, 3}, rng);
    const double s1 = schatten_1(d), s2 = schatten_2(d);
    EXPECT_NEAR(s1, oracle::trace_norm(d.matrix()), 1e-12);
    EXPECT_LE(s2, s1 + 1e-12);
    EXPECT_LE(s1 / std::sqrt(6.0), s2 + 1e-12);
  }
}

TEST(PermutationOperator, CompositionAndTrace) {
  for (const Permutation& p : Permutation::all(4)) {
    const Matrix up = permutation_operator(2, p);
    EXPECT_NEAR(up.trace().real(), std::pow(2.0, p.cycle_count()), 1e-12);
    for (const Permutation& q : Permutation::all(4)) {
      const Matrix uq = permutation_operator(2, q);
      EXPECT_EQ(up * uq, permutation_operator(2, p * q));
    }
  }
  EXPECT_EQ(permutation_operator(2, Permutation::identity(4)), Matrix::Identity(16, 16));
  EXPECT_NEAR(permutation_operator(3, Permutation::parse("(1234)", 4)).trace().real(), 3.0, 1e-12);
  EXPECT_NEAR(permutation_operator(2, Permutation::parse("(12)(34)", 4)).trace().real(), 4.0, 1e-12);
  // Def-style action: the factor in slot 1 ends up in slot 2.
  Vector e0 = Vector::Unit(2, 0), e1 = Vector::Unit(2, 1);
  const Vector in = oracle::kron(oracle::kron(e1, e0), e0);
  const Vector out = oracle::kron(oracle::kron(e0, e1), e0);
  EXPECT_EQ(permutation_operator(2, Permutation::parse("(12)", 3)) * in, out);
}

TEST(SwapOperator, Properties) {
  const Matrix f = swap_operator(3, 3);
  EXPECT_NEAR(f.trace().real(), 3.0, 1e-15);
  EXPECT_EQ(f * f, Matrix::Identity(9, 9));
  const Eigen::VectorXd ev = eigenvalues(f);
  EXPECT_EQ((ev.array() > 0).count(), 6);
  EXPECT_EQ((ev.array() < 0).count(), 3);
  std::mt19937_64 rng(14);
  const HermitianOp a = random_op({3}, rng), b = random_op({3}, rng);
  EXPECT_NEAR((oracle::kron(a.matrix(), b.matrix()) * f).trace().real(), (a.matrix() * b.matrix()).trace().real(),
              1e-12);
  EXPECT_THROW(swap_operator(2, 3), InvalidArgumentError);
}

TEST(DiscriminationInstance, ValidatesStates) {
  const HermitianOp rho0 = HermitianOp::diagonal(MultiSpace({2}), {1.0, 0.0});
  const HermitianOp rho1 = HermitianOp::diagonal(MultiSpace({2}), {0.0, 1.0});
  const DiscriminationInstance inst(rho0, rho1, 0.25);
  EXPECT_NEAR(inst.delta().matrix()(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(inst.delta().matrix()(1, 1).real(), -0.75, 1e-15);
  EXPECT_THROW(DiscriminationInstance(rho0 * 2.0, rho1, 0.5), InvalidArgumentError);
  EXPECT_THROW(DiscriminationInstance(rho0, rho1, 1.5), InvalidArgumentError);
  EXPECT_THROW(DiscriminationInstance(HermitianOp::diagonal(MultiSpace({2}), {1.5, -0.5}), rho1, 0.5),
               InvalidArgumentError);
}
