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
#include "distnorm/povm.hpp"

using namespace distnorm;
using namespace distnorm::povm;

TEST(Catalog, CertificationPattern) {
  struct Case {
    DesignEnsemble ens;
    int t;
    bool certified;
  };
  const std::vector<Case> cases{
      {catalog::tetrahedron(), 2, true},  {catalog::tetrahedron(), 3, false}, {catalog::octahedron(), 3, true},
      {catalog::octahedron(), 4, false},  {catalog::icosahedron(), 4, true},  {catalog::icosahedron(), 5, true},
      {catalog::hesse_sic(), 2, true},    {catalog::mub(2), 2, true},         {catalog::mub(3), 2, true},
      {catalog::mub(5), 2, true},         {catalog::computational_basis(2), 2, false}};
  for (const Case& c : cases) {
    const Certification r = design_certify(c.ens, c.t);
    EXPECT_EQ(r.certified, c.certified) << c.ens.name() << " t=" << c.t;
    if (c.certified) {
      EXPECT_LT(r.residual, 1e-12) << c.ens.name();
    } else {
      EXPECT_GT(r.residual, 1e-2) << c.ens.name();
    }
  }
}

TEST(Catalog, LowerOrdersFollow) {
  for (int t = 1; t <= 5; ++t) EXPECT_TRUE(design_certify(catalog::icosahedron(), t).certified);
  for (int t = 1; t <= 3; ++t) EXPECT_TRUE(design_certify(catalog::octahedron(), t).certified);
}

TEST(Catalog, NamesResolve) {
  for (const std::string& n : catalog::names())
    if (n.find('<') == std::string::npos) {
      EXPECT_NO_THROW(catalog::by_name(n)) << n;
    }
  EXPECT_EQ(catalog::by_name("mub3").size(), 12u);
  EXPECT_EQ(catalog::by_name("basis4").dim(), 4);
  EXPECT_THROW(catalog::by_name("dodeca"), InvalidArgumentError);
  EXPECT_THROW(catalog::mub(4), InvalidArgumentError);
}

TEST(SymmetricProjector, IsProjectorWithBinomialRank) {
  const Matrix p = symmetric_projector(2, 3);
  EXPECT_LT((p * p - p).norm(), 1e-12);
  EXPECT_NEAR(p.trace().real(), 4.0, 1e-12);
  EXPECT_NEAR(symmetric_projector(3, 2).trace().real(), 6.0, 1e-12);
}

TEST(DesignFromEnsemble, TetrahedronElements) {
  const DesignEnsemble e = catalog::tetrahedron();
  const Povm m = design_from_ensemble(e);
  ASSERT_EQ(m.size(), 4u);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_LT((m.elements()[x] - 0.5 * e.projector(x)).norm(), 1e-14);
  EXPECT_EQ(m.certified_design_order(), 2);
  const Povm basis = design_from_ensemble(catalog::computational_basis(3));
  EXPECT_EQ(basis.certified_design_order(), 1);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_NEAR(basis.elements()[x](static_cast<Index>(x), static_cast<Index>(x)).real(), 1.0, 1e-15);
}

TEST(DesignFromEnsemble, RejectsNonDesign) {
  std::vector<Vector> states{Vector::Unit(2, 0), Vector::Unit(2, 0)};
  const DesignEnsemble e(2, {0.5, 0.5}, states, 1, "bad");
  EXPECT_THROW(design_from_ensemble(e), InvalidArgumentError);
}

TEST(EnsembleFromPovm, RoundTrip) {
  const DesignEnsemble e = catalog::icosahedron();
  const Povm m = design_from_ensemble(e);
  const DesignEnsemble back = ensemble_from_povm(m);
  const Povm again = design_from_ensemble(back);
  for (std::size_t x = 0; x < m.size(); ++x) EXPECT_LT((m.elements()[x] - again.elements()[x]).norm(), 1e-12);
  for (std::size_t x = 0; x < e.size(); ++x) EXPECT_NEAR(back.weights()[x], e.weights()[x], 1e-14);
}

TEST(TensorPovm, CountsAndCompleteness) {
  const Povm t = design_from_ensemble(catalog::tetrahedron());
  const std::vector<Povm> parts{t, t};
  const Povm m = tensor_povm(parts);
  EXPECT_EQ(m.size(), 16u);
  EXPECT_EQ(m.space().dims(), (std::vector<int>{2, 2}));
  Matrix sum = Matrix::Zero(4, 4);
  for (const Matrix& e : m.elements()) sum += e;
  EXPECT_LT((sum - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_EQ(m.certified_design_order(), 2);
  const std::vector<Povm> triv{Povm::trivial(MultiSpace({2})), Povm::trivial(MultiSpace({3}))};
  const Povm tm = tensor_povm(triv);
  ASSERT_EQ(tm.size(), 1u);
  EXPECT_EQ(tm.elements()[0], Matrix::Identity(6, 6));
  const std::vector<Povm> mixed{t, design_from_ensemble(catalog::icosahedron())};
  EXPECT_EQ(tensor_povm(mixed).certified_design_order(), 2);
}

TEST(PovmValidation, RejectsIncomplete) {
  std::vector<Matrix> el{Matrix::Identity(2, 2) * 0.5};
  EXPECT_THROW(Povm(MultiSpace({2}), el), InvalidArgumentError);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 2.0;
  neg(1, 1) = -1.0;
  Matrix rest = Matrix::Identity(2, 2) - neg;
  EXPECT_THROW(Povm(MultiSpace({2}), {neg, rest}), InvalidArgumentError);
}

TEST(HaarSample, DeterministicAndConverging) {
  const DesignEnsemble a = haar_sample_ensemble(2, 1000, 5), b = haar_sample_ensemble(2, 1000, 5);
  for (std::size_t x = 0; x < a.size(); ++x) EXPECT_EQ(a.states()[x], b.states()[x]);
  const DesignEnsemble one = haar_sample_ensemble(3, 1, 9);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.weights()[0], 1.0);
  const DesignEnsemble big = haar_sample_ensemble(2, 100000, 17);
  const Certification c = design_certify(big, 2);
  EXPECT_LT(c.residual, 0.02);
  EXPECT_FALSE(c.certified);
  const Certification s = design_certify_statistical(big, 2);
  EXPECT_TRUE(s.certified) << s.residual << " vs " << s.tolerance;
}

TEST(DesignCertify, ScaleLimit) {
  EXPECT_THROW(design_certify(catalog::mub(5), 5), ScaleLimitError);
  EXPECT_THROW(design_certify(catalog::tetrahedron(), 0), InvalidArgumentError);
}
