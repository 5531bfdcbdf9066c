#include <gtest/gtest.h>

#include "morphcoh/deformations.hpp"
#include "morphcoh/fixtures.hpp"
#include "morphcoh/linalg.hpp"
#include "morphcoh/random_instances.hpp"

using namespace morphcoh;
namespace fx = morphcoh::fixtures;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

MCochain inner(const MorphismRep& rep, const Matrix& v) {
  MCochain c = MCochain::zero(rep, 0);
  c.theta = v;
  return apply_differential(rep, c);
}

}  // namespace

TEST(Derivation, InnerAndZero) {
  random::Rng rng(1);
  const MorphismRep rep = fx::sl2_v1_fixture();
  const MCochain c = inner(rep, random::matrix(rng, 2, 1));
  EXPECT_TRUE(check_derivation(rep, c.theta, c.gamma, c.eta));
  EXPECT_TRUE(check_derivation(rep, Matrix(2, 3), Matrix(2, 3), Matrix(2, 1)));
}

TEST(Derivation, A1ThirdIdentityFails) {
  const MorphismRep a1 = fx::a1_fixture();
  for (const Rational& w : {Rational(0), Rational(5, 3)}) {
    const CheckReport r = check_derivation(a1, Matrix{{1}}, Matrix{{0}}, Matrix{{w}});
    EXPECT_FALSE(r);
    EXPECT_NE(r.violation.find("psi(d(e1))"), std::string::npos);
  }
}

TEST(Derivation, ResidualMatchesDifferential) {
  random::Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const MorphismRep rep = random::morphism_rep(rng);
    const MCochain c = random::cochain(rng, rep, 1);
    const bool zero_residual = derivation_residual(rep, c.theta, c.gamma, c.eta).is_zero();
    EXPECT_EQ(bool(check_derivation(rep, c.theta, c.gamma, c.eta)), zero_residual);
    EXPECT_EQ(apply_differential(rep, c) == MCochain::zero(rep, 2), zero_residual);
    const MCochain z = random::cocycle(rng, rep, 1);
    EXPECT_TRUE(check_derivation(rep, z.theta, z.gamma, z.eta));
  }
}

TEST(Derivation, ShapeErrors) {
  EXPECT_EQ(kind_of([] { check_derivation(fx::a1_fixture(), Matrix(2, 1), Matrix(1, 1), Matrix(1, 1)); }),
            ErrorKind::Shape);
}

TEST(HomomorphismRep, IdentityGivesAdjoint) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  const MorphismRep rep = homomorphism_induced_rep(m, m, Matrix::identity(3), Matrix::identity(3));
  EXPECT_EQ(rep, MorphismRep::adjoint(m));
}

TEST(HomomorphismRep, ZeroMaps) {
  const auto src = MorphismLieAlgebra::identity(fx::a2());
  const auto dst = MorphismLieAlgebra::identity(fx::sl2());
  const MorphismRep rep = homomorphism_induced_rep(src, dst, Matrix(3, 2), Matrix(3, 2));
  EXPECT_TRUE(check_morphism_rep_full(rep));
  EXPECT_EQ(rep.psi(), Matrix::identity(3));
  for (const auto& a : rep.v().actions()) EXPECT_TRUE(a.is_zero());
  for (const auto& a : rep.w().actions()) EXPECT_TRUE(a.is_zero());
}

TEST(HomomorphismRep, NotAHomomorphism) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  Matrix alpha(3, 3);
  alpha(0, 0) = 1;
  EXPECT_EQ(kind_of([&] { homomorphism_induced_rep(m, m, alpha, alpha); }), ErrorKind::NotAHomomorphism);
  const Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  EXPECT_EQ(kind_of([&] { homomorphism_induced_rep(m, m, Matrix::identity(3), swap); }),
            ErrorKind::NotAHomomorphism);
}

TEST(InfinitesimalDeformation, Examples) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  const MorphismRep rep = homomorphism_induced_rep(m, m, Matrix::identity(3), Matrix::identity(3));
  EXPECT_TRUE(check_infinitesimal_deformation(rep, Matrix(3, 3), Matrix(3, 3)));
  const MCochain c = inner(rep, Matrix::column({1, -2, Rational(1, 3)}));
  EXPECT_TRUE(check_infinitesimal_deformation(rep, c.theta, c.gamma));

  const auto a1 = MorphismLieAlgebra::identity(fx::a1());
  const MorphismRep r1 = homomorphism_induced_rep(a1, a1, Matrix{{1}}, Matrix{{1}});
  EXPECT_FALSE(check_infinitesimal_deformation(r1, Matrix{{1}}, Matrix{{2}}));
  EXPECT_TRUE(check_infinitesimal_deformation(r1, Matrix{{2}}, Matrix{{2}}));
}

TEST(Quotient, WholeAlgebra) {
  const auto m = MorphismLieAlgebra::identity(fx::heis());
  const QuotientRep q = quotient_morphism_rep(m, Matrix::identity(3), Matrix::identity(3));
  EXPECT_EQ(q.rep.v().dim(), 0u);
  EXPECT_EQ(q.rep.w().dim(), 0u);
  EXPECT_EQ(q.rep.base().g(), fx::heis());
  EXPECT_EQ(cochain_dim(q.rep, 2), 0u);
}

TEST(Quotient, ZeroSubalgebra) {
  const auto m = random::morphism_pool().back();
  const QuotientRep q = quotient_morphism_rep(m, Matrix(1, 0), Matrix(3, 0));
  EXPECT_EQ(q.rep.base().g().dim(), 0u);
  EXPECT_EQ(q.rep.v().dim(), 1u);
  EXPECT_EQ(q.rep.w().dim(), 3u);
  EXPECT_EQ(q.rep.psi(), m.phi());
  EXPECT_EQ(q.g_basis, Matrix::identity(1));
}

TEST(Quotient, HeisenbergCenter) {
  const auto m = MorphismLieAlgebra::identity(fx::heis());
  const Matrix c = Matrix::column({0, 0, 1});
  const QuotientRep q = quotient_morphism_rep(m, c, c);
  EXPECT_EQ(q.rep.base().g().dim(), 1u);
  EXPECT_EQ(q.rep.v().dim(), 2u);
  EXPECT_EQ(q.rep.w().dim(), 2u);
  EXPECT_TRUE(q.rep.v().action(0).is_zero());
  EXPECT_TRUE(q.rep.w().action(0).is_zero());
  EXPECT_EQ(q.g_basis, (Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_TRUE(check_morphism_rep_full(q.rep));

  EXPECT_TRUE(check_subalgebra_deformation_cocycle(q, Matrix(2, 1), Matrix(2, 1)));
  EXPECT_FALSE(check_subalgebra_deformation_cocycle(q, Matrix::column({1, 0}), Matrix(2, 1)));
  EXPECT_TRUE(check_subalgebra_deformation_cocycle(q, Matrix::column({1, 0}), Matrix::column({1, 0})));
}

TEST(Quotient, SimpleCoboundaryIsCocycle) {
  // p = span(e, h) inside sl2: a Borel subalgebra acting on sl2/p
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  const Matrix b{{1, 0}, {0, 0}, {0, 1}};
  const QuotientRep q = quotient_morphism_rep(m, b, b);
  EXPECT_TRUE(check_morphism_rep_full(q.rep));
  const MCochain c = inner(q.rep, Matrix::column({1}));
  EXPECT_FALSE(c.theta.is_zero());
  EXPECT_TRUE(check_subalgebra_deformation_cocycle(q, c.theta, c.gamma));
}

TEST(Quotient, Errors) {
  const auto m = MorphismLieAlgebra::identity(fx::heis());
  const Matrix plane{{1, 0}, {0, 1}, {0, 0}};
  EXPECT_EQ(kind_of([&] { quotient_morphism_rep(m, plane, plane); }), ErrorKind::NotASubalgebra);
  EXPECT_EQ(kind_of([&] { quotient_morphism_rep(m, Matrix::column({0, 0, 1}), Matrix::column({1, 0, 0})); }),
            ErrorKind::NotPreserved);
  const Matrix dep{{1, 2}, {0, 0}, {0, 0}};
  EXPECT_EQ(kind_of([&] { quotient_morphism_rep(m, dep, dep); }), ErrorKind::Validation);
}

class LowDegreeProperty : public ::testing::TestWithParam<int> {};

TEST_P(LowDegreeProperty, H0AndH1Descriptions) {
  random::Rng rng(GetParam());
  const MorphismRep rep = random::morphism_rep(rng);
  EXPECT_EQ(mla_cohomology_dim(rep, 0), h0_invariants_dim(rep));
  EXPECT_EQ(mla_cohomology_dim(rep, 1), derivation_space_dim(rep) - inner_derivation_space_dim(rep));
}

INSTANTIATE_TEST_SUITE_P(Seeds, LowDegreeProperty, ::testing::Range(0, 30));
