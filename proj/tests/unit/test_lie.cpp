#include <gtest/gtest.h>

#include "morphcoh/error.hpp"
#include "morphcoh/fixtures.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/random_instances.hpp"

using namespace morphcoh;
namespace fx = morphcoh::fixtures;

TEST(LieAlgebra, AntisymmetryEnforced) {
  std::vector<Rational> c(8, Rational(0));
  c[(0 * 2 + 1) * 2 + 1] = 1;  // [e1,e2] = e2 but [e2,e1] left 0
  EXPECT_THROW(LieAlgebra(2, c), Error);
  EXPECT_THROW(LieAlgebra(2, std::vector<Rational>(3)), Error);
}

TEST(LieAlgebra, FixtureBrackets) {
  const LieAlgebra s = fx::sl2();
  // basis (e, f, h)
  EXPECT_EQ(s.bracket_basis(2, 0), Matrix::column({2, 0, 0}));
  EXPECT_EQ(s.bracket_basis(2, 1), Matrix::column({0, -2, 0}));
  EXPECT_EQ(s.bracket_basis(0, 1), Matrix::column({0, 0, 1}));
  EXPECT_EQ(fx::heis().bracket_basis(0, 1), Matrix::column({0, 0, 1}));
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(check_jacobi(fx::sl2()));
  EXPECT_TRUE(check_jacobi(LieAlgebra::abelian(4)));
  EXPECT_TRUE(check_jacobi(fx::heis()));
  EXPECT_TRUE(check_jacobi(fx::gl2()));
  const CheckReport r = check_jacobi(fx::broken_jacobi());
  EXPECT_FALSE(r);
  EXPECT_NE(r.violation.find("(1,2,3)"), std::string::npos);
  EXPECT_NE(r.violation.find("-1"), std::string::npos);
}

TEST(Representation, Fixtures) {
  EXPECT_TRUE(check_representation(fx::v1()));
  EXPECT_TRUE(check_representation(fx::gl2_standard()));
  EXPECT_TRUE(check_representation(Representation::adjoint(fx::sl2())));
  EXPECT_TRUE(check_representation(fx::v0(fx::heis())));
  const Representation bad(fx::sl2(), 2, {fx::v1().action(0), fx::v1().action(0), fx::v1().action(2)});
  EXPECT_FALSE(check_representation(bad));
}

TEST(MorphismRep, AdjointIsARepresentation) {
  for (const auto& m : random::morphism_pool()) {
    EXPECT_TRUE(check_morphism_rep_full(MorphismRep::adjoint(m)));
  }
}

TEST(MorphismRep, TrivialRepsWithAnyPsi) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  const MorphismRep rep(m, Representation::trivial(fx::sl2(), 2), Representation::trivial(fx::sl2(), 3),
                        Matrix{{1, 2}, {-3, 4}, {5, 7}});
  EXPECT_TRUE(check_morphism_rep(rep));
}

TEST(MorphismRep, NonIntertwiningPsi) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  const MorphismRep rep(m, fx::v1(), fx::v1(), Matrix{{0, 1}, {0, 0}});
  const CheckReport r = check_morphism_rep(rep);
  EXPECT_FALSE(r);
  EXPECT_NE(r.violation.find("intertwine"), std::string::npos);
}

TEST(MorphismRep, ShapeMismatch) {
  const auto m = MorphismLieAlgebra::identity(fx::sl2());
  EXPECT_THROW(MorphismRep(m, fx::v1(), fx::v1(), Matrix::identity(3)), Error);
  EXPECT_THROW(MorphismRep(m, fx::v0(fx::a2()), fx::v1(), Matrix(2, 1)), Error);
  EXPECT_THROW(MorphismLieAlgebra(fx::sl2(), fx::a2(), Matrix(3, 2)), Error);
}

TEST(Homomorphism, NonHomomorphismDetected) {
  // e -> e, f -> 0, h -> 0 is not a homomorphism of sl2
  Matrix phi(3, 3);
  phi(0, 0) = 1;
  EXPECT_FALSE(check_lie_homomorphism(fx::sl2(), fx::sl2(), phi));
  EXPECT_TRUE(check_lie_homomorphism(fx::sl2(), fx::sl2(), Matrix::zero(3, 3)));
}

TEST(Pullback, Examples) {
  const MorphismLieAlgebra zero(fx::heis(), fx::sl2(), Matrix::zero(3, 3));
  const Representation p0 = pullback_rep(zero, fx::v1());
  for (const auto& a : p0.actions()) EXPECT_TRUE(a.is_zero());
  EXPECT_TRUE(check_representation(p0));

  const Representation p1 = pullback_rep(MorphismLieAlgebra::identity(fx::sl2()), fx::v1());
  EXPECT_EQ(p1, fx::v1());
  EXPECT_THROW(pullback_rep(zero, fx::v0(fx::heis())), Error);
}

TEST(Homomorphism, CompositionProperty) {
  random::Rng rng(7);
  const auto pool = random::morphism_pool();
  int composed = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (!(a.h() == b.g())) continue;
      const Matrix c = b.phi() * a.phi();
      EXPECT_TRUE(check_lie_homomorphism(a.g(), b.h(), c));
      ++composed;
    }
  }
  EXPECT_GT(composed, 10);

  // homomorphisms of morphism Lie algebras: (alpha, beta) and (alpha', beta')
  const auto id_sl2 = MorphismLieAlgebra::identity(fx::sl2());
  const auto r2_to_sl2 = pool[pool.size() - 2];
  ASSERT_TRUE(r2_to_sl2.h() == fx::sl2());
  const auto id_r2 = MorphismLieAlgebra::identity(r2_to_sl2.g());
  // (r2, r2, id) -> (sl2, sl2, id) via (phi, phi), then (sl2, sl2, id) -> itself via a conjugation
  ASSERT_TRUE(check_morphism_homomorphism(id_r2, id_sl2, r2_to_sl2.phi(), r2_to_sl2.phi()));
  // e <-> f, h -> -h is an automorphism of sl2
  const Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  ASSERT_TRUE(check_morphism_homomorphism(id_sl2, id_sl2, swap, swap));
  EXPECT_TRUE(check_morphism_homomorphism(id_r2, id_sl2, swap * r2_to_sl2.phi(), swap * r2_to_sl2.phi()));
}

TEST(RotaBaxter, ZeroOperator) {
  const RotaBaxterDatum d{fx::sl2(), Matrix::zero(3, 3), Rational(3), std::nullopt};
  ASSERT_TRUE(check_rota_baxter(d));
  const RotaBaxterResult r = rota_baxter_morphism(d);
  const LieAlgebra& gr = r.morphism.g();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(gr.bracket_basis(i, j), fx::sl2().bracket_basis(i, j) * Rational(3));
  }
  EXPECT_TRUE(check_morphism_lie_algebra(r.morphism));
}

TEST(RotaBaxter, IdentityWeightMinusOne) {
  const RotaBaxterDatum d{fx::heis(), Matrix::identity(3), Rational(-1), std::nullopt};
  const RotaBaxterResult r = rota_baxter_morphism(d);
  EXPECT_EQ(r.morphism.g(), fx::heis());
  EXPECT_EQ(r.morphism.phi(), Matrix::identity(3));
}

TEST(RotaBaxter, AbelianAnyOperator) {
  random::Rng rng(3);
  const RotaBaxterDatum d{fx::a2(), random::matrix(rng, 2, 2), random::rational(rng), std::nullopt};
  const RotaBaxterResult r = rota_baxter_morphism(d);
  EXPECT_EQ(r.morphism.g(), LieAlgebra::abelian(2));
}

TEST(RotaBaxter, ProjectionOntoBorel) {
  // sl2 = span(e, h) + span(f) as a sum of subalgebras; -lambda times the
  // projection onto the first summand has weight lambda.
  const Rational lambda(2);
  Matrix proj(3, 3);
  proj(0, 0) = 1;
  proj(2, 2) = 1;
  const RotaBaxterDatum d{fx::sl2(), proj * (-lambda), lambda, std::nullopt};
  ASSERT_TRUE(check_rota_baxter(d));
  const RotaBaxterResult r = rota_baxter_morphism(d);
  EXPECT_TRUE(check_jacobi(r.morphism.g()));
  EXPECT_TRUE(check_lie_homomorphism(r.morphism.g(), fx::sl2(), r.morphism.phi()));
  EXPECT_NE(r.morphism.g(), fx::sl2());
}

TEST(RotaBaxter, ModuleData) {
  const Rational lambda(-3, 2);
  const RotaBaxterDatum d{fx::sl2(), Matrix::identity(3) * (-lambda), lambda,
                          RotaBaxterModule{fx::v1(), Matrix::identity(2) * (-lambda)}};
  ASSERT_TRUE(check_rota_baxter(d));
  const RotaBaxterResult r = rota_baxter_morphism(d);
  ASSERT_TRUE(r.rep);
  EXPECT_TRUE(check_morphism_rep_full(*r.rep));
}

TEST(RotaBaxter, Violation) {
  Matrix r(3, 3);
  r(0, 1) = 1;
  const RotaBaxterDatum d{fx::sl2(), r, Rational(1), std::nullopt};
  const CheckReport rep = check_rota_baxter(d);
  EXPECT_FALSE(rep);
  try {
    rota_baxter_morphism(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RotaBaxterViolation);
  }

  const RotaBaxterDatum bad_module{fx::sl2(), Matrix::zero(3, 3), Rational(1),
                                   RotaBaxterModule{fx::v1(), Matrix{{1, 0}, {0, 0}}}};
  EXPECT_FALSE(check_rota_baxter(bad_module));
}
