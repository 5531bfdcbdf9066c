#include <gtest/gtest.h>

#include "morphcoh/ce_complex.hpp"
#include "morphcoh/exterior.hpp"
#include "morphcoh/fixtures.hpp"
#include "morphcoh/linalg.hpp"
#include "morphcoh/random_instances.hpp"
#include "morphcoh/sh_lie.hpp"

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

TwoTermSh skeletal_on(const Representation& v, const Matrix& l3) {
  const auto acts = v.actions();
  return TwoTermSh(Matrix(v.algebra().dim(), v.dim()), v.algebra(), std::vector<Matrix>(acts.begin(), acts.end()), l3);
}

// A degree-3 mLA cocycle on the SL2/V1 fixture with every block nonzero.
MCochain rich_cocycle(random::Rng& rng, const MorphismRep& rep) {
  for (;;) {
    const MCochain c = random::cocycle(rng, rep, 3);
    if (!c.theta.is_zero() && !c.gamma.is_zero() && !c.eta.is_zero()) return c;
  }
}

ShTwist random_twist(random::Rng& rng, const SkeletalMorphismSh& s) {
  const std::size_t g0 = s.g.dim0(), g1 = s.g.dim1(), h0 = s.h.dim0(), h1 = s.h.dim1();
  return {random::matrix(rng, g1, binomial(g0, 2)), random::matrix(rng, h1, binomial(h0, 2)),
          random::matrix(rng, h1, g0)};
}

}  // namespace

TEST(TwoTermSh, LieAlgebraAsShAlgebra) {
  for (const LieAlgebra& g : {fx::sl2(), fx::heis(), fx::r2(), fx::gl2()}) {
    EXPECT_TRUE(check_two_term_sh(TwoTermSh::from_lie_algebra(g)));
  }
  const CheckReport r = check_two_term_sh(TwoTermSh::from_lie_algebra(fx::broken_jacobi()));
  EXPECT_FALSE(r);
  EXPECT_NE(r.violation.find("axiom (iii)"), std::string::npos);
  EXPECT_NE(r.violation.find("(1,2,3)"), std::string::npos);
}

TEST(TwoTermSh, SL2V1WithCocycle) {
  // wedge^4 sl2 = 0, so every 3-cochain is a CE cocycle
  const Matrix d3 = ce_differential(fx::v1(), 3);
  EXPECT_EQ(d3.rows(), 0u);
  const TwoTermSh t = skeletal_on(fx::v1(), Matrix{{1}, {-2}});
  EXPECT_TRUE(check_two_term_sh(t));
}

TEST(TwoTermSh, NonCocycleFailsAxiomFive) {
  const Representation v = fx::gl2_standard();
  const Matrix d3 = ce_differential(v, 3);
  ASSERT_GT(rank(d3), 0u);
  // the first coordinate direction not killed by delta
  Matrix l3;
  for (std::size_t k = 0; k < d3.cols(); ++k) {
    if (!d3.col(k).is_zero()) {
      l3 = Matrix::unvectorize(Matrix::unit(d3.cols(), k), v.dim(), binomial(4, 3));
      break;
    }
  }
  const CheckReport r = check_two_term_sh(skeletal_on(v, l3));
  EXPECT_FALSE(r);
  EXPECT_NE(r.violation.find("axiom (v)"), std::string::npos);

  const Matrix z = kernel_basis(d3);
  ASSERT_GT(z.cols(), 0u);
  EXPECT_TRUE(check_two_term_sh(skeletal_on(v, Matrix::unvectorize(z.col(0), v.dim(), 4))));
}

TEST(TwoTermSh, NonSkeletalAxioms) {
  // g1 = g0 = k with d = id and everything else zero
  const TwoTermSh t(Matrix{{1}}, LieAlgebra::abelian(1), {Matrix{{0}}}, Matrix(1, 0));
  EXPECT_TRUE(check_two_term_sh(t));
  // l2(x, p) = p with d = id: d l2(x, p) = p but l2(x, dp) = 0
  const TwoTermSh bad(Matrix{{1}}, LieAlgebra::abelian(1), {Matrix{{1}}}, Matrix(1, 0));
  const CheckReport r = check_two_term_sh(bad);
  EXPECT_FALSE(r);
  EXPECT_NE(r.violation.find("axiom (i)"), std::string::npos);
  EXPECT_THROW(TwoTermSh(Matrix(2, 1), LieAlgebra::abelian(1), {Matrix{{0}}}, Matrix(1, 0)), Error);
}

TEST(ShMorphism, IdentityAndZero) {
  const TwoTermSh t = skeletal_on(fx::v1(), Matrix{{1}, {3}});
  EXPECT_TRUE(check_sh_morphism(t, t, ShMorphism::identity(t)));
  const TwoTermSh a = TwoTermSh::from_lie_algebra(fx::sl2());
  const TwoTermSh b = skeletal_on(Representation::adjoint(fx::heis()), Matrix(3, 1));
  const ShMorphism zero{Matrix(3, 3), Matrix(3, 0), Matrix(3, 3)};
  EXPECT_TRUE(check_sh_morphism(a, b, zero));
  EXPECT_EQ(kind_of([&] { check_sh_morphism(a, b, ShMorphism{Matrix(2, 3), Matrix(3, 0), Matrix(3, 3)}); }),
            ErrorKind::Shape);
}

TEST(ShMorphism, PerturbedPhi2FailsConditionFour) {
  random::Rng rng(21);
  const MorphismRep rep = fx::sl2_v1_fixture();
  const SkeletalMorphismSh s = triple_to_skeletal(rep, rich_cocycle(rng, rep));
  ASSERT_TRUE(check_skeletal(s));
  const Matrix d2 = ce_differential(pullback_rep(rep.base(), rep.w()), 2);
  bool found = false;
  for (std::size_t k = 0; k < d2.cols() && !found; ++k) {
    if (d2.col(k).is_zero()) continue;
    ShMorphism m = s.phi;
    m.phi2(k % 2, k / 2) += Rational(1);
    const CheckReport r = check_sh_morphism(s.g, s.h, m);
    EXPECT_FALSE(r);
    EXPECT_NE(r.violation.find("condition (iv)"), std::string::npos);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Skeletal, ZeroCocycleRoundTrip) {
  const MorphismRep rep = fx::sl2_v1_fixture();
  const SkeletalMorphismSh s = triple_to_skeletal(rep, MCochain::zero(rep, 3));
  EXPECT_TRUE(check_skeletal(s));
  const ShTriple t = skeletal_to_triple(s);
  EXPECT_EQ(t.rep, rep);
  EXPECT_EQ(t.cocycle, MCochain::zero(rep, 3));
}

TEST(Skeletal, AbelianPlaneHasNoThreeCochains) {
  const MorphismRep rep(MorphismLieAlgebra::identity(fx::a2()), fx::v0(fx::a2()), fx::v0(fx::a2()), Matrix{{1}});
  const SkeletalMorphismSh s = triple_to_skeletal(rep, MCochain::zero(rep, 3));
  const ShTriple t = skeletal_to_triple(s);
  EXPECT_EQ(t.cocycle.theta.cols(), 0u);
  EXPECT_EQ(t.cocycle.gamma.cols(), 0u);
  EXPECT_TRUE(t.cocycle.eta.is_zero());
}

TEST(Skeletal, NonzeroCocycle) {
  random::Rng rng(8);
  const MorphismRep rep = fx::sl2_v1_fixture();
  const MCochain c = rich_cocycle(rng, rep);
  const SkeletalMorphismSh s = triple_to_skeletal(rep, c);
  EXPECT_TRUE(check_skeletal(s));
  const ShTriple t = skeletal_to_triple(s);
  EXPECT_EQ(t.cocycle, c);
  EXPECT_TRUE(apply_differential(rep, t.cocycle) == MCochain::zero(rep, 4));
}

TEST(Skeletal, Errors) {
  const MorphismRep rep = fx::sl2_v1_fixture();
  MCochain c = MCochain::zero(rep, 3);
  c.theta(0, 0) = 1;
  EXPECT_EQ(kind_of([&] { triple_to_skeletal(rep, c); }), ErrorKind::NotACocycle);
  EXPECT_EQ(kind_of([&] { triple_to_skeletal(rep, MCochain::zero(rep, 2)); }), ErrorKind::Shape);

  SkeletalMorphismSh s = triple_to_skeletal(rep, MCochain::zero(rep, 3));
  s.phi.phi1 = Matrix{{0, 1}, {0, 0}};
  EXPECT_EQ(kind_of([&] { skeletal_to_triple(s); }), ErrorKind::Validation);
}

TEST(Twist, ZeroTwistIsIdentity) {
  random::Rng rng(2);
  const MorphismRep rep = fx::sl2_v1_fixture();
  const SkeletalMorphismSh s = triple_to_skeletal(rep, rich_cocycle(rng, rep));
  const ShTwist zero{Matrix(2, 3), Matrix(2, 3), Matrix(2, 3)};
  EXPECT_EQ(twist_equivalence(s, zero), s);
}

TEST(Twist, AbelianTwistsInvert) {
  random::Rng rng(6);
  const MorphismLieAlgebra base(fx::heis(), fx::a2(), Matrix{{1, 0, 0}, {0, 1, 0}});
  const MorphismRep rep(base, Representation::trivial(fx::heis(), 2), Representation::trivial(fx::a2(), 1),
                        Matrix{{1, 1}});
  const SkeletalMorphismSh s = triple_to_skeletal(rep, random::cocycle(rng, rep, 3));
  const ShTwist t = random_twist(rng, s);
  const ShTwist neg{-t.sigma, -t.sigma_p, -t.phi};
  const SkeletalMorphismSh once = twist_equivalence(s, t);
  EXPECT_NE(once, s);
  EXPECT_EQ(twist_equivalence(once, neg), s);
}

TEST(Twist, CoboundaryTwistsToZero) {
  random::Rng rng(12);
  const MorphismRep rep = fx::sl2_v1_fixture();
  const MCochain sigma = random::cochain(rng, rep, 2);
  const MCochain b = apply_differential(rep, sigma);
  ASSERT_FALSE(b == MCochain::zero(rep, 3));
  const SkeletalMorphismSh s = triple_to_skeletal(rep, b);
  const SkeletalMorphismSh flat = twist_equivalence(s, ShTwist{-sigma.theta, -sigma.gamma, -sigma.eta});
  EXPECT_EQ(skeletal_to_triple(flat).cocycle, MCochain::zero(rep, 3));
}

class TwistProperty : public ::testing::TestWithParam<int> {};

TEST_P(TwistProperty, ShiftsCochainByDifferential) {
  random::Rng rng(GetParam());
  const MorphismRep rep = GetParam() % 2 == 0 ? fx::sl2_v1_fixture() : random::morphism_rep(rng);
  const SkeletalMorphismSh s = triple_to_skeletal(rep, random::cocycle(rng, rep, 3));
  ASSERT_TRUE(check_skeletal(s));
  const ShTwist t = random_twist(rng, s);
  const SkeletalMorphismSh u = twist_equivalence(s, t);
  EXPECT_TRUE(check_skeletal(u));
  MCochain c = MCochain::zero(rep, 2);
  c.theta = t.sigma;
  c.gamma = t.sigma_p;
  c.eta = t.phi;
  EXPECT_EQ(skeletal_to_triple(u).cocycle, skeletal_to_triple(s).cocycle + apply_differential(rep, c));
  EXPECT_EQ(skeletal_to_triple(s).rep, rep);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TwistProperty, ::testing::Range(0, 20));
