#include "morphcoh/sh_lie.hpp"

#include <string>

#include "morphcoh/exterior.hpp"

namespace morphcoh {

namespace {

std::string labels(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

void expect_shape(const Matrix& m, std::size_t r, std::size_t c, const std::string& name) {
  if (m.rows() != r || m.cols() != c) {
    throw Error(ErrorKind::Shape, name + " must be " + std::to_string(r) + "x" + std::to_string(c) + ", got " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Matrix bilinear_at(const Matrix& f, std::size_t dim, const Matrix& x, const Matrix& y) {
  const Matrix args[] = {x, y};
  return evaluate_alternating(f, dim, args);
}

}  // namespace

TwoTermSh::TwoTermSh(Matrix d, LieAlgebra l2_00, std::vector<Matrix> l2_01, Matrix l3)
    : d_(std::move(d)), l2_00_(std::move(l2_00)), l2_01_(std::move(l2_01)), l3_(std::move(l3)) {
  const std::size_t n0 = l2_00_.dim();
  if (d_.rows() != n0) throw Error(ErrorKind::Shape, "d must map g1 into g0");
  if (l2_01_.size() != n0) throw Error(ErrorKind::Shape, "l2 on g0 x g1 needs one matrix per basis vector of g0");
  for (std::size_t i = 0; i < n0; ++i) expect_shape(l2_01_[i], dim1(), dim1(), "l2(e" + std::to_string(i + 1) + ", -)");
  expect_shape(l3_, dim1(), binomial(n0, 3), "l3");
}

TwoTermSh TwoTermSh::from_lie_algebra(const LieAlgebra& g) {
  return TwoTermSh(Matrix(g.dim(), 0), g, std::vector<Matrix>(g.dim(), Matrix(0, 0)), Matrix(0, binomial(g.dim(), 3)));
}

Matrix TwoTermSh::act(const Matrix& x, const Matrix& p) const {
  Matrix out(dim1(), 1);
  for (std::size_t i = 0; i < dim0(); ++i) {
    if (!x(i, 0).is_zero()) out.add_block(0, 0, l2_01_[i] * p, x(i, 0));
  }
  return out;
}

Matrix TwoTermSh::l3_at(const Matrix& x, const Matrix& y, const Matrix& z) const {
  const Matrix args[] = {x, y, z};
  return evaluate_alternating(l3_, dim0(), args);
}

ShMorphism ShMorphism::identity(const TwoTermSh& t) {
  return {Matrix::identity(t.dim0()), Matrix::identity(t.dim1()), Matrix(t.dim1(), binomial(t.dim0(), 2))};
}

CheckReport check_two_term_sh(const TwoTermSh& t) {
  const std::size_t n0 = t.dim0();
  const std::size_t n1 = t.dim1();
  const LieAlgebra& g = t.l2_00();
  const Matrix& d = t.d();
  auto e0 = [&](std::size_t i) { return Matrix::unit(n0, i); };
  auto e1 = [&](std::size_t i) { return Matrix::unit(n1, i); };

  // (i) d l2(x, p) = l2(x, dp)
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t p = 0; p < n1; ++p) {
      if (d * t.act(e0(x), e1(p)) != g.bracket(e0(x), d.col(p))) {
        return CheckReport::fail("axiom (i) fails on " + labels({x, p}));
      }
    }
  }
  // (ii) l2(dp, q) = l2(p, dq) = -l2(dq, p)
  for (std::size_t p = 0; p < n1; ++p) {
    for (std::size_t q = 0; q < n1; ++q) {
      if (!(t.act(d.col(p), e1(q)) + t.act(d.col(q), e1(p))).is_zero()) {
        return CheckReport::fail("axiom (ii) fails on " + labels({p, q}));
      }
    }
  }
  // (iii) d l3(x, y, z) = Jacobiator
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t y = 0; y < n0; ++y) {
      for (std::size_t z = 0; z < n0; ++z) {
        const Matrix jac = g.bracket(e0(x), g.bracket_basis(y, z)) + g.bracket(e0(y), g.bracket_basis(z, x)) +
                           g.bracket(e0(z), g.bracket_basis(x, y));
        if (d * t.l3_at(e0(x), e0(y), e0(z)) != jac) {
          return CheckReport::fail("axiom (iii) fails on " + labels({x, y, z}));
        }
      }
    }
  }
  // (iv) l3(x, y, dp) = l2(x, l2(y, p)) + l2(y, l2(p, x)) + l2(p, l2(x, y))
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t y = 0; y < n0; ++y) {
      for (std::size_t p = 0; p < n1; ++p) {
        const Matrix rhs = t.act(e0(x), t.act(e0(y), e1(p))) - t.act(e0(y), t.act(e0(x), e1(p))) -
                           t.act(g.bracket_basis(x, y), e1(p));
        if (t.l3_at(e0(x), e0(y), d.col(p)) != rhs) {
          return CheckReport::fail("axiom (iv) fails on " + labels({x, y, p}));
        }
      }
    }
  }
  // (v) the coherence identity on quadruples
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t y = 0; y < n0; ++y) {
      for (std::size_t z = 0; z < n0; ++z) {
        for (std::size_t w = 0; w < n0; ++w) {
          const Matrix X = e0(x), Y = e0(y), Z = e0(z), T = e0(w);
          Matrix s = t.act(X, t.l3_at(Y, Z, T)) - t.act(Y, t.l3_at(X, Z, T)) + t.act(Z, t.l3_at(X, Y, T)) -
                     t.act(T, t.l3_at(X, Y, Z));
          s -= t.l3_at(g.bracket_basis(x, y), Z, T);
          s += t.l3_at(g.bracket_basis(x, z), Y, T);
          s -= t.l3_at(g.bracket_basis(x, w), Y, Z);
          s -= t.l3_at(g.bracket_basis(y, z), X, T);
          s += t.l3_at(g.bracket_basis(y, w), X, Z);
          s -= t.l3_at(g.bracket_basis(z, w), X, Y);
          if (!s.is_zero()) return CheckReport::fail("axiom (v) fails on " + labels({x, y, z, w}));
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport check_sh_morphism(const TwoTermSh& src, const TwoTermSh& dst, const ShMorphism& m) {
  expect_shape(m.phi0, dst.dim0(), src.dim0(), "phi0");
  expect_shape(m.phi1, dst.dim1(), src.dim1(), "phi1");
  expect_shape(m.phi2, dst.dim1(), binomial(src.dim0(), 2), "phi2");
  const std::size_t n0 = src.dim0();
  const std::size_t n1 = src.dim1();
  const LieAlgebra& g = src.l2_00();
  const LieAlgebra& h = dst.l2_00();
  auto e0 = [&](std::size_t i) { return Matrix::unit(n0, i); };
  auto e1 = [&](std::size_t i) { return Matrix::unit(n1, i); };
  auto phi2 = [&](const Matrix& x, const Matrix& y) { return bilinear_at(m.phi2, n0, x, y); };

  // (i) phi0 d = d' phi1
  if (m.phi0 * src.d() != dst.d() * m.phi1) return CheckReport::fail("condition (i) fails: phi0 d != d' phi1");
  // (ii) d' phi2(x, y) = phi0 l2(x, y) - l2'(phi0 x, phi0 y)
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t y = 0; y < n0; ++y) {
      const Matrix rhs = m.phi0 * g.bracket_basis(x, y) - h.bracket(m.phi0.col(x), m.phi0.col(y));
      if (dst.d() * phi2(e0(x), e0(y)) != rhs) return CheckReport::fail("condition (ii) fails on " + labels({x, y}));
    }
  }
  // (iii) phi2(x, dp) = phi1 l2(x, p) - l2'(phi0 x, phi1 p)
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t p = 0; p < n1; ++p) {
      const Matrix rhs = m.phi1 * src.act(e0(x), e1(p)) - dst.act(m.phi0.col(x), m.phi1.col(p));
      if (phi2(e0(x), src.d().col(p)) != rhs) return CheckReport::fail("condition (iii) fails on " + labels({x, p}));
    }
  }
  // (iv) l2'(phi0 x, phi2(y, z)) + c.p. + phi2(x, l2(y, z)) + c.p.
  //        = phi1 l3(x, y, z) - l3'(phi0 x, phi0 y, phi0 z)
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t y = 0; y < n0; ++y) {
      for (std::size_t z = 0; z < n0; ++z) {
        const Matrix X = e0(x), Y = e0(y), Z = e0(z);
        const Matrix px = m.phi0.col(x), py = m.phi0.col(y), pz = m.phi0.col(z);
        const Matrix lhs = dst.act(px, phi2(Y, Z)) + dst.act(py, phi2(Z, X)) + dst.act(pz, phi2(X, Y)) +
                           phi2(X, g.bracket_basis(y, z)) + phi2(Y, g.bracket_basis(z, x)) +
                           phi2(Z, g.bracket_basis(x, y));
        const Matrix rhs = m.phi1 * src.l3_at(X, Y, Z) - dst.l3_at(px, py, pz);
        if (lhs != rhs) return CheckReport::fail("condition (iv) fails on " + labels({x, y, z}));
      }
    }
  }
  return CheckReport::pass();
}

CheckReport check_skeletal(const SkeletalMorphismSh& s) {
  if (!s.g.d().is_zero()) return CheckReport::fail("source differential is not zero");
  if (!s.h.d().is_zero()) return CheckReport::fail("target differential is not zero");
  if (auto r = check_two_term_sh(s.g); !r) return CheckReport::fail("source: " + r.violation);
  if (auto r = check_two_term_sh(s.h); !r) return CheckReport::fail("target: " + r.violation);
  if (auto r = check_sh_morphism(s.g, s.h, s.phi); !r) return CheckReport::fail("morphism: " + r.violation);
  return CheckReport::pass();
}

ShTriple skeletal_to_triple(const SkeletalMorphismSh& s) {
  require(check_skeletal(s), ErrorKind::Validation, "skeletal morphism sh Lie algebra");
  MorphismLieAlgebra base(s.g.l2_00(), s.h.l2_00(), s.phi.phi0);
  MorphismRep rep(base, Representation(s.g.l2_00(), s.g.dim1(), s.g.l2_01()),
                  Representation(s.h.l2_00(), s.h.dim1(), s.h.l2_01()), s.phi.phi1);
  MCochain c{3, s.g.l3(), s.h.l3(), s.phi.phi2};
  if (!flatten(apply_differential(rep, c)).is_zero()) {
    throw Error(ErrorKind::Internal, "cochain of a skeletal object is not a cocycle");
  }
  return {std::move(rep), std::move(c)};
}

SkeletalMorphismSh triple_to_skeletal(const MorphismRep& rep, const MCochain& c) {
  check_cochain_shape(rep, c);
  if (c.degree != 3) throw Error(ErrorKind::Shape, "skeletal objects need a degree-3 cochain");
  const MCochain dc = apply_differential(rep, c);
  if (!dc.theta.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero theta block");
  if (!dc.gamma.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero gamma block");
  if (!dc.eta.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero eta block");
  const auto& v = rep.v();
  const auto& w = rep.w();
  SkeletalMorphismSh s{
      TwoTermSh(Matrix(v.algebra().dim(), v.dim()), v.algebra(), std::vector<Matrix>(v.actions().begin(), v.actions().end()), c.theta),
      TwoTermSh(Matrix(w.algebra().dim(), w.dim()), w.algebra(), std::vector<Matrix>(w.actions().begin(), w.actions().end()), c.gamma),
      ShMorphism{rep.base().phi(), rep.psi(), c.eta}};
  require(check_skeletal(s), ErrorKind::Internal, "skeletal object from a cocycle");
  return s;
}

namespace {

// l3 + {l2(x, sigma(y, z)) + c.p.} + {sigma(x, l2(y, z)) + c.p.} on increasing triples.
Matrix twisted_l3(const TwoTermSh& t, const Matrix& sigma) {
  const std::size_t n0 = t.dim0();
  const ExteriorBasis triples(n0, 3);
  Matrix out = t.l3();
  auto e = [&](std::size_t i) { return Matrix::unit(n0, i); };
  auto sig = [&](const Matrix& a, const Matrix& b) { return bilinear_at(sigma, n0, a, b); };
  const LieAlgebra& g = t.l2_00();
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto xyz = triples.tuple(k);
    const std::size_t x = xyz[0], y = xyz[1], z = xyz[2];
    const Matrix add = t.act(e(x), sig(e(y), e(z))) + t.act(e(y), sig(e(z), e(x))) + t.act(e(z), sig(e(x), e(y))) +
                       sig(e(x), g.bracket_basis(y, z)) + sig(e(y), g.bracket_basis(z, x)) +
                       sig(e(z), g.bracket_basis(x, y));
    out.add_block(0, k, add);
  }
  return out;
}

}  // namespace

SkeletalMorphismSh twist_equivalence(const SkeletalMorphismSh& s, const ShTwist& tw) {
  const std::size_t g0 = s.g.dim0(), g1 = s.g.dim1();
  const std::size_t h0 = s.h.dim0(), h1 = s.h.dim1();
  expect_shape(tw.sigma, g1, binomial(g0, 2), "sigma");
  expect_shape(tw.sigma_p, h1, binomial(h0, 2), "sigma'");
  expect_shape(tw.phi, h1, g0, "phi");
  const ShTriple before = skeletal_to_triple(s);

  // phi2 + phi1 sigma - sigma'(phi0 x, phi0 y) - l2'(phi0 x, phi y) - l2'(phi x, phi0 y) + phi l2(x, y),
  // with l2'(phi x, phi0 y) = -l2'(phi0 y, phi x)
  const ExteriorBasis pairs(g0, 2);
  Matrix phi2 = s.phi.phi2 + s.phi.phi1 * tw.sigma;
  const Matrix& p0 = s.phi.phi0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto xy = pairs.tuple(k);
    const std::size_t x = xy[0], y = xy[1];
    const Matrix add = -bilinear_at(tw.sigma_p, h0, p0.col(x), p0.col(y)) - s.h.act(p0.col(x), tw.phi.col(y)) +
                       s.h.act(p0.col(y), tw.phi.col(x)) + tw.phi * s.g.l2_00().bracket_basis(x, y);
    phi2.add_block(0, k, add);
  }

  SkeletalMorphismSh out{TwoTermSh(s.g.d(), s.g.l2_00(), s.g.l2_01(), twisted_l3(s.g, tw.sigma)),
                         TwoTermSh(s.h.d(), s.h.l2_00(), s.h.l2_01(), twisted_l3(s.h, tw.sigma_p)),
                         ShMorphism{s.phi.phi0, s.phi.phi1, std::move(phi2)}};
  require(check_skeletal(out), ErrorKind::Internal, "twisted skeletal object");
  const ShTriple after = skeletal_to_triple(out);
  const MCochain expected = apply_differential(before.rep, MCochain{2, tw.sigma, tw.sigma_p, tw.phi});
  if (after.cocycle - before.cocycle != expected) {
    throw Error(ErrorKind::Internal, "twist does not shift the cocycle by delta(sigma, sigma', phi)");
  }
  return out;
}

}  // namespace morphcoh
