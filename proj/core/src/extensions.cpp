#include "morphcoh/extensions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "morphcoh/exterior.hpp"
#include "morphcoh/linalg.hpp"

namespace morphcoh {

namespace {

// Structure constants of g + V with [(x,v),(y,w)] = ([x,y], x.w - y.v + omega(x,y)).
LieAlgebra twisted_semidirect(const Representation& rep, const Matrix& omega) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t dg = g.dim();
  const std::size_t n = dg + rep.dim();
  const ExteriorBasis pairs(dg, 2);
  std::vector<Rational> c(n * n * n);
  auto at = [&](std::size_t a, std::size_t b, std::size_t k) -> Rational& { return c[(a * n + b) * n + k]; };
  for (std::size_t a = 0; a < dg; ++a) {
    for (std::size_t b = 0; b < dg; ++b) {
      for (std::size_t k = 0; k < dg; ++k) at(a, b, k) = g.constant(a, b, k);
      if (a == b) continue;
      const std::size_t lo = std::min(a, b), hi = std::max(a, b);
      const std::size_t idx[] = {lo, hi};
      const std::size_t t = *pairs.index_of(idx);
      for (std::size_t k = 0; k < rep.dim(); ++k) at(a, b, dg + k) = a < b ? omega(k, t) : -omega(k, t);
    }
    for (std::size_t b = 0; b < rep.dim(); ++b) {
      for (std::size_t k = 0; k < rep.dim(); ++k) {
        at(a, dg + b, dg + k) = rep.action(a)(k, b);
        at(dg + b, a, dg + k) = -rep.action(a)(k, b);
      }
    }
  }
  return LieAlgebra(n, std::move(c));
}

Matrix inclusion(std::size_t base, std::size_t fiber) {
  Matrix m(base + fiber, fiber);
  m.set_block(base, 0, Matrix::identity(fiber));
  return m;
}

Matrix projection(std::size_t base, std::size_t fiber) {
  Matrix m(base, base + fiber);
  m.set_block(0, 0, Matrix::identity(base));
  return m;
}

Matrix through(const Matrix& injection, const Matrix& v, const char* what) {
  auto x = solve(injection, v);
  if (!x) throw Error(ErrorKind::Validation, std::string(what) + " does not lie in the abelian ideal");
  return *x;
}

std::vector<Matrix> induced_actions(const LieAlgebra& total, const Matrix& inc, const Matrix& section) {
  std::vector<Matrix> actions;
  const std::size_t fiber = inc.cols();
  for (std::size_t a = 0; a < section.cols(); ++a) {
    Matrix act(fiber, fiber);
    for (std::size_t b = 0; b < fiber; ++b) {
      act.set_block(0, b, through(inc, total.bracket(section.col(a), inc.col(b)), "induced action"));
    }
    actions.push_back(std::move(act));
  }
  return actions;
}

// [s e_a, s e_b] - s [e_a, e_b] on increasing pairs, read through inc.
Matrix section_defect(const LieAlgebra& base, const LieAlgebra& total, const Matrix& inc, const Matrix& section) {
  const ExteriorBasis pairs(base.dim(), 2);
  Matrix out(inc.cols(), pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const auto ab = pairs.tuple(t);
    const Matrix v = total.bracket(section.col(ab[0]), section.col(ab[1])) - section * base.bracket_basis(ab[0], ab[1]);
    out.set_block(0, t, through(inc, v, "section defect"));
  }
  return out;
}

CheckReport check_ideal(const LieAlgebra& total, const Matrix& inc, const char* name) {
  for (std::size_t a = 0; a < total.dim(); ++a) {
    for (std::size_t b = 0; b < inc.cols(); ++b) {
      if (!in_column_span(inc, total.bracket(Matrix::unit(total.dim(), a), inc.col(b)))) {
        return CheckReport::fail(std::string(name) + " is not an ideal");
      }
    }
  }
  for (std::size_t a = 0; a < inc.cols(); ++a) {
    for (std::size_t b = 0; b < inc.cols(); ++b) {
      if (!total.bracket(inc.col(a), inc.col(b)).is_zero()) return CheckReport::fail(std::string(name) + " is not abelian");
    }
  }
  return CheckReport::pass();
}

CheckReport check_exact(const Matrix& inc, const Matrix& proj, std::size_t total, std::size_t base, std::size_t fiber,
                        const char* name) {
  if (inc.rows() != total || inc.cols() != fiber || proj.rows() != base || proj.cols() != total) {
    return CheckReport::fail(std::string(name) + ": inclusion or projection has the wrong shape");
  }
  if (total != base + fiber) return CheckReport::fail(std::string(name) + ": dimensions do not add up");
  if (!(proj * inc).is_zero()) return CheckReport::fail(std::string(name) + ": projection after inclusion is not zero");
  if (rank(inc) != fiber) return CheckReport::fail(std::string(name) + ": inclusion is not injective");
  if (rank(proj) != base) return CheckReport::fail(std::string(name) + ": projection is not surjective");
  return CheckReport::pass();
}

}  // namespace

CheckReport check_extension(const AbelianExtension& ext) {
  const std::size_t dg = ext.base.g().dim();
  const std::size_t dh = ext.base.h().dim();
  const std::size_t dv = ext.i.cols();
  const std::size_t dw = ext.ibar.cols();
  if (auto r = check_exact(ext.i, ext.p, ext.total.g().dim(), dg, dv, "g sequence"); !r) return r;
  if (auto r = check_exact(ext.ibar, ext.pbar, ext.total.h().dim(), dh, dw, "h sequence"); !r) return r;
  if (ext.psi.rows() != dw || ext.psi.cols() != dv) return CheckReport::fail("psi has the wrong shape");
  if (auto r = check_morphism_lie_algebra(ext.base); !r) return CheckReport::fail("base: " + r.violation);
  if (auto r = check_morphism_lie_algebra(ext.total); !r) return CheckReport::fail("total: " + r.violation);
  if (auto r = check_lie_homomorphism(ext.total.g(), ext.base.g(), ext.p); !r) return CheckReport::fail("p: " + r.violation);
  if (auto r = check_lie_homomorphism(ext.total.h(), ext.base.h(), ext.pbar); !r) {
    return CheckReport::fail("pbar: " + r.violation);
  }
  if (auto r = check_ideal(ext.total.g(), ext.i, "V"); !r) return r;
  if (auto r = check_ideal(ext.total.h(), ext.ibar, "W"); !r) return r;
  if (ext.total.phi() * ext.i != ext.ibar * ext.psi) return CheckReport::fail("phi^ i != ibar psi");
  if (ext.pbar * ext.total.phi() != ext.base.phi() * ext.p) return CheckReport::fail("pbar phi^ != phi p");
  return CheckReport::pass();
}

AbelianExtension build_extension(const MorphismRep& rep, const MCochain& cocycle) {
  check_cochain_shape(rep, cocycle);
  if (cocycle.degree != 2) throw Error(ErrorKind::Shape, "extensions need a degree-2 cochain");
  const MCochain d = apply_differential(rep, cocycle);
  if (!d.theta.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero theta block");
  if (!d.gamma.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero gamma block");
  if (!d.eta.is_zero()) throw Error(ErrorKind::NotACocycle, "delta of the cochain has a nonzero eta block");

  const std::size_t dg = rep.base().g().dim();
  const std::size_t dh = rep.base().h().dim();
  const std::size_t dv = rep.v().dim();
  const std::size_t dw = rep.w().dim();

  Matrix phi_hat(dh + dw, dg + dv);
  phi_hat.set_block(0, 0, rep.base().phi());
  phi_hat.set_block(dh, 0, cocycle.eta);
  phi_hat.set_block(dh, dg, rep.psi());

  AbelianExtension ext{rep.base(),
                       rep.psi(),
                       MorphismLieAlgebra(twisted_semidirect(rep.v(), cocycle.theta),
                                          twisted_semidirect(rep.w(), cocycle.gamma), phi_hat),
                       inclusion(dg, dv),
                       projection(dg, dv),
                       inclusion(dh, dw),
                       projection(dh, dw)};
  require(check_extension(ext), ErrorKind::Internal, "built extension");
  return ext;
}

std::pair<Matrix, Matrix> canonical_section(const AbelianExtension& ext) {
  return {projection(ext.base.g().dim(), ext.i.cols()).transpose(),
          projection(ext.base.h().dim(), ext.ibar.cols()).transpose()};
}

ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const Matrix& s, const Matrix& sbar,
                                 const std::optional<std::pair<Matrix, Matrix>>& second) {
  require(check_extension(ext), ErrorKind::Validation, "extension");
  const LieAlgebra& g = ext.base.g();
  const LieAlgebra& h = ext.base.h();
  auto check_section = [&](const Matrix& sec, const Matrix& proj, std::size_t base, const char* name) {
    if (sec.rows() != proj.cols() || sec.cols() != base || proj * sec != Matrix::identity(base)) {
      throw Error(ErrorKind::NotASection, std::string(name) + " is not a right inverse of the projection");
    }
  };
  check_section(s, ext.p, g.dim(), "s");
  check_section(sbar, ext.pbar, h.dim(), "sbar");

  const Representation v(g, ext.i.cols(), induced_actions(ext.total.g(), ext.i, s));
  const Representation w(h, ext.ibar.cols(), induced_actions(ext.total.h(), ext.ibar, sbar));
  MorphismRep rep(ext.base, v, w, ext.psi);
  require(check_morphism_rep(rep), ErrorKind::Internal, "induced representation");

  if (second) {
    check_section(second->first, ext.p, g.dim(), "second s");
    check_section(second->second, ext.pbar, h.dim(), "second sbar");
    if (induced_actions(ext.total.g(), ext.i, second->first) != std::vector<Matrix>(v.actions().begin(), v.actions().end()) ||
        induced_actions(ext.total.h(), ext.ibar, second->second) != std::vector<Matrix>(w.actions().begin(), w.actions().end())) {
      throw Error(ErrorKind::Internal, "induced actions depend on the section");
    }
  }

  MCochain c;
  c.degree = 2;
  c.theta = section_defect(g, ext.total.g(), ext.i, s);
  c.gamma = section_defect(h, ext.total.h(), ext.ibar, sbar);
  c.eta = Matrix(ext.ibar.cols(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const Matrix x = ext.total.phi() * s.col(a) - sbar * ext.base.phi().col(a);
    c.eta.set_block(0, a, through(ext.ibar, x, "eta"));
  }
  if (!flatten(apply_differential(rep, c)).is_zero()) {
    throw Error(ErrorKind::Internal, "extracted cochain is not a cocycle");
  }
  return {std::move(rep), std::move(c)};
}

CheckReport check_extension_isomorphism(const AbelianExtension& from, const AbelianExtension& to, const Matrix& alpha,
                                        const Matrix& beta) {
  const std::size_t ng = from.total.g().dim();
  const std::size_t nh = from.total.h().dim();
  if (alpha.rows() != to.total.g().dim() || alpha.cols() != ng) return CheckReport::fail("alpha has the wrong shape");
  if (beta.rows() != to.total.h().dim() || beta.cols() != nh) return CheckReport::fail("beta has the wrong shape");
  if (alpha.rows() != ng || !inverse(alpha)) return CheckReport::fail("alpha is not invertible");
  if (beta.rows() != nh || !inverse(beta)) return CheckReport::fail("beta is not invertible");
  if (auto r = check_lie_homomorphism(from.total.g(), to.total.g(), alpha); !r) {
    return CheckReport::fail("alpha: " + r.violation);
  }
  if (auto r = check_lie_homomorphism(from.total.h(), to.total.h(), beta); !r) {
    return CheckReport::fail("beta: " + r.violation);
  }
  if (to.total.phi() * alpha != beta * from.total.phi()) return CheckReport::fail("phi^' alpha != beta phi^");
  if (alpha * from.i != to.i) return CheckReport::fail("alpha i != i'");
  if (to.p * alpha != from.p) return CheckReport::fail("p' alpha != p");
  if (beta * from.ibar != to.ibar) return CheckReport::fail("beta ibar != ibar'");
  if (to.pbar * beta != from.pbar) return CheckReport::fail("pbar' beta != pbar");
  return CheckReport::pass();
}

ExtensionIsomorphism coboundary_isomorphism(const MorphismRep& rep, const MCochain& c1, const MCochain& c2,
                                            const Matrix& d0, const Matrix& del0) {
  check_cochain_shape(rep, c1);
  check_cochain_shape(rep, c2);
  if (c1.degree != 2 || c2.degree != 2) throw Error(ErrorKind::Shape, "extensions need degree-2 cochains");
  const MCochain shift = differential_of_triple(rep, d0, del0, Matrix(rep.w().dim(), 1));
  if (c1 - c2 != shift) {
    throw Error(ErrorKind::NotSimplyCohomologous, "c1 - c2 is not delta(d0, del0, 0)");
  }
  AbelianExtension e1 = build_extension(rep, c1);
  AbelianExtension e2 = build_extension(rep, c2);

  const std::size_t dg = rep.base().g().dim();
  const std::size_t dh = rep.base().h().dim();
  Matrix alpha = Matrix::identity(dg + rep.v().dim());
  alpha.set_block(dg, 0, d0);
  Matrix beta = Matrix::identity(dh + rep.w().dim());
  beta.set_block(dh, 0, del0);
  require(check_extension_isomorphism(e1, e2, alpha, beta), ErrorKind::Internal, "coboundary isomorphism");
  return {std::move(e1), std::move(e2), std::move(alpha), std::move(beta)};
}

}  // namespace morphcoh
