#include "morphcoh/lie.hpp"

#include <string>

namespace morphcoh {

namespace {

// Reports use 1-based basis labels (e1, e2, ...).
std::string label(std::size_t i) { return std::to_string(i + 1); }

std::string tuple_label(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + label(i);
    first = false;
  }
  return s + ")";
}

Matrix combine(std::span<const Matrix> mats, const Matrix& coeffs, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!coeffs(i, 0).is_zero()) out.add_block(0, 0, mats[i], coeffs(i, 0));
  }
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> constants) : dim_(dim), c_(std::move(constants)) {
  if (c_.size() != dim * dim * dim) {
    throw Error(ErrorKind::Shape, "structure constants of a " + std::to_string(dim) + "-dimensional algebra need " +
                                      std::to_string(dim * dim * dim) + " entries");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (constant(i, j, k) != -constant(j, i, k)) {
          throw Error(ErrorKind::Validation, "structure constants are not antisymmetric at [e" + label(i) + ",e" +
                                                 label(j) + "] component " + label(k));
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim)); }

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, std::span<const Bracket> brackets) {
  std::vector<Rational> c(dim * dim * dim);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& [i, j, coeffs] : brackets) {
    if (i >= dim || j >= dim || coeffs.size() != dim) {
      throw Error(ErrorKind::Shape, "bracket entry out of range for dimension " + std::to_string(dim));
    }
    if (i == j) {
      for (const auto& x : coeffs) {
        if (!x.is_zero()) throw Error(ErrorKind::Validation, "[e" + label(i) + ",e" + label(i) + "] must vanish");
      }
      continue;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      Rational& ij = c[(i * dim + j) * dim + k];
      Rational& ji = c[(j * dim + i) * dim + k];
      if (seen[i * dim + j] && ij != coeffs[k]) {
        throw Error(ErrorKind::Validation, "conflicting entries for [e" + label(i) + ",e" + label(j) + "]");
      }
      ij = coeffs[k];
      ji = -coeffs[k];
    }
    seen[i * dim + j] = seen[j * dim + i] = true;
  }
  return LieAlgebra(dim, std::move(c));
}

Matrix LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Matrix out(dim_, 1);
  for (std::size_t k = 0; k < dim_; ++k) out(k, 0) = constant(i, j, k);
  return out;
}

Matrix LieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim_ || y.rows() != dim_ || x.cols() != 1 || y.cols() != 1) {
    throw Error(ErrorKind::Shape, "bracket arguments must be " + std::to_string(dim_) + "x1 columns");
  }
  Matrix out(dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y(j, 0).is_zero() || i == j) continue;
      const Rational w = x(i, 0) * y(j, 0);
      for (std::size_t k = 0; k < dim_; ++k) out(k, 0).add_product(w, constant(i, j, k));
    }
  }
  return out;
}

Matrix LieAlgebra::adjoint(std::size_t i) const {
  Matrix ad(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) ad(k, j) = constant(i, j, k);
  }
  return ad;
}

Matrix LieAlgebra::adjoint(const Matrix& x) const {
  Matrix ad(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x(i, 0).is_zero()) ad.add_block(0, 0, adjoint(i), x(i, 0));
  }
  return ad;
}

Representation::Representation(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) {
    throw Error(ErrorKind::Shape, "representation needs one action matrix per basis element (" +
                                      std::to_string(algebra_.dim()) + "), got " + std::to_string(action_.size()));
  }
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw Error(ErrorKind::Shape, "action matrices must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
}

Representation Representation::trivial(LieAlgebra algebra, std::size_t dim) {
  std::vector<Matrix> action(algebra.dim(), Matrix(dim, dim));
  return Representation(std::move(algebra), dim, std::move(action));
}

Representation Representation::adjoint(LieAlgebra algebra) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra.dim(); ++i) action.push_back(algebra.adjoint(i));
  const std::size_t d = algebra.dim();
  return Representation(std::move(algebra), d, std::move(action));
}

Matrix Representation::act(const Matrix& x) const {
  if (x.rows() != algebra_.dim() || x.cols() != 1) throw Error(ErrorKind::Shape, "act: argument shape");
  return combine(action_, x, dim_, dim_);
}

MorphismLieAlgebra::MorphismLieAlgebra(LieAlgebra g, LieAlgebra h, Matrix phi)
    : g_(std::move(g)), h_(std::move(h)), phi_(std::move(phi)) {
  if (phi_.rows() != h_.dim() || phi_.cols() != g_.dim()) {
    throw Error(ErrorKind::Shape, "phi must be " + std::to_string(h_.dim()) + "x" + std::to_string(g_.dim()));
  }
}

MorphismRep::MorphismRep(MorphismLieAlgebra base, Representation v, Representation w, Matrix psi)
    : base_(std::move(base)), v_(std::move(v)), w_(std::move(w)), psi_(std::move(psi)) {
  if (!(v_.algebra() == base_.g())) throw Error(ErrorKind::Shape, "V is not a representation of g");
  if (!(w_.algebra() == base_.h())) throw Error(ErrorKind::Shape, "W is not a representation of h");
  if (psi_.rows() != w_.dim() || psi_.cols() != v_.dim()) {
    throw Error(ErrorKind::Shape, "psi must be " + std::to_string(w_.dim()) + "x" + std::to_string(v_.dim()));
  }
}

MorphismRep MorphismRep::adjoint(const MorphismLieAlgebra& base) {
  return MorphismRep(base, Representation::adjoint(base.g()), Representation::adjoint(base.h()), base.phi());
}

CheckReport check_jacobi(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Matrix ei = Matrix::unit(n, i), ej = Matrix::unit(n, j), ek = Matrix::unit(n, k);
        Matrix sum = a.bracket(a.bracket_basis(i, j), ek);
        sum += a.bracket(a.bracket_basis(j, k), ei);
        sum += a.bracket(a.bracket_basis(k, i), ej);
        if (!sum.is_zero()) {
          return CheckReport::fail("Jacobi identity fails on triple " + tuple_label({i, j, k}) +
                                   ": cyclic sum = " + sum.transpose().str());
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport check_representation(const Representation& rep) {
  const LieAlgebra& g = rep.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Matrix lhs = rep.act(g.bracket_basis(i, j));
      const Matrix rhs = rep.action(i) * rep.action(j) - rep.action(j) * rep.action(i);
      if (lhs != rhs) {
        return CheckReport::fail("representation axiom fails on pair " + tuple_label({i, j}));
      }
    }
  }
  return CheckReport::pass();
}

CheckReport check_lie_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi) {
  if (phi.rows() != h.dim() || phi.cols() != g.dim()) {
    throw Error(ErrorKind::Shape, "homomorphism matrix must be " + std::to_string(h.dim()) + "x" +
                                      std::to_string(g.dim()));
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Matrix lhs = phi * g.bracket_basis(i, j);
      const Matrix rhs = h.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) return CheckReport::fail("homomorphism identity fails on pair " + tuple_label({i, j}));
    }
  }
  return CheckReport::pass();
}

CheckReport check_morphism_lie_algebra(const MorphismLieAlgebra& m) {
  if (auto r = check_jacobi(m.g()); !r) return CheckReport::fail("g: " + r.violation);
  if (auto r = check_jacobi(m.h()); !r) return CheckReport::fail("h: " + r.violation);
  if (auto r = check_lie_homomorphism(m.g(), m.h(), m.phi()); !r) return CheckReport::fail("phi: " + r.violation);
  return CheckReport::pass();
}

CheckReport check_morphism_rep(const MorphismRep& m) {
  if (auto r = check_representation(m.v()); !r) return CheckReport::fail("V: " + r.violation);
  if (auto r = check_representation(m.w()); !r) return CheckReport::fail("W: " + r.violation);
  const Matrix& phi = m.base().phi();
  for (std::size_t i = 0; i < m.base().g().dim(); ++i) {
    const Matrix lhs = m.psi() * m.v().action(i);
    const Matrix rhs = m.w().act(phi.col(i)) * m.psi();
    if (lhs != rhs) {
      return CheckReport::fail("psi does not intertwine the actions of e" + label(i) + " and phi(e" + label(i) + ")");
    }
  }
  return CheckReport::pass();
}

CheckReport check_morphism_rep_full(const MorphismRep& m) {
  if (auto r = check_morphism_lie_algebra(m.base()); !r) return r;
  return check_morphism_rep(m);
}

CheckReport check_morphism_homomorphism(const MorphismLieAlgebra& source, const MorphismLieAlgebra& target,
                                        const Matrix& alpha, const Matrix& beta) {
  if (auto r = check_lie_homomorphism(source.g(), target.g(), alpha); !r) return CheckReport::fail("alpha: " + r.violation);
  if (auto r = check_lie_homomorphism(source.h(), target.h(), beta); !r) return CheckReport::fail("beta: " + r.violation);
  if (target.phi() * alpha != beta * source.phi()) return CheckReport::fail("phi' alpha != beta phi");
  return CheckReport::pass();
}

Representation pullback_rep(const MorphismLieAlgebra& m, const Representation& w) {
  if (!(w.algebra() == m.h())) throw Error(ErrorKind::Shape, "pullback: W is not a representation of h");
  std::vector<Matrix> action;
  action.reserve(m.g().dim());
  for (std::size_t i = 0; i < m.g().dim(); ++i) action.push_back(w.act(m.phi().col(i)));
  return Representation(m.g(), w.dim(), std::move(action));
}

LieAlgebra rota_baxter_bracket(const LieAlgebra& g, const Matrix& r, const Rational& weight) {
  const std::size_t n = g.dim();
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix v = g.bracket(r.col(i), Matrix::unit(n, j)) + g.bracket(Matrix::unit(n, i), r.col(j));
      v.add_block(0, 0, g.bracket_basis(i, j), weight);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v(k, 0);
    }
  }
  return LieAlgebra(n, std::move(c));
}

CheckReport check_rota_baxter(const RotaBaxterDatum& d) {
  const LieAlgebra& g = d.algebra;
  const std::size_t n = g.dim();
  if (d.r.rows() != n || d.r.cols() != n) throw Error(ErrorKind::Shape, "Rota-Baxter operator must be square");
  const LieAlgebra gr = rota_baxter_bracket(g, d.r, d.weight);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.bracket(d.r.col(i), d.r.col(j)) != d.r * gr.bracket_basis(i, j)) {
        return CheckReport::fail("Rota-Baxter identity fails on pair " + tuple_label({i, j}));
      }
    }
  }
  if (d.module) {
    const Representation& rep = d.module->rep;
    const Matrix& rv = d.module->r_v;
    if (!(rep.algebra() == g)) throw Error(ErrorKind::Shape, "Rota-Baxter module is not a representation of g");
    if (rv.rows() != rep.dim() || rv.cols() != rep.dim()) throw Error(ErrorKind::Shape, "R_V must be square");
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix rho_rx = rep.act(d.r.col(i));
      const Matrix lhs = rho_rx * rv;
      Matrix inner = rho_rx + rep.action(i) * rv;
      inner.add_block(0, 0, rep.action(i), d.weight);
      if (lhs != rv * inner) {
        return CheckReport::fail("module Rota-Baxter identity fails for e" + label(i));
      }
    }
  }
  return CheckReport::pass();
}

RotaBaxterResult rota_baxter_morphism(const RotaBaxterDatum& d) {
  require(check_rota_baxter(d), ErrorKind::RotaBaxterViolation, "rota_baxter_morphism");
  const LieAlgebra gr = rota_baxter_bracket(d.algebra, d.r, d.weight);
  RotaBaxterResult out{MorphismLieAlgebra(gr, d.algebra, d.r), std::nullopt};
  require(check_morphism_lie_algebra(out.morphism), ErrorKind::Internal, "Rota-Baxter output");
  if (d.module) {
    const Representation& rep = d.module->rep;
    const Matrix& rv = d.module->r_v;
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < d.algebra.dim(); ++i) {
      Matrix a = rep.act(d.r.col(i)) + rep.action(i) * rv;
      a.add_block(0, 0, rep.action(i), d.weight);
      action.push_back(std::move(a));
    }
    Representation vr(gr, rep.dim(), std::move(action));
    out.rep = MorphismRep(out.morphism, std::move(vr), rep, rv);
    require(check_morphism_rep(*out.rep), ErrorKind::Internal, "Rota-Baxter module output");
  }
  return out;
}

}  // namespace morphcoh
