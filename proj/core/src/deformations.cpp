#include "morphcoh/deformations.hpp"

#include <string>
#include <vector>

#include "morphcoh/linalg.hpp"

namespace morphcoh {

namespace {

void expect_shape(const Matrix& m, std::size_t r, std::size_t c, const char* name) {
  if (m.rows() != r || m.cols() != c) {
    throw Error(ErrorKind::Shape, std::string(name) + " must be " + std::to_string(r) + "x" + std::to_string(c) +
                                      ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// d([e_i,e_j]) - rho(e_i) d(e_j) + rho(e_j) d(e_i) for i < j, appended to out.
void append_derivation_rows(const Representation& rep, const Matrix& d, std::vector<Matrix>& out) {
  const LieAlgebra& g = rep.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      out.push_back(d * g.bracket_basis(i, j) - rep.action(i) * d.col(j) + rep.action(j) * d.col(i));
    }
  }
}

Matrix coordinates_in(const Matrix& basis_inverse, const Matrix& v, std::size_t from, std::size_t count) {
  return (basis_inverse * v).block(from, 0, count, 1);
}

Matrix complete_basis(const Matrix& sub, std::size_t dim) {
  Matrix basis = sub;
  std::size_t r = rank(basis);
  for (std::size_t k = 0; k < dim && r < dim; ++k) {
    Matrix trial = hstack(basis, Matrix::unit(dim, k));
    const std::size_t rt = rank(trial);
    if (rt > r) {
      basis = std::move(trial);
      r = rt;
    }
  }
  return basis;
}

// Structure constants of the subalgebra spanned by the columns of `basis`,
// or the first failing pair.
LieAlgebra restrict_algebra(const LieAlgebra& g, const Matrix& basis, const char* what) {
  const std::size_t k = basis.cols();
  std::vector<Rational> c(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto x = solve(basis, g.bracket(basis.col(i), basis.col(j)));
      if (!x) {
        throw Error(ErrorKind::NotASubalgebra, std::string(what) + ": bracket of spanning vectors " +
                                                   std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " leaves the span");
      }
      for (std::size_t l = 0; l < k; ++l) c[(i * k + j) * k + l] = (*x)(l, 0);
    }
  }
  return LieAlgebra(k, std::move(c));
}

}  // namespace

Matrix derivation_residual(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w) {
  const std::size_t dg = rep.base().g().dim();
  const std::size_t dh = rep.base().h().dim();
  expect_shape(d, rep.v().dim(), dg, "d");
  expect_shape(del, rep.w().dim(), dh, "del");
  expect_shape(w, rep.w().dim(), 1, "w");
  std::vector<Matrix> rows;
  append_derivation_rows(rep.v(), d, rows);
  append_derivation_rows(rep.w(), del, rows);
  const Matrix& phi = rep.base().phi();
  for (std::size_t i = 0; i < dg; ++i) {
    const Matrix x = phi.col(i);
    rows.push_back(rep.w().act(x) * w - rep.psi() * d.col(i) + del * x);
  }
  return vstack(rows, 1);
}

CheckReport check_derivation(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w) {
  const Matrix residual = derivation_residual(rep, d, del, w);
  const bool by_identities = residual.is_zero();
  const bool by_differential = flatten(differential_of_triple(rep, d, del, w)).is_zero();
  if (by_identities != by_differential) {
    throw Error(ErrorKind::Internal, "derivation identities and the degree-1 differential disagree");
  }
  if (by_identities) return CheckReport::pass();

  const std::size_t dv = rep.v().dim();
  const std::size_t dw = rep.w().dim();
  const std::size_t dg = rep.base().g().dim();
  const std::size_t dh = rep.base().h().dim();
  const std::size_t n1 = dg * (dg - (dg > 0)) / 2;
  const std::size_t n2 = dh * (dh - (dh > 0)) / 2;
  std::size_t first = 0;
  while (residual(first, 0).is_zero()) ++first;
  if (first < n1 * dv) return CheckReport::fail("d is not a derivation of g into V");
  if (first < n1 * dv + n2 * dw) return CheckReport::fail("del is not a derivation of h into W");
  const std::size_t i = (first - n1 * dv - n2 * dw) / dw;
  return CheckReport::fail("rho_W(phi(e" + std::to_string(i + 1) + ")) w != psi(d(e" + std::to_string(i + 1) +
                           ")) - del(phi(e" + std::to_string(i + 1) + "))");
}

std::size_t h0_invariants_dim(const MorphismRep& rep) {
  std::vector<Matrix> blocks;
  for (const Matrix& a : rep.v().actions()) blocks.push_back(a);
  for (const Matrix& b : rep.w().actions()) blocks.push_back(b * rep.psi());
  const Matrix stacked = vstack(blocks, rep.v().dim());
  return stacked.cols() - rank(stacked);
}

std::size_t derivation_space_dim(const MorphismRep& rep) {
  const std::size_t dv = rep.v().dim();
  const std::size_t dw = rep.w().dim();
  const std::size_t dg = rep.base().g().dim();
  const std::size_t dh = rep.base().h().dim();
  // One column of residuals per coordinate of (d, del, w).
  std::vector<Matrix> columns;
  for (std::size_t i = 0; i < dv * dg; ++i) {
    columns.push_back(derivation_residual(rep, Matrix::unvectorize(Matrix::unit(dv * dg, i), dv, dg),
                                          Matrix(dw, dh), Matrix(dw, 1)));
  }
  for (std::size_t i = 0; i < dw * dh; ++i) {
    columns.push_back(derivation_residual(rep, Matrix(dv, dg),
                                          Matrix::unvectorize(Matrix::unit(dw * dh, i), dw, dh), Matrix(dw, 1)));
  }
  for (std::size_t i = 0; i < dw; ++i) {
    columns.push_back(derivation_residual(rep, Matrix(dv, dg), Matrix(dw, dh), Matrix::unit(dw, i)));
  }
  const std::size_t residual_len = derivation_residual(rep, Matrix(dv, dg), Matrix(dw, dh), Matrix(dw, 1)).rows();
  const Matrix constraints = hstack(columns, residual_len);
  return constraints.cols() - rank(constraints);
}

std::size_t inner_derivation_space_dim(const MorphismRep& rep) {
  std::vector<Matrix> blocks;
  for (const Matrix& a : rep.v().actions()) blocks.push_back(a);
  for (const Matrix& b : rep.w().actions()) blocks.push_back(b * rep.psi());
  return rank(vstack(blocks, rep.v().dim()));
}

MorphismRep homomorphism_induced_rep(const MorphismLieAlgebra& source, const MorphismLieAlgebra& target,
                                     const Matrix& alpha, const Matrix& beta) {
  require(check_morphism_homomorphism(source, target, alpha, beta), ErrorKind::NotAHomomorphism,
          "homomorphism-induced representation");
  std::vector<Matrix> on_g;
  for (std::size_t i = 0; i < source.g().dim(); ++i) on_g.push_back(target.g().adjoint(alpha.col(i)));
  std::vector<Matrix> on_h;
  for (std::size_t i = 0; i < source.h().dim(); ++i) on_h.push_back(target.h().adjoint(beta.col(i)));
  MorphismRep rep(source, Representation(source.g(), target.g().dim(), std::move(on_g)),
                  Representation(source.h(), target.h().dim(), std::move(on_h)), target.phi());
  require(check_morphism_rep(rep), ErrorKind::Internal, "induced representation");
  return rep;
}

bool check_infinitesimal_deformation(const MorphismRep& rep, const Matrix& alpha1, const Matrix& beta1) {
  return flatten(differential_of_triple(rep, alpha1, beta1, Matrix(rep.w().dim(), 1))).is_zero();
}

QuotientRep quotient_morphism_rep(const MorphismLieAlgebra& m, const Matrix& p_basis, const Matrix& q_basis) {
  const LieAlgebra& g = m.g();
  const LieAlgebra& h = m.h();
  expect_shape(p_basis, g.dim(), p_basis.cols(), "p basis");
  expect_shape(q_basis, h.dim(), q_basis.cols(), "q basis");
  if (rank(p_basis) != p_basis.cols()) throw Error(ErrorKind::Validation, "p basis columns are linearly dependent");
  if (rank(q_basis) != q_basis.cols()) throw Error(ErrorKind::Validation, "q basis columns are linearly dependent");

  const LieAlgebra p = restrict_algebra(g, p_basis, "p");
  const LieAlgebra q = restrict_algebra(h, q_basis, "q");

  const std::size_t dp = p_basis.cols();
  const std::size_t dq = q_basis.cols();
  Matrix phi_p(dq, dp);
  for (std::size_t i = 0; i < dp; ++i) {
    const auto x = solve(q_basis, m.phi() * p_basis.col(i));
    if (!x) {
      throw Error(ErrorKind::NotPreserved, "phi maps spanning vector " + std::to_string(i + 1) + " of p outside q");
    }
    phi_p.set_block(0, i, *x);
  }

  const Matrix gb = complete_basis(p_basis, g.dim());
  const Matrix hb = complete_basis(q_basis, h.dim());
  const Matrix gb_inv = *inverse(gb);
  const Matrix hb_inv = *inverse(hb);
  const std::size_t dgq = g.dim() - dp;
  const std::size_t dhq = h.dim() - dq;

  std::vector<Matrix> on_gq;
  for (std::size_t i = 0; i < dp; ++i) {
    Matrix a(dgq, dgq);
    for (std::size_t k = 0; k < dgq; ++k) {
      a.set_block(0, k, coordinates_in(gb_inv, g.bracket(p_basis.col(i), gb.col(dp + k)), dp, dgq));
    }
    on_gq.push_back(std::move(a));
  }
  std::vector<Matrix> on_hq;
  for (std::size_t i = 0; i < dq; ++i) {
    Matrix a(dhq, dhq);
    for (std::size_t k = 0; k < dhq; ++k) {
      a.set_block(0, k, coordinates_in(hb_inv, h.bracket(q_basis.col(i), hb.col(dq + k)), dq, dhq));
    }
    on_hq.push_back(std::move(a));
  }
  Matrix phi_bar(dhq, dgq);
  for (std::size_t k = 0; k < dgq; ++k) {
    phi_bar.set_block(0, k, coordinates_in(hb_inv, m.phi() * gb.col(dp + k), dq, dhq));
  }

  MorphismLieAlgebra sub(p, q, phi_p);
  MorphismRep rep(sub, Representation(p, dgq, std::move(on_gq)), Representation(q, dhq, std::move(on_hq)), phi_bar);
  require(check_morphism_rep_full(rep), ErrorKind::Internal, "quotient representation");
  return {std::move(rep), gb, hb};
}

bool check_subalgebra_deformation_cocycle(const QuotientRep& q, const Matrix& pdot, const Matrix& qdot) {
  return flatten(differential_of_triple(q.rep, pdot, qdot, Matrix(q.rep.w().dim(), 1))).is_zero();
}

}  // namespace morphcoh
