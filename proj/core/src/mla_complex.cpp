#include "morphcoh/mla_complex.hpp"

#include <string>

#include "morphcoh/ce_complex.hpp"
#include "morphcoh/error.hpp"
#include "morphcoh/exterior.hpp"
#include "morphcoh/linalg.hpp"

namespace morphcoh {

namespace {

struct Dims {
  std::size_t dg, dh, dv, dw;
};

Dims dims_of(const MorphismRep& rep) {
  return {rep.base().g().dim(), rep.base().h().dim(), rep.v().dim(), rep.w().dim()};
}

std::size_t theta_cols(const Dims& d, std::size_t n) { return binomial(d.dg, n); }
std::size_t gamma_cols(const Dims& d, std::size_t n) { return n == 0 ? 0 : binomial(d.dh, n); }
std::size_t eta_cols(const Dims& d, std::size_t n) { return n == 0 ? 0 : binomial(d.dg, n - 1); }

}  // namespace

MCochain MCochain::zero(const MorphismRep& rep, std::size_t degree) {
  const Dims d = dims_of(rep);
  return {degree, Matrix(d.dv, theta_cols(d, degree)), Matrix(d.dw, gamma_cols(d, degree)),
          Matrix(d.dw, eta_cols(d, degree))};
}

MCochain operator+(const MCochain& a, const MCochain& b) {
  if (a.degree != b.degree) throw Error(ErrorKind::Shape, "adding cochains of different degrees");
  return {a.degree, a.theta + b.theta, a.gamma + b.gamma, a.eta + b.eta};
}

MCochain operator-(const MCochain& a, const MCochain& b) {
  if (a.degree != b.degree) throw Error(ErrorKind::Shape, "subtracting cochains of different degrees");
  return {a.degree, a.theta - b.theta, a.gamma - b.gamma, a.eta - b.eta};
}

std::size_t cochain_dim(const MorphismRep& rep, std::size_t n) {
  const Dims d = dims_of(rep);
  return d.dv * theta_cols(d, n) + d.dw * gamma_cols(d, n) + d.dw * eta_cols(d, n);
}

void check_cochain_shape(const MorphismRep& rep, const MCochain& c) {
  const Dims d = dims_of(rep);
  const std::size_t n = c.degree;
  auto expect = [&](const Matrix& m, std::size_t r, std::size_t k, const char* name) {
    if (m.rows() != r || m.cols() != k) {
      throw Error(ErrorKind::Shape, std::string(name) + " block of a degree-" + std::to_string(n) +
                                        " cochain must be " + std::to_string(r) + "x" + std::to_string(k) +
                                        ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  };
  expect(c.theta, d.dv, theta_cols(d, n), "theta");
  expect(c.gamma, d.dw, gamma_cols(d, n), "gamma");
  expect(c.eta, d.dw, eta_cols(d, n), "eta");
}

Matrix flatten(const MCochain& c) {
  const Matrix parts[] = {c.theta.vectorize(), c.gamma.vectorize(), c.eta.vectorize()};
  return vstack(parts, 1);
}

MCochain unflatten(const MorphismRep& rep, std::size_t degree, const Matrix& coords) {
  const Dims d = dims_of(rep);
  if (coords.cols() != 1 || coords.rows() != cochain_dim(rep, degree)) {
    throw Error(ErrorKind::Shape, "coordinate vector has the wrong length for a degree-" + std::to_string(degree) + " cochain");
  }
  const std::size_t nt = d.dv * theta_cols(d, degree);
  const std::size_t ng = d.dw * gamma_cols(d, degree);
  const std::size_t ne = d.dw * eta_cols(d, degree);
  MCochain c;
  c.degree = degree;
  c.theta = Matrix::unvectorize(coords.block(0, 0, nt, 1), d.dv, theta_cols(d, degree));
  c.gamma = Matrix::unvectorize(coords.block(nt, 0, ng, 1), d.dw, gamma_cols(d, degree));
  c.eta = Matrix::unvectorize(coords.block(nt + ng, 0, ne, 1), d.dw, eta_cols(d, degree));
  return c;
}

Matrix mla_differential(const MorphismRep& rep, std::size_t n) {
  const Dims d = dims_of(rep);
  const Matrix& phi = rep.base().phi();
  const Matrix& psi = rep.psi();
  Matrix out(cochain_dim(rep, n + 1), cochain_dim(rep, n));

  // row offsets of the (theta, gamma, eta) blocks in degree n + 1
  const std::size_t rt = 0;
  const std::size_t rg = d.dv * theta_cols(d, n + 1);
  const std::size_t re = rg + d.dw * gamma_cols(d, n + 1);

  if (n == 0) {
    out.set_block(rt, 0, ce_differential(rep.v(), 0));
    out.set_block(rg, 0, ce_differential(rep.w(), 0) * psi);
    return out;
  }

  const std::size_t ct = 0;
  const std::size_t cg = d.dv * theta_cols(d, n);
  const std::size_t ce = cg + d.dw * gamma_cols(d, n);

  out.set_block(rt, ct, ce_differential(rep.v(), n));
  out.set_block(rg, cg, ce_differential(rep.w(), n));

  // eta-slot: psi o theta - gamma o wedge^n phi - delta'''(eta)
  out.set_block(re, ct, kron(Matrix::identity(binomial(d.dg, n)), psi));
  out.add_block(re, cg, kron(wedge_power(phi, n).transpose(), Matrix::identity(d.dw)), Rational(-1));
  const Representation pulled = pullback_rep(rep.base(), rep.w());
  out.add_block(re, ce, ce_differential(pulled, n - 1), Rational(-1));
  return out;
}

MCochain apply_differential(const MorphismRep& rep, const MCochain& c) {
  check_cochain_shape(rep, c);
  return unflatten(rep, c.degree + 1, mla_differential(rep, c.degree) * flatten(c));
}

MCochain differential_of_triple(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w) {
  return apply_differential(rep, MCochain{1, d, del, w});
}

std::size_t mla_cohomology_dim(const MorphismRep& rep, std::size_t n) {
  const Matrix dn = mla_differential(rep, n);
  const std::size_t prev = n == 0 ? 0 : rank(mla_differential(rep, n - 1));
  return dn.cols() - rank(dn) - prev;
}

Matrix restrict_to_simple(const MorphismRep& rep, std::size_t n, const Matrix& differential) {
  if (n == 0) return differential;
  const Dims d = dims_of(rep);
  const std::size_t keep = d.dv * theta_cols(d, n) + d.dw * gamma_cols(d, n);
  return differential.block(0, 0, differential.rows(), keep);
}

std::size_t simple_cohomology_dim(const MorphismRep& rep, std::size_t n) {
  const Matrix dn = mla_differential(rep, n);
  const std::size_t prev = n == 0 ? 0 : rank(restrict_to_simple(rep, n - 1, mla_differential(rep, n - 1)));
  return dn.cols() - rank(dn) - prev;
}

std::vector<MLARow> mla_table(const MorphismRep& rep, std::size_t max_degree) {
  std::vector<MLARow> rows;
  Matrix prev;
  std::size_t prev_rank = 0;
  std::size_t prev_simple_rank = 0;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const Matrix dn = mla_differential(rep, n);
    if (n > 0 && !(dn * prev).is_zero()) {
      throw Error(ErrorKind::Internal, "mLA differential does not square to zero at degree " + std::to_string(n - 1));
    }
    const std::size_t r = rank(dn);
    const std::size_t z = dn.cols() - r;
    rows.push_back({n, dn.cols(), r, z, prev_rank, prev_simple_rank, z - prev_rank, z - prev_simple_rank});
    prev_rank = r;
    prev_simple_rank = n == 0 ? r : rank(restrict_to_simple(rep, n, dn));
    prev = dn;
  }
  return rows;
}

}  // namespace morphcoh
