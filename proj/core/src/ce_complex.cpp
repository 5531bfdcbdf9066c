#include "morphcoh/ce_complex.hpp"

#include "morphcoh/error.hpp"
#include "morphcoh/exterior.hpp"
#include "morphcoh/linalg.hpp"

namespace morphcoh {

Matrix ce_differential(const Representation& rep, std::size_t n) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t dg = g.dim();
  const std::size_t dv = rep.dim();
  const ExteriorBasis src(dg, n);
  const ExteriorBasis dst(dg, n + 1);
  Matrix out(dst.size() * dv, src.size() * dv);

  std::vector<std::size_t> rest;
  std::vector<std::size_t> args;
  for (std::size_t u = 0; u < dst.size(); ++u) {
    const auto x = dst.tuple(u);
    const std::size_t row0 = u * dv;

    // sum_i (-1)^i rho(x_i) f(x_0, ..., ^x_i, ..., x_n), 0-based i
    for (std::size_t i = 0; i <= n; ++i) {
      rest.clear();
      for (std::size_t k = 0; k <= n; ++k) {
        if (k != i) rest.push_back(x[k]);
      }
      const std::size_t t = *src.index_of(rest);
      out.add_block(row0, t * dv, rep.action(x[i]), Rational(i % 2 == 0 ? 1 : -1));
    }

    // sum_{i<j} (-1)^{i+j} f([x_i, x_j], x_0, ..., ^x_i, ..., ^x_j, ..., x_n)
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const int base_sign = (i + j) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < dg; ++k) {
          const Rational& c = g.constant(x[i], x[j], k);
          if (c.is_zero()) continue;
          args.clear();
          args.push_back(k);
          for (std::size_t m = 0; m <= n; ++m) {
            if (m != i && m != j) args.push_back(x[m]);
          }
          const int s = sort_with_sign(args);
          if (s == 0) continue;
          const std::size_t t = *src.index_of(args);
          const Rational coeff = c * Rational(base_sign * s);
          for (std::size_t a = 0; a < dv; ++a) out(row0 + a, t * dv + a) += coeff;
        }
      }
    }
  }
  return out;
}

std::size_t ce_cohomology_dim(const Representation& rep, std::size_t n) {
  const Matrix d = ce_differential(rep, n);
  const std::size_t prev = n == 0 ? 0 : rank(ce_differential(rep, n - 1));
  return d.cols() - rank(d) - prev;
}

std::vector<CERow> ce_table(const Representation& rep, std::size_t max_degree) {
  std::vector<CERow> rows;
  Matrix prev;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const Matrix d = ce_differential(rep, n);
    if (n > 0 && !(d * prev).is_zero()) {
      throw Error(ErrorKind::Internal, "CE differential does not square to zero at degree " + std::to_string(n - 1));
    }
    const std::size_t r = rank(d);
    rows.push_back({n, d.cols(), r, d.cols() - r, prev_rank, d.cols() - r - prev_rank});
    prev_rank = r;
    prev = d;
  }
  return rows;
}

}  // namespace morphcoh
