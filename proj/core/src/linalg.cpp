#include "morphcoh/linalg.hpp"

#include <algorithm>
#include <map>

#include "morphcoh/error.hpp"

namespace morphcoh {

namespace {

struct Entry {
  std::size_t col;
  Rational value;
};

using SparseRow = std::vector<Entry>;

SparseRow sparse_row(const Matrix& m, std::size_t r) {
  SparseRow row;
  const auto span = m.row_span(r);
  for (std::size_t c = 0; c < span.size(); ++c) {
    if (!span[c].is_zero()) row.push_back({c, span[c]});
  }
  return row;
}

// a - factor * b, both sorted by column.
SparseRow subtract_scaled(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, -(factor * b[j].value)});
      ++j;
    } else {
      Rational v = a[i].value;
      v.sub_product(factor, b[j].value);
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_leading(SparseRow& row) {
  const Rational lead = row.front().value;
  if (lead.is_one()) return;
  for (auto& e : row) e.value /= lead;
}

// Incremental row echelon basis keyed by leading column; each stored row has
// leading coefficient 1.
class Echelon {
 public:
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().col);
      if (it == pivots_.end()) {
        normalize_leading(row);
        const std::size_t lead = row.front().col;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational factor = row.front().value;
      row = subtract_scaled(row, factor, it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

  // Clears every pivot column above its pivot.
  void back_substitute() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const std::size_t c = it->first;
      const SparseRow& pivot = it->second;
      for (auto& [lead, row] : pivots_) {
        if (lead >= c) break;
        auto pos = std::lower_bound(row.begin(), row.end(), c,
                                    [](const Entry& e, std::size_t col) { return e.col < col; });
        if (pos == row.end() || pos->col != c) continue;
        const Rational factor = pos->value;
        row = subtract_scaled(row, factor, pivot);
      }
    }
  }

  const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

Echelon echelon_of(const Matrix& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(sparse_row(m, r));
  return e;
}

}  // namespace

RowEchelon rref(const Matrix& m) {
  Echelon e = echelon_of(m);
  e.back_substitute();
  RowEchelon out{Matrix(m.rows(), m.cols()), {}};
  std::size_t r = 0;
  for (const auto& [lead, row] : e.rows()) {
    out.pivots.push_back(lead);
    for (const auto& entry : row) out.reduced(r, entry.col) = entry.value;
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminating along the shorter side keeps the pivot map small.
  return m.rows() <= m.cols() ? echelon_of(m).rank() : echelon_of(m.transpose()).rank();
}

Matrix kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Rational& coeff = e.reduced(i, f);
      if (!coeff.is_zero()) basis(e.pivots[i], k) = -coeff;
    }
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows() || b.cols() != 1) {
    throw Error(ErrorKind::Shape, "solve: right-hand side must be " + std::to_string(m.rows()) +
                                      "x1, got " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const RowEchelon e = rref(hstack(m, b));
  Matrix x(m.cols(), 1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x(e.pivots[i], 0) = e.reduced(i, m.cols());
  }
  return x;
}

std::size_t quotient_dim(const Matrix& z, const Matrix& b) {
  if (z.rows() != b.rows()) throw Error(ErrorKind::Shape, "quotient_dim: row counts differ");
  const std::size_t rz = rank(z);
  if (rank(hstack(z, b)) != rz) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (!in_column_span(z, b.col(c))) {
        throw Error(ErrorKind::SubspaceViolation,
                    "column " + std::to_string(c) + " of the subspace basis is not in the ambient span");
      }
    }
  }
  return rz - rank(b);
}

Matrix column_space_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  Matrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.set_block(0, k, m.col(e.pivots[k]));
  return out;
}

bool in_column_span(const Matrix& basis, const Matrix& v) {
  return rank(hstack(basis, v)) == rank(basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RowEchelon e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j).sub_product(f, a(c, j));
    }
  }
  return det;
}

}  // namespace morphcoh
