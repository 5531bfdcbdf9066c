#include "morphcoh/exterior.hpp"

#include <algorithm>

#include "morphcoh/error.hpp"
#include "morphcoh/linalg.hpp"

namespace morphcoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), count_(binomial(dim, degree)) {
  flat_.reserve(count_ * degree_);
  if (count_ == 0) return;
  std::vector<std::size_t> t(degree_);
  for (std::size_t i = 0; i < degree_; ++i) t[i] = i;
  for (std::size_t made = 0; made < count_; ++made) {
    flat_.insert(flat_.end(), t.begin(), t.end());
    // advance to the next increasing tuple in lexicographic order
    std::size_t pos = degree_;
    while (pos > 0 && t[pos - 1] == dim_ - degree_ + pos - 1) --pos;
    if (pos == 0) break;
    ++t[pos - 1];
    for (std::size_t i = pos; i < degree_; ++i) t[i] = t[i - 1] + 1;
  }
}

std::optional<std::size_t> ExteriorBasis::index_of(std::span<const std::size_t> t) const {
  if (t.size() != degree_) return std::nullopt;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= dim_ || (i > 0 && t[i] <= t[i - 1])) return std::nullopt;
  }
  if (degree_ == 0) return 0;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto m = tuple(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int sort_with_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1]) return 0;
  }
  return sign;
}

Matrix wedge_power(const Matrix& phi, std::size_t n) {
  const ExteriorBasis src(phi.cols(), n);
  const ExteriorBasis dst(phi.rows(), n);
  Matrix out(dst.size(), src.size());
  Matrix minor(n, n);
  for (std::size_t u = 0; u < dst.size(); ++u) {
    const auto rows = dst.tuple(u);
    for (std::size_t t = 0; t < src.size(); ++t) {
      const auto cols = src.tuple(t);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) minor(a, b) = phi(rows[a], cols[b]);
      }
      out(u, t) = determinant(minor);
    }
  }
  return out;
}

Matrix evaluate_alternating(const Matrix& f, std::size_t dim, std::span<const Matrix> args) {
  const std::size_t n = args.size();
  const ExteriorBasis basis(dim, n);
  if (f.cols() != basis.size()) throw Error(ErrorKind::Shape, "alternating map has the wrong number of columns");
  Matrix arg(dim, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (args[j].rows() != dim || args[j].cols() != 1) throw Error(ErrorKind::Shape, "alternating map argument shape");
    arg.set_block(0, j, args[j]);
  }
  // f(v_1, ..., v_n) = sum_t det(arg[t, :]) f(e_t)
  const Matrix coeffs = wedge_power(arg, n);
  Matrix out(f.rows(), 1);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Rational& c = coeffs(t, 0);
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < f.rows(); ++r) out(r, 0).add_product(c, f(r, t));
  }
  return out;
}

}  // namespace morphcoh
