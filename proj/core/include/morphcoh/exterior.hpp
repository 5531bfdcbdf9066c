#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "morphcoh/matrix.hpp"

namespace morphcoh {

std::size_t binomial(std::size_t n, std::size_t k);

/// Lexicographically ordered strictly increasing index tuples of length
/// `degree` drawn from {0, ..., dim - 1}: the standard basis of the degree-th
/// exterior power. Degree 0 has the single empty tuple.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const std::size_t> tuple(std::size_t index) const {
    return std::span<const std::size_t>(flat_).subspan(index * degree_, degree_);
  }
  /// Position of an increasing tuple, or nullopt if it is not one.
  std::optional<std::size_t> index_of(std::span<const std::size_t> t) const;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::size_t count_;
  std::vector<std::size_t> flat_;
};

/// Sorts `t` ascending and returns the sign of the sorting permutation, or 0
/// when an index repeats.
int sort_with_sign(std::vector<std::size_t>& t);

/// The matrix of the n-th exterior power of a linear map phi: rows indexed by
/// increasing n-tuples of the target, columns by those of the source; each
/// entry is the corresponding n x n minor of phi.
Matrix wedge_power(const Matrix& phi, std::size_t n);

/// Evaluates an alternating map f, stored as a dim_out x C(dim, n) array over
/// increasing tuples, at arbitrary argument columns.
Matrix evaluate_alternating(const Matrix& f, std::size_t dim, std::span<const Matrix> args);

}  // namespace morphcoh
