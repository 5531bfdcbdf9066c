#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "morphcoh/matrix.hpp"

namespace morphcoh {

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination. Internally works on sparse rows.
RowEchelon rref(const Matrix& m);

/// Exact rank over the rationals.
std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; there are cols(m) - rank(m) of them.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws `Error(ErrorKind::Shape)` unless rows(b) == rows(m) and cols(b) == 1.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// dim span(z) / span(b). Throws `Error(ErrorKind::SubspaceViolation)` when a
/// column of b lies outside span(z).
std::size_t quotient_dim(const Matrix& z, const Matrix& b);

/// A subset of the columns of m forming a basis of its column space.
Matrix column_space_basis(const Matrix& m);

bool in_column_span(const Matrix& basis, const Matrix& v);

std::optional<Matrix> inverse(const Matrix& m);

Rational determinant(const Matrix& m);

}  // namespace morphcoh
