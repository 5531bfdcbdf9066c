#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morphcoh/rational.hpp"

namespace morphcoh {

/// Dense row-major matrix of exact rationals. Zero rows or zero columns are
/// legal and stand for maps from or to the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(std::vector<Rational> values);
  /// Standard basis vector e_index of length n, as an n x 1 column.
  static Matrix unit(std::size_t n, std::size_t index);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const noexcept { return data_; }
  std::span<const Rational> row_span(std::size_t r) const {
    return std::span<const Rational>(data_).subspan(r * cols_, cols_);
  }

  Matrix col(std::size_t c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Adds `scale * b` into the block starting at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Rational& scale = Rational(1));

  Matrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// Column-major flattening: column 0 first, then column 1, ...
  Matrix vectorize() const;
  static Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace morphcoh
