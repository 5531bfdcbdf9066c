#pragma once

#include <cstddef>
#include <vector>

#include "morphcoh/lie.hpp"
#include "morphcoh/matrix.hpp"

namespace morphcoh {

/// Element of C^n = Hom(wedge^n g, V) + Hom(wedge^n h, W) + Hom(wedge^{n-1} g, W).
///
/// Each component is a coefficient array over increasing basis tuples, as in
/// `ce_differential`: theta is dim V x C(dim g, n), gamma is dim W x C(dim h, n)
/// and eta is dim W x C(dim g, n - 1). At degree 0 only theta is present, as a
/// dim V x 1 column; gamma and eta are dim W x 0.
struct MCochain {
  std::size_t degree = 0;
  Matrix theta;
  Matrix gamma;
  Matrix eta;

  static MCochain zero(const MorphismRep& rep, std::size_t degree);

  friend bool operator==(const MCochain&, const MCochain&) = default;
};

MCochain operator+(const MCochain& a, const MCochain& b);
MCochain operator-(const MCochain& a, const MCochain& b);

std::size_t cochain_dim(const MorphismRep& rep, std::size_t n);

/// Throws `Error(ErrorKind::Shape)` when the blocks do not fit `rep` at the
/// cochain's degree.
void check_cochain_shape(const MorphismRep& rep, const MCochain& c);

/// Coordinates (theta, gamma, eta), each block flattened column-major.
Matrix flatten(const MCochain& c);
MCochain unflatten(const MorphismRep& rep, std::size_t degree, const Matrix& coords);

/// Matrix of delta: C^n -> C^{n+1} in flattened coordinates.
Matrix mla_differential(const MorphismRep& rep, std::size_t n);

/// delta applied to a cochain.
MCochain apply_differential(const MorphismRep& rep, const MCochain& c);

/// delta of the degree-1 cochain (d, del, w); `w` is a dim W x 1 column.
MCochain differential_of_triple(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w);

std::size_t mla_cohomology_dim(const MorphismRep& rep, std::size_t n);

/// Cocycles modulo coboundaries of cochains with vanishing eta-component.
std::size_t simple_cohomology_dim(const MorphismRep& rep, std::size_t n);

/// Columns of delta_n acting on theta and gamma only (eta set to zero).
Matrix restrict_to_simple(const MorphismRep& rep, std::size_t n, const Matrix& differential);

struct MLARow {
  std::size_t degree;
  std::size_t cochain_dim;
  std::size_t rank;                   // rank of delta_n
  std::size_t cocycle_dim;
  std::size_t coboundary_dim;
  std::size_t simple_coboundary_dim;
  std::size_t cohomology_dim;
  std::size_t simple_cohomology_dim;
};

/// Rows for degrees 0..max_degree. Asserts delta_{n+1} delta_n = 0 along the way.
std::vector<MLARow> mla_table(const MorphismRep& rep, std::size_t max_degree);

}  // namespace morphcoh
