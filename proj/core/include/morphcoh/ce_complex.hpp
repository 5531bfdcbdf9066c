#pragma once

#include <cstddef>
#include <vector>

#include "morphcoh/lie.hpp"
#include "morphcoh/matrix.hpp"

namespace morphcoh {

/// Matrix of the Chevalley-Eilenberg differential C^n -> C^{n+1}.
///
/// A cochain f in Hom(wedge^n g, V) is the dim V x C(dim g, n) array of its
/// values on increasing basis tuples, flattened column-major: coordinate
/// `t * dim V + a` is component a of f(e_t).
Matrix ce_differential(const Representation& rep, std::size_t n);

/// dim ker delta_n - rank delta_{n-1}.
std::size_t ce_cohomology_dim(const Representation& rep, std::size_t n);

struct CERow {
  std::size_t degree;
  std::size_t cochain_dim;
  std::size_t rank;       // rank of delta_n
  std::size_t cocycle_dim;
  std::size_t coboundary_dim;
  std::size_t cohomology_dim;
};

/// Rows for degrees 0..max_degree. Also asserts delta_{n+1} delta_n = 0.
std::vector<CERow> ce_table(const Representation& rep, std::size_t max_degree);

}  // namespace morphcoh
