#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "morphcoh/error.hpp"
#include "morphcoh/matrix.hpp"

namespace morphcoh {

/// Finite group given by its multiplication table on elements 0..order-1.
/// Group axioms are verified on construction.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, 0) {}
  /// `table[a * order + b]` is the index of a * b.
  FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity);

  static FiniteGroup trivial() { return FiniteGroup(); }
  static FiniteGroup cyclic(std::size_t n);
  /// Elements (a, b) indexed a * right.order() + b.
  static FiniteGroup product(const FiniteGroup& left, const FiniteGroup& right);

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::span<const std::size_t> table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

/// Module over a morphism of finite groups: G and H, a map Phi on element
/// indices, per-element actions on V and W, and psi: V -> W. Only shapes are
/// enforced on construction; the axioms are checked by
/// `check_group_module_triple`.
struct GroupModuleTriple {
  FiniteGroup g;
  FiniteGroup h;
  std::vector<std::size_t> phi;
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  std::vector<Matrix> rho_v;
  std::vector<Matrix> rho_w;
  Matrix psi;
};

/// Shapes, Phi a homomorphism, rho(1) = I and rho(ab) = rho(a) rho(b) for
/// both modules, and psi rho_V(g) = rho_W(Phi g) psi.
CheckReport check_group_module_triple(const GroupModuleTriple& t);

/// Elements at which cochains are evaluated: all, or the non-identity ones.
std::vector<std::size_t> cochain_support(const FiniteGroup& g, bool normalized);

/// dim V * |support|^n.
std::size_t group_cochain_dim(const FiniteGroup& g, std::size_t dim_v, std::size_t n, bool normalized);

/// Bar differential C^n(G, V) -> C^{n+1}(G, V). A cochain is stored as its
/// values on argument tuples, tuples in lexicographic order of support
/// positions, coordinate `tuple * dim V + a`.
Matrix group_differential(const FiniteGroup& g, std::span<const Matrix> actions, std::size_t n, bool normalized);

std::size_t group_cohomology_dim(const FiniteGroup& g, std::span<const Matrix> actions, std::size_t n,
                                 bool normalized);

std::size_t mlg_cochain_dim(const GroupModuleTriple& t, std::size_t n, bool normalized);

/// Block differential on C^n(G,V) + C^n(H,W) + C^{n-1}(G,W_Phi); degree 0 is V.
Matrix mlg_differential(const GroupModuleTriple& t, std::size_t n, bool normalized);

std::size_t mlg_cohomology_dim(const GroupModuleTriple& t, std::size_t n, bool normalized);

struct MLGRow {
  std::size_t degree;
  std::size_t cochain_dim;
  std::size_t rank;
  std::size_t cocycle_dim;
  std::size_t coboundary_dim;
  std::size_t cohomology_dim;
};

inline constexpr std::size_t default_size_ceiling = 1'000'000;

/// Rows for degrees 0..max_degree, asserting delta^2 = 0. Throws `SizeCeiling`
/// before assembling any cochain space with more than `size_ceiling`
/// coordinates.
std::vector<MLGRow> mlg_table(const GroupModuleTriple& t, std::size_t max_degree, bool normalized,
                              std::size_t size_ceiling = default_size_ceiling);

}  // namespace morphcoh
