#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "morphcoh/error.hpp"
#include "morphcoh/matrix.hpp"

namespace morphcoh {

/// Finite-dimensional algebra with antisymmetric structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k on an ordered basis.
///
/// Antisymmetry is enforced on construction. The Jacobi identity is not: it
/// is queried with `check_jacobi`, so non-Lie data can still be represented
/// and diagnosed.
class LieAlgebra {
 public:
  using Bracket = std::tuple<std::size_t, std::size_t, std::vector<Rational>>;

  LieAlgebra() = default;
  /// `constants` is indexed (i * dim + j) * dim + k.
  LieAlgebra(std::size_t dim, std::vector<Rational> constants);

  static LieAlgebra abelian(std::size_t dim);
  /// Each entry (i, j, coeffs) sets [e_i, e_j] = coeffs and [e_j, e_i] = -coeffs.
  static LieAlgebra from_brackets(std::size_t dim, std::span<const Bracket> brackets);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  std::span<const Rational> constants() const noexcept { return c_; }

  /// [e_i, e_j] as a dim x 1 column.
  Matrix bracket_basis(std::size_t i, std::size_t j) const;
  /// [x, y] for dim x 1 columns.
  Matrix bracket(const Matrix& x, const Matrix& y) const;
  /// Matrix of ad(e_i) = [e_i, -].
  Matrix adjoint(std::size_t i) const;
  /// Matrix of ad(x) for a dim x 1 column x.
  Matrix adjoint(const Matrix& x) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Representation of a Lie algebra: one dim x dim action matrix per basis
/// element of the algebra.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> action);

  static Representation trivial(LieAlgebra algebra, std::size_t dim);
  static Representation adjoint(LieAlgebra algebra);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  std::span<const Matrix> actions() const noexcept { return action_; }
  /// rho(x) for a column x in the algebra.
  Matrix act(const Matrix& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

/// Triple (g, h, phi) with phi a dim(h) x dim(g) matrix.
class MorphismLieAlgebra {
 public:
  MorphismLieAlgebra() = default;
  MorphismLieAlgebra(LieAlgebra g, LieAlgebra h, Matrix phi);

  static MorphismLieAlgebra identity(const LieAlgebra& g) {
    return MorphismLieAlgebra(g, g, Matrix::identity(g.dim()));
  }

  const LieAlgebra& g() const noexcept { return g_; }
  const LieAlgebra& h() const noexcept { return h_; }
  const Matrix& phi() const noexcept { return phi_; }

  friend bool operator==(const MorphismLieAlgebra&, const MorphismLieAlgebra&) = default;

 private:
  LieAlgebra g_;
  LieAlgebra h_;
  Matrix phi_;
};

/// Representation (V, W, psi) of a morphism Lie algebra.
class MorphismRep {
 public:
  MorphismRep() = default;
  MorphismRep(MorphismLieAlgebra base, Representation v, Representation w, Matrix psi);

  /// (g, h, phi) acting on itself through the adjoint representations.
  static MorphismRep adjoint(const MorphismLieAlgebra& base);

  const MorphismLieAlgebra& base() const noexcept { return base_; }
  const Representation& v() const noexcept { return v_; }
  const Representation& w() const noexcept { return w_; }
  const Matrix& psi() const noexcept { return psi_; }

  friend bool operator==(const MorphismRep&, const MorphismRep&) = default;

 private:
  MorphismLieAlgebra base_;
  Representation v_;
  Representation w_;
  Matrix psi_;
};

CheckReport check_jacobi(const LieAlgebra& a);
CheckReport check_representation(const Representation& rep);
/// phi([x, y]_g) = [phi x, phi y]_h on basis pairs.
CheckReport check_lie_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi);
/// Jacobi for g and h plus the homomorphism property of phi.
CheckReport check_morphism_lie_algebra(const MorphismLieAlgebra& m);
/// Representation axioms for V and W and psi rho_V(e_i) = rho_W(phi e_i) psi.
CheckReport check_morphism_rep(const MorphismRep& m);
/// Everything: base morphism Lie algebra and the representation.
CheckReport check_morphism_rep_full(const MorphismRep& m);

/// (alpha, beta) from (g, h, phi) to (g', h', phi'): both Lie homomorphisms
/// and phi' alpha = beta phi.
CheckReport check_morphism_homomorphism(const MorphismLieAlgebra& source,
                                        const MorphismLieAlgebra& target,
                                        const Matrix& alpha, const Matrix& beta);

/// Pulls a representation of h back along phi: rho(e_i) := rho_W(phi e_i).
Representation pullback_rep(const MorphismLieAlgebra& m, const Representation& w);

/// Rota-Baxter operator R of weight lambda, optionally with module data
/// (V, R_V).
struct RotaBaxterModule {
  Representation rep;
  Matrix r_v;
};

struct RotaBaxterDatum {
  LieAlgebra algebra;
  Matrix r;
  Rational weight;
  std::optional<RotaBaxterModule> module;
};

struct RotaBaxterResult {
  MorphismLieAlgebra morphism;   // (g_R, g, R)
  std::optional<MorphismRep> rep;  // (V_{R_V}, V, R_V)
};

/// [Rx, Ry] = R([Rx, y] + [x, Ry] + lambda [x, y]) on basis pairs, and the
/// module identity when module data is present.
CheckReport check_rota_baxter(const RotaBaxterDatum& d);

/// Builds (g_R, g, R) and, with module data, (V_{R_V}, V, R_V). Throws
/// `RotaBaxterViolation` when the identity fails and `Internal` if an output
/// invariant does not re-verify.
RotaBaxterResult rota_baxter_morphism(const RotaBaxterDatum& d);

/// Structure constants of the bracket [x, y]_R.
LieAlgebra rota_baxter_bracket(const LieAlgebra& g, const Matrix& r, const Rational& weight);

}  // namespace morphcoh
