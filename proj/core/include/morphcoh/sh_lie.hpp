#pragma once

#include <cstddef>
#include <vector>

#include "morphcoh/error.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/mla_complex.hpp"

namespace morphcoh {

/// 2-term sh Lie algebra g1 --d--> g0.
///
/// l2 on g0 x g0 is stored as (possibly non-Jacobi) structure constants, l2 on
/// g0 x g1 as one dim g1 x dim g1 matrix per basis vector of g0, with
/// l2(p, x) = -l2(x, p). l3 is a dim g1 x C(dim g0, 3) array over increasing
/// triples. Only shapes are enforced on construction; the axioms are queried
/// with `check_two_term_sh`.
class TwoTermSh {
 public:
  TwoTermSh() = default;
  TwoTermSh(Matrix d, LieAlgebra l2_00, std::vector<Matrix> l2_01, Matrix l3);

  /// g viewed as 0 -> g with l2 = bracket and l3 = 0.
  static TwoTermSh from_lie_algebra(const LieAlgebra& g);

  std::size_t dim0() const noexcept { return l2_00_.dim(); }
  std::size_t dim1() const noexcept { return d_.cols(); }
  const Matrix& d() const noexcept { return d_; }
  const LieAlgebra& l2_00() const noexcept { return l2_00_; }
  const std::vector<Matrix>& l2_01() const noexcept { return l2_01_; }
  const Matrix& l3() const noexcept { return l3_; }

  /// l2(x, p) for x in g0, p in g1 (columns).
  Matrix act(const Matrix& x, const Matrix& p) const;
  /// l3 at arbitrary columns of g0.
  Matrix l3_at(const Matrix& x, const Matrix& y, const Matrix& z) const;

  friend bool operator==(const TwoTermSh&, const TwoTermSh&) = default;

 private:
  Matrix d_;
  LieAlgebra l2_00_;
  std::vector<Matrix> l2_01_;
  Matrix l3_;
};

/// (phi0, phi1, phi2) with phi2 a dim h1 x C(dim g0, 2) array over increasing pairs.
struct ShMorphism {
  Matrix phi0;
  Matrix phi1;
  Matrix phi2;

  static ShMorphism identity(const TwoTermSh& t);

  friend bool operator==(const ShMorphism&, const ShMorphism&) = default;
};

struct SkeletalMorphismSh {
  TwoTermSh g;
  TwoTermSh h;
  ShMorphism phi;

  friend bool operator==(const SkeletalMorphismSh&, const SkeletalMorphismSh&) = default;
};

/// Axioms (i)-(v) on all basis tuples. Reports name the axiom and the
/// 1-based basis labels of the first failure.
CheckReport check_two_term_sh(const TwoTermSh& t);

/// Conditions (i)-(iv) of a homomorphism. Throws `Shape` on incompatible sizes.
CheckReport check_sh_morphism(const TwoTermSh& src, const TwoTermSh& dst, const ShMorphism& m);

/// Both differentials zero plus all sh and homomorphism axioms.
CheckReport check_skeletal(const SkeletalMorphismSh& s);

struct ShTriple {
  MorphismRep rep;  // over (g0, h0, phi0) on (g1, h1, phi1)
  MCochain cocycle; // (l3, l3', phi2), degree 3
};

/// Throws `Validation` when the input fails `check_skeletal`.
ShTriple skeletal_to_triple(const SkeletalMorphismSh& s);

/// Throws `NotACocycle` unless delta(c) = 0.
SkeletalMorphismSh triple_to_skeletal(const MorphismRep& rep, const MCochain& c);

struct ShTwist {
  Matrix sigma;    // dim g1 x C(dim g0, 2)
  Matrix sigma_p;  // dim h1 x C(dim h0, 2)
  Matrix phi;      // dim h1 x dim g0
};

/// The equivalent skeletal object twisted by (sigma, sigma', phi). Asserts the
/// result is skeletal and that its cochain differs from the input's by exactly
/// delta(sigma, sigma', phi).
SkeletalMorphismSh twist_equivalence(const SkeletalMorphismSh& s, const ShTwist& twist);

}  // namespace morphcoh
