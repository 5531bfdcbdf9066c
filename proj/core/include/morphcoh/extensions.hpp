#pragma once

#include <cstddef>
#include <optional>

#include "morphcoh/error.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/mla_complex.hpp"

namespace morphcoh {

/// Pair of short exact sequences 0 -> V -> g^ -> g -> 0 and
/// 0 -> W -> h^ -> h -> 0 joined by phi^: g^ -> h^ over phi and psi.
/// Built extensions use the basis (g-basis, V-basis) on g^ and likewise on h^.
struct AbelianExtension {
  MorphismLieAlgebra base;    // (g, h, phi)
  Matrix psi;                 // dim W x dim V
  MorphismLieAlgebra total;   // (g^, h^, phi^)
  Matrix i, p;                // V -> g^, g^ -> g
  Matrix ibar, pbar;          // W -> h^, h^ -> h
};

/// Exactness, the commuting squares, Jacobi for g^ and h^, phi^ a
/// homomorphism, and V, W abelian ideals.
CheckReport check_extension(const AbelianExtension& ext);

/// Extension determined by a 2-cocycle. Throws `NotACocycle` naming the
/// nonzero block of delta(c).
AbelianExtension build_extension(const MorphismRep& rep, const MCochain& cocycle);

struct ExtractedCocycle {
  MorphismRep rep;   // actions rho_V(x) v = [s(x), i(v)] read through i
  MCochain cocycle;
};

/// Cocycle of an extension relative to the section (s, sbar). When a second
/// section is given the induced actions are recomputed from it and must agree.
/// Throws `NotASection` unless p s = id and pbar sbar = id.
ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const Matrix& s, const Matrix& sbar,
                                 const std::optional<std::pair<Matrix, Matrix>>& second = std::nullopt);

/// The canonical section x -> (x, 0), h -> (h, 0) of a built extension.
std::pair<Matrix, Matrix> canonical_section(const AbelianExtension& ext);

/// Isomorphism of extensions (alpha, beta) from `from` to `to`: both Lie
/// isomorphisms, phi^' alpha = beta phi^, alpha i = i', p' alpha = p and the
/// barred analogues.
CheckReport check_extension_isomorphism(const AbelianExtension& from, const AbelianExtension& to,
                                        const Matrix& alpha, const Matrix& beta);

struct ExtensionIsomorphism {
  AbelianExtension from;
  AbelianExtension to;
  Matrix alpha;  // (x, v) -> (x, v + d0 x)
  Matrix beta;   // (h, w) -> (h, w + del0 h)
};

/// For c1 - c2 = delta(d0, del0, 0), the isomorphism between the extensions
/// built from c1 and c2. Throws `NotSimplyCohomologous` otherwise.
ExtensionIsomorphism coboundary_isomorphism(const MorphismRep& rep, const MCochain& c1, const MCochain& c2,
                                            const Matrix& d0, const Matrix& del0);

}  // namespace morphcoh
