#pragma once

#include <cstddef>

#include "morphcoh/error.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/matrix.hpp"
#include "morphcoh/mla_complex.hpp"

namespace morphcoh {

/// Residuals of the three derivation identities for (d, del, w), stacked as
/// one column: first d([e_i,e_j]) - rho_V(e_i) d(e_j) + rho_V(e_j) d(e_i) for
/// i < j, then the same for del on h, then rho_W(phi e_i) w - psi d(e_i) +
/// del(phi e_i). Zero exactly when (d, del, w) is a derivation.
Matrix derivation_residual(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w);

/// Evaluates the identities one by one and cross-checks the answer against
/// delta(d, del, w) = 0 at degree 1. A disagreement raises `Internal`.
CheckReport check_derivation(const MorphismRep& rep, const Matrix& d, const Matrix& del, const Matrix& w);

/// dim {v : rho_V(e_i) v = 0 and rho_W(f_j) psi v = 0 for all i, j}.
std::size_t h0_invariants_dim(const MorphismRep& rep);
/// Dimension of the space of derivations, from the identity residuals.
std::size_t derivation_space_dim(const MorphismRep& rep);
/// Dimension of {(rho_V(-) v, rho_W(-) psi v, 0) : v in V}.
std::size_t inner_derivation_space_dim(const MorphismRep& rep);

/// The representation of (g, h, phi) on (g', h', phi') induced by a
/// homomorphism (alpha, beta): x acts by [alpha x, -] and h by [beta h, -].
/// Throws `NotAHomomorphism` on the first failing identity.
MorphismRep homomorphism_induced_rep(const MorphismLieAlgebra& source, const MorphismLieAlgebra& target,
                                     const Matrix& alpha, const Matrix& beta);

/// delta(alpha1, beta1, 0) = 0 at degree 1 in the induced representation.
bool check_infinitesimal_deformation(const MorphismRep& rep, const Matrix& alpha1, const Matrix& beta1);

struct QuotientRep {
  MorphismRep rep;  // over (p, q, phi|_p) on (g/p, h/q, phi/phi)
  Matrix g_basis;   // p_basis followed by the chosen complement
  Matrix h_basis;   // q_basis followed by the chosen complement
};

/// The sub morphism Lie algebra spanned by the given columns with its
/// representation on the quotients. Complements are completed greedily by
/// standard basis vectors, lowest index first.
/// Throws `NotASubalgebra` or `NotPreserved`.
QuotientRep quotient_morphism_rep(const MorphismLieAlgebra& m, const Matrix& p_basis, const Matrix& q_basis);

/// delta(pdot, qdot, 0) = 0 in the quotient-coefficient complex.
bool check_subalgebra_deformation_cocycle(const QuotientRep& q, const Matrix& pdot, const Matrix& qdot);

}  // namespace morphcoh
