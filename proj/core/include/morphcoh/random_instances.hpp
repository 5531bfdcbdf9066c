#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "morphcoh/group_cohomology.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/mla_complex.hpp"

/// Seeded generators of valid random inputs for property tests. Everything is
/// derived from the fixture corpus by random changes of basis, so the axioms
/// hold by construction and are re-checked by the callers.
namespace morphcoh::random {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound and 1 <= q <= bound.
Rational rational(Rng& rng, long bound = 3);
Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 3);
/// A random invertible matrix; small entries keep the arithmetic cheap.
Matrix invertible(Rng& rng, std::size_t n);
/// Random linear combination of the columns of `basis` as a single column.
Matrix combination(Rng& rng, const Matrix& basis);

/// Structure constants in the basis given by the columns of s.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& s);
/// rep on the algebra change_basis(g, s), in the module basis given by the columns of p.
Representation change_basis(const Representation& rep, const Matrix& s, const Matrix& p);

/// Basis of {psi : psi rho_V(e_i) = rho_W(phi e_i) psi}, as columns of vec(psi).
Matrix intertwiner_space(const MorphismLieAlgebra& m, const Representation& v, const Representation& w);

/// Small homomorphisms between fixture algebras of dimension <= 3.
std::vector<MorphismLieAlgebra> morphism_pool();
/// Representations of `g` of dimension <= max_dim built from the fixtures.
std::vector<Representation> rep_pool(const LieAlgebra& g, std::size_t max_dim = 3);

/// A valid representation of a morphism Lie algebra, re-coordinatized at random.
MorphismRep morphism_rep(Rng& rng);

/// A random element of the degree-n cocycles of rep.
MCochain cocycle(Rng& rng, const MorphismRep& rep, std::size_t n);
/// A random cochain of degree n.
MCochain cochain(Rng& rng, const MorphismRep& rep, std::size_t n);

/// Groups of order <= 4 with a homomorphism between them and modules of
/// dimension <= 2.
GroupModuleTriple group_module_triple(Rng& rng);

}  // namespace morphcoh::random
