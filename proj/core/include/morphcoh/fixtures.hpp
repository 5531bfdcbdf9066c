#pragma once

#include "morphcoh/lie.hpp"

/// Small shared algebras and representations used across tests, benchmarks
/// and the CLI's randomized checks. Basis orders are fixed as documented.
namespace morphcoh::fixtures {

/// 1-dimensional abelian.
LieAlgebra a1();
/// 2-dimensional abelian.
LieAlgebra a2();
/// Heisenberg: [e1, e2] = e3.
LieAlgebra heis();
/// sl2 on the basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Non-abelian 2-dimensional: [e1, e2] = e2.
LieAlgebra r2();
/// gl2 = sl2 + k z on the basis (e, f, h, z), z central.
LieAlgebra gl2();
/// Antisymmetric data failing Jacobi: [e1,e2] = e1, [e2,e3] = e2, [e3,e1] = e3.
LieAlgebra broken_jacobi();

/// Trivial 1-dimensional representation of `g`.
Representation v0(const LieAlgebra& g);
/// 2-dimensional irreducible representation of sl2.
Representation v1();
/// The standard 2-dimensional representation of gl2 (z acts by the identity).
Representation gl2_standard();

/// A1 fixture: (k, k, id) with trivial (k, k, id).
MorphismRep a1_fixture();
/// (sl2, sl2, id) with (V1, V1, id).
MorphismRep sl2_v1_fixture();

}  // namespace morphcoh::fixtures
