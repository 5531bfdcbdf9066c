#include "morphcoh/fixtures.hpp"

#include <vector>

namespace morphcoh::fixtures {

namespace {

std::vector<Rational> vec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

LieAlgebra a1() { return LieAlgebra::abelian(1); }

LieAlgebra a2() { return LieAlgebra::abelian(2); }

LieAlgebra heis() {
  const LieAlgebra::Bracket b[] = {{0, 1, vec({0, 0, 1})}};
  return LieAlgebra::from_brackets(3, b);
}

LieAlgebra sl2() {
  // e = 0, f = 1, h = 2
  const LieAlgebra::Bracket b[] = {
      {2, 0, vec({2, 0, 0})},
      {2, 1, vec({0, -2, 0})},
      {0, 1, vec({0, 0, 1})},
  };
  return LieAlgebra::from_brackets(3, b);
}

LieAlgebra r2() {
  const LieAlgebra::Bracket b[] = {{0, 1, vec({0, 1})}};
  return LieAlgebra::from_brackets(2, b);
}

LieAlgebra gl2() {
  const LieAlgebra::Bracket b[] = {
      {2, 0, vec({2, 0, 0, 0})},
      {2, 1, vec({0, -2, 0, 0})},
      {0, 1, vec({0, 0, 1, 0})},
  };
  return LieAlgebra::from_brackets(4, b);
}

LieAlgebra broken_jacobi() {
  const LieAlgebra::Bracket b[] = {
      {0, 1, vec({1, 0, 0})},
      {1, 2, vec({0, 1, 0})},
      {2, 0, vec({0, 0, 1})},
  };
  return LieAlgebra::from_brackets(3, b);
}

Representation v0(const LieAlgebra& g) { return Representation::trivial(g, 1); }

Representation v1() {
  std::vector<Matrix> action = {
      Matrix{{0, 1}, {0, 0}},
      Matrix{{0, 0}, {1, 0}},
      Matrix{{1, 0}, {0, -1}},
  };
  return Representation(sl2(), 2, std::move(action));
}

Representation gl2_standard() {
  std::vector<Matrix> action = {
      Matrix{{0, 1}, {0, 0}},
      Matrix{{0, 0}, {1, 0}},
      Matrix{{1, 0}, {0, -1}},
      Matrix::identity(2),
  };
  return Representation(gl2(), 2, std::move(action));
}

MorphismRep a1_fixture() {
  const LieAlgebra k = a1();
  return MorphismRep(MorphismLieAlgebra::identity(k), v0(k), v0(k), Matrix::identity(1));
}

MorphismRep sl2_v1_fixture() {
  return MorphismRep(MorphismLieAlgebra::identity(sl2()), v1(), v1(), Matrix::identity(2));
}

}  // namespace morphcoh::fixtures
