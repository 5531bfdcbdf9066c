#include "morphcoh/random_instances.hpp"

#include "morphcoh/fixtures.hpp"
#include "morphcoh/linalg.hpp"

namespace morphcoh::random {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Matrix cols_of(std::initializer_list<std::initializer_list<Rational>> rows) { return Matrix(rows); }

MorphismLieAlgebra hom(const LieAlgebra& g, const LieAlgebra& h, Matrix phi) {
  return MorphismLieAlgebra(g, h, std::move(phi));
}

// Kernel of the stacked linear conditions psi A_i - B_i psi = 0 on vec(psi).
Matrix intertwiner_kernel(std::span<const Matrix> a, std::span<const Matrix> b, std::size_t dv, std::size_t dw) {
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows.push_back(kron(a[i].transpose(), Matrix::identity(dw)) - kron(Matrix::identity(dv), b[i]));
  }
  return kernel_basis(vstack(rows, dv * dw));
}

std::vector<Matrix> cyclic_module(std::size_t n, const Matrix& generator) {
  std::vector<Matrix> rho;
  Matrix power = Matrix::identity(generator.rows());
  for (std::size_t k = 0; k < n; ++k) {
    rho.push_back(power);
    power = power * generator;
  }
  return rho;
}

struct GroupEntry {
  FiniteGroup group;
  std::vector<std::vector<Matrix>> modules;
};

std::vector<GroupEntry> group_pool() {
  auto trivial_modules = [](std::size_t order) {
    return std::vector<std::vector<Matrix>>{std::vector<Matrix>(order, Matrix::identity(1)),
                                            std::vector<Matrix>(order, Matrix::identity(2))};
  };
  std::vector<GroupEntry> pool;
  pool.push_back({FiniteGroup::trivial(), trivial_modules(1)});

  GroupEntry z2{FiniteGroup::cyclic(2), trivial_modules(2)};
  z2.modules.push_back(cyclic_module(2, Matrix{{-1}}));
  z2.modules.push_back(cyclic_module(2, Matrix{{0, 1}, {1, 0}}));
  pool.push_back(std::move(z2));

  GroupEntry z3{FiniteGroup::cyclic(3), trivial_modules(3)};
  z3.modules.push_back(cyclic_module(3, Matrix{{0, -1}, {1, -1}}));
  pool.push_back(std::move(z3));

  GroupEntry z4{FiniteGroup::cyclic(4), trivial_modules(4)};
  z4.modules.push_back(cyclic_module(4, Matrix{{-1}}));
  z4.modules.push_back(cyclic_module(4, Matrix{{0, -1}, {1, 0}}));
  pool.push_back(std::move(z4));

  const FiniteGroup k4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  GroupEntry v4{k4, trivial_modules(4)};
  // characters (a, b) -> (-1)^(a s + b t), and a 2-dimensional sum of two of them
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) {
      if (s == 0 && t == 0) continue;
      std::vector<Matrix> chi;
      for (std::size_t e = 0; e < 4; ++e) chi.push_back(Matrix{{((e / 2) * s + (e % 2) * t) % 2 == 0 ? 1 : -1}});
      v4.modules.push_back(std::move(chi));
    }
  }
  std::vector<Matrix> sum;
  for (std::size_t e = 0; e < 4; ++e) {
    sum.push_back(Matrix{{(e / 2) == 0 ? 1 : -1, 0}, {0, (e % 2) == 0 ? 1 : -1}});
  }
  v4.modules.push_back(std::move(sum));
  pool.push_back(std::move(v4));
  return pool;
}

struct GroupHom {
  std::size_t from;
  std::size_t to;
  std::vector<std::size_t> phi;
};

std::vector<GroupHom> group_hom_pool(const std::vector<GroupEntry>& groups) {
  std::vector<GroupHom> homs;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<std::size_t> id(groups[i].group.order());
    for (std::size_t e = 0; e < id.size(); ++e) id[e] = e;
    homs.push_back({i, i, id});
    for (std::size_t j = 0; j < groups.size(); ++j) {
      homs.push_back({i, j, std::vector<std::size_t>(groups[i].group.order(), groups[j].group.identity())});
    }
  }
  // indices into group_pool(): 0 trivial, 1 Z2, 2 Z3, 3 Z4, 4 Z2 x Z2
  homs.push_back({3, 1, {0, 1, 0, 1}});
  homs.push_back({1, 3, {0, 2}});
  homs.push_back({4, 1, {0, 0, 1, 1}});
  homs.push_back({4, 1, {0, 1, 0, 1}});
  homs.push_back({4, 1, {0, 1, 1, 0}});
  homs.push_back({1, 4, {0, 2}});
  homs.push_back({1, 4, {0, 1}});
  homs.push_back({1, 4, {0, 3}});
  return homs;
}

std::vector<Matrix> conjugate(const std::vector<Matrix>& rho, const Matrix& p, const Matrix& p_inv) {
  std::vector<Matrix> out;
  for (const Matrix& m : rho) out.push_back(p_inv * m * p);
  return out;
}

}  // namespace

Rational rational(Rng& rng, long bound) {
  const long num = std::uniform_int_distribution<long>(-bound, bound)(rng);
  const long den = std::uniform_int_distribution<long>(1, bound)(rng);
  return Rational(num, den);
}

Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(rng, bound);
  }
  return m;
}

Matrix invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(std::uniform_int_distribution<long>(-2, 2)(rng));
    }
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix combination(Rng& rng, const Matrix& basis) {
  Matrix out(basis.rows(), 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) out.add_block(0, 0, basis.col(c), rational(rng));
  return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& s) {
  const Matrix s_inv = *inverse(s);
  const std::size_t n = g.dim();
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix b = s_inv * g.bracket(s.col(i), s.col(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = b(k, 0);
    }
  }
  return LieAlgebra(n, std::move(c));
}

Representation change_basis(const Representation& rep, const Matrix& s, const Matrix& p) {
  const Matrix p_inv = *inverse(p);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < rep.algebra().dim(); ++i) action.push_back(p_inv * rep.act(s.col(i)) * p);
  return Representation(change_basis(rep.algebra(), s), rep.dim(), std::move(action));
}

Matrix intertwiner_space(const MorphismLieAlgebra& m, const Representation& v, const Representation& w) {
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < m.g().dim(); ++i) b.push_back(w.act(m.phi().col(i)));
  return intertwiner_kernel(v.actions(), b, v.dim(), w.dim());
}

std::vector<MorphismLieAlgebra> morphism_pool() {
  using namespace fixtures;
  const LieAlgebra k = a1(), k2 = a2(), hs = heis(), s = sl2(), r = r2();
  std::vector<MorphismLieAlgebra> pool;
  for (const LieAlgebra& g : {k, k2, hs, s, r}) {
    pool.push_back(MorphismLieAlgebra::identity(g));
    pool.push_back(hom(g, k, Matrix(1, g.dim())));
    pool.push_back(hom(k, g, [&] {
      Matrix x(g.dim(), 1);
      if (g.dim() > 0) x(g.dim() - 1, 0) = 1;
      return x;
    }()));
  }
  pool.push_back(hom(hs, k2, cols_of({{1, 0, 0}, {0, 1, 0}})));
  pool.push_back(hom(hs, k, cols_of({{1, 0, 0}})));
  pool.push_back(hom(r, k, cols_of({{1, 0}})));
  pool.push_back(hom(k2, hs, cols_of({{1, 0}, {0, 0}, {0, 1}})));
  // e1 -> h/2, e2 -> e
  pool.push_back(hom(r, s, Matrix{{0, 1}, {0, 0}, {Rational(1, 2), 0}}));
  pool.push_back(hom(k, s, cols_of({{1}, {1}, {0}})));
  return pool;
}

std::vector<Representation> rep_pool(const LieAlgebra& g, std::size_t max_dim) {
  std::vector<Representation> pool;
  pool.push_back(fixtures::v0(g));
  if (max_dim >= 2) pool.push_back(Representation::trivial(g, 2));
  if (g.dim() > 0 && g.dim() <= max_dim) pool.push_back(Representation::adjoint(g));
  if (g == fixtures::sl2()) pool.push_back(fixtures::v1());
  if (g == fixtures::r2()) {
    pool.push_back(Representation(g, 1, {Matrix{{1}}, Matrix{{0}}}));
    pool.push_back(Representation(g, 1, {Matrix{{Rational(-1, 2)}}, Matrix{{0}}}));
  }
  if (g.dim() == 1) {
    pool.push_back(Representation(g, 2, {Matrix{{1, 1}, {0, 1}}}));
    pool.push_back(Representation(g, 1, {Matrix{{2}}}));
  }
  return pool;
}

MorphismRep morphism_rep(Rng& rng) {
  const auto homs = morphism_pool();
  const MorphismLieAlgebra& m = homs[pick(rng, homs.size())];
  const auto ws = rep_pool(m.h());
  const Representation w = ws[pick(rng, ws.size())];
  Representation v;
  if (pick(rng, 3) == 0) {
    v = pullback_rep(m, w);
  } else {
    const auto vs = rep_pool(m.g());
    v = vs[pick(rng, vs.size())];
  }
  const Matrix psi = Matrix::unvectorize(combination(rng, intertwiner_space(m, v, w)), w.dim(), v.dim());

  const Matrix s = invertible(rng, m.g().dim());
  const Matrix t = invertible(rng, m.h().dim());
  const Matrix p = invertible(rng, v.dim());
  const Matrix q = invertible(rng, w.dim());
  const Matrix t_inv = *inverse(t);
  const Matrix q_inv = *inverse(q);
  MorphismLieAlgebra base(change_basis(m.g(), s), change_basis(m.h(), t), t_inv * m.phi() * s);
  MorphismRep rep(base, change_basis(v, s, p), change_basis(w, t, q), q_inv * psi * p);
  require(check_morphism_rep_full(rep), ErrorKind::Internal, "random morphism representation");
  return rep;
}

MCochain cocycle(Rng& rng, const MorphismRep& rep, std::size_t n) {
  return unflatten(rep, n, combination(rng, kernel_basis(mla_differential(rep, n))));
}

MCochain cochain(Rng& rng, const MorphismRep& rep, std::size_t n) {
  return unflatten(rep, n, matrix(rng, cochain_dim(rep, n), 1));
}

GroupModuleTriple group_module_triple(Rng& rng) {
  const auto groups = group_pool();
  const auto homs = group_hom_pool(groups);
  const GroupHom& f = homs[pick(rng, homs.size())];
  const GroupEntry& ge = groups[f.from];
  const GroupEntry& he = groups[f.to];

  GroupModuleTriple t;
  t.g = ge.group;
  t.h = he.group;
  t.phi = f.phi;
  t.rho_w = he.modules[pick(rng, he.modules.size())];
  if (pick(rng, 3) == 0) {
    for (std::size_t e = 0; e < t.g.order(); ++e) t.rho_v.push_back(t.rho_w[t.phi[e]]);
  } else {
    t.rho_v = ge.modules[pick(rng, ge.modules.size())];
  }
  t.dim_v = t.rho_v[0].rows();
  t.dim_w = t.rho_w[0].rows();

  std::vector<Matrix> b;
  for (std::size_t e = 0; e < t.g.order(); ++e) b.push_back(t.rho_w[t.phi[e]]);
  const Matrix psi = Matrix::unvectorize(combination(rng, intertwiner_kernel(t.rho_v, b, t.dim_v, t.dim_w)),
                                         t.dim_w, t.dim_v);
  const Matrix p = invertible(rng, t.dim_v);
  const Matrix q = invertible(rng, t.dim_w);
  const Matrix p_inv = *inverse(p);
  const Matrix q_inv = *inverse(q);
  t.rho_v = conjugate(t.rho_v, p, p_inv);
  t.rho_w = conjugate(t.rho_w, q, q_inv);
  t.psi = q_inv * psi * p;
  require(check_group_module_triple(t), ErrorKind::Internal, "random group module triple");
  return t;
}

}  // namespace morphcoh::random
