// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "convert.hpp"
#include "morphcoh/ce_complex.hpp"
#include "morphcoh/deformations.hpp"
#include "morphcoh/extensions.hpp"
#include "morphcoh/exterior.hpp"
#include "morphcoh/fixtures.hpp"
#include "morphcoh/group_cohomology.hpp"
#include "morphcoh/linalg.hpp"
#include "morphcoh/mla_complex.hpp"
#include "morphcoh/random_instances.hpp"
#include "morphcoh/sh_lie.hpp"

using namespace morphcoh;
namespace fx = morphcoh::fixtures;
using testing_support::to_dense;
using testing_support::to_oracle;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

constexpr int kRandom = 50;

std::vector<MorphismRep> fixture_reps() {
  std::vector<MorphismRep> out{fx::a1_fixture(), fx::sl2_v1_fixture()};
  for (const LieAlgebra& g : {fx::a1(), fx::a2(), fx::heis(), fx::sl2(), fx::r2(), fx::gl2()}) {
    out.push_back(MorphismRep::adjoint(MorphismLieAlgebra::identity(g)));
    out.push_back(MorphismRep(MorphismLieAlgebra::identity(g), fx::v0(g), fx::v0(g), Matrix{{1}}));
  }
  for (const auto& m : random::morphism_pool()) out.push_back(MorphismRep::adjoint(m));
  out.push_back(MorphismRep(MorphismLieAlgebra::identity(fx::gl2()), fx::gl2_standard(), fx::gl2_standard(),
                            Matrix::identity(2)));
  return out;
}

std::vector<MorphismRep> random_reps(std::uint64_t seed, int count) {
  random::Rng rng(seed);
  std::vector<MorphismRep> out;
  for (int k = 0; k < count; ++k) out.push_back(random::morphism_rep(rng));
  return out;
}

GroupModuleTriple z2_trivial() {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const std::vector<Matrix> id(2, Matrix::identity(1));
  return {z2, z2, {0, 1}, 1, 1, id, id, Matrix{{1}}};
}

std::string seq(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Outcome ac1() {
  Outcome o;
  int ce = 0, mla = 0, mlg = 0;
  auto reps = fixture_reps();
  const auto extra = random_reps(1001, kRandom);
  reps.insert(reps.end(), extra.begin(), extra.end());
  for (const auto& rep : reps) {
    for (const Representation* v : {&rep.v(), &rep.w()}) {
      for (std::size_t n = 0; n <= 3; ++n) {
        o.expect((ce_differential(*v, n + 1) * ce_differential(*v, n)).is_zero(), "CE square nonzero");
      }
      ++ce;
    }
    for (std::size_t n = 0; n <= 3; ++n) {
      o.expect((mla_differential(rep, n + 1) * mla_differential(rep, n)).is_zero(), "mLA square nonzero");
    }
    ++mla;
  }
  random::Rng rng(1002);
  std::vector<GroupModuleTriple> groups{z2_trivial()};
  for (int k = 0; k < kRandom; ++k) groups.push_back(random::group_module_triple(rng));
  for (const auto& t : groups) {
    for (bool normalized : {false, true}) {
      for (std::size_t n = 0; n + 1 <= 3; ++n) {
        o.expect((mlg_differential(t, n + 1, normalized) * mlg_differential(t, n, normalized)).is_zero(),
                 "mLG square nonzero");
      }
    }
    ++mlg;
  }
  if (o.ok) {
    o.detail = std::to_string(ce) + " CE, " + std::to_string(mla) + " mLA, " + std::to_string(mlg) +
               " mLG instances";
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  auto dims = [](const Representation& v, std::size_t top) {
    std::vector<std::size_t> lib, orc;
    const auto g = to_oracle(v.algebra());
    const auto r = to_oracle(v);
    for (std::size_t n = 0; n <= top; ++n) {
      lib.push_back(ce_cohomology_dim(v, n));
      const auto next = oracle::ce_differential(g, r, n);
      const std::size_t cdim = next.empty() ? binomial(v.algebra().dim(), n) * v.dim() : next[0].size();
      const std::size_t prev = n == 0 ? 0 : oracle::rank(oracle::ce_differential(g, r, n - 1));
      orc.push_back(cdim - oracle::rank(next) - prev);
    }
    return std::pair{lib, orc};
  };
  const std::vector<std::pair<std::string, std::pair<Representation, std::vector<std::size_t>>>> cases{
      {"SL2/k", {fx::v0(fx::sl2()), {1, 0, 0, 1}}},
      {"A2/k", {fx::v0(fx::a2()), {1, 2, 1}}},
      {"SL2/V1", {fx::v1(), {0, 0, 0, 0}}}};
  std::string detail;
  for (const auto& [name, c] : cases) {
    const auto [lib, orc] = dims(c.first, c.second.size() - 1);
    o.expect(lib == c.second, name + " library " + seq(lib) + " != " + seq(c.second));
    o.expect(orc == c.second, name + " oracle " + seq(orc) + " != " + seq(c.second));
    detail += (detail.empty() ? "" : " ") + name + "=" + seq(lib);
  }
  if (o.ok) o.detail = detail;
  return o;
}

std::vector<std::size_t> oracle_mla_dims(const MorphismRep& rep, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) {
    const oracle::Dense prev = n == 0 ? oracle::Dense{} : testing_support::mla_oracle(rep, n - 1);
    out.push_back(oracle::cohomology_dim(prev, testing_support::mla_oracle(rep, n), cochain_dim(rep, n)));
  }
  return out;
}

Outcome ac3() {
  Outcome o;
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n <= 3; ++n) h.push_back(mla_cohomology_dim(fx::sl2_v1_fixture(), n));
  const auto orc = oracle_mla_dims(fx::sl2_v1_fixture(), 3);
  o.expect(h == std::vector<std::size_t>{0, 0, 0, 0}, "H = " + seq(h) + ", oracle " + seq(orc));
  if (o.ok) o.detail = "H = " + seq(h);
  return o;
}

Outcome ac4() {
  Outcome o;
  auto reps = fixture_reps();
  const auto extra = random_reps(1004, kRandom);
  reps.insert(reps.end(), extra.begin(), extra.end());
  std::size_t held = 0, checked = 0;
  std::vector<std::size_t> bad(4, 0);
  for (const auto& rep : reps) {
    const Representation wphi = pullback_rep(rep.base(), rep.w());
    for (std::size_t n = 0; n <= 3; ++n) {
      ++checked;
      const bool hyp = ce_cohomology_dim(rep.v(), n) == 0 && ce_cohomology_dim(rep.w(), n) == 0 &&
                       (n == 0 || ce_cohomology_dim(wphi, n - 1) == 0);
      if (!hyp) continue;
      ++held;
      if (mla_cohomology_dim(rep, n) != 0) ++bad[n];
    }
  }
  const std::string counts = std::to_string(held) + " of " + std::to_string(checked) +
                             " (instance, degree) pairs satisfy the hypothesis";
  o.expect(held > 0, "hypothesis never held");
  o.expect(bad == std::vector<std::size_t>(4, 0), "counterexamples by degree " + seq(bad) + "; " + counts);
  if (o.ok) o.detail = counts;
  return o;
}

Outcome ac5() {
  Outcome o;
  const MorphismRep a1 = fx::a1_fixture();
  std::vector<std::size_t> lib;
  for (std::size_t n = 0; n <= 2; ++n) lib.push_back(mla_cohomology_dim(a1, n));
  const auto orc = oracle_mla_dims(a1, 2);
  const std::vector<std::size_t> want{1, 2, 0};
  o.expect(lib == want, "library " + seq(lib));
  o.expect(orc == want, "oracle " + seq(orc));
  o.expect(testing_support::same(mla_differential(a1, 1), oracle::Dense{{1, -1, 0}}), "degree-1 matrix");
  if (o.ok) o.detail = "H = " + seq(lib) + ", oracle agrees";
  return o;
}

Outcome ac6() {
  Outcome o;
  random::Rng rng(1006);
  for (int k = 0; k < 20; ++k) {
    const MorphismRep rep = random::morphism_rep(rng);
    const MCochain c = random::cocycle(rng, rep, 2);
    const AbelianExtension ext = build_extension(rep, c);
    o.expect(bool(check_extension(ext)), "built extension fails its invariants");
    const auto [s, sbar] = canonical_section(ext);
    const ExtractedCocycle e = extract_cocycle(ext, s, sbar);
    o.expect(e.cocycle == c, "round trip changed the cocycle");
    o.expect(e.rep == rep, "round trip changed the representation");
  }
  const MorphismRep a2(MorphismLieAlgebra::identity(fx::a2()), fx::v0(fx::a2()), fx::v0(fx::a2()), Matrix{{1}});
  MCochain area = MCochain::zero(a2, 2);
  area.theta = Matrix{{1}};
  area.gamma = Matrix{{1}};
  const AbelianExtension ext = build_extension(a2, area);
  o.expect(ext.total.g() == fx::heis() && ext.total.h() == fx::heis(), "area extension is not HEIS");
  o.expect(ext.total.phi() == Matrix::identity(3), "area extension map is not the identity");
  if (o.ok) o.detail = "20 random round trips exact; area cocycle gives HEIS";
  return o;
}

Outcome ac7() {
  Outcome o;
  random::Rng rng(1007);
  for (int k = 0; k < 20; ++k) {
    const MorphismRep rep = random::morphism_rep(rng);
    const MCochain c2 = random::cocycle(rng, rep, 2);
    const Matrix d0 = random::matrix(rng, rep.v().dim(), rep.base().g().dim());
    const Matrix del0 = random::matrix(rng, rep.w().dim(), rep.base().h().dim());
    const MCochain c1 = c2 + differential_of_triple(rep, d0, del0, Matrix(rep.w().dim(), 1));
    const ExtensionIsomorphism iso = coboundary_isomorphism(rep, c1, c2, d0, del0);
    o.expect(bool(check_extension_isomorphism(iso.from, iso.to, iso.alpha, iso.beta)), "diagram check failed");
  }
  if (o.ok) o.detail = "20 isomorphisms verified";
  return o;
}

Outcome ac8() {
  Outcome o;
  random::Rng rng(1008);
  for (int k = 0; k < 20; ++k) {
    const MorphismRep rep = k % 2 == 0 ? fx::sl2_v1_fixture() : random::morphism_rep(rng);
    const MCochain c = random::cocycle(rng, rep, 3);
    const SkeletalMorphismSh s = triple_to_skeletal(rep, c);
    o.expect(bool(check_skeletal(s)), "triple_to_skeletal output fails the axioms");
    const ShTriple t = skeletal_to_triple(s);
    o.expect(apply_differential(rep, t.cocycle) == MCochain::zero(rep, 4), "skeletal cochain is not a cocycle");
    o.expect(t.rep == rep && t.cocycle == c, "round trip is not the identity");
    o.expect(triple_to_skeletal(t.rep, t.cocycle) == s, "skeletal round trip is not the identity");

    const std::size_t g0 = s.g.dim0(), g1 = s.g.dim1(), h0 = s.h.dim0(), h1 = s.h.dim1();
    MCochain tw = MCochain::zero(rep, 2);
    tw.theta = random::matrix(rng, g1, binomial(g0, 2));
    tw.gamma = random::matrix(rng, h1, binomial(h0, 2));
    tw.eta = random::matrix(rng, h1, g0);
    const SkeletalMorphismSh u = twist_equivalence(s, ShTwist{tw.theta, tw.gamma, tw.eta});
    o.expect(bool(check_skeletal(u)), "twisted object fails the axioms");
    o.expect(skeletal_to_triple(u).cocycle == c + apply_differential(rep, tw), "twist shift is not delta");
  }
  if (o.ok) o.detail = "20 correspondences and 20 twists exact";
  return o;
}

Outcome ac9() {
  Outcome o;
  const GroupModuleTriple t = z2_trivial();
  const std::size_t h0 = mlg_cohomology_dim(t, 0, false), h1 = mlg_cohomology_dim(t, 1, false);
  o.expect(h0 == 1 && h1 == 1, "H_mLG = (" + std::to_string(h0) + "," + std::to_string(h1) + ")");
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const std::vector<Matrix> id(2, Matrix::identity(1));
  const std::size_t n1 = group_cohomology_dim(z2, id, 1, true), n2 = group_cohomology_dim(z2, id, 2, true);
  o.expect(n1 == 0 && n2 == 0, "normalized H(Z/2, k) nonzero");
  o.expect(group_differential(z2, id, 1, true) == Matrix{{2}}, "normalized degree-1 matrix is not [2]");
  if (o.ok) o.detail = "H0=1 H1=1, normalized H1=H2=0";
  return o;
}

Outcome ac10() {
  Outcome o;
  int count = 0;
  for (const auto& rep : fixture_reps()) {
    o.expect(mla_cohomology_dim(rep, 0) == h0_invariants_dim(rep), "H0 mismatch");
    o.expect(mla_cohomology_dim(rep, 1) == derivation_space_dim(rep) - inner_derivation_space_dim(rep), "H1 mismatch");
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " fixtures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 delta^2 = 0 (CE, mLA, mLG)", ac1},
      {"AC2 classical CE dimensions", ac2},
      {"AC3 Whitehead instance SL2/V1", ac3},
      {"AC4 vanishing implication", ac4},
      {"AC5 A1 fixture hand oracle", ac5},
      {"AC6 extension round trip", ac6},
      {"AC7 coboundary isomorphisms", ac7},
      {"AC8 skeletal correspondence and twists", ac8},
      {"AC9 Z/2 group fixture", ac9},
      {"AC10 H0/H1 descriptions", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " : " << o.detail << " (" << time << ")\n";
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
