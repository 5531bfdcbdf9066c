#include "morphcoh/group_cohomology.hpp"

#include <limits>
#include <string>

#include "morphcoh/linalg.hpp"

namespace morphcoh {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Saturating to npos so that size checks cannot be fooled by overflow.
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > npos / a) return npos;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > npos - b ? npos : a + b; }

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

struct Support {
  std::vector<std::size_t> elements;  // position -> element
  std::vector<std::size_t> position;  // element -> position or npos
};

Support support_of(const FiniteGroup& g, bool normalized) {
  Support s;
  s.position.assign(g.order(), npos);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (normalized && e == g.identity()) continue;
    s.position[e] = s.elements.size();
    s.elements.push_back(e);
  }
  return s;
}

// Tuple index from support positions, first argument most significant.
std::size_t encode(std::span<const std::size_t> digits, std::size_t m) {
  std::size_t idx = 0;
  for (std::size_t d : digits) idx = idx * m + d;
  return idx;
}

void decode(std::size_t idx, std::size_t m, std::vector<std::size_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = idx % m;
    idx /= m;
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0) throw Error(ErrorKind::Validation, "a group has at least one element");
  if (table_.size() != order_ * order_) {
    throw Error(ErrorKind::Shape, "multiplication table of a group of order " + std::to_string(order_) + " needs " +
                                      std::to_string(order_ * order_) + " entries");
  }
  if (identity_ >= order_) throw Error(ErrorKind::Validation, "identity index out of range");
  for (std::size_t v : table_) {
    if (v >= order_) throw Error(ErrorKind::Validation, "multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw Error(ErrorKind::Validation, "identity law fails at element " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      for (std::size_t c = 0; c < order_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::Validation, "associativity fails on (" + std::to_string(a) + "," + std::to_string(b) +
                                                 "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(order_, npos);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == npos) throw Error(ErrorKind::Validation, "element " + std::to_string(a) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return FiniteGroup(n, std::move(t), 0);
}

FiniteGroup FiniteGroup::product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t m = right.order();
  const std::size_t n = left.order() * m;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = left.mul(x / m, y / m) * m + right.mul(x % m, y % m);
  }
  return FiniteGroup(n, std::move(t), left.identity() * m + right.identity());
}

CheckReport check_group_module_triple(const GroupModuleTriple& t) {
  if (t.phi.size() != t.g.order()) return CheckReport::fail("Phi must assign an element of H to every element of G");
  for (std::size_t e : t.phi) {
    if (e >= t.h.order()) return CheckReport::fail("Phi value out of range");
  }
  for (std::size_t a = 0; a < t.g.order(); ++a) {
    for (std::size_t b = 0; b < t.g.order(); ++b) {
      if (t.phi[t.g.mul(a, b)] != t.h.mul(t.phi[a], t.phi[b])) {
        return CheckReport::fail("Phi is not a homomorphism on (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  auto check_module = [](const FiniteGroup& g, const std::vector<Matrix>& rho, std::size_t dim,
                         const char* name) -> CheckReport {
    if (rho.size() != g.order()) return CheckReport::fail(std::string(name) + " needs one matrix per element");
    for (const Matrix& m : rho) {
      if (m.rows() != dim || m.cols() != dim) return CheckReport::fail(std::string(name) + " action has the wrong shape");
    }
    if (rho[g.identity()] != Matrix::identity(dim)) {
      return CheckReport::fail(std::string(name) + ": the identity does not act trivially");
    }
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (rho[g.mul(a, b)] != rho[a] * rho[b]) {
          return CheckReport::fail(std::string(name) + ": action is not multiplicative on (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
        }
      }
    }
    return CheckReport::pass();
  };
  if (auto r = check_module(t.g, t.rho_v, t.dim_v, "V"); !r) return r;
  if (auto r = check_module(t.h, t.rho_w, t.dim_w, "W"); !r) return r;
  if (t.psi.rows() != t.dim_w || t.psi.cols() != t.dim_v) return CheckReport::fail("psi has the wrong shape");
  for (std::size_t a = 0; a < t.g.order(); ++a) {
    if (t.psi * t.rho_v[a] != t.rho_w[t.phi[a]] * t.psi) {
      return CheckReport::fail("psi does not intertwine at element " + std::to_string(a));
    }
  }
  return CheckReport::pass();
}

std::vector<std::size_t> cochain_support(const FiniteGroup& g, bool normalized) {
  return support_of(g, normalized).elements;
}

std::size_t group_cochain_dim(const FiniteGroup& g, std::size_t dim_v, std::size_t n, bool normalized) {
  const std::size_t m = normalized ? g.order() - 1 : g.order();
  return sat_mul(dim_v, ipow(m, n));
}

Matrix group_differential(const FiniteGroup& g, std::span<const Matrix> actions, std::size_t n, bool normalized) {
  if (actions.size() != g.order()) throw Error(ErrorKind::Shape, "group action needs one matrix per element");
  const std::size_t dv = actions.empty() ? 0 : actions[0].rows();
  const Support s = support_of(g, normalized);
  const std::size_t m = s.elements.size();
  const std::size_t src = ipow(m, n);
  const std::size_t dst = ipow(m, n + 1);
  Matrix out(dst * dv, src * dv);
  const Matrix id = Matrix::identity(dv);

  std::vector<std::size_t> digits(n + 1);
  std::vector<std::size_t> shorter(n);
  for (std::size_t u = 0; u < dst; ++u) {
    decode(u, m, digits);
    const std::size_t row = u * dv;
    // rho(g_1) f(g_2, ..., g_{n+1})
    out.add_block(row, encode(std::span(digits).subspan(1), m) * dv, actions[s.elements[digits[0]]]);
    // sum_{i=1}^{n} (-1)^i f(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t prod = g.mul(s.elements[digits[i - 1]], s.elements[digits[i]]);
      if (s.position[prod] == npos) continue;
      std::size_t k = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i - 1) {
          shorter[k++] = s.position[prod];
        } else if (j != i) {
          shorter[k++] = digits[j];
        }
      }
      out.add_block(row, encode(shorter, m) * dv, id, Rational(i % 2 == 0 ? 1 : -1));
    }
    // (-1)^{n+1} f(g_1, ..., g_n)
    out.add_block(row, encode(std::span(digits).first(n), m) * dv, id, Rational(n % 2 == 0 ? -1 : 1));
  }
  return out;
}

std::size_t group_cohomology_dim(const FiniteGroup& g, std::span<const Matrix> actions, std::size_t n,
                                 bool normalized) {
  const Matrix d = group_differential(g, actions, n, normalized);
  const std::size_t prev = n == 0 ? 0 : rank(group_differential(g, actions, n - 1, normalized));
  return d.cols() - rank(d) - prev;
}

std::size_t mlg_cochain_dim(const GroupModuleTriple& t, std::size_t n, bool normalized) {
  if (n == 0) return t.dim_v;
  return sat_add(sat_add(group_cochain_dim(t.g, t.dim_v, n, normalized), group_cochain_dim(t.h, t.dim_w, n, normalized)),
                 group_cochain_dim(t.g, t.dim_w, n - 1, normalized));
}

Matrix mlg_differential(const GroupModuleTriple& t, std::size_t n, bool normalized) {
  const std::size_t dv = t.dim_v;
  const std::size_t dw = t.dim_w;
  Matrix out(mlg_cochain_dim(t, n + 1, normalized), mlg_cochain_dim(t, n, normalized));

  const std::size_t rg = group_cochain_dim(t.g, dv, n + 1, normalized);
  const std::size_t re = rg + group_cochain_dim(t.h, dw, n + 1, normalized);

  if (n == 0) {
    out.set_block(0, 0, group_differential(t.g, t.rho_v, 0, normalized));
    out.set_block(rg, 0, group_differential(t.h, t.rho_w, 0, normalized) * t.psi);
    return out;
  }

  const std::size_t cg = group_cochain_dim(t.g, dv, n, normalized);
  const std::size_t ce = cg + group_cochain_dim(t.h, dw, n, normalized);
  out.set_block(0, 0, group_differential(t.g, t.rho_v, n, normalized));
  out.set_block(rg, cg, group_differential(t.h, t.rho_w, n, normalized));

  // eta-slot: psi o Theta - Gamma o Phi^n - delta'''(Lambda)
  const Support sg = support_of(t.g, normalized);
  const Support sh = support_of(t.h, normalized);
  const std::size_t mg = sg.elements.size();
  const std::size_t mh = sh.elements.size();
  const std::size_t tuples = ipow(mg, n);
  out.set_block(re, 0, kron(Matrix::identity(tuples), t.psi));
  const Matrix id = Matrix::identity(dw);
  std::vector<std::size_t> digits(n);
  std::vector<std::size_t> image(n);
  for (std::size_t u = 0; u < tuples; ++u) {
    decode(u, mg, digits);
    bool vanishes = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t pos = sh.position[t.phi[sg.elements[digits[i]]]];
      if (pos == npos) {
        vanishes = true;
        break;
      }
      image[i] = pos;
    }
    if (vanishes) continue;
    out.add_block(re + u * dw, cg + encode(image, mh) * dw, id, Rational(-1));
  }
  std::vector<Matrix> pulled;
  for (std::size_t a = 0; a < t.g.order(); ++a) pulled.push_back(t.rho_w[t.phi[a]]);
  out.add_block(re, ce, group_differential(t.g, pulled, n - 1, normalized), Rational(-1));
  return out;
}

std::size_t mlg_cohomology_dim(const GroupModuleTriple& t, std::size_t n, bool normalized) {
  const Matrix d = mlg_differential(t, n, normalized);
  const std::size_t prev = n == 0 ? 0 : rank(mlg_differential(t, n - 1, normalized));
  return d.cols() - rank(d) - prev;
}

std::vector<MLGRow> mlg_table(const GroupModuleTriple& t, std::size_t max_degree, bool normalized,
                              std::size_t size_ceiling) {
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    const std::size_t dim = mlg_cochain_dim(t, n, normalized);
    if (dim > size_ceiling) {
      throw Error(ErrorKind::SizeCeiling, "cochain space of degree " + std::to_string(n) + " has " +
                                              (dim == npos ? std::string("too many") : std::to_string(dim)) +
                                              " coordinates, above the ceiling of " + std::to_string(size_ceiling));
    }
  }
  std::vector<MLGRow> rows;
  Matrix prev;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const Matrix d = mlg_differential(t, n, normalized);
    if (n > 0 && !(d * prev).is_zero()) {
      throw Error(ErrorKind::Internal, "group differential does not square to zero at degree " + std::to_string(n - 1));
    }
    const std::size_t r = rank(d);
    rows.push_back({n, d.cols(), r, d.cols() - r, prev_rank, d.cols() - r - prev_rank});
    prev_rank = r;
    prev = d;
  }
  return rows;
}

}  // namespace morphcoh
