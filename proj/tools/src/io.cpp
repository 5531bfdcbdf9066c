#include "morphcoh/io.hpp"

#include <fstream>
#include <sstream>

#include "morphcoh/exterior.hpp"

namespace morphcoh::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Parse, path + ": " + msg);
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a name");
  return j.get<std::string>();
}

std::size_t natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) bad(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Matrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a matrix (list of rows)");
  if (j.size() != rows) {
    bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rp = at(path, r);
    if (!row.is_array() || row.size() != cols) bad(rp, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(row[c], at(rp, c));
  }
  return m;
}

Matrix matrix_or_zero(const json& obj, const char* key, std::size_t rows, std::size_t cols, const std::string& path) {
  const json* j = optional_field(obj, key);
  return j ? matrix(*j, rows, cols, at(path, key)) : Matrix(rows, cols);
}

std::vector<Matrix> matrices(const json& j, std::size_t count, std::size_t rows, std::size_t cols,
                             const std::string& path) {
  if (!j.is_array() || j.size() != count) bad(path, "expected a list of " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix(j[i], rows, cols, at(path, i)));
  return out;
}

// Re-raises construction failures with the JSON path prepended.
template <class F>
auto built(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

LieAlgebra algebra(const json& obj, const std::string& path) {
  const std::size_t dim = natural(field(obj, "dim", path), at(path, "dim"));
  std::vector<LieAlgebra::Bracket> brackets;
  if (const json* list = optional_field(obj, "brackets")) {
    const std::string lp = at(path, "brackets");
    if (!list->is_array()) bad(lp, "expected a list of [i, j, coefficients]");
    for (std::size_t k = 0; k < list->size(); ++k) {
      const json& b = (*list)[k];
      const std::string bp = at(lp, k);
      if (!b.is_array() || b.size() != 3) bad(bp, "expected [i, j, coefficients]");
      const std::size_t i = natural(b[0], at(bp, 0)), j = natural(b[1], at(bp, 1));
      if (i < 1 || i > dim || j < 1 || j > dim) bad(bp, "basis labels run from 1 to " + std::to_string(dim));
      const json& cs = b[2];
      if (!cs.is_array() || cs.size() != dim) bad(at(bp, 2), "expected " + std::to_string(dim) + " coefficients");
      std::vector<Rational> coeffs;
      for (std::size_t c = 0; c < dim; ++c) coeffs.push_back(scalar(cs[c], at(at(bp, 2), c)));
      brackets.emplace_back(i - 1, j - 1, std::move(coeffs));
    }
  }
  return built(path, [&] { return LieAlgebra::from_brackets(dim, brackets); });
}

const json& section(const json& root, const char* key) {
  static const json empty = json::object();
  auto it = root.find(key);
  if (it == root.end()) return empty;
  if (!it->is_object()) bad(std::string("/") + key, "expected an object mapping names to entries");
  return *it;
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const char* const kSections[] = {"lie_algebras", "representations", "morphisms",   "morphism_reps",
                                 "cochains",     "groups",          "group_modules", "extensions",
                                 "sh_algebras",  "sh_morphisms",    "sh_twists"};

void load_lie(Document& doc) {
  for (const auto& [name, obj] : section(doc.source, "lie_algebras").items()) {
    const std::string path = "/lie_algebras/" + name;
    require_object(obj, path);
    doc.lie_algebras.emplace(name, algebra(obj, path));
  }
  for (const auto& [name, obj] : section(doc.source, "representations").items()) {
    const std::string path = "/representations/" + name;
    require_object(obj, path);
    const std::string g = text(field(obj, "algebra", path), at(path, "algebra"));
    const LieAlgebra& alg = lookup(doc.lie_algebras, "lie algebra", g);
    const std::size_t dim = natural(field(obj, "dim", path), at(path, "dim"));
    auto acts = matrices(field(obj, "action", path), alg.dim(), dim, dim, at(path, "action"));
    doc.representations.emplace(name, std::pair{g, built(path, [&] { return Representation(alg, dim, acts); })});
  }
  for (const auto& [name, obj] : section(doc.source, "morphisms").items()) {
    const std::string path = "/morphisms/" + name;
    require_object(obj, path);
    const LieAlgebra& g = lookup(doc.lie_algebras, "lie algebra", text(field(obj, "g", path), at(path, "g")));
    const LieAlgebra& h = lookup(doc.lie_algebras, "lie algebra", text(field(obj, "h", path), at(path, "h")));
    const Matrix phi = matrix(field(obj, "phi", path), h.dim(), g.dim(), at(path, "phi"));
    doc.morphisms.emplace(name, built(path, [&] { return MorphismLieAlgebra(g, h, phi); }));
  }
  for (const auto& [name, obj] : section(doc.source, "morphism_reps").items()) {
    const std::string path = "/morphism_reps/" + name;
    require_object(obj, path);
    NamedMorphismRep r{text(field(obj, "morphism", path), at(path, "morphism")),
                       text(field(obj, "v", path), at(path, "v")), text(field(obj, "w", path), at(path, "w")), {}};
    const MorphismLieAlgebra& m = lookup(doc.morphisms, "morphism", r.morphism);
    const Representation& v = lookup(doc.representations, "representation", r.v).second;
    const Representation& w = lookup(doc.representations, "representation", r.w).second;
    const Matrix psi = matrix(field(obj, "psi", path), w.dim(), v.dim(), at(path, "psi"));
    r.rep = built(path, [&] { return MorphismRep(m, v, w, psi); });
    doc.morphism_reps.emplace(name, std::move(r));
  }
  for (const auto& [name, obj] : section(doc.source, "cochains").items()) {
    const std::string path = "/cochains/" + name;
    require_object(obj, path);
    NamedCochain c{text(field(obj, "rep", path), at(path, "rep")), {}};
    const MorphismRep& rep = lookup(doc.morphism_reps, "morphism rep", c.rep).rep;
    const std::size_t n = natural(field(obj, "degree", path), at(path, "degree"));
    const MCochain z = MCochain::zero(rep, n);
    c.cochain.degree = n;
    c.cochain.theta = matrix_or_zero(obj, "theta", z.theta.rows(), z.theta.cols(), path);
    c.cochain.gamma = n == 0 ? z.gamma : matrix_or_zero(obj, "gamma", z.gamma.rows(), z.gamma.cols(), path);
    c.cochain.eta = n == 0 ? z.eta : matrix_or_zero(obj, "eta", z.eta.rows(), z.eta.cols(), path);
    doc.cochains.emplace(name, std::move(c));
  }
}

void load_groups(Document& doc) {
  for (const auto& [name, obj] : section(doc.source, "groups").items()) {
    const std::string path = "/groups/" + name;
    require_object(obj, path);
    if (const json* n = optional_field(obj, "cyclic")) {
      const std::size_t order = natural(*n, at(path, "cyclic"));
      if (order == 0) bad(at(path, "cyclic"), "order must be positive");
      doc.groups.emplace(name, FiniteGroup::cyclic(order));
      continue;
    }
    const std::size_t order = natural(field(obj, "order", path), at(path, "order"));
    const json& t = field(obj, "table", path);
    const std::string tp = at(path, "table");
    if (!t.is_array() || t.size() != order) bad(tp, "expected " + std::to_string(order) + " rows");
    std::vector<std::size_t> table;
    for (std::size_t a = 0; a < order; ++a) {
      if (!t[a].is_array() || t[a].size() != order) bad(at(tp, a), "expected " + std::to_string(order) + " entries");
      for (std::size_t b = 0; b < order; ++b) table.push_back(natural(t[a][b], at(at(tp, a), b)));
    }
    const json* id = optional_field(obj, "identity");
    const std::size_t e = id ? natural(*id, at(path, "identity")) : 0;
    doc.groups.emplace(name, built(path, [&] { return FiniteGroup(order, table, e); }));
  }
  for (const auto& [name, obj] : section(doc.source, "group_modules").items()) {
    const std::string path = "/group_modules/" + name;
    require_object(obj, path);
    GroupModuleTriple t;
    t.g = lookup(doc.groups, "group", text(field(obj, "g", path), at(path, "g")));
    t.h = lookup(doc.groups, "group", text(field(obj, "h", path), at(path, "h")));
    const json& phi = field(obj, "phi", path);
    if (!phi.is_array() || phi.size() != t.g.order()) bad(at(path, "phi"), "expected one image per element of G");
    for (std::size_t a = 0; a < phi.size(); ++a) t.phi.push_back(natural(phi[a], at(at(path, "phi"), a)));
    t.dim_v = natural(field(obj, "dim_v", path), at(path, "dim_v"));
    t.dim_w = natural(field(obj, "dim_w", path), at(path, "dim_w"));
    t.rho_v = matrices(field(obj, "rho_v", path), t.g.order(), t.dim_v, t.dim_v, at(path, "rho_v"));
    t.rho_w = matrices(field(obj, "rho_w", path), t.h.order(), t.dim_w, t.dim_w, at(path, "rho_w"));
    t.psi = matrix(field(obj, "psi", path), t.dim_w, t.dim_v, at(path, "psi"));
    doc.group_modules.emplace(name, std::move(t));
  }
}

void load_extensions(Document& doc) {
  for (const auto& [name, obj] : section(doc.source, "extensions").items()) {
    const std::string path = "/extensions/" + name;
    require_object(obj, path);
    NamedExtension e;
    e.ext.base = lookup(doc.morphisms, "morphism", text(field(obj, "base", path), at(path, "base")));
    e.ext.total = lookup(doc.morphisms, "morphism", text(field(obj, "total", path), at(path, "total")));
    const std::size_t dg = e.ext.base.g().dim(), dh = e.ext.base.h().dim();
    const std::size_t ng = e.ext.total.g().dim(), nh = e.ext.total.h().dim();
    if (ng < dg || nh < dh) bad(path, "total algebras are smaller than the base");
    const std::size_t dv = ng - dg, dw = nh - dh;
    e.ext.psi = matrix(field(obj, "psi", path), dw, dv, at(path, "psi"));
    e.ext.i = matrix(field(obj, "i", path), ng, dv, at(path, "i"));
    e.ext.p = matrix(field(obj, "p", path), dg, ng, at(path, "p"));
    e.ext.ibar = matrix(field(obj, "ibar", path), nh, dw, at(path, "ibar"));
    e.ext.pbar = matrix(field(obj, "pbar", path), dh, nh, at(path, "pbar"));
    if (const json* s = optional_field(obj, "section")) {
      const std::string sp = at(path, "section");
      require_object(*s, sp);
      e.section = std::pair{matrix(field(*s, "s", sp), ng, dg, at(sp, "s")),
                            matrix(field(*s, "sbar", sp), nh, dh, at(sp, "sbar"))};
    }
    doc.extensions.emplace(name, std::move(e));
  }
}

TwoTermSh sh_algebra(const json& obj, const std::string& path) {
  const std::size_t n0 = natural(field(obj, "dim0", path), at(path, "dim0"));
  const std::size_t n1 = natural(field(obj, "dim1", path), at(path, "dim1"));
  json alg = {{"dim", n0}};
  if (const json* b = optional_field(obj, "brackets")) alg["brackets"] = *b;
  const LieAlgebra l2 = algebra(alg, path);
  const Matrix d = matrix_or_zero(obj, "d", n0, n1, path);
  std::vector<Matrix> act(n0, Matrix(n1, n1));
  if (const json* a = optional_field(obj, "action")) act = matrices(*a, n0, n1, n1, at(path, "action"));
  const Matrix l3 = matrix_or_zero(obj, "l3", n1, binomial(n0, 3), path);
  return built(path, [&] { return TwoTermSh(d, l2, act, l3); });
}

void load_sh(Document& doc) {
  for (const auto& [name, obj] : section(doc.source, "sh_algebras").items()) {
    const std::string path = "/sh_algebras/" + name;
    require_object(obj, path);
    doc.sh_algebras.emplace(name, sh_algebra(obj, path));
  }
  for (const auto& [name, obj] : section(doc.source, "sh_morphisms").items()) {
    const std::string path = "/sh_morphisms/" + name;
    require_object(obj, path);
    NamedShMorphism m{text(field(obj, "source", path), at(path, "source")),
                      text(field(obj, "target", path), at(path, "target")), {}};
    const TwoTermSh& g = lookup(doc.sh_algebras, "sh algebra", m.source);
    const TwoTermSh& h = lookup(doc.sh_algebras, "sh algebra", m.target);
    m.phi.phi0 = matrix_or_zero(obj, "phi0", h.dim0(), g.dim0(), path);
    m.phi.phi1 = matrix_or_zero(obj, "phi1", h.dim1(), g.dim1(), path);
    m.phi.phi2 = matrix_or_zero(obj, "phi2", h.dim1(), binomial(g.dim0(), 2), path);
    doc.sh_morphisms.emplace(name, std::move(m));
  }
  for (const auto& [name, obj] : section(doc.source, "sh_twists").items()) {
    const std::string path = "/sh_twists/" + name;
    require_object(obj, path);
    NamedTwist t{text(field(obj, "sh_morphism", path), at(path, "sh_morphism")), {}};
    const NamedShMorphism& m = lookup(doc.sh_morphisms, "sh morphism", t.sh_morphism);
    const TwoTermSh& g = doc.sh_algebras.at(m.source);
    const TwoTermSh& h = doc.sh_algebras.at(m.target);
    t.twist.sigma = matrix_or_zero(obj, "sigma", g.dim1(), binomial(g.dim0(), 2), path);
    t.twist.sigma_p = matrix_or_zero(obj, "sigma_p", h.dim1(), binomial(h.dim0(), 2), path);
    t.twist.phi = matrix_or_zero(obj, "phi", h.dim1(), g.dim0(), path);
    doc.sh_twists.emplace(name, std::move(t));
  }
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  try {
    doc.source = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  if (!doc.source.is_object()) bad("", "a problem document is a JSON object");
  for (const auto& [key, value] : doc.source.items()) {
    bool known = false;
    for (const char* s : kSections) known = known || key == s;
    if (!known) bad("/" + key, "unknown section");
  }
  load_lie(doc);
  load_groups(doc);
  load_extensions(doc);
  load_sh(doc);
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json encode(const Rational& r) { return r.str(); }

json encode(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode_matrices(std::span<const Matrix> ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(encode(m));
  return out;
}

json encode_algebra(const LieAlgebra& g) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Matrix b = g.bracket_basis(i, j);
      if (b.is_zero()) continue;
      json coeffs = json::array();
      for (std::size_t k = 0; k < g.dim(); ++k) coeffs.push_back(b(k, 0).str());
      brackets.push_back(json::array({i + 1, j + 1, coeffs}));
    }
  }
  return {{"dim", g.dim()}, {"brackets", brackets}};
}

json encode_cochain(const std::string& rep, const MCochain& c) {
  json out = {{"rep", rep}, {"degree", c.degree}, {"theta", encode(c.theta)}};
  if (c.degree > 0) {
    out["gamma"] = encode(c.gamma);
    out["eta"] = encode(c.eta);
  }
  return out;
}

json encode_sh(const TwoTermSh& t) {
  json out = {{"dim0", t.dim0()}, {"dim1", t.dim1()}};
  out["d"] = encode(t.d());
  out["brackets"] = encode_algebra(t.l2_00())["brackets"];
  out["action"] = encode_matrices(t.l2_01());
  out["l3"] = encode(t.l3());
  return out;
}

json encode_sh_morphism(const std::string& source, const std::string& target, const ShMorphism& m) {
  return {{"source", source},         {"target", target},         {"phi0", encode(m.phi0)},
          {"phi1", encode(m.phi1)}, {"phi2", encode(m.phi2)}};
}

void insert(json& doc, const std::string& section, const std::string& name, json value) {
  json& s = doc[section];
  if (s.contains(name)) throw Error(ErrorKind::Internal, section + "/" + name + " already exists");
  s[name] = std::move(value);
}

std::string fresh_name(const json& doc, const std::string& section, const std::string& base) {
  auto it = doc.find(section);
  if (it == doc.end() || !it->contains(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string name = base + "_" + std::to_string(k);
    if (!it->contains(name)) return name;
  }
}

}  // namespace morphcoh::io
