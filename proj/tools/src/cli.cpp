#include "morphcoh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "morphcoh/io.hpp"
#include "morphcoh/random_instances.hpp"

namespace morphcoh::cli {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Shape:
    case ErrorKind::Validation: return kCheckFailed;
    case ErrorKind::Parse: return kParse;
    case ErrorKind::UnknownObject: return kUnknownObject;
    case ErrorKind::SubspaceViolation:
    case ErrorKind::RotaBaxterViolation:
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::NotASubalgebra:
    case ErrorKind::NotPreserved:
    case ErrorKind::NotACocycle:
    case ErrorKind::NotASection:
    case ErrorKind::NotSimplyCohomologous: return kPrecondition;
    case ErrorKind::SizeCeiling: return kSizeCeiling;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string name;
  std::optional<std::size_t> max_degree;
  bool simple = false;
  bool as_json = false;
  bool group = false;
  bool normalized = false;
  std::size_t size_ceiling = default_size_ceiling;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t count = 20;
};

void report(std::ostream& out, const std::string& object, const CheckReport& r) {
  out << (r.ok ? "[PASS] " : "[FAIL] ") << object;
  if (!r.ok) out << ": " << r.violation;
  out << '\n';
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::size_t>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& h : header) width.push_back(h.size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], std::to_string(row[c]).size());
  }
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "  " : "") << std::setw(int(width[c])) << header[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << std::setw(int(width[c])) << row[c];
    out << '\n';
  }
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << doc.dump(2) << '\n';
  if (!f) throw Error(ErrorKind::Internal, "cannot write " + path);
}

std::string algebra_of(const io::Document& doc, const std::string& morphism, const char* side) {
  return doc.source.at("morphisms").at(morphism).at(side).get<std::string>();
}

json representation_entry(const std::string& algebra, const Representation& r) {
  return {{"algebra", algebra}, {"dim", r.dim()}, {"action", io::encode_matrices(r.actions())}};
}

int cmd_check(const io::Document& doc, std::ostream& out) {
  bool all = true;
  auto line = [&](const std::string& object, const CheckReport& r) {
    all = all && r.ok;
    report(out, object, r);
  };
  for (const auto& [n, g] : doc.lie_algebras) line("lie_algebras/" + n, check_jacobi(g));
  for (const auto& [n, r] : doc.representations) line("representations/" + n, check_representation(r.second));
  for (const auto& [n, m] : doc.morphisms) line("morphisms/" + n, check_morphism_lie_algebra(m));
  for (const auto& [n, r] : doc.morphism_reps) line("morphism_reps/" + n, check_morphism_rep_full(r.rep));
  for (const auto& [n, c] : doc.cochains) {
    const bool closed = apply_differential(doc.morphism_reps.at(c.rep).rep, c.cochain) ==
                        MCochain::zero(doc.morphism_reps.at(c.rep).rep, c.cochain.degree + 1);
    line("cochains/" + n + (closed ? " (cocycle)" : " (not a cocycle)"), CheckReport::pass());
  }
  for (const auto& [n, g] : doc.groups) line("groups/" + n, CheckReport::pass());
  for (const auto& [n, t] : doc.group_modules) line("group_modules/" + n, check_group_module_triple(t));
  for (const auto& [n, e] : doc.extensions) {
    CheckReport r = check_extension(e.ext);
    if (r.ok && e.section) {
      const auto& [s, sbar] = *e.section;
      if (e.ext.p * s != Matrix::identity(s.cols()) || e.ext.pbar * sbar != Matrix::identity(sbar.cols())) {
        r = CheckReport::fail("the given section does not split p and pbar");
      }
    }
    line("extensions/" + n, r);
  }
  for (const auto& [n, t] : doc.sh_algebras) line("sh_algebras/" + n, check_two_term_sh(t));
  for (const auto& [n, m] : doc.sh_morphisms) {
    line("sh_morphisms/" + n, check_sh_morphism(doc.sh_algebras.at(m.source), doc.sh_algebras.at(m.target), m.phi));
  }
  for (const auto& [n, t] : doc.sh_twists) {
    const auto& m = doc.sh_morphisms.at(t.sh_morphism);
    line("sh_twists/" + n,
         check_skeletal({doc.sh_algebras.at(m.source), doc.sh_algebras.at(m.target), m.phi}));
  }
  return all ? kOk : kCheckFailed;
}

int cmd_cohomology(const io::Document& doc, const Options& o, std::ostream& out) {
  std::vector<std::string> header{"degree", "dim C", "rank", "dim Z", "dim B"};
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> h, hs;
  json result = {{"object", o.name}};
  if (o.group) {
    if (o.simple) throw UsageError("--simple applies to morphism representations only");
    const GroupModuleTriple& t = io::lookup(doc.group_modules, "group module", o.name);
    require(check_group_module_triple(t), ErrorKind::Validation, "group module '" + o.name + "'");
    const std::size_t max = o.max_degree.value_or(2);
    for (const MLGRow& r : mlg_table(t, max, o.normalized, o.size_ceiling)) {
      rows.push_back({r.degree, r.cochain_dim, r.rank, r.cocycle_dim, r.coboundary_dim, r.cohomology_dim});
      h.push_back(r.cohomology_dim);
    }
    header.push_back("dim H");
    result["complex"] = o.normalized ? "mlg-normalized" : "mlg";
  } else {
    const MorphismRep& rep = io::lookup(doc.morphism_reps, "morphism rep", o.name).rep;
    require(check_morphism_rep_full(rep), ErrorKind::Validation, "morphism rep '" + o.name + "'");
    const std::size_t max =
        o.max_degree.value_or(std::min(rep.base().g().dim(), rep.base().h().dim()) + 1);
    for (const MLARow& r : mla_table(rep, max)) {
      std::vector<std::size_t> row{r.degree, r.cochain_dim, r.rank, r.cocycle_dim, r.coboundary_dim};
      if (o.simple) row.push_back(r.simple_coboundary_dim);
      row.push_back(r.cohomology_dim);
      if (o.simple) row.push_back(r.simple_cohomology_dim);
      rows.push_back(std::move(row));
      h.push_back(r.cohomology_dim);
      hs.push_back(r.simple_cohomology_dim);
    }
    if (o.simple) header.push_back("dim Bs");
    header.push_back("dim H");
    if (o.simple) header.push_back("dim Hs");
    result["complex"] = "mla";
  }

  if (o.as_json) {
    json table = json::array();
    for (const auto& row : rows) {
      json entry = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) entry[header[c]] = row[c];
      table.push_back(std::move(entry));
    }
    result["rows"] = std::move(table);
    result["H"] = h;
    if (o.simple) result["Hs"] = hs;
    out << result.dump(2) << '\n';
    return kOk;
  }
  print_table(out, header, rows);
  auto list = [&](const char* label, const std::vector<std::size_t>& v) {
    out << label << ':';
    for (auto x : v) out << ' ' << x;
    out << '\n';
  };
  list("H", h);
  if (o.simple) list("Hs", hs);
  return kOk;
}

int cmd_extend(const io::Document& doc, const Options& o, std::ostream& out) {
  const io::NamedCochain& c = io::lookup(doc.cochains, "cochain", o.name);
  const io::NamedMorphismRep& r = doc.morphism_reps.at(c.rep);
  require(check_morphism_rep_full(r.rep), ErrorKind::Validation, "morphism rep '" + c.rep + "'");
  const AbelianExtension ext = build_extension(r.rep, c.cochain);
  const auto [s, sbar] = canonical_section(ext);

  json result = doc.source;
  const std::string base = io::fresh_name(result, "extensions", o.name + "_ext");
  const std::string g = io::fresh_name(result, "lie_algebras", base + "_g");
  const std::string h = io::fresh_name(result, "lie_algebras", base + "_h");
  const std::string m = io::fresh_name(result, "morphisms", base + "_phi");
  io::insert(result, "lie_algebras", g, io::encode_algebra(ext.total.g()));
  io::insert(result, "lie_algebras", h, io::encode_algebra(ext.total.h()));
  io::insert(result, "morphisms", m, {{"g", g}, {"h", h}, {"phi", io::encode(ext.total.phi())}});
  io::insert(result, "extensions", base,
             {{"base", r.morphism},
              {"total", m},
              {"psi", io::encode(ext.psi)},
              {"i", io::encode(ext.i)},
              {"p", io::encode(ext.p)},
              {"ibar", io::encode(ext.ibar)},
              {"pbar", io::encode(ext.pbar)},
              {"section", {{"s", io::encode(s)}, {"sbar", io::encode(sbar)}}}});
  emit(result, o.output, out);
  return kOk;
}

int cmd_extract(const io::Document& doc, const Options& o, std::ostream& out) {
  const io::NamedExtension& e = io::lookup(doc.extensions, "extension", o.name);
  require(check_extension(e.ext), ErrorKind::Validation, "extension '" + o.name + "'");
  const auto section = e.section ? *e.section : canonical_section(e.ext);
  const ExtractedCocycle x = extract_cocycle(e.ext, section.first, section.second);

  const std::string morphism = doc.source.at("extensions").at(o.name).at("base").get<std::string>();
  json result = doc.source;
  const std::string v = io::fresh_name(result, "representations", o.name + "_V");
  const std::string w = io::fresh_name(result, "representations", o.name + "_W");
  const std::string rep = io::fresh_name(result, "morphism_reps", o.name + "_rep");
  const std::string cochain = io::fresh_name(result, "cochains", o.name + "_cocycle");
  io::insert(result, "representations", v, representation_entry(algebra_of(doc, morphism, "g"), x.rep.v()));
  io::insert(result, "representations", w, representation_entry(algebra_of(doc, morphism, "h"), x.rep.w()));
  io::insert(result, "morphism_reps", rep,
             {{"morphism", morphism}, {"v", v}, {"w", w}, {"psi", io::encode(x.rep.psi())}});
  io::insert(result, "cochains", cochain, io::encode_cochain(rep, x.cocycle));
  emit(result, o.output, out);
  return kOk;
}

int cmd_sh_verify(const io::Document& doc, const Options& o, std::ostream& out) {
  if (auto it = doc.sh_algebras.find(o.name); it != doc.sh_algebras.end()) {
    const CheckReport r = check_two_term_sh(it->second);
    report(out, "sh_algebras/" + o.name + " axioms (i)-(v)", r);
    return r.ok ? kOk : kCheckFailed;
  }
  const io::NamedShMorphism& m = io::lookup(doc.sh_morphisms, "sh algebra or sh morphism", o.name);
  const TwoTermSh& g = doc.sh_algebras.at(m.source);
  const TwoTermSh& h = doc.sh_algebras.at(m.target);
  const CheckReport rg = check_two_term_sh(g), rh = check_two_term_sh(h), rm = check_sh_morphism(g, h, m.phi);
  report(out, "sh_algebras/" + m.source + " axioms (i)-(v)", rg);
  report(out, "sh_algebras/" + m.target + " axioms (i)-(v)", rh);
  report(out, "sh_morphisms/" + o.name + " conditions (i)-(iv)", rm);
  const bool skeletal = g.d().is_zero() && h.d().is_zero();
  out << "skeletal: " << (skeletal ? "yes" : "no") << '\n';
  return rg.ok && rh.ok && rm.ok ? kOk : kCheckFailed;
}

void insert_skeletal(json& doc, const std::string& base, const SkeletalMorphismSh& s) {
  const std::string name = io::fresh_name(doc, "sh_morphisms", base);
  const std::string g = io::fresh_name(doc, "sh_algebras", name + "_g");
  const std::string h = io::fresh_name(doc, "sh_algebras", name + "_h");
  io::insert(doc, "sh_algebras", g, io::encode_sh(s.g));
  io::insert(doc, "sh_algebras", h, io::encode_sh(s.h));
  io::insert(doc, "sh_morphisms", name, io::encode_sh_morphism(g, h, s.phi));
}

int cmd_sh_from_cocycle(const io::Document& doc, const Options& o, std::ostream& out) {
  const io::NamedCochain& c = io::lookup(doc.cochains, "cochain", o.name);
  const MorphismRep& rep = doc.morphism_reps.at(c.rep).rep;
  require(check_morphism_rep_full(rep), ErrorKind::Validation, "morphism rep '" + c.rep + "'");
  json result = doc.source;
  insert_skeletal(result, o.name + "_sh", triple_to_skeletal(rep, c.cochain));
  emit(result, o.output, out);
  return kOk;
}

int cmd_sh_to_triple(const io::Document& doc, const Options& o, std::ostream& out) {
  const io::NamedShMorphism& m = io::lookup(doc.sh_morphisms, "sh morphism", o.name);
  const ShTriple t = skeletal_to_triple({doc.sh_algebras.at(m.source), doc.sh_algebras.at(m.target), m.phi});
  const MorphismRep& rep = t.rep;

  json result = doc.source;
  const std::string base = o.name + "_triple";
  const std::string g0 = io::fresh_name(result, "lie_algebras", base + "_g0");
  const std::string h0 = io::fresh_name(result, "lie_algebras", base + "_h0");
  const std::string phi = io::fresh_name(result, "morphisms", base + "_phi0");
  const std::string g1 = io::fresh_name(result, "representations", base + "_g1");
  const std::string h1 = io::fresh_name(result, "representations", base + "_h1");
  const std::string r = io::fresh_name(result, "morphism_reps", base);
  const std::string c = io::fresh_name(result, "cochains", base + "_cocycle");
  io::insert(result, "lie_algebras", g0, io::encode_algebra(rep.base().g()));
  io::insert(result, "lie_algebras", h0, io::encode_algebra(rep.base().h()));
  io::insert(result, "morphisms", phi, {{"g", g0}, {"h", h0}, {"phi", io::encode(rep.base().phi())}});
  io::insert(result, "representations", g1, representation_entry(g0, rep.v()));
  io::insert(result, "representations", h1, representation_entry(h0, rep.w()));
  io::insert(result, "morphism_reps", r, {{"morphism", phi}, {"v", g1}, {"w", h1}, {"psi", io::encode(rep.psi())}});
  io::insert(result, "cochains", c, io::encode_cochain(r, t.cocycle));
  emit(result, o.output, out);
  return kOk;
}

int cmd_sh_twist(const io::Document& doc, const Options& o, std::ostream& out) {
  const io::NamedTwist& t = io::lookup(doc.sh_twists, "sh twist", o.name);
  const io::NamedShMorphism& m = doc.sh_morphisms.at(t.sh_morphism);
  const SkeletalMorphismSh s{doc.sh_algebras.at(m.source), doc.sh_algebras.at(m.target), m.phi};
  require(check_skeletal(s), ErrorKind::Validation, "sh morphism '" + t.sh_morphism + "'");
  json result = doc.source;
  insert_skeletal(result, o.name + "_twisted", twist_equivalence(s, t.twist));
  emit(result, o.output, out);
  return kOk;
}

json rep_document(const MorphismRep& rep, const MCochain& c) {
  json d = json::object();
  io::insert(d, "lie_algebras", "g", io::encode_algebra(rep.base().g()));
  io::insert(d, "lie_algebras", "h", io::encode_algebra(rep.base().h()));
  io::insert(d, "representations", "V", representation_entry("g", rep.v()));
  io::insert(d, "representations", "W", representation_entry("h", rep.w()));
  io::insert(d, "morphisms", "phi", {{"g", "g"}, {"h", "h"}, {"phi", io::encode(rep.base().phi())}});
  io::insert(d, "morphism_reps", "rep", {{"morphism", "phi"}, {"v", "V"}, {"w", "W"}, {"psi", io::encode(rep.psi())}});
  io::insert(d, "cochains", "c", io::encode_cochain("rep", c));
  return d;
}

int cmd_property(const Options& o, std::ostream& out) {
  random::Rng rng(o.seed);
  struct Tally {
    const char* name;
    std::size_t passed = 0;
  };
  Tally square{"mLA differential squares to zero (degrees 0-2)"};
  Tally extension{"extension build/extract round trip"};
  Tally sh{"skeletal sh round trip"};
  Tally document{"document encode/parse round trip"};
  Tally group{"mLG differential squares to zero (degrees 0-1)"};

  for (std::size_t k = 0; k < o.count; ++k) {
    const MorphismRep rep = random::morphism_rep(rng);
    bool ok = true;
    for (std::size_t n = 0; n <= 2; ++n) ok = ok && (mla_differential(rep, n + 1) * mla_differential(rep, n)).is_zero();
    square.passed += ok;

    const MCochain c2 = random::cocycle(rng, rep, 2);
    const AbelianExtension ext = build_extension(rep, c2);
    const auto [s, sbar] = canonical_section(ext);
    const ExtractedCocycle x = extract_cocycle(ext, s, sbar);
    extension.passed += check_extension(ext).ok && x.rep == rep && x.cocycle == c2;

    const MCochain c3 = random::cocycle(rng, rep, 3);
    const SkeletalMorphismSh sk = triple_to_skeletal(rep, c3);
    const ShTriple back = skeletal_to_triple(sk);
    sh.passed += check_skeletal(sk).ok && back.rep == rep && back.cocycle == c3;

    const io::Document parsed = io::parse_document(rep_document(rep, c2).dump());
    document.passed += parsed.morphism_reps.at("rep").rep == rep && parsed.cochains.at("c").cochain == c2;

    const GroupModuleTriple t = random::group_module_triple(rng);
    bool gok = true;
    for (std::size_t n = 0; n <= 1; ++n) {
      for (bool normalized : {false, true}) {
        gok = gok && (mlg_differential(t, n + 1, normalized) * mlg_differential(t, n, normalized)).is_zero();
      }
    }
    group.passed += gok;
  }

  bool all = true;
  for (const Tally* t : {&square, &extension, &sh, &document, &group}) {
    const bool ok = t->passed == o.count;
    all = all && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << t->name << ": " << t->passed << '/' << o.count << '\n';
  }
  out << "seed " << o.seed << '\n';
  return all ? kOk : kCheckFailed;
}

void add_cohomology_options(CLI::App* c, Options& o, bool lie) {
  c->add_option("file", o.file, "Problem document")->required();
  c->add_option("name", o.name, lie ? "Morphism representation (or group module with --group)" : "Group module")
      ->required();
  c->add_option("--max-degree", o.max_degree, "Highest degree (default min(dim g, dim h)+1, or 2 for groups)");
  c->add_flag("--json", o.as_json, "Emit the table as JSON");
  c->add_flag("--normalized", o.normalized, "Use the normalized subcomplex (group mode)");
  c->add_option("--size-ceiling", o.size_ceiling, "Largest group cochain space allowed")
      ->capture_default_str();
}

CLI::App* add_document_command(CLI::App& parent, const char* name, const char* help, const char* object,
                               Options& o, bool writes) {
  CLI::App* c = parent.add_subcommand(name, help);
  c->add_option("file", o.file, "Problem document")->required();
  c->add_option("name", o.name, object)->required();
  if (writes) c->add_option("-o,--output", o.output, "Write the resulting document here instead of stdout");
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cohomology of morphism Lie algebras and their representations", "morphcoh"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Run every invariant check on the objects of a document");
  check->add_option("file", o.file, "Problem document")->required();

  CLI::App* coh = app.add_subcommand("cohomology", "Per-degree cohomology table");
  add_cohomology_options(coh, o, true);
  coh->add_flag("--simple", o.simple, "Also report simple coboundaries and simple cohomology");
  coh->add_flag("--group", o.group, "Treat NAME as a group module triple");

  CLI::App* scoh = app.add_subcommand("simple-cohomology", "Cohomology table with simple coboundaries");
  scoh->add_option("file", o.file, "Problem document")->required();
  scoh->add_option("name", o.name, "Morphism representation")->required();
  scoh->add_option("--max-degree", o.max_degree, "Highest degree (default min(dim g, dim h)+1)");
  scoh->add_flag("--json", o.as_json, "Emit the table as JSON");

  CLI::App* extend = add_document_command(app, "extend", "Build the abelian extension of a 2-cocycle",
                                          "Cochain of degree 2", o, true);
  CLI::App* extract = add_document_command(app, "extract", "Extract the 2-cocycle of an abelian extension",
                                           "Extension", o, true);

  CLI::App* sh = app.add_subcommand("sh", "Skeletal sh Lie algebras and their morphisms");
  sh->require_subcommand(1);
  CLI::App* verify = add_document_command(*sh, "verify", "Check the axioms of an sh algebra or sh morphism",
                                          "sh algebra or sh morphism", o, false);
  CLI::App* from = add_document_command(*sh, "from-cocycle", "Skeletal sh morphism of a 3-cocycle",
                                        "Cochain of degree 3", o, true);
  CLI::App* to = add_document_command(*sh, "to-triple", "Morphism rep and 3-cocycle of a skeletal sh morphism",
                                      "sh morphism", o, true);
  CLI::App* twist =
      add_document_command(*sh, "twist", "Apply an equivalence twist to a skeletal sh morphism", "sh twist", o, true);

  CLI::App* group = app.add_subcommand("group", "Finite group analogues");
  group->require_subcommand(1);
  CLI::App* gcoh = group->add_subcommand("cohomology", "Per-degree cohomology table of a group module triple");
  add_cohomology_options(gcoh, o, false);

  CLI::App* property = app.add_subcommand("property", "Randomized consistency checks");
  property->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  property->add_option("--count", o.count, "Number of random instances")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*property) return cmd_property(o, out);
    const io::Document doc = io::load_document(o.file);
    if (*check) return cmd_check(doc, out);
    if (*coh) return cmd_cohomology(doc, o, out);
    if (*scoh) {
      o.simple = true;
      return cmd_cohomology(doc, o, out);
    }
    if (*gcoh) {
      o.group = true;
      return cmd_cohomology(doc, o, out);
    }
    if (*extend) return cmd_extend(doc, o, out);
    if (*extract) return cmd_extract(doc, o, out);
    if (*verify) return cmd_sh_verify(doc, o, out);
    if (*from) return cmd_sh_from_cocycle(doc, o, out);
    if (*to) return cmd_sh_to_triple(doc, o, out);
    if (*twist) return cmd_sh_twist(doc, o, out);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error [InternalError]: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace morphcoh::cli
