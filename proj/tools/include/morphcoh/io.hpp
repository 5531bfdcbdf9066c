#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "morphcoh/error.hpp"
#include "morphcoh/extensions.hpp"
#include "morphcoh/group_cohomology.hpp"
#include "morphcoh/lie.hpp"
#include "morphcoh/mla_complex.hpp"
#include "morphcoh/sh_lie.hpp"

/// Problem documents: JSON objects whose top-level sections map names to
/// algebraic objects. Basis labels in brackets are 1-based; group elements
/// are 0-based indices into the multiplication table. Scalars are rational
/// strings "p/q" (integers are accepted on input).
namespace morphcoh::io {

using json = nlohmann::ordered_json;

struct NamedMorphismRep {
  std::string morphism, v, w;
  MorphismRep rep;
};

struct NamedCochain {
  std::string rep;
  MCochain cochain;
};

struct NamedExtension {
  AbelianExtension ext;
  std::optional<std::pair<Matrix, Matrix>> section;
};

struct NamedShMorphism {
  std::string source, target;
  ShMorphism phi;
};

struct NamedTwist {
  std::string sh_morphism;
  ShTwist twist;
};

struct Document {
  json source;
  std::map<std::string, LieAlgebra> lie_algebras;
  std::map<std::string, std::pair<std::string, Representation>> representations;
  std::map<std::string, MorphismLieAlgebra> morphisms;
  std::map<std::string, NamedMorphismRep> morphism_reps;
  std::map<std::string, NamedCochain> cochains;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupModuleTriple> group_modules;
  std::map<std::string, NamedExtension> extensions;
  std::map<std::string, TwoTermSh> sh_algebras;
  std::map<std::string, NamedShMorphism> sh_morphisms;
  std::map<std::string, NamedTwist> sh_twists;
};

/// Parses and constructs every object. Syntax errors raise `Parse` with the
/// line and column; malformed values raise `Parse` with a JSON pointer path;
/// dangling names raise `UnknownObject`; construction failures keep their kind.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Looks up `name` in one section, raising `UnknownObject` if absent.
template <class Map>
const typename Map::mapped_type& lookup(const Map& section, const std::string& kind, const std::string& name) {
  auto it = section.find(name);
  if (it == section.end()) throw Error(ErrorKind::UnknownObject, "no " + kind + " named '" + name + "'");
  return it->second;
}

json encode(const Rational& r);
json encode(const Matrix& m);
json encode_matrices(std::span<const Matrix> ms);
json encode_algebra(const LieAlgebra& g);
json encode_cochain(const std::string& rep, const MCochain& c);
json encode_sh(const TwoTermSh& t);
json encode_sh_morphism(const std::string& source, const std::string& target, const ShMorphism& m);

/// Adds `value` under section/name, refusing to overwrite an existing entry.
void insert(json& doc, const std::string& section, const std::string& name, json value);

/// A name based on `base` that is unused in `section`.
std::string fresh_name(const json& doc, const std::string& section, const std::string& base);

}  // namespace morphcoh::io
