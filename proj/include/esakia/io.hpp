#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "esakia/duality.hpp"
#include "esakia/kripke.hpp"
#include "esakia/lattice.hpp"
#include "esakia/topsys.hpp"

/// JSON file formats. Every reader throws Error(InvalidInput) on
/// malformed documents; name lookups throw UnknownElement/UnknownWorld.
/// Writers use a fixed key order so output is byte-stable.
namespace esakia::io {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

/// {"elements": [...], "covers": [[x, y], ...]} or with "leq" instead of
/// "covers"; [x, y] means x <= y.
LatticeSpec lattice_spec_from_json(const Json& j);
AlgebraRef algebra_from_json(const Json& j);
/// Emits the cover form.
Json lattice_to_json(const Lattice& lattice);
/// Lattice plus "implies": rows of element names, row a column b = a -> b.
Json algebra_to_json(const HeytingAlgebra& algebra);

/// {"points": [...], "leq": [[x, y], ...]}; written with cover pairs only.
FinitePoset poset_from_json(const Json& j);
Json poset_to_json(const FinitePoset& poset);

/// Poset format over h0, h1, ... plus "homs": {name: {"bits", "filter"}}.
Json spectrum_to_json(const SpectrumPoset& spectrum);

/// Unvalidated pieces of a system document.
struct SystemParts {
  std::vector<std::string> points;
  AlgebraRef algebra;
  SatMatrix sat;
};

/// {"lattice": <lattice>, "points": [...], "sat": {point: [elements...]}}
SystemParts system_parts_from_json(const Json& j);
ITopSystem system_from_json(const Json& j);
Json system_to_json(const ITopSystem& system);

/// {"f1": {x: y, ...}, "f2": {b: a, ...}} for a morphism from -> to.
SystemMorphism morphism_from_json(const Json& j, const ITopSystem& from, const ITopSystem& to);
Json morphism_to_json(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to);

/// {"map": {a: b, ...}} naming elements of source and target.
HomCandidate hom_from_json(const Json& j, const AlgebraRef& source, const AlgebraRef& target);

/// {"worlds": [...], "leq": [[w, u], ...], "val": {world: [atoms...]}} with
/// an optional "atoms": [...] listing atoms that may be false everywhere.
KripkeModel model_from_json(const Json& j);
Json model_to_json(const KripkeModel& model);

}  // namespace esakia::io
