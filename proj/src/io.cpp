#include "esakia/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "esakia/error.hpp"

namespace esakia::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) malformed(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      malformed(std::string(what) + " entries must be [name, name] pairs");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

Json cover_pairs(std::span<const std::string> names, const Relation& leq) {
  const Relation covers = cover_relation(leq);
  Json out = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < names.size(); ++k)
      if (covers(i, k)) out.push_back(Json::array({names[i], names[k]}));
  return out;
}

std::size_t point_index(const ITopSystem& s, const std::string& name) {
  if (auto x = s.find(name)) return *x;
  throw Error(ErrorKind::InvalidInput, "unknown point '" + name + "'", {name});
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

LatticeSpec lattice_spec_from_json(const Json& j) {
  LatticeSpec spec;
  spec.elements = string_list(member(j, "elements"), "elements");
  const bool has_covers = j.contains("covers"), has_leq = j.contains("leq");
  if (has_covers == has_leq) malformed("lattice needs exactly one of \"covers\" or \"leq\"");
  spec.covers = has_covers;
  spec.order = pair_list(j.at(has_covers ? "covers" : "leq"), has_covers ? "covers" : "leq");
  return spec;
}

AlgebraRef algebra_from_json(const Json& j) { return share(residuate(build_lattice(lattice_spec_from_json(j)))); }

Json lattice_to_json(const Lattice& lattice) {
  Json j;
  j["elements"] = Json(std::vector<std::string>(lattice.names().begin(), lattice.names().end()));
  j["covers"] = cover_pairs(lattice.names(), lattice.order());
  return j;
}

Json algebra_to_json(const HeytingAlgebra& algebra) {
  Json j = lattice_to_json(algebra.lattice());
  Json table = Json::array();
  for (Elem a = 0; a < algebra.size(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < algebra.size(); ++b) row.push_back(algebra.name(algebra.implies(a, b)));
    table.push_back(std::move(row));
  }
  j["implies"] = std::move(table);
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  auto names = string_list(member(j, "points"), "points");
  const auto pairs = j.contains("leq") ? pair_list(j.at("leq"), "leq") : decltype(pair_list(j, "")){};
  return FinitePoset::from_pairs(std::move(names), pairs);
}

Json poset_to_json(const FinitePoset& poset) {
  Json j;
  j["points"] = Json(std::vector<std::string>(poset.names().begin(), poset.names().end()));
  j["leq"] = cover_pairs(poset.names(), poset.order());
  return j;
}

Json spectrum_to_json(const SpectrumPoset& spectrum) {
  Json j = poset_to_json(spectrum.as_poset());
  Json homs = Json::object();
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto& h = spectrum.homs[i];
    Json entry;
    Json bits = Json::array();
    for (bool b : h.bits) bits.push_back(b ? 1 : 0);
    entry["bits"] = std::move(bits);
    Json filter = Json::array();
    for (Elem e : h.filter()) filter.push_back(spectrum.algebra->name(e));
    entry["filter"] = std::move(filter);
    homs[hom_name(i)] = std::move(entry);
  }
  j["homs"] = std::move(homs);
  return j;
}

SystemParts system_parts_from_json(const Json& j) {
  SystemParts parts;
  parts.algebra = algebra_from_json(member(j, "lattice"));
  parts.points = string_list(member(j, "points"), "points");
  const Json& sat = member(j, "sat");
  if (!sat.is_object()) malformed("\"sat\" must map points to element lists");
  parts.sat.assign(parts.points.size(), std::vector<bool>(parts.algebra->size(), false));
  for (const auto& [point, elements] : sat.items()) {
    const auto it = std::find(parts.points.begin(), parts.points.end(), point);
    if (it == parts.points.end()) malformed("\"sat\" mentions unknown point '" + point + "'");
    auto& row = parts.sat[static_cast<std::size_t>(it - parts.points.begin())];
    for (const auto& name : string_list(elements, "sat entry")) row[parts.algebra->index(name)] = true;
  }
  return parts;
}

ITopSystem system_from_json(const Json& j) {
  auto parts = system_parts_from_json(j);
  return build_system(std::move(parts.points), std::move(parts.algebra), std::move(parts.sat));
}

Json system_to_json(const ITopSystem& system) {
  Json j;
  j["lattice"] = lattice_to_json(system.algebra()->lattice());
  j["points"] = Json(system.points());
  Json sat = Json::object();
  for (std::size_t x = 0; x < system.size(); ++x) {
    Json row = Json::array();
    for (Elem a = 0; a < system.algebra()->size(); ++a)
      if (system.sat(x, a)) row.push_back(system.algebra()->name(a));
    sat[system.point(x)] = std::move(row);
  }
  j["sat"] = std::move(sat);
  return j;
}

SystemMorphism morphism_from_json(const Json& j, const ITopSystem& from, const ITopSystem& to) {
  const Json& f1 = member(j, "f1");
  if (!f1.is_object()) malformed("\"f1\" must map points to points");
  SystemMorphism m{std::vector<std::size_t>(from.size(), to.size()), {}};
  for (const auto& [x, y] : f1.items()) {
    if (!y.is_string()) malformed("\"f1\" values must be point names");
    m.f1[point_index(from, x)] = point_index(to, y.get<std::string>());
  }
  for (std::size_t x = 0; x < from.size(); ++x)
    if (m.f1[x] == to.size()) malformed("\"f1\" does not map point '" + from.point(x) + "'");
  m.f2 = hom_from_json(Json{{"map", member(j, "f2")}}, to.algebra(), from.algebra());
  return m;
}

Json morphism_to_json(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to) {
  Json j;
  Json f1 = Json::object();
  for (std::size_t x = 0; x < m.f1.size(); ++x) f1[from.point(x)] = to.point(m.f1[x]);
  j["f1"] = std::move(f1);
  Json f2 = Json::object();
  for (Elem b = 0; b < m.f2.map.size(); ++b) f2[m.f2.source->name(b)] = m.f2.target->name(m.f2(b));
  j["f2"] = std::move(f2);
  return j;
}

HomCandidate hom_from_json(const Json& j, const AlgebraRef& source, const AlgebraRef& target) {
  const Json& map = member(j, "map");
  if (!map.is_object()) malformed("hom map must be an object from element to element");
  HomCandidate f{source, target, std::vector<Elem>(source->size(), target->size())};
  for (const auto& [a, b] : map.items()) {
    if (!b.is_string()) malformed("hom map values must be element names");
    f.map[source->index(a)] = target->index(b.get<std::string>());
  }
  for (Elem a = 0; a < source->size(); ++a)
    if (f.map[a] == target->size()) malformed("hom map is not total: missing '" + source->name(a) + "'");
  return f;
}

KripkeModel model_from_json(const Json& j) {
  auto worlds = string_list(member(j, "worlds"), "worlds");
  const auto pairs = j.contains("leq") ? pair_list(j.at("leq"), "leq") : decltype(pair_list(j, "")){};
  FinitePoset frame = FinitePoset::from_pairs(std::move(worlds), pairs);

  std::set<std::string> atom_names;
  if (j.contains("atoms"))
    for (auto& a : string_list(j.at("atoms"), "atoms")) atom_names.insert(std::move(a));
  const Json& val = member(j, "val");
  if (!val.is_object()) malformed("\"val\" must map worlds to atom lists");
  for (const auto& [w, list] : val.items())
    for (auto& a : string_list(list, "val entry")) atom_names.insert(std::move(a));

  std::vector<std::string> atoms(atom_names.begin(), atom_names.end());
  std::vector<PointSet> truth(atoms.size(), 0);
  for (const auto& [w, list] : val.items()) {
    const auto world = frame.find(w);
    if (!world) throw Error(ErrorKind::UnknownWorld, "\"val\" mentions unknown world '" + w + "'", {w});
    for (const auto& a : string_list(list, "val entry")) {
      const auto i = static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
      truth[i] |= PointSet{1} << *world;
    }
  }
  return KripkeModel(std::move(frame), std::move(atoms), std::move(truth));
}

Json model_to_json(const KripkeModel& model) {
  Json j;
  const auto& frame = model.frame();
  j["worlds"] = Json(std::vector<std::string>(frame.names().begin(), frame.names().end()));
  j["leq"] = cover_pairs(frame.names(), frame.order());
  j["atoms"] = Json(model.atoms());
  Json val = Json::object();
  for (std::size_t w = 0; w < model.size(); ++w) {
    Json row = Json::array();
    for (std::size_t a = 0; a < model.atoms().size(); ++a)
      if (model.truth(a) >> w & 1) row.push_back(model.atoms()[a]);
    val[frame.name(w)] = std::move(row);
  }
  j["val"] = std::move(val);
  return j;
}

}  // namespace esakia::io
