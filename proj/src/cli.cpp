#include "esakia/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "esakia/dot.hpp"
#include "esakia/error.hpp"
#include "esakia/formula.hpp"

namespace esakia::cli {

namespace {

using io::Json;

Json status(bool ok) {
  Json j;
  j["status"] = ok ? "ok" : "fail";
  return j;
}

std::string set_text(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

std::vector<std::string> element_names(const HeytingAlgebra& a, const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(a.name(e));
  return out;
}

Json relation_pairs(std::span<const std::string> names, const Relation& r, bool strict) {
  Json out = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < names.size(); ++k)
      if (r(i, k) && (!strict || i != k)) out.push_back(Json::array({names[i], names[k]}));
  return out;
}

bool input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownElement:
    case ErrorKind::UnknownWorld:
    case ErrorKind::UnknownAtom:
      return true;
    default:
      return false;
  }
}

Report failure(const Error& e) {
  Report r{false, status(false), {}};
  r.data["error"] = std::string(to_string(e.kind()));
  r.data["message"] = e.what();
  r.data["witness"] = e.witness();
  r.text = std::string(e.what()) + "\n";
  return r;
}

// Each verb.

Report validate_lattice(const std::string& path) {
  const Lattice l = build_lattice(io::lattice_spec_from_json(io::read_json_file(path)));
  Report r{true, status(true), {}};
  r.data["lattice"] = io::lattice_to_json(l);
  r.text = "valid bounded distributive lattice with " + std::to_string(l.size()) + " elements: " +
           set_text({l.names().begin(), l.names().end()}) + "\n";
  return r;
}

Report residuate_verb(const std::string& path) {
  const AlgebraRef a = io::algebra_from_json(io::read_json_file(path));
  Report r{true, status(true), {}};
  r.data["algebra"] = io::algebra_to_json(*a);
  std::ostringstream t;
  t << "->";
  for (const auto& n : a->names()) t << '\t' << n;
  t << '\n';
  for (Elem x = 0; x < a->size(); ++x) {
    t << a->name(x);
    for (Elem y = 0; y < a->size(); ++y) t << '\t' << a->name(a->implies(x, y));
    t << '\n';
  }
  r.text = t.str();
  return r;
}

Report spectrum_verb(const std::string& path) {
  const AlgebraRef a = io::algebra_from_json(io::read_json_file(path));
  const SpectrumPoset sp = spectrum(a);
  Report r{true, status(true), {}};
  r.data["spectrum"] = io::spectrum_to_json(sp);
  const FinitePoset p = sp.as_poset();
  r.data["order"] = relation_pairs(p.names(), sp.order, true);
  std::ostringstream t;
  t << sp.size() << " homs\n";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    t << hom_name(i) << ": bits";
    for (bool b : sp.homs[i].bits) t << ' ' << (b ? 1 : 0);
    t << "  filter " << set_text(element_names(*a, sp.homs[i].filter())) << '\n';
  }
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t k = 0; k < sp.size(); ++k)
      if (i != k && sp.order(i, k)) t << hom_name(i) << " R " << hom_name(k) << '\n';
  r.text = t.str();
  return r;
}

Report dualize_verb(const std::string& source, const std::string& target, const std::string& hom) {
  const AlgebraRef b = io::algebra_from_json(io::read_json_file(source));
  const AlgebraRef a = io::algebra_from_json(io::read_json_file(target));
  const HomCandidate f = io::hom_from_json(io::read_json_file(hom), b, a);
  const DualMap d = dualize_hom(f);
  Report r{d.monotone && d.p_morphism, status(d.monotone && d.p_morphism), {}};
  Json map = Json::object();
  std::ostringstream t;
  for (std::size_t v = 0; v < d.map.size(); ++v) {
    map[hom_name(v)] = hom_name(d.map[v]);
    t << hom_name(v) << " -> " << hom_name(d.map[v]) << '\n';
  }
  r.data["map"] = std::move(map);
  r.data["monotone"] = d.monotone;
  r.data["p_morphism"] = d.p_morphism;
  t << "monotone: " << (d.monotone ? "yes" : "no") << "\np-morphism: " << (d.p_morphism ? "yes" : "no") << '\n';
  r.text = t.str();
  return r;
}

Report upset_algebra_verb(const std::string& path) {
  const UpsetAlgebra ua = upset_algebra(io::poset_from_json(io::read_json_file(path)));
  Report r{true, status(true), {}};
  r.data["algebra"] = io::algebra_to_json(*ua.algebra);
  r.text = std::to_string(ua.algebra->size()) + " up-sets: " +
           set_text({ua.algebra->names().begin(), ua.algebra->names().end()}) + "\n";
  return r;
}

Report roundtrip_verb(const std::string& poset_path, const std::string& lattice_path) {
  Report r{true, status(true), {}};
  Json forward = Json::object();
  std::ostringstream t;
  if (!poset_path.empty()) {
    const FinitePoset p = io::poset_from_json(io::read_json_file(poset_path));
    const Isomorphism iso = roundtrip_poset(p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      forward[p.name(x)] = hom_name(iso.forward[x]);
      t << p.name(x) << " -> " << hom_name(iso.forward[x]) << '\n';
    }
    r.data["kind"] = "poset";
    t << "order isomorphism onto the spectrum of the up-set algebra\n";
  } else {
    const AlgebraRef a = io::algebra_from_json(io::read_json_file(lattice_path));
    const Isomorphism iso = roundtrip_algebra(a);
    const UpsetAlgebra dual = upset_algebra(spectrum(a).as_poset());
    for (Elem e = 0; e < a->size(); ++e) {
      forward[a->name(e)] = dual.algebra->name(iso.forward[e]);
      t << a->name(e) << " -> " << dual.algebra->name(iso.forward[e]) << '\n';
    }
    r.data["kind"] = "algebra";
    t << "Heyting isomorphism onto the up-set algebra of the spectrum\n";
  }
  r.data["isomorphism"] = std::move(forward);
  r.text = t.str();
  return r;
}

Report is_forest_verb(const std::string& path) {
  const FinitePoset p = io::poset_from_json(io::read_json_file(path));
  const ForestCheck c = is_forest(p);
  Report r{c.forest, status(c.forest), {}};
  r.data["forest"] = c.forest;
  if (c.witness) {
    const auto [x, y, z] = *c.witness;
    r.data["witness"] = Json::array({p.name(x), p.name(y), p.name(z)});
    r.text = "not a forest: " + p.name(y) + " and " + p.name(z) + " are incomparable above " + p.name(x) + "\n";
  } else {
    r.text = "forest\n";
  }
  return r;
}

Report validate_system_verb(const std::string& path) {
  const auto parts = io::system_parts_from_json(io::read_json_file(path));
  const auto violations = find_axiom_violations(parts.points, *parts.algebra, parts.sat);
  Report r{violations.empty(), status(violations.empty()), {}};
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& v : violations) {
    Json entry;
    entry["clause"] = std::string(to_string(v.clause));
    entry["point"] = parts.points[v.point];
    entry["elements"] = element_names(*parts.algebra, v.elements);
    list.push_back(std::move(entry));
    t << to_string(v.clause) << ": " << describe(parts.points, *parts.algebra, v) << '\n';
  }
  r.data["violations"] = std::move(list);
  r.text = violations.empty() ? "valid I-topological system with " + std::to_string(parts.points.size()) + " points\n"
                              : t.str();
  return r;
}

Report classify_verb(const std::string& path) {
  const ITopSystem s = io::system_from_json(io::read_json_file(path));
  const SystemClassification c = classify_system(s);
  Report r{true, status(true), {}};
  r.data["heyting_algebraic"] = c.heyting_algebraic;
  r.data["goedel_algebraic"] = c.goedel_algebraic;
  r.data["t0"] = c.t0;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  r.text = std::string("heyting algebraic: ") + yn(c.heyting_algebraic) + "\ngoedel algebraic: " +
           yn(c.goedel_algebraic) + "\nT0: " + yn(c.t0) + "\n";
  return r;
}

Report canonical_verb(const std::string& path) {
  const ITopSystem s = canonical_system(io::algebra_from_json(io::read_json_file(path)));
  Report r{true, status(true), {}};
  r.data["system"] = io::system_to_json(s);
  std::ostringstream t;
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::vector<std::string> row;
    for (Elem a = 0; a < s.algebra()->size(); ++a)
      if (s.sat(x, a)) row.push_back(s.algebra()->name(a));
    t << s.point(x) << " |= " << set_text(row) << '\n';
  }
  r.text = t.str();
  return r;
}

Report check_morphism_verb(const std::string& from_path, const std::string& to_path, const std::string& m_path) {
  const ITopSystem from = io::system_from_json(io::read_json_file(from_path));
  const ITopSystem to = io::system_from_json(io::read_json_file(to_path));
  const SystemMorphism m = io::morphism_from_json(io::read_json_file(m_path), from, to);
  const MorphismCheck c = check_morphism(m, from, to);
  Report r{c.ok, status(c.ok), {}};
  Json hom = Json::array(), cont = Json::array();
  std::ostringstream t;
  for (const auto& v : c.hom.violations) {
    hom.push_back(describe(m.f2, v));
    t << "f2 is not a Heyting hom: " << describe(m.f2, v) << '\n';
  }
  for (const auto& v : c.continuity) {
    cont.push_back(Json::array({from.point(v.point), to.algebra()->name(v.element)}));
    t << "continuity fails at point " << from.point(v.point) << ", element " << to.algebra()->name(v.element) << '\n';
  }
  r.data["hom_violations"] = std::move(hom);
  r.data["continuity_violations"] = std::move(cont);
  r.text = c.ok ? "continuous morphism\n" : t.str();
  return r;
}

Report unit_check_verb(const std::string& system_path, const std::string& lattice_path, const std::string& m_path) {
  const ITopSystem s = io::system_from_json(io::read_json_file(system_path));
  const ITopSystem target = canonical_system(io::algebra_from_json(io::read_json_file(lattice_path)));
  const SystemMorphism m = io::morphism_from_json(io::read_json_file(m_path), s, target);
  const TriangleReport rep = unit_and_triangle(s, m);
  const char* uniq = rep.uniqueness == Uniqueness::Unique      ? "unique"
                     : rep.uniqueness == Uniqueness::NotUnique ? "not unique"
                                                               : "not checked";
  const bool ok = rep.commutes && rep.uniqueness != Uniqueness::NotUnique;
  Report r{ok, status(ok), {}};
  r.data["commutes"] = rep.commutes;
  r.data["uniqueness"] = uniq;
  r.data["candidates_checked"] = rep.candidates_checked;
  r.data["unit_is_isomorphism"] = rep.unit_is_isomorphism;
  r.text = std::string("triangle commutes: ") + (rep.commutes ? "yes" : "no") + "\nfactor: " + uniq + " (" +
           std::to_string(rep.candidates_checked) + " candidates)\nunit is an isomorphism: " +
           (rep.unit_is_isomorphism ? "yes" : "no") + "\n";
  return r;
}

Report to_kripke_verb(const std::string& path) {
  const KripkeModel m = model_from_system(io::system_from_json(io::read_json_file(path)));
  Report r{true, status(true), {}};
  r.data["model"] = io::model_to_json(m);
  r.text = r.data["model"].dump(2) + "\n";
  return r;
}

Report eval_verb(const std::string& model_path, const std::string& world, const std::string& text) {
  const KripkeModel m = io::model_from_json(io::read_json_file(model_path));
  const Formula f = parse_formula(text);
  const bool value = forces(m, world, f);
  Report r{value, status(value), {}};
  r.data["world"] = world;
  r.data["formula"] = to_string(f);
  r.data["forces"] = value;
  r.text = (value ? "true" : "false") + std::string("\n");
  return r;
}

Report countermodel_verb(const std::string& text, std::size_t max_size) {
  const Formula f = parse_formula(text);
  const auto found = countermodel_search(f, max_size);
  // ok means "no countermodel", matching a validity check
  Report r{!found, status(!found), {}};
  r.data["formula"] = to_string(f);
  r.data["max_size"] = max_size;
  if (found) {
    r.data["model"] = io::model_to_json(found->model);
    r.data["world"] = found->model.frame().name(found->world);
    r.text = "countermodel refuting at " + found->model.frame().name(found->world) + ":\n" +
             r.data["model"].dump(2) + "\n";
  } else {
    r.text = "no countermodel with at most " + std::to_string(max_size) + " worlds\n";
  }
  return r;
}

Report export_dot_verb(const std::string& path) {
  const Json j = io::read_json_file(path);
  Report r{true, status(true), {}};
  if (j.is_object() && j.contains("elements")) {
    r.text = export_dot(build_lattice(io::lattice_spec_from_json(j)));
  } else if (j.is_object() && j.contains("worlds")) {
    const KripkeModel m = io::model_from_json(j);
    r.text = hasse_dot(m.frame().names(), m.frame().order(), "frame");
  } else {
    r.text = export_dot(io::poset_from_json(j));
  }
  r.data["dot"] = r.text;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Heyting algebras, their spectra, topological systems and Kripke models", "esakia"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to PATH instead of stdout");

  std::function<Report()> action;
  std::string a1, a2, a3, poset_path, lattice_path;
  std::size_t max_size = 4;

  auto one_file = [&](const char* verb, const char* help, Report (*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(verb, help);
    sub->fallthrough();
    sub->add_option("file", a1, "Input file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(a1); }; });
  };
  one_file("validate-lattice", "Check that a lattice file describes a bounded distributive lattice", validate_lattice);
  one_file("residuate", "Print the Heyting implication table", residuate_verb);
  one_file("spectrum", "List the two-valued homs (prime filters) and their order", spectrum_verb);
  one_file("upset-algebra", "Build the Heyting algebra of up-sets of a poset", upset_algebra_verb);
  one_file("is-forest", "Check that every principal up-set of a poset is a chain", is_forest_verb);
  one_file("validate-system", "Check the axioms of an I-topological system", validate_system_verb);
  one_file("classify", "Report whether a system is Heyting/Goedel algebraic and T0", classify_verb);
  one_file("canonical", "Print the canonical system of an algebra", canonical_verb);
  one_file("to-kripke", "Derive the Kripke model of a system", to_kripke_verb);
  one_file("export-dot", "Hasse diagram of a lattice, poset or frame in DOT", export_dot_verb);

  auto* dualize = app.add_subcommand("dualize", "Dual map of a Heyting hom SOURCE -> TARGET");
  dualize->fallthrough();
  dualize->add_option("source", a1)->required();
  dualize->add_option("target", a2)->required();
  dualize->add_option("hom", a3)->required();
  dualize->callback([&] { action = [&] { return dualize_verb(a1, a2, a3); }; });

  auto* roundtrip = app.add_subcommand("roundtrip", "Verify the duality round trip for a poset or an algebra");
  roundtrip->fallthrough();
  auto* rp = roundtrip->add_option("--poset", poset_path);
  auto* rl = roundtrip->add_option("--lattice", lattice_path);
  rp->excludes(rl);
  roundtrip->callback([&] {
    if (poset_path.empty() && lattice_path.empty()) throw CLI::ValidationError("roundtrip needs --poset or --lattice");
    action = [&] { return roundtrip_verb(poset_path, lattice_path); };
  });

  auto* check = app.add_subcommand("check-morphism", "Check a system morphism FROM -> TO");
  check->fallthrough();
  check->add_option("from", a1)->required();
  check->add_option("to", a2)->required();
  check->add_option("morphism", a3)->required();
  check->callback([&] { action = [&] { return check_morphism_verb(a1, a2, a3); }; });

  auto* unit = app.add_subcommand("unit-check", "Factor a morphism into the canonical system of B through the unit");
  unit->fallthrough();
  unit->add_option("system", a1)->required();
  unit->add_option("lattice", a2, "The algebra B")->required();
  unit->add_option("morphism", a3)->required();
  unit->callback([&] { action = [&] { return unit_check_verb(a1, a2, a3); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world of a Kripke model");
  eval->fallthrough();
  eval->add_option("model", a1)->required();
  eval->add_option("world", a2)->required();
  eval->add_option("formula", a3)->required();
  eval->callback([&] { action = [&] { return eval_verb(a1, a2, a3); }; });

  auto* cm = app.add_subcommand("countermodel", "Search for a finite Kripke countermodel");
  cm->fallthrough();
  cm->add_option("formula", a1)->required();
  app.add_option("--max-size", max_size, "Largest frame size for bounded searches")->check(CLI::Range(1, 7));
  cm->callback([&] { action = [&] { return countermodel_verb(a1, max_size); }; });

  std::vector<const char*> argv{"esakia"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    std::ostringstream help;
    app.exit(e, help, err);
    out << help.str();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream ignored;
    app.exit(e, ignored, err);
    return kInputError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  Report report;
  try {
    report = action();
  } catch (const Error& e) {
    if (input_error(e.kind())) {
      err << "input error: " << e.what() << '\n';
      return kInputError;
    }
    report = failure(e);
  }

  const std::string rendered = format == "json" ? report.data.dump(2) + "\n" : report.text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "input error: cannot write " << out_path << '\n';
      return kInputError;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return report.ok ? kOk : kFail;
}

}  // namespace esakia::cli
