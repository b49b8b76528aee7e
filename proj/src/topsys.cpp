#include "esakia/topsys.hpp"

#include <algorithm>

#include "esakia/error.hpp"

namespace esakia {

std::optional<std::size_t> ITopSystem::find(std::string_view name) const {
  const auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::Bottom: return "bottom";
    case Clause::Meet: return "meet";
    case Clause::Join: return "join";
    case Clause::Implication: return "implication";
    case Clause::Top: return "top";
  }
  return "?";
}

namespace {

bool row_leq(const std::vector<bool>& x, const std::vector<bool>& y) {
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] && !y[a]) return false;
  return true;
}

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) { return a == b || (a && b && *a == *b); }

}  // namespace

std::vector<AxiomViolation> find_axiom_violations(const std::vector<std::string>& points,
                                                  const HeytingAlgebra& algebra, const SatMatrix& sat) {
  if (sat.size() != points.size()) throw Error(ErrorKind::InvalidInput, "sat matrix has the wrong number of rows");
  for (const auto& row : sat)
    if (row.size() != algebra.size()) throw Error(ErrorKind::InvalidInput, "sat row has the wrong number of columns");

  const std::size_t n = algebra.size();
  std::vector<AxiomViolation> out;
  for (std::size_t x = 0; x < points.size(); ++x) {
    const auto& row = sat[x];
    if (row[algebra.bottom()]) out.push_back({Clause::Bottom, x, {algebra.bottom()}});
    if (!row[algebra.top()]) out.push_back({Clause::Top, x, {algebra.top()}});
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        if (row[algebra.meet(a, b)] != (row[a] && row[b])) out.push_back({Clause::Meet, x, {a, b}});
        if (row[algebra.join(a, b)] != (row[a] || row[b])) out.push_back({Clause::Join, x, {a, b}});
      }
  }
  if (!out.empty()) return out;

  for (std::size_t x = 0; x < points.size(); ++x)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        bool expected = true;
        for (std::size_t y = 0; y < points.size() && expected; ++y)
          if (row_leq(sat[x], sat[y])) expected = !sat[y][a] || sat[y][b];
        if (sat[x][algebra.implies(a, b)] != expected) out.push_back({Clause::Implication, x, {a, b}});
      }
  return out;
}

std::string describe(const std::vector<std::string>& points, const HeytingAlgebra& algebra,
                     const AxiomViolation& v) {
  const std::string& x = points.at(v.point);
  auto n = [&](std::size_t i) { return algebra.name(v.elements.at(i)); };
  switch (v.clause) {
    case Clause::Bottom: return x + " satisfies " + n(0);
    case Clause::Top: return x + " does not satisfy " + n(0);
    case Clause::Meet: return x + ": meet clause fails for " + n(0) + " /\\ " + n(1);
    case Clause::Join: return x + ": join clause fails for " + n(0) + " \\/ " + n(1);
    case Clause::Implication: return x + ": implication clause fails for " + n(0) + " -> " + n(1);
  }
  return x;
}

ITopSystem build_system(std::vector<std::string> points, AlgebraRef algebra, SatMatrix sat) {
  if (!algebra) throw Error(ErrorKind::InvalidInput, "system needs an algebra");
  const auto violations = find_axiom_violations(points, *algebra, sat);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::vector<std::string> witness{std::string(to_string(v.clause)), points[v.point]};
    for (Elem e : v.elements) witness.push_back(algebra->name(e));
    throw Error(ErrorKind::AxiomViolation, describe(points, *algebra, v), std::move(witness));
  }
  ITopSystem s;
  s.points_ = std::move(points);
  s.algebra_ = std::move(algebra);
  s.sat_ = std::move(sat);
  return s;
}

std::vector<TwoValuedHom> p_star(const ITopSystem& system) {
  std::vector<TwoValuedHom> out;
  for (std::size_t x = 0; x < system.size(); ++x) {
    TwoValuedHom h{system.algebra(), system.matrix()[x]};
    if (!check_hom(h.as_candidate(), HomKind::BoundedLattice))
      throw Error(ErrorKind::NotAHom, "row of " + system.point(x) + " is not a bounded-lattice hom",
                  {system.point(x)});
    out.push_back(std::move(h));
  }
  return out;
}

SystemClassification classify_system(const ITopSystem& system) {
  SystemClassification c;
  const auto rows = p_star(system);
  c.t0 = true;
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = x + 1; y < rows.size(); ++y)
      if (rows[x] == rows[y]) c.t0 = false;

  const SpectrumPoset sp = spectrum(system.algebra());
  std::vector<bool> hit(sp.size(), false);
  bool bijective = rows.size() == sp.size();
  for (const auto& h : rows) {
    const auto i = sp.find(h.bits);
    if (!i || hit[*i]) {
      bijective = false;
      break;
    }
    hit[*i] = true;
  }
  c.heyting_algebraic = bijective;
  c.goedel_algebraic = bijective && is_goedel(*system.algebra()).goedel;
  return c;
}

ITopSystem canonical_system(const AlgebraRef& algebra) {
  const SpectrumPoset sp = spectrum(algebra);
  std::vector<std::string> points;
  SatMatrix sat;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    points.push_back(hom_name(i));
    sat.push_back(sp.homs[i].bits);
  }
  return build_system(std::move(points), algebra, std::move(sat));
}

MorphismCheck check_morphism(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to) {
  MorphismCheck r;
  r.typed = m.f1.size() == from.size() && std::all_of(m.f1.begin(), m.f1.end(), [&](auto y) { return y < to.size(); }) &&
            same_algebra(m.f2.source, to.algebra()) && same_algebra(m.f2.target, from.algebra()) &&
            m.f2.map.size() == to.algebra()->size();
  if (!r.typed) {
    r.ok = false;
    return r;
  }
  r.hom = check_hom(m.f2, HomKind::Heyting);
  for (std::size_t x = 0; x < from.size(); ++x)
    for (Elem b = 0; b < to.algebra()->size(); ++b)
      if (from.sat(x, m.f2(b)) != to.sat(m.f1[x], b)) r.continuity.push_back({x, b});
  r.ok = r.hom.ok && r.continuity.empty();
  return r;
}

SystemMorphism identity_morphism(const ITopSystem& system) {
  SystemMorphism m{std::vector<std::size_t>(system.size()), identity_hom(system.algebra())};
  for (std::size_t x = 0; x < system.size(); ++x) m.f1[x] = x;
  return m;
}

SystemMorphism compose(const SystemMorphism& g, const SystemMorphism& f) {
  SystemMorphism h{std::vector<std::size_t>(f.f1.size()), compose(f.f2, g.f2)};
  for (std::size_t x = 0; x < f.f1.size(); ++x) h.f1[x] = g.f1.at(f.f1[x]);
  return h;
}

SystemMorphism dual_system_morphism(const HomCandidate& f) {
  const DualMap d = dualize_hom(f);
  return SystemMorphism{d.map, f};
}

SystemMorphism unit_morphism(const ITopSystem& system) {
  const SpectrumPoset sp = spectrum(system.algebra());
  SystemMorphism eta{{}, identity_hom(system.algebra())};
  for (const auto& h : p_star(system)) eta.f1.push_back(sp.find(h.bits).value());
  return eta;
}

bool is_isomorphism(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to) {
  if (!check_morphism(m, from, to)) return false;
  if (m.f1.size() != to.size() || m.f2.map.size() != m.f2.target->size()) return false;
  SystemMorphism inverse{std::vector<std::size_t>(to.size(), to.size()),
                         HomCandidate{m.f2.target, m.f2.source, std::vector<Elem>(m.f2.map.size(), m.f2.map.size())}};
  for (std::size_t x = 0; x < m.f1.size(); ++x) {
    if (inverse.f1[m.f1[x]] != to.size()) return false;
    inverse.f1[m.f1[x]] = x;
  }
  for (Elem b = 0; b < m.f2.map.size(); ++b) {
    if (inverse.f2.map[m.f2(b)] != m.f2.map.size()) return false;
    inverse.f2.map[m.f2(b)] = b;
  }
  return static_cast<bool>(check_morphism(inverse, to, from));
}

TriangleReport unit_and_triangle(const ITopSystem& system, const SystemMorphism& m, std::size_t uniqueness_bound) {
  const AlgebraRef& a = system.algebra();
  const AlgebraRef& b = m.f2.source;
  if (!b || !same_algebra(m.f2.target, a))
    throw Error(ErrorKind::InvalidInput, "morphism's algebra map does not end at the system's algebra");
  if (m.f1.size() != system.size()) throw Error(ErrorKind::InvalidInput, "morphism's point map is not total");

  const ITopSystem canonical_a = canonical_system(a);
  const SystemMorphism eta = unit_morphism(system);

  auto factor_through = [&](const HomCandidate& g) { return compose(dual_system_morphism(g), eta); };

  TriangleReport report;
  report.factor = m.f2;
  const SystemMorphism composite = factor_through(m.f2);
  for (std::size_t x = 0; x < system.size(); ++x)
    if (composite.f1[x] != m.f1[x])
      throw Error(ErrorKind::TriangleFailure,
                  "point " + system.point(x) + " goes to " + hom_name(m.f1[x]) + " but the factorisation gives " +
                      hom_name(composite.f1[x]),
                  {system.point(x)});
  for (Elem e = 0; e < b->size(); ++e)
    if (composite.f2(e) != m.f2(e))
      throw Error(ErrorKind::TriangleFailure, "algebra components disagree at " + b->name(e), {b->name(e)});
  report.commutes = true;
  report.unit_is_isomorphism = is_isomorphism(eta, system, canonical_a);

  if (a->size() <= uniqueness_bound && b->size() <= uniqueness_bound) {
    report.uniqueness = Uniqueness::Unique;
    for (const auto& g : enumerate_homs(b, a, HomKind::Heyting)) {
      ++report.candidates_checked;
      if (g.map == m.f2.map) continue;
      const SystemMorphism other = factor_through(g);
      if (other.f1 == m.f1 && other.f2.map == m.f2.map) report.uniqueness = Uniqueness::NotUnique;
    }
  }
  return report;
}

}  // namespace esakia
