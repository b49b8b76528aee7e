#include "esakia/hom.hpp"

#include "esakia/error.hpp"

namespace esakia {

namespace {

void require_total(const HomCandidate& f) {
  if (!f.source || !f.target) throw Error(ErrorKind::InvalidInput, "hom candidate lacks an algebra");
  if (f.map.size() != f.source->size())
    throw Error(ErrorKind::InvalidInput, "hom candidate is not total on its source");
  for (Elem v : f.map)
    if (v >= f.target->size()) throw Error(ErrorKind::InvalidInput, "hom candidate maps outside its target");
}

// Checks the laws whose arguments and result all lie below `assigned`
// and that involve the most recently assigned element. Used by the
// backtracking enumeration; completed maps are re-checked in full.
bool consistent(const HeytingAlgebra& s, const HeytingAlgebra& t, const std::vector<Elem>& map,
                std::size_t assigned, HomKind kind) {
  const Elem last = assigned - 1;
  if (last == s.bottom() && map[last] != t.bottom()) return false;
  if (last == s.top() && map[last] != t.top()) return false;
  auto holds = [&](Elem x, Elem y, Elem r, Elem image) {
    if (r >= assigned || (x != last && y != last && r != last)) return true;
    return map[r] == image;
  };
  for (Elem x = 0; x < assigned; ++x)
    for (Elem y = 0; y < assigned; ++y) {
      if (!holds(x, y, s.meet(x, y), t.meet(map[x], map[y]))) return false;
      if (!holds(x, y, s.join(x, y), t.join(map[x], map[y]))) return false;
      if (kind == HomKind::Heyting && !holds(x, y, s.implies(x, y), t.implies(map[x], map[y])))
        return false;
    }
  return true;
}

}  // namespace

HomCheck check_hom(const HomCandidate& f, HomKind kind) {
  require_total(f);
  const auto& s = *f.source;
  const auto& t = *f.target;
  HomCheck result;
  auto fail = [&](std::string law, std::vector<Elem> args) {
    result.ok = false;
    result.violations.push_back({std::move(law), std::move(args)});
  };
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) {
      if (f(s.meet(a, b)) != t.meet(f(a), f(b))) fail("meet", {a, b});
      if (f(s.join(a, b)) != t.join(f(a), f(b))) fail("join", {a, b});
    }
  if (f(s.bottom()) != t.bottom()) fail("bottom", {});
  if (f(s.top()) != t.top()) fail("top", {});
  if (kind == HomKind::Heyting)
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b)
        if (f(s.implies(a, b)) != t.implies(f(a), f(b))) fail("implication", {a, b});
  return result;
}

std::string describe(const HomCandidate& f, const HomViolation& v) {
  const auto& s = *f.source;
  auto n = [&](Elem e) { return s.name(e); };
  if (v.law == "bottom") return "f(" + n(s.bottom()) + ") != 0";
  if (v.law == "top") return "f(" + n(s.top()) + ") != 1";
  const char* op = v.law == "meet" ? " /\\ " : v.law == "join" ? " \\/ " : " -> ";
  const std::string a = n(v.args.at(0)), b = n(v.args.at(1));
  return "f(" + a + op + b + ") != f(" + a + ")" + op + "f(" + b + ")";
}

HomCandidate identity_hom(const AlgebraRef& algebra) {
  HomCandidate id{algebra, algebra, std::vector<Elem>(algebra->size())};
  for (Elem e = 0; e < algebra->size(); ++e) id.map[e] = e;
  return id;
}

HomCandidate compose(const HomCandidate& g, const HomCandidate& f) {
  require_total(f);
  require_total(g);
  if (f.target != g.source && !(*f.target == *g.source))
    throw Error(ErrorKind::InvalidInput, "cannot compose: codomain and domain differ");
  HomCandidate h{f.source, g.target, std::vector<Elem>(f.map.size())};
  for (Elem a = 0; a < f.map.size(); ++a) h.map[a] = g(f(a));
  return h;
}

std::vector<HomCandidate> enumerate_homs(const AlgebraRef& source, const AlgebraRef& target, HomKind kind) {
  std::vector<HomCandidate> found;
  const std::size_t n = source->size();
  const std::size_t m = target->size();
  std::vector<Elem> map(n, 0);
  // Depth-first over element indices with pruning on partial assignments.
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      HomCandidate f{source, target, map};
      if (check_hom(f, kind)) found.push_back(std::move(f));
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      map[depth] = v;
      if (consistent(*source, *target, map, depth + 1, kind)) self(self, depth + 1);
    }
  };
  if (n > 0) extend(extend, 0);
  return found;
}

}  // namespace esakia
