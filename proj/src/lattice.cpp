#include "esakia/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "esakia/error.hpp"

namespace esakia {

namespace {

// Kahn's algorithm over the strict order, choosing the smallest name among
// the ready elements.
std::vector<std::size_t> canonical_sort(const std::vector<std::string>& names, const Relation& leq) {
  const std::size_t n = names.size();
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) ++pending[j];

  auto by_name = [&](std::size_t a, std::size_t b) { return names[a] < names[b]; };
  std::set<std::size_t, decltype(by_name)> ready(by_name);
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.insert(i);

  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t next = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(next);
    for (std::size_t j = 0; j < n; ++j)
      if (j != next && leq(next, j) && --pending[j] == 0) ready.insert(j);
  }
  return order;
}

}  // namespace

std::optional<Elem> Lattice::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

Elem Lattice::index(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "no element named '" + std::string(name) + "'",
              {std::string(name)});
}

Lattice lattice_from_order(std::vector<std::string> names, Relation leq) {
  const std::size_t n = names.size();
  if (leq.size() != n) throw Error(ErrorKind::InvalidInput, "order matrix does not match element count");
  leq = reflexive_transitive_closure(std::move(leq));
  if (auto cycle = antisymmetry_violation(leq)) {
    const auto [x, y] = *cycle;
    throw Error(ErrorKind::NotAPoset, names[x] + " <= " + names[y] + " <= " + names[x],
                {names[x], names[y]});
  }
  if (n == 0) throw Error(ErrorKind::NotBounded, "empty element set has no bottom or top");

  const std::vector<std::size_t> perm = canonical_sort(names, leq);
  Lattice l;
  l.names_.reserve(n);
  for (std::size_t i : perm) l.names_.push_back(names[i]);
  l.leq_ = Relation(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l.leq_.set(i, j, leq(perm[i], perm[j]));

  const auto& order = l.leq_;
  // Greatest element of `candidates` when `greatest_wanted`, else least.
  auto extreme_of = [&](const std::vector<Elem>& candidates, bool greatest_wanted) -> std::optional<Elem> {
    for (Elem c : candidates) {
      bool extreme = true;
      for (Elem d : candidates)
        if (greatest_wanted ? !order(d, c) : !order(c, d)) {
          extreme = false;
          break;
        }
      if (extreme) return c;
    }
    return std::nullopt;
  };

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      std::vector<Elem> lower, upper;
      for (Elem c = 0; c < n; ++c) {
        if (order(c, a) && order(c, b)) lower.push_back(c);
        if (order(a, c) && order(b, c)) upper.push_back(c);
      }
      const auto m = extreme_of(lower, true);
      if (!m)
        throw Error(ErrorKind::NotALattice, l.names_[a] + " and " + l.names_[b] + " have no meet",
                    {l.names_[a], l.names_[b]});
      const auto j = extreme_of(upper, false);
      if (!j)
        throw Error(ErrorKind::NotALattice, l.names_[a] + " and " + l.names_[b] + " have no join",
                    {l.names_[a], l.names_[b]});
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
    }

  std::vector<Elem> all(n);
  for (Elem e = 0; e < n; ++e) all[e] = e;
  const auto bottom = extreme_of(all, false);
  const auto top = extreme_of(all, true);
  if (!bottom || !top) throw Error(ErrorKind::NotBounded, "lattice lacks a bottom or a top");
  l.bottom_ = *bottom;
  l.top_ = *top;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          throw Error(ErrorKind::NotDistributive,
                      l.names_[a] + " /\\ (" + l.names_[b] + " \\/ " + l.names_[c] + ") differs from (" +
                          l.names_[a] + " /\\ " + l.names_[b] + ") \\/ (" + l.names_[a] + " /\\ " +
                          l.names_[c] + ")",
                      {l.names_[a], l.names_[b], l.names_[c]});
  return l;
}

Lattice build_lattice(const LatticeSpec& spec) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    const auto& name = spec.elements[i];
    if (name.empty()) throw Error(ErrorKind::InvalidInput, "element names must be nonempty");
    if (!index.emplace(name, i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element '" + name + "'", {name});
  }
  auto lookup = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end())
      throw Error(ErrorKind::UnknownElement, "order mentions unknown element '" + name + "'", {name});
    return it->second;
  };
  Relation leq(spec.elements.size());
  for (const auto& [x, y] : spec.order) leq.set(lookup(x), lookup(y));
  return lattice_from_order(spec.elements, std::move(leq));
}

HeytingAlgebra HeytingAlgebra::from_tables(Lattice lattice, std::vector<Elem> residuum) {
  const std::size_t n = lattice.size();
  if (residuum.size() != n * n)
    throw Error(ErrorKind::ResiduationFailure, "residuum table has the wrong size");
  for (Elem r : residuum)
    if (r >= n) throw Error(ErrorKind::ResiduationFailure, "residuum table entry out of range");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (lattice.leq(c, residuum[a * n + b]) != lattice.leq(lattice.meet(a, c), b))
          throw Error(ErrorKind::ResiduationFailure,
                      "c <= a -> b disagrees with a /\\ c <= b for a=" + lattice.name(a) +
                          ", b=" + lattice.name(b) + ", c=" + lattice.name(c),
                      {lattice.name(a), lattice.name(b), lattice.name(c)});
  return HeytingAlgebra(std::move(lattice), std::move(residuum));
}

HeytingAlgebra residuate(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<Elem> residuum(n * n, lattice.bottom());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem acc = lattice.bottom();
      for (Elem c = 0; c < n; ++c)
        if (lattice.leq(lattice.meet(a, c), b)) acc = lattice.join(acc, c);
      if (!lattice.leq(lattice.meet(a, acc), b))
        throw Error(ErrorKind::ResiduationFailure,
                    lattice.name(a) + " /\\ (" + lattice.name(a) + " -> " + lattice.name(b) +
                        ") is not below " + lattice.name(b),
                    {lattice.name(a), lattice.name(b)});
      residuum[a * n + b] = acc;
    }
  return HeytingAlgebra::from_tables(lattice, std::move(residuum));
}

Elem negation(const HeytingAlgebra& algebra, Elem a) {
  if (a >= algebra.size())
    throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(a) + " out of range",
                {std::to_string(a)});
  return algebra.implies(a, algebra.bottom());
}

Elem negation(const HeytingAlgebra& algebra, std::string_view a) {
  return negation(algebra, algebra.index(a));
}

PrelinearityCheck is_goedel(const HeytingAlgebra& algebra) {
  for (Elem a = 0; a < algebra.size(); ++a)
    for (Elem b = a + 1; b < algebra.size(); ++b)
      if (algebra.join(algebra.implies(a, b), algebra.implies(b, a)) != algebra.top())
        return {false, std::pair{a, b}};
  return {};
}

AlgebraRef chain_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NotBounded, "a chain needs at least one element");
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) {
    // a, b, ..., z, a1, b1, ...
    std::string name(1, static_cast<char>('a' + (i - 1) % 26));
    if (i > 26) name += std::to_string((i - 1) / 26);
    names.push_back(name);
  }
  if (n > 1) names.push_back("1");
  Relation leq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq.set(i, j);
  return share(residuate(lattice_from_order(std::move(names), std::move(leq))));
}

const AlgebraRef& two_element_algebra() {
  static const AlgebraRef two = chain_algebra(2);
  return two;
}

}  // namespace esakia
