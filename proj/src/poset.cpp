#include "esakia/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "esakia/error.hpp"

namespace esakia {

FinitePoset::FinitePoset(std::vector<std::string> names, Relation leq) : names_(std::move(names)) {
  if (leq.size() != names_.size()) throw Error(ErrorKind::InvalidInput, "order matrix does not match point count");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidInput, "point names must be nonempty");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidInput, "duplicate point '" + n + "'", {n});
  }
  leq_ = reflexive_transitive_closure(std::move(leq));
  if (auto cycle = antisymmetry_violation(leq_)) {
    const auto [x, y] = *cycle;
    throw Error(ErrorKind::NotAPoset, names_[x] + " <= " + names_[y] + " <= " + names_[x],
                {names_[x], names_[y]});
  }
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names,
                                    const std::vector<std::pair<std::string, std::string>>& leq) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  Relation r(names.size());
  for (const auto& [x, y] : leq) {
    const auto ix = index.find(x), iy = index.find(y);
    if (ix == index.end() || iy == index.end()) {
      const std::string& bad = ix == index.end() ? x : y;
      throw Error(ErrorKind::InvalidInput, "order mentions unknown point '" + bad + "'", {bad});
    }
    r.set(ix->second, iy->second);
  }
  return FinitePoset(std::move(names), std::move(r));
}

std::optional<std::size_t> FinitePoset::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

PointSet FinitePoset::all() const {
  if (size() > 64) throw Error(ErrorKind::InvalidInput, "poset too large for bitmask operations (max 64 points)");
  return size() == 64 ? ~PointSet{0} : (PointSet{1} << size()) - 1;
}

PointSet FinitePoset::up(std::size_t x) const {
  PointSet s = 0;
  for (std::size_t y = 0; y < size(); ++y)
    if (leq_(x, y)) s |= PointSet{1} << y;
  return s;
}

PointSet FinitePoset::down(std::size_t x) const {
  PointSet s = 0;
  for (std::size_t y = 0; y < size(); ++y)
    if (leq_(y, x)) s |= PointSet{1} << y;
  return s;
}

PointSet FinitePoset::up_closure(PointSet s) const {
  PointSet r = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (s >> x & 1) r |= up(x);
  return r;
}

PointSet FinitePoset::down_closure(PointSet s) const {
  PointSet r = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (s >> x & 1) r |= down(x);
  return r;
}

std::vector<PointSet> up_sets(const FinitePoset& p) {
  const std::size_t n = p.size();
  p.all();  // size guard
  // Visit points so that everything above a point comes before it; a point
  // may join the set only once its whole strict up-set is in.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> above(n);
  for (std::size_t x = 0; x < n; ++x) above[x] = std::popcount(p.up(x));
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return above[a] < above[b]; });

  std::vector<PointSet> result;
  auto walk = [&](auto&& self, std::size_t i, PointSet current) -> void {
    if (i == n) {
      result.push_back(current);
      return;
    }
    const std::size_t x = order[i];
    const PointSet strict_up = p.up(x) & ~(PointSet{1} << x);
    self(self, i + 1, current);
    if ((strict_up & ~current) == 0) self(self, i + 1, current | PointSet{1} << x);
  };
  walk(walk, 0, 0);
  std::sort(result.begin(), result.end());
  return result;
}

ForestCheck is_forest(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (p.leq(x, y) && p.leq(x, z) && !p.leq(y, z) && !p.leq(z, y))
          return {false, std::array{x, y, z}};
  return {};
}

EsakiaCheck check_finite_esakia(const FinitePoset& p) {
  EsakiaCheck c;
  c.partial_order = is_partial_order(p.order());
  c.priestley_separation = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!p.leq(x, y)) {
        const PointSet u = p.up(x);
        if (!p.is_up_set(u) || !(u >> x & 1) || (u >> y & 1)) c.priestley_separation = false;
      }
  return c;
}

namespace {

std::vector<bool> code_under(const Relation& leq, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> code;
  code.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code.push_back(leq(perm[i], perm[j]));
  return code;
}

bool natural(const Relation& leq, const std::vector<std::size_t>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (leq(perm[j], perm[i])) return false;
  return true;
}

FinitePoset from_code(std::size_t n, const std::vector<bool>& code) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "p" + std::to_string(i);
  Relation leq = identity_relation(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) leq.set(i, j, code[k++]);
  return FinitePoset(std::move(names), std::move(leq));
}

}  // namespace

std::vector<bool> canonical_code(const FinitePoset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<bool>> best;
  do {
    if (!natural(p.order(), perm)) continue;
    auto code = code_under(p.order(), perm);
    if (!best || code < *best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.value_or(std::vector<bool>{});
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::set<std::vector<bool>> codes;
  // Every poset has a natural labelling, so transitive upper-triangular
  // relations reach every isomorphism class.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<bool> code(pairs);
    for (std::size_t k = 0; k < pairs; ++k) code[k] = (mask >> k) & 1;
    Relation leq = identity_relation(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) leq.set(i, j, code[k++]);
    if (!is_partial_order(leq)) continue;
    codes.insert(canonical_code(from_code(n, code)));
  }
  std::vector<FinitePoset> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_code(n, c));
  return out;
}

}  // namespace esakia
