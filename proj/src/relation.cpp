#include "esakia/relation.hpp"

namespace esakia {

Relation identity_relation(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation reflexive_transitive_closure(Relation r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_violation(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r(i, j) && r(j, i)) return std::pair{i, j};
  return std::nullopt;
}

bool is_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!r(i, i)) return false;
  if (antisymmetry_violation(r)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (r(j, k) && !r(i, k)) return false;
  return true;
}

Relation cover_relation(const Relation& leq) {
  const std::size_t n = leq.size();
  Relation c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && leq(i, k) && leq(k, j);
      if (!between) c.set(i, j);
    }
  return c;
}

}  // namespace esakia
