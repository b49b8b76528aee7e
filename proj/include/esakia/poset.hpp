#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esakia/relation.hpp"

namespace esakia {

/// Subset of a poset's points, bit i standing for point i.
using PointSet = std::uint64_t;

/// Finite poset with named points kept in input order. In the finite
/// discrete topology every subset is clopen, so this is also the finite
/// Esakia space.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Takes the reflexive-transitive closure of `leq`. Throws NotAPoset,
  /// InvalidInput (duplicate or empty names).
  FinitePoset(std::vector<std::string> names, Relation leq);

  static FinitePoset from_pairs(std::vector<std::string> names,
                                const std::vector<std::pair<std::string, std::string>>& leq);

  std::size_t size() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_(a, b); }
  const Relation& order() const noexcept { return leq_; }

  // The PointSet helpers need size() <= 64.
  PointSet up(std::size_t x) const;
  PointSet down(std::size_t x) const;
  PointSet up_closure(PointSet s) const;
  PointSet down_closure(PointSet s) const;
  bool is_up_set(PointSet s) const { return up_closure(s) == s; }
  PointSet all() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::string> names_;
  Relation leq_;
};

/// Every up-set of `p`, in increasing numeric order of the bitmask.
std::vector<PointSet> up_sets(const FinitePoset& p);

struct ForestCheck {
  bool forest = true;
  /// (x, y, z): y and z lie above x and are incomparable.
  std::optional<std::array<std::size_t, 3>> witness;
};

/// True iff every principal up-set is a chain.
ForestCheck is_forest(const FinitePoset& p);

/// Concrete checks of the finite Esakia/Priestley clauses.
struct EsakiaCheck {
  bool partial_order = false;
  /// x not <= y implies some up-set contains x but not y (checked with up(x)).
  bool priestley_separation = false;
  /// Down-closures of (clopen) subsets are clopen: vacuous in the discrete topology.
  bool down_closure_clopen = true;
  /// Compactness: vacuous for finite spaces.
  bool compact = true;

  bool ok() const { return partial_order && priestley_separation && down_closure_clopen && compact; }
};

EsakiaCheck check_finite_esakia(const FinitePoset& p);

/// Upper-triangular encoding of the strict order under the point order
/// given; the canonical code is the lexicographically smallest such code
/// over all relabellings that keep the order upper triangular.
std::vector<bool> canonical_code(const FinitePoset& p);

/// One representative per isomorphism class of posets on n points (points
/// named "p0".."p{n-1}", naturally labelled), sorted by canonical code.
/// Intended for n <= 7.
std::vector<FinitePoset> enumerate_posets(std::size_t n);

}  // namespace esakia
