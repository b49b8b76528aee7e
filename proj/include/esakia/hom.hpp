#pragma once

#include <string>
#include <vector>

#include "esakia/lattice.hpp"

namespace esakia {

enum class HomKind { BoundedLattice, Heyting };

/// A total map between the carriers of two algebras, not yet known to be
/// a homomorphism. `map[a]` is the image of source element `a`.
struct HomCandidate {
  AlgebraRef source;
  AlgebraRef target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
};

/// One failing preservation equation, e.g. law "implication" with
/// arguments (a, 0) for f(a -> 0) != f(a) -> f(0).
struct HomViolation {
  std::string law;
  std::vector<Elem> args;
};

struct HomCheck {
  bool ok = true;
  std::vector<HomViolation> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// Bounded-lattice kind checks meet, join, 0 and 1; Heyting kind also
/// checks implication. Throws InvalidInput when the map is not total.
HomCheck check_hom(const HomCandidate& f, HomKind kind);

/// Renders a violation as the failing equation using element names.
std::string describe(const HomCandidate& f, const HomViolation& violation);

HomCandidate identity_hom(const AlgebraRef& algebra);

/// g after f. Throws InvalidInput when f's target is not g's source.
HomCandidate compose(const HomCandidate& g, const HomCandidate& f);

/// All homomorphisms of the given kind, in lexicographic order of `map`.
std::vector<HomCandidate> enumerate_homs(const AlgebraRef& source, const AlgebraRef& target, HomKind kind);

}  // namespace esakia
