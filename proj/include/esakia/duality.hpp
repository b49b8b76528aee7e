#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esakia/hom.hpp"
#include "esakia/lattice.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// A bounded-lattice homomorphism A -> {0,1}, stored as its value on each
/// element of A. Its filter is the set of elements sent to 1.
struct TwoValuedHom {
  AlgebraRef source;
  std::vector<bool> bits;

  bool operator()(Elem a) const { return bits[a]; }
  std::vector<Elem> filter() const;
  HomCandidate as_candidate() const;

  friend bool operator==(const TwoValuedHom& a, const TwoValuedHom& b) { return a.bits == b.bits; }
};

/// Pointwise order: g <= h iff g(a) <= h(a) for every a.
bool pointwise_leq(const TwoValuedHom& g, const TwoValuedHom& h);

/// Hom(A, {0,1}) with the pointwise order R. Homs are sorted
/// lexicographically on their bit vectors and named "h0", "h1", ...
struct SpectrumPoset {
  AlgebraRef algebra;
  std::vector<TwoValuedHom> homs;
  Relation order;

  std::size_t size() const noexcept { return homs.size(); }
  std::optional<std::size_t> find(const std::vector<bool>& bits) const;
  FinitePoset as_poset() const;
};

std::string hom_name(std::size_t i);

/// Enumerates every two-valued bounded-lattice hom of `algebra`. Each
/// corresponds to the principal filter of a join-irreducible element.
SpectrumPoset spectrum(const AlgebraRef& algebra);

/// Filters of spectrum(algebra), same order; each sorted by element index.
std::vector<std::vector<Elem>> prime_filters(const AlgebraRef& algebra);

/// The Heyting algebra of all up-sets of a poset, with `upsets[e]` the
/// point set represented by element e. Element names list the points,
/// e.g. "{}" or "{w0,w1}".
struct UpsetAlgebra {
  FinitePoset base;
  AlgebraRef algebra;
  std::vector<PointSet> upsets;

  std::optional<Elem> element_of(PointSet s) const;
};

/// Builds the lattice of up-sets (union, intersection, empty, all) and the
/// set-theoretic implication U -> V = {x : every y >= x in U is in V},
/// validated against the residuation law.
UpsetAlgebra upset_algebra(const FinitePoset& poset);

/// Mutually inverse index maps between two structures.
struct Isomorphism {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
};

/// a |-> {h : h(a) = 1}, as a Heyting isomorphism from `algebra` onto the
/// up-set algebra of its spectrum. Throws NotIsomorphic.
Isomorphism roundtrip_algebra(const AlgebraRef& algebra);

/// x |-> (U |-> [x in U]), as an order isomorphism from `poset` onto the
/// spectrum of its up-set algebra. Throws NotIsomorphic.
Isomorphism roundtrip_poset(const FinitePoset& poset);

/// The dual of a Heyting hom f: B -> A, the map v |-> v o f from
/// spectrum(A) to spectrum(B).
struct DualMap {
  SpectrumPoset domain;    // spectrum(A)
  SpectrumPoset codomain;  // spectrum(B)
  std::vector<std::size_t> map;
  bool monotone = false;
  /// Back condition: map(v) R w implies some v' with v R v' and map(v') = w.
  bool p_morphism = false;
};

/// Throws NotAHom unless f is a Heyting hom.
DualMap dualize_hom(const HomCandidate& f);

/// v o f for a single two-valued hom v on f's target.
TwoValuedHom precompose(const TwoValuedHom& v, const HomCandidate& f);

}  // namespace esakia
