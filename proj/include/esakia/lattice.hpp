#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esakia/relation.hpp"

namespace esakia {

/// Index of an element in a finite algebra's canonical order.
using Elem = std::size_t;

/// Input encoding of a finite lattice: named elements and order pairs
/// (x, y) meaning x <= y. With `covers` set the pairs are read as the
/// cover relation; either way the reflexive-transitive closure is taken.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  bool covers = false;
};

/// Finite bounded distributive lattice with precomputed meet and join
/// tables. Elements are indexed by a canonical topological sort of the
/// order, ties broken by name, so index 0 is always the bottom.
class Lattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }

  std::optional<Elem> find(std::string_view name) const;
  /// Throws UnknownElement.
  Elem index(std::string_view name) const;

  bool leq(Elem a, Elem b) const { return leq_(a, b); }
  const Relation& order() const noexcept { return leq_; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend Lattice lattice_from_order(std::vector<std::string> names, Relation leq);

  std::vector<std::string> names_;
  Relation leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Builds and validates a lattice. Errors: NotAPoset, NotALattice,
/// NotBounded, NotDistributive, UnknownElement, InvalidInput.
Lattice build_lattice(const LatticeSpec& spec);

/// Same validation as build_lattice from an explicit order matrix over
/// `names` (need not be closed). Elements are re-indexed canonically.
Lattice lattice_from_order(std::vector<std::string> names, Relation leq);

class HeytingAlgebra {
 public:
  /// Pairs a lattice with an explicit residuum table (row-major, a*n+b)
  /// and checks the residuation law. Throws ResiduationFailure.
  static HeytingAlgebra from_tables(Lattice lattice, std::vector<Elem> residuum);

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  std::span<const std::string> names() const noexcept { return lattice_.names(); }
  const std::string& name(Elem e) const { return lattice_.name(e); }
  std::optional<Elem> find(std::string_view n) const { return lattice_.find(n); }
  Elem index(std::string_view n) const { return lattice_.index(n); }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem implies(Elem a, Elem b) const { return residuum_[a * size() + b]; }
  Elem bottom() const noexcept { return lattice_.bottom(); }
  Elem top() const noexcept { return lattice_.top(); }

  friend bool operator==(const HeytingAlgebra&, const HeytingAlgebra&) = default;

 private:
  HeytingAlgebra(Lattice lattice, std::vector<Elem> residuum)
      : lattice_(std::move(lattice)), residuum_(std::move(residuum)) {}

  Lattice lattice_;
  std::vector<Elem> residuum_;
};

/// Algebras are immutable and shared between homs, spectra and systems.
using AlgebraRef = std::shared_ptr<const HeytingAlgebra>;

inline AlgebraRef share(HeytingAlgebra algebra) {
  return std::make_shared<const HeytingAlgebra>(std::move(algebra));
}

/// a -> b is the join of {c : a /\ c <= b}.
HeytingAlgebra residuate(const Lattice& lattice);

/// a -> 0. Throws UnknownElement.
Elem negation(const HeytingAlgebra& algebra, Elem a);
Elem negation(const HeytingAlgebra& algebra, std::string_view a);

struct PrelinearityCheck {
  bool goedel = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (a -> b) \/ (b -> a) != 1
};

PrelinearityCheck is_goedel(const HeytingAlgebra& algebra);

/// The n-element chain 0 < a < b < ... < 1 (n >= 1; n == 1 is the
/// degenerate algebra with the single element "0").
AlgebraRef chain_algebra(std::size_t n);

/// The two-element Boolean algebra {0, 1}.
const AlgebraRef& two_element_algebra();

}  // namespace esakia
