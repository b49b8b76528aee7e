#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esakia/duality.hpp"
#include "esakia/hom.hpp"
#include "esakia/lattice.hpp"

namespace esakia {

/// Satisfaction matrix: rows are points, columns algebra elements.
using SatMatrix = std::vector<std::vector<bool>>;

/// A validated I-topological system (X, |=, A). Construct through
/// build_system or canonical_system.
class ITopSystem {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point(std::size_t x) const { return points_.at(x); }
  std::optional<std::size_t> find(std::string_view name) const;
  const AlgebraRef& algebra() const noexcept { return algebra_; }
  bool sat(std::size_t x, Elem a) const { return sat_[x][a]; }
  const SatMatrix& matrix() const noexcept { return sat_; }

 private:
  friend ITopSystem build_system(std::vector<std::string>, AlgebraRef, SatMatrix);

  std::vector<std::string> points_;
  AlgebraRef algebra_;
  SatMatrix sat_;
};

enum class Clause {
  Bottom,       // x |= 0 for no x
  Meet,         // x |= a /\ b iff x |= a and x |= b
  Join,         // x |= a \/ b iff x |= a or x |= b
  Implication,  // x |= a -> b iff every y above x in p* fails a or has b
  Top,          // x |= 1 for every x
};

std::string_view to_string(Clause clause);

struct AxiomViolation {
  Clause clause;
  std::size_t point;
  std::vector<Elem> elements;
};

/// Every failing clause. Implication is only evaluated once all rows are
/// bounded-lattice homs, since it quantifies over their pointwise order.
/// Throws InvalidInput on dimension mismatch.
std::vector<AxiomViolation> find_axiom_violations(const std::vector<std::string>& points,
                                                  const HeytingAlgebra& algebra, const SatMatrix& sat);

std::string describe(const std::vector<std::string>& points, const HeytingAlgebra& algebra,
                     const AxiomViolation& violation);

/// Throws AxiomViolation naming the first failing clause, point and
/// elements; the full list is available from find_axiom_violations.
ITopSystem build_system(std::vector<std::string> points, AlgebraRef algebra, SatMatrix sat);

/// p*(x)(a) = 1 iff x |= a. Throws NotAHom for a row that is not a
/// bounded-lattice hom.
std::vector<TwoValuedHom> p_star(const ITopSystem& system);

struct SystemClassification {
  bool heyting_algebraic = false;  // p* bijective onto the spectrum
  bool goedel_algebraic = false;   // heyting algebraic over a Goedel algebra
  bool t0 = false;                 // distinct points have distinct rows
};

SystemClassification classify_system(const ITopSystem& system);

/// (Hom(A, {0,1}), |=*, A) with v |=* a iff v(a) = 1; points named h0, h1, ...
/// in spectrum order.
ITopSystem canonical_system(const AlgebraRef& algebra);

/// (f1, f2): (X, |=, A) -> (Y, |=', B) with f1: X -> Y and f2: B -> A.
struct SystemMorphism {
  std::vector<std::size_t> f1;
  HomCandidate f2;
};

struct ContinuityViolation {
  std::size_t point;
  Elem element;  // of B
};

struct MorphismCheck {
  bool ok = true;
  HomCheck hom;
  bool typed = true;  // f1 total into Y, f2 from T's algebra to S's algebra
  std::vector<ContinuityViolation> continuity;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks f2 as a Heyting hom and x |= f2(b) iff f1(x) |=' b for all x, b.
MorphismCheck check_morphism(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to);

SystemMorphism identity_morphism(const ITopSystem& system);

/// (g1 o f1, f2 o g2).
SystemMorphism compose(const SystemMorphism& g, const SystemMorphism& f);

/// S(f) = (_ o f, f): canonical_system(A) -> canonical_system(B) for a
/// Heyting hom f: B -> A. Throws NotAHom.
SystemMorphism dual_system_morphism(const HomCandidate& f);

/// eta = (p*, id_A): S -> canonical_system(A).
SystemMorphism unit_morphism(const ITopSystem& system);

/// Both components bijective and the inverse pair continuous.
bool is_isomorphism(const SystemMorphism& m, const ITopSystem& from, const ITopSystem& to);

enum class Uniqueness { Unique, NotUnique, NotChecked };

struct TriangleReport {
  HomCandidate factor;  // f-hat = f2
  bool commutes = false;
  Uniqueness uniqueness = Uniqueness::NotChecked;
  std::size_t candidates_checked = 0;
  bool unit_is_isomorphism = false;
};

/// Factors m: S -> canonical_system(B) as S(f-hat) o eta and checks the
/// factorisation componentwise. Uniqueness of f-hat is checked over every
/// Heyting hom B -> A when both algebras have at most `uniqueness_bound`
/// elements. Throws TriangleFailure with the first disagreeing point or
/// element, NotAHom if m.f2 is not a Heyting hom.
TriangleReport unit_and_triangle(const ITopSystem& system, const SystemMorphism& m,
                                 std::size_t uniqueness_bound = 6);

}  // namespace esakia
