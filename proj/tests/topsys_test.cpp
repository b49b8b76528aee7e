#include <doctest.h>

#include "corpus.hpp"
#include "esakia/error.hpp"
#include "esakia/topsys.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorKind::InvalidInput, "unreachable");
}

std::vector<ITopSystem> corpus_systems() {
  std::vector<ITopSystem> out;
  for (const auto& a : corpus::algebras(3, 8))
    for (auto& s : corpus::systems_over(a)) out.push_back(std::move(s));
  out.push_back(corpus::two_point_system());
  return out;
}

}  // namespace

TEST_CASE("the two-point system over the 3-chain") {
  const ITopSystem s = corpus::two_point_system();
  const auto& a = *s.algebra();
  const Elem mid = a.index("a");
  const Elem excluded_middle = a.join(mid, negation(a, mid));
  const std::size_t x = *s.find("x"), y = *s.find("y");
  CHECK_FALSE(s.sat(x, excluded_middle));
  CHECK(s.sat(y, excluded_middle));
  CHECK_FALSE(s.sat(x, negation(a, mid)));
}

TEST_CASE("build_system edge cases") {
  SUBCASE("empty point set is valid") {
    CHECK_NOTHROW(build_system({}, corpus::chain3(), {}));
    CHECK_NOTHROW(build_system({}, chain_algebra(1), {}));
  }
  SUBCASE("one point over 2") {
    const AlgebraRef two = two_element_algebra();
    CHECK_NOTHROW(build_system({"x"}, two, {{false, true}}));
    const Error e = error_of([&] { build_system({"x"}, two, {{false, false}}); });
    CHECK(e.kind() == ErrorKind::AxiomViolation);
    CHECK(e.witness() == std::vector<std::string>{"top", "x", "1"});
  }
  SUBCASE("nonempty point set over the one-element algebra") {
    const AlgebraRef trivial = chain_algebra(1);
    CHECK(error_of([&] { build_system({"x"}, trivial, {{false}}); }).kind() == ErrorKind::AxiomViolation);
    CHECK(error_of([&] { build_system({"x"}, trivial, {{true}}); }).kind() == ErrorKind::AxiomViolation);
  }
  SUBCASE("implication clause") {
    // alone, the point with row {1} must satisfy a -> 0 since nothing above it satisfies a
    const AlgebraRef chain = corpus::chain3();
    const auto violations = find_axiom_violations({"x"}, *chain, {{false, false, true}});
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].clause == Clause::Implication);
    CHECK(violations[0].elements == std::vector<Elem>{chain->index("a"), chain->index("0")});
  }
  SUBCASE("meet and join clauses") {
    const AlgebraRef m2 = corpus::diamond();
    // x satisfies x and y but not their meet 0: reported as a meet failure
    std::vector<bool> row(4, false);
    row[m2->index("x")] = row[m2->index("y")] = row[m2->index("1")] = true;
    const auto v = find_axiom_violations({"p"}, *m2, {row});
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].clause == Clause::Meet);

    std::vector<bool> join_row(4, false);
    join_row[m2->index("1")] = true;
    const auto w = find_axiom_violations({"p"}, *m2, {join_row});
    REQUIRE_FALSE(w.empty());
    CHECK(w[0].clause == Clause::Join);
  }
  SUBCASE("dimension mismatch") {
    CHECK(error_of([] { build_system({"x"}, corpus::chain3(), {}); }).kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("p_star") {
  const ITopSystem s = corpus::two_point_system();
  const SpectrumPoset sp = spectrum(s.algebra());
  const auto rows = p_star(s);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == sp.homs[0]);  // x goes to the hom killing a
  CHECK(rows[1] == sp.homs[1]);
  for (const auto& sys : corpus_systems())
    for (const auto& h : p_star(sys)) CHECK(h(sys.algebra()->top()));

  for (const auto& a : corpus::algebras(3, 8)) {
    const ITopSystem c = canonical_system(a);
    const auto hs = p_star(c);
    const SpectrumPoset spa = spectrum(a);
    for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i] == spa.homs[i]);
  }
}

TEST_CASE("classify_system") {
  const SystemClassification two_point = classify_system(corpus::two_point_system());
  CHECK(two_point.heyting_algebraic);
  CHECK(two_point.goedel_algebraic);
  CHECK(two_point.t0);

  const AlgebraRef chain = corpus::chain3();
  const ITopSystem top_only = build_system({"x"}, chain, {{false, true, true}});
  CHECK_FALSE(classify_system(top_only).heyting_algebraic);
  CHECK(classify_system(top_only).t0);

  const ITopSystem twice = build_system({"x", "x2"}, chain, {{false, true, true}, {false, true, true}});
  CHECK_FALSE(classify_system(twice).t0);
  CHECK_FALSE(classify_system(twice).heyting_algebraic);

  // Boolean algebra of the V poset's up-sets is not Goedel
  const ITopSystem v = canonical_system(upset_algebra(corpus::vee()).algebra);
  CHECK(classify_system(v).heyting_algebraic);
  CHECK_FALSE(classify_system(v).goedel_algebraic);
}

TEST_CASE("classification implications hold on every corpus system") {
  for (const auto& s : corpus_systems()) {
    const auto c = classify_system(s);
    if (c.goedel_algebraic) CHECK(c.heyting_algebraic);
    if (c.heyting_algebraic) CHECK(c.t0);
  }
}

TEST_CASE("canonical_system") {
  const ITopSystem two = canonical_system(two_element_algebra());
  REQUIRE(two.size() == 1);
  CHECK(two.matrix()[0] == std::vector<bool>{false, true});

  const ITopSystem chain = canonical_system(corpus::chain3());
  CHECK(chain.matrix() == corpus::two_point_system().matrix());

  CHECK(canonical_system(chain_algebra(1)).size() == 0);

  for (const auto& p : corpus::posets(4)) {
    const AlgebraRef a = upset_algebra(p).algebra;
    const ITopSystem s = canonical_system(a);
    CHECK(find_axiom_violations(s.points(), *a, s.matrix()).empty());
    CHECK(classify_system(s).heyting_algebraic);
    // separation: distinct elements have distinct columns, distinct points distinct rows
    for (Elem e = 0; e < a->size(); ++e)
      for (Elem f = e + 1; f < a->size(); ++f) {
        bool differ = false;
        for (std::size_t x = 0; x < s.size(); ++x) differ = differ || s.sat(x, e) != s.sat(x, f);
        CHECK(differ);
      }
    CHECK(classify_system(s).t0);
  }
}

TEST_CASE("check_morphism") {
  const ITopSystem s = corpus::two_point_system();
  CHECK(check_morphism(identity_morphism(s), s, s).ok);

  const ITopSystem c = canonical_system(s.algebra());
  CHECK(check_morphism(unit_morphism(s), s, c).ok);

  SystemMorphism swapped = identity_morphism(s);
  swapped.f1 = {1, 0};
  const MorphismCheck bad = check_morphism(swapped, s, s);
  CHECK_FALSE(bad.ok);
  REQUIRE_FALSE(bad.continuity.empty());
  CHECK(s.point(bad.continuity[0].point) == "x");
  CHECK(s.algebra()->name(bad.continuity[0].element) == "a");

  SystemMorphism untyped = identity_morphism(s);
  untyped.f1 = {0};
  CHECK_FALSE(check_morphism(untyped, s, s).typed);

  for (const auto& sys : corpus_systems())
    CHECK(check_morphism(unit_morphism(sys), sys, canonical_system(sys.algebra())).ok);
}

TEST_CASE("dual_system_morphism") {
  const AlgebraRef chain = corpus::chain3();
  const AlgebraRef two = two_element_algebra();

  const SystemMorphism id = dual_system_morphism(identity_hom(chain));
  CHECK(id.f1 == std::vector<std::size_t>{0, 1});

  const SystemMorphism m = dual_system_morphism({two, chain, {0, 2}});
  CHECK(m.f1 == std::vector<std::size_t>{0, 0});
  CHECK(check_morphism(m, canonical_system(chain), canonical_system(two)).ok);

  CHECK(error_of([&] { dual_system_morphism({chain, two, {0, 0, 1}}); }).kind() == ErrorKind::NotAHom);
}

TEST_CASE("S and H preserve identities and composites") {
  const std::vector<AlgebraRef> chains{chain_algebra(2), chain_algebra(3), chain_algebra(4)};
  std::size_t checked = 0;
  for (const auto& a : corpus::algebras(3, 5)) {
    const ITopSystem sa = canonical_system(a);
    CHECK(dual_system_morphism(identity_hom(a)).f1 == identity_morphism(sa).f1);
    for (const auto& b : corpus::algebras(3, 5))
      for (const auto& c : chains)
        for (const auto& f : enumerate_homs(a, b, HomKind::Heyting))
          for (const auto& g : enumerate_homs(b, c, HomKind::Heyting)) {
            // S(g o f) = S(f) o S(g), componentwise
            const SystemMorphism lhs = dual_system_morphism(compose(g, f));
            const SystemMorphism rhs = compose(dual_system_morphism(f), dual_system_morphism(g));
            CHECK(lhs.f1 == rhs.f1);
            CHECK(lhs.f2.map == rhs.f2.map);
            CHECK(check_morphism(rhs, canonical_system(c), canonical_system(a)).ok);
            // H is the algebra component
            CHECK(rhs.f2.map == compose(g, f).map);
            ++checked;
          }
  }
  CHECK(checked > 50);
}

TEST_CASE("unit_and_triangle") {
  SUBCASE("canonical system, identity morphism") {
    const AlgebraRef a = corpus::chain3();
    const ITopSystem c = canonical_system(a);
    const TriangleReport r = unit_and_triangle(c, identity_morphism(c));
    CHECK(r.commutes);
    CHECK(r.factor.map == identity_hom(a).map);
    CHECK(r.uniqueness == Uniqueness::Unique);
    CHECK(r.unit_is_isomorphism);
  }
  SUBCASE("the two-point system with its unit") {
    const ITopSystem s = corpus::two_point_system();
    const TriangleReport r = unit_and_triangle(s, unit_morphism(s));
    CHECK(r.commutes);
    CHECK(r.uniqueness == Uniqueness::Unique);
    CHECK(r.unit_is_isomorphism);
  }
  SUBCASE("counit is the identity") {
    for (const auto& a : corpus::algebras(3, 8)) {
      const ITopSystem c = canonical_system(a);
      CHECK(*c.algebra() == *a);
      CHECK(unit_morphism(c).f2.map == identity_hom(a).map);
    }
  }
  SUBCASE("wrong point map") {
    const ITopSystem s = corpus::two_point_system();
    SystemMorphism m = unit_morphism(s);
    m.f1 = {1, 1};
    const Error e = error_of([&] { unit_and_triangle(s, m); });
    CHECK(e.kind() == ErrorKind::TriangleFailure);
    CHECK(e.witness() == std::vector<std::string>{"x"});
  }
  SUBCASE("non-Heyting-algebraic systems: unit is a morphism but not an isomorphism") {
    const AlgebraRef chain = corpus::chain3();
    const ITopSystem top_only = build_system({"x"}, chain, {{false, true, true}});
    CHECK(check_morphism(unit_morphism(top_only), top_only, canonical_system(chain)).ok);
    const TriangleReport r = unit_and_triangle(top_only, unit_morphism(top_only));
    CHECK(r.commutes);
    CHECK_FALSE(r.unit_is_isomorphism);
  }
  SUBCASE("uniqueness is skipped above the bound") {
    const ITopSystem s = corpus::two_point_system();
    CHECK(unit_and_triangle(s, unit_morphism(s), 2).uniqueness == Uniqueness::NotChecked);
  }
}

TEST_CASE("unit is an isomorphism exactly for Heyting algebraic systems") {
  for (const auto& s : corpus_systems()) {
    const SystemMorphism eta = unit_morphism(s);
    const ITopSystem c = canonical_system(s.algebra());
    CHECK(check_morphism(eta, s, c).ok);
    CHECK(is_isomorphism(eta, s, c) == classify_system(s).heyting_algebraic);
  }
}

TEST_CASE("spectra of Goedel algebras are forests") {
  for (const auto& a : corpus::algebras(4, 16))
    if (is_goedel(*a).goedel) CHECK(is_forest(spectrum(a).as_poset()).forest);
}
