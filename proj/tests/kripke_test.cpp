#include <doctest.h>

#include <map>
#include <random>

#include "corpus.hpp"
#include "esakia/error.hpp"
#include "esakia/kripke.hpp"
#include "oracles.hpp"
#include "random_formula.hpp"

using namespace esakia;

namespace {

/// Two worlds b < t with p true only at t, plus an atom a true at t.
KripkeModel two_chain() {
  KripkeFrame frame = FinitePoset::from_pairs({"b", "t"}, {{"b", "t"}});
  return KripkeModel(std::move(frame), {"p", "a"}, {0b10, 0b10});
}

bool at(const KripkeModel& m, std::string_view w, std::string_view f) { return forces(m, w, parse_formula(f)); }

}  // namespace

TEST_CASE("forcing on the two-world chain") {
  const KripkeModel m = two_chain();
  CHECK_FALSE(at(m, "b", "p | ~p"));
  CHECK(at(m, "t", "p | ~p"));
  CHECK(at(m, "b", "~~p"));
  CHECK_FALSE(at(m, "b", "p"));
  CHECK_FALSE(at(m, "b", "~p"));
  CHECK(at(m, "b", "~~p -> ~~p"));
  CHECK_FALSE(at(m, "b", "~~p -> p"));
  for (const char* w : {"b", "t"}) {
    CHECK(at(m, w, "1"));
    CHECK_FALSE(at(m, w, "0"));
    CHECK(at(m, w, "a -> a"));
  }
  CHECK(truth_set(m, parse_formula("p -> a")) == 0b11);
}

TEST_CASE("validity reports the least refuting world") {
  const KripkeModel m = two_chain();
  const Validity lem = validates(m, parse_formula("p | ~p"));
  CHECK_FALSE(lem.valid);
  REQUIRE(lem.counter_world);
  CHECK(m.frame().name(*lem.counter_world) == "b");
  CHECK(validates(m, parse_formula("a -> a")).valid);
  CHECK_FALSE(validates(m, parse_formula("~~p -> p")).valid);
  CHECK(validates(m, parse_formula("p -> a -> p")).valid);
}

TEST_CASE("unknown worlds and atoms are reported") {
  const KripkeModel m = two_chain();
  try {
    at(m, "nowhere", "p");
    FAIL("expected UnknownWorld");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownWorld);
  }
  try {
    at(m, "b", "p & q");
    FAIL("expected UnknownAtom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownAtom);
  }
}

TEST_CASE("valuations must be hereditary") {
  KripkeFrame frame = FinitePoset::from_pairs({"b", "t"}, {{"b", "t"}});
  try {
    KripkeModel(frame, {"p"}, {0b01});
    FAIL("expected NotHereditary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHereditary);
    CHECK(e.witness() == std::vector<std::string>{"p", "b", "t"});
  }
  CHECK_THROWS_AS(KripkeModel(frame, {"p"}, {}), Error);
  CHECK_THROWS_AS(KripkeModel(frame, {"p", "p"}, {0, 0}), Error);
}

TEST_CASE("forcing agrees with the clause-by-clause oracle and is hereditary") {
  std::mt19937 rng(11);
  const std::vector<std::string> names{"p", "q", "r"};
  for (int i = 0; i < 400; ++i) {
    const KripkeModel m = testing::random_model(rng, 6, names);
    const Formula f = testing::random_formula(rng, 4, names);
    const PointSet set = truth_set(m, f);
    CAPTURE(to_string(f));
    CHECK(m.frame().is_up_set(set));
    for (std::size_t w = 0; w < m.size(); ++w) {
      CHECK(bool(set >> w & 1) == oracle::forces_naive(m, w, f));
      CHECK(forces_negation(m, w, f) == forces(m, w, Formula::implies(f, Formula::bottom())));
    }
  }
}

TEST_CASE("the model of the two-point system") {
  const KripkeModel m = model_from_system(corpus::two_point_system());
  REQUIRE(m.size() == 2);
  const std::size_t x = m.world("x"), y = m.world("y");
  CHECK(m.frame().leq(x, y));
  CHECK_FALSE(m.frame().leq(y, x));
  CHECK(m.atoms() == std::vector<std::string>{"0", "a", "1"});
  CHECK(m.truth(*m.atom_index("a")) == (PointSet{1} << y));
  CHECK(m.truth(*m.atom_index("1")) == m.frame().all());
  CHECK(m.truth(*m.atom_index("0")) == 0);
}

TEST_CASE("systems with repeated p*-images have no model") {
  for (const auto& a : corpus::algebras(3, 5)) {
    if (a->size() < 2) continue;
    const auto systems = corpus::systems_over(a);
    try {
      model_from_system(systems.back());
      FAIL("expected NotAntisymmetric");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAntisymmetric);
    }
  }
}

TEST_CASE("system satisfaction matches the algebraic value of a formula") {
  std::mt19937 rng(5);
  for (const auto& a : corpus::algebras(3, 5)) {
    const auto systems = corpus::systems_over(a);
    const std::size_t distinct = a->size() < 2 ? systems.size() : systems.size() - 1;
    for (std::size_t s = 0; s < distinct; ++s) {
      const ITopSystem& sys = systems[s];
      const KripkeModel m = model_from_system(sys);
      std::map<std::string, Elem> env;
      for (Elem e = 0; e < a->size(); ++e) env[a->names()[e]] = e;
      for (int i = 0; i < 30; ++i) {
        const Formula f = testing::random_formula(rng, 3, {a->names().begin(), a->names().end()});
        const Elem value = oracle::eval(*a, f, env);
        CAPTURE(to_string(f));
        for (std::size_t x = 0; x < sys.size(); ++x)
          CHECK(forces(m, m.world(sys.point(x)), f) == sys.sat(x, value));
      }
    }
  }
}

TEST_CASE("countermodel search finds the classical tautologies") {
  const auto peirce = countermodel_search(parse_formula("((a -> b) -> a) -> a"), 2);
  REQUIRE(peirce);
  CHECK(peirce->model.size() == 2);
  CHECK_FALSE(forces(peirce->model, peirce->world, parse_formula("((a -> b) -> a) -> a")));

  CHECK_FALSE(countermodel_search(parse_formula("((a -> b) -> a) -> a"), 1));
  CHECK_FALSE(countermodel_search(parse_formula("a -> (b -> a)"), 6));

  const auto falsum = countermodel_search(parse_formula("0"), 1);
  REQUIRE(falsum);
  CHECK(falsum->model.size() == 1);

  const auto wlem = countermodel_search(parse_formula("~a | ~~a"), 3);
  REQUIRE(wlem);
  CHECK(wlem->model.size() == 3);

  CHECK_THROWS_AS(countermodel_search(parse_formula("a"), 0), Error);
  CHECK_THROWS_AS(countermodel_search(parse_formula("a"), 8), Error);
}

TEST_CASE("countermodel search agrees with exhaustive labelled search") {
  const char* formulas[] = {
      "a | ~a",          "~~a -> a",           "~a | ~~a",          "(a -> b) | (b -> a)",
      "~~(a | ~a)",      "(~a -> ~b) -> b -> a", "~(a & b) -> ~a | ~b", "((a -> b) -> a) -> a",
      "a -> b -> a",     "(a -> b -> c) -> (a -> b) -> a -> c",
  };
  for (const char* text : formulas) {
    const Formula f = parse_formula(text);
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(text);
      CAPTURE(n);
      const auto found = countermodel_search(f, n);
      CHECK(found.has_value() == oracle::has_countermodel(f, n));
      if (found) CHECK_FALSE(forces(found->model, found->world, f));
    }
  }
}
