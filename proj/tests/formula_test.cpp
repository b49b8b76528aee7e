#include <doctest.h>

#include <random>

#include "esakia/error.hpp"
#include "esakia/formula.hpp"
#include "random_formula.hpp"

using namespace esakia;

namespace {

const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");
const Formula c = Formula::atom("c");

std::size_t error_position(std::string_view text) {
  try {
    parse_formula(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("expected a syntax error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("implication is right associative") {
  CHECK(parse_formula("a -> b -> a") == Formula::implies(a, Formula::implies(b, a)));
  CHECK_FALSE(parse_formula("a -> b -> a") == Formula::implies(Formula::implies(a, b), a));
}

TEST_CASE("negation is sugar for implying falsum") {
  CHECK(parse_formula("a | ~a") == Formula::disj(a, Formula::implies(a, Formula::bottom())));
  CHECK(parse_formula("~a").is_negation());
}

TEST_CASE("precedence: ~ over & over | over ->") {
  CHECK(parse_formula("~a & b | c") == Formula::disj(Formula::conj(Formula::negation(a), b), c));
  CHECK(parse_formula("a | b & c -> c") == Formula::implies(Formula::disj(a, Formula::conj(b, c)), c));
  CHECK(parse_formula("a & b & c") == Formula::conj(Formula::conj(a, b), c));
  CHECK(parse_formula("a | b | c") == Formula::disj(Formula::disj(a, b), c));
  CHECK(parse_formula("~~a") == Formula::negation(Formula::negation(a)));
  CHECK(parse_formula("(a -> b) -> c") == Formula::implies(Formula::implies(a, b), c));
}

TEST_CASE("constants") {
  CHECK(parse_formula("0") == Formula::bottom());
  CHECK(parse_formula("false") == Formula::bottom());
  CHECK(parse_formula("1") == Formula::top());
  CHECK(parse_formula("true") == Formula::top());
  CHECK(parse_formula("1").is_top());
  CHECK(parse_formula("true_ish") == Formula::atom("true_ish"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK(error_position("a &") == 3);
  CHECK(error_position("(a -> b") == 7);
  CHECK(error_position("") == 0);
  CHECK(error_position("a b") == 2);
  CHECK(error_position("a -> ") == 5);
  CHECK(error_position("a - b") == 2);
  try {
    parse_formula("(a");
  } catch (const SyntaxError& e) {
    CHECK(e.expected() == "')'");
    CHECK(e.kind() == ErrorKind::SyntaxError);
  }
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(parse_formula("a -> b -> a")) == "a -> b -> a");
  CHECK(to_string(parse_formula("(a -> b) -> a")) == "(a -> b) -> a");
  CHECK(to_string(parse_formula("((a))")) == "a");
  CHECK(to_string(parse_formula("a & (b & c)")) == "a & (b & c)");
  CHECK(to_string(parse_formula("(a & b) & c")) == "a & b & c");
  CHECK(to_string(parse_formula("~(a | b)")) == "~(a | b)");
  CHECK(to_string(parse_formula("~a & b | c")) == "~a & b | c");
  CHECK(to_string(parse_formula("0 -> 0")) == "1");
  CHECK(to_string(parse_formula("~1")) == "~1");
  CHECK(to_string(parse_formula("(0 -> a) & 0")) == "(0 -> a) & 0");
}

TEST_CASE("parse after print is the identity on random formulas") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = testing::random_formula(rng, 5, {"a", "b", "c"});
    const std::string text = to_string(f);
    CAPTURE(text);
    CHECK(parse_formula(text) == f);
  }
}

TEST_CASE("atoms and depth") {
  const Formula f = parse_formula("(b -> a) | ~c & b");
  CHECK(atoms(f) == std::vector<std::string>{"a", "b", "c"});
  CHECK(atoms(parse_formula("0 -> 1")).empty());
  CHECK(Formula::atom("p").depth() == 0);
  CHECK(parse_formula("a -> b -> c").depth() == 2);
}
