#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace esakia {

/// Intuitionistic propositional formula over named atoms with /\, \/, ->
/// and falsum. Negation and verum are sugar: ~p is p -> 0 and 1 is 0 -> 0.
class Formula {
 public:
  enum class Kind { Atom, Bottom, And, Or, Implies };

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula negation(Formula f);

  Kind kind() const noexcept;
  const std::string& name() const;  // atoms only
  const Formula& left() const;      // binary connectives only
  const Formula& right() const;

  bool is_negation() const noexcept;  // p -> 0
  bool is_top() const noexcept;       // 0 -> 0
  std::size_t depth() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest first:
///   imp  := or ("->" imp)?
///   or   := and ("|" and)*
///   and  := unary ("&" unary)*
///   unary:= "~" unary | "(" imp ")" | "0" | "false" | "1" | "true" | ident
/// Throws SyntaxError with the offending byte offset.
Formula parse_formula(std::string_view text);

/// Prints with the parser's precedences and the fewest parentheses, so
/// parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Distinct atom names in f, sorted.
std::vector<std::string> atoms(const Formula& f);

}  // namespace esakia
