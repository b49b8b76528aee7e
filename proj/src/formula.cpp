#include "esakia/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "esakia/error.hpp"

namespace esakia {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t depth;
};

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidInput, "atom names must be nonempty");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, 0}));
}

Formula Formula::bottom() {
  static const Formula bot(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, 0}));
  return bot;
}

Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::conj(Formula l, Formula r) {
  const std::size_t d = 1 + std::max(l.depth(), r.depth());
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(l), std::move(r)}, d}));
}
Formula Formula::disj(Formula l, Formula r) {
  const std::size_t d = 1 + std::max(l.depth(), r.depth());
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(l), std::move(r)}, d}));
}
Formula Formula::implies(Formula l, Formula r) {
  const std::size_t d = 1 + std::max(l.depth(), r.depth());
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, {std::move(l), std::move(r)}, d}));
}
Formula Formula::negation(Formula f) { return implies(std::move(f), bottom()); }

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
std::size_t Formula::depth() const noexcept { return node_->depth; }

bool Formula::is_negation() const noexcept {
  return kind() == Kind::Implies && right().kind() == Kind::Bottom;
}

bool Formula::is_top() const noexcept { return is_negation() && left().kind() == Kind::Bottom; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom: return a.name() == b.name();
    case Formula::Kind::Bottom: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implies(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    skip_space();
    if (accept("~")) return Formula::negation(unary());
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) throw SyntaxError(pos_, "')'");
      return f;
    }
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      const bool one = text_[pos_++] == '1';
      return one ? Formula::top() : Formula::bottom();
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return Formula::top();
      if (word == "false") return Formula::bottom();
      return Formula::atom(word);
    }
    throw SyntaxError(pos_, "atom, constant, '~' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: -> 1, | 2, & 3, prefix ~ and atoms 4.
int strength(const Formula& f) {
  if (f.kind() == Formula::Kind::Atom || f.kind() == Formula::Kind::Bottom || f.is_negation()) return 4;
  switch (f.kind()) {
    case Formula::Kind::And: return 3;
    case Formula::Kind::Or: return 2;
    default: return 1;
  }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int needed, std::string& out) {
  if (strength(f) < needed) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.name(); return;
    case Formula::Kind::Bottom: out += '0'; return;
    case Formula::Kind::And:
      print_at(f.left(), 3, out);
      out += " & ";
      print_at(f.right(), 4, out);
      return;
    case Formula::Kind::Or:
      print_at(f.left(), 2, out);
      out += " | ";
      print_at(f.right(), 3, out);
      return;
    case Formula::Kind::Implies:
      if (f.is_top()) {
        out += '1';
      } else if (f.is_negation()) {
        out += '~';
        print_at(f.left(), 4, out);
      } else {
        print_at(f.left(), 2, out);
        out += " -> ";
        print_at(f.right(), 1, out);
      }
      return;
  }
}

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.name()); return;
    case Formula::Kind::Bottom: return;
    default:
      collect(f.left(), out);
      collect(f.right(), out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect(f, names);
  return {names.begin(), names.end()};
}

}  // namespace esakia
