#include "esakia/dot.hpp"

namespace esakia {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string hasse_dot(std::span<const std::string> names, const Relation& leq, std::string_view graph_name) {
  const Relation covers = cover_relation(leq);
  std::string out = "digraph " + quoted(graph_name) + " {\n  rankdir=BT;\n";
  for (const auto& n : names) out += "  " + quoted(n) + ";\n";
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < names.size(); ++k)
      if (covers(i, k)) out += "  " + quoted(names[i]) + " -> " + quoted(names[k]) + ";\n";
  return out + "}\n";
}

std::string export_dot(const Lattice& lattice) { return hasse_dot(lattice.names(), lattice.order(), "lattice"); }

std::string export_dot(const FinitePoset& poset) { return hasse_dot(poset.names(), poset.order(), "poset"); }

}  // namespace esakia
