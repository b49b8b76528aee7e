#pragma once

#include <span>
#include <string>
#include <string_view>

#include "esakia/lattice.hpp"
#include "esakia/poset.hpp"

namespace esakia {

/// Hasse diagram as a DOT digraph: one node per element in index order,
/// one edge x -> y per cover x < y, drawn bottom to top.
std::string hasse_dot(std::span<const std::string> names, const Relation& leq, std::string_view graph_name);

std::string export_dot(const Lattice& lattice);
std::string export_dot(const FinitePoset& poset);

}  // namespace esakia
