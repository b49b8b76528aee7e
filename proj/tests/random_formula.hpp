#pragma once

#include <random>
#include <string>
#include <vector>

#include "esakia/formula.hpp"
#include "esakia/kripke.hpp"

namespace testing {

/// Random formula of depth at most `depth` over the given atoms, with
/// falsum, verum and negation appearing alongside the binary connectives.
inline esakia::Formula random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& atoms) {
  using esakia::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  const int choice = pick(rng);
  if (choice == 0) return Formula::bottom();
  if (choice == 1 && depth > 0) return Formula::top();
  if (choice <= 2) return Formula::atom(atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)]);
  if (choice == 3) return Formula::negation(random_formula(rng, depth - 1, atoms));
  Formula l = random_formula(rng, depth - 1, atoms);
  Formula r = random_formula(rng, depth - 1, atoms);
  if (choice == 4 || choice == 7) return Formula::implies(std::move(l), std::move(r));
  if (choice == 5) return Formula::conj(std::move(l), std::move(r));
  return Formula::disj(std::move(l), std::move(r));
}

/// Random frame on 1..max_worlds worlds: a random relation closed
/// reflexively-transitively after orienting pairs along the world index.
inline esakia::KripkeFrame random_frame(std::mt19937& rng, std::size_t max_worlds) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_worlds)(rng);
  esakia::Relation r(n);
  std::bernoulli_distribution edge(0.35);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) r.set(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  return esakia::KripkeFrame(std::move(names), std::move(r));
}

/// Random hereditary valuation: each atom's truth set is the up-closure of
/// a random set of worlds.
inline esakia::KripkeModel random_model(std::mt19937& rng, std::size_t max_worlds, const std::vector<std::string>& atoms) {
  esakia::KripkeFrame frame = random_frame(rng, max_worlds);
  std::vector<esakia::PointSet> truth;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const esakia::PointSet seed =
        std::uniform_int_distribution<esakia::PointSet>(0, frame.all())(rng) &
        std::uniform_int_distribution<esakia::PointSet>(0, frame.all())(rng);
    truth.push_back(frame.up_closure(seed));
  }
  return esakia::KripkeModel(std::move(frame), atoms, std::move(truth));
}

}  // namespace testing
