#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esakia/formula.hpp"
#include "esakia/poset.hpp"
#include "esakia/topsys.hpp"

namespace esakia {

/// Worlds partially ordered by accessibility.
using KripkeFrame = FinitePoset;

/// A frame with a hereditary valuation of named atoms. Truth sets are
/// PointSets, so frames are limited to 64 worlds.
class KripkeModel {
 public:
  /// `truth[i]` is the set of worlds where atoms[i] holds. Throws
  /// NotHereditary, InvalidInput.
  KripkeModel(KripkeFrame frame, std::vector<std::string> atoms, std::vector<PointSet> truth);

  const KripkeFrame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return frame_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::optional<std::size_t> atom_index(std::string_view name) const;
  PointSet truth(std::size_t atom) const { return truth_.at(atom); }
  PointSet up(std::size_t w) const { return up_[w]; }
  /// Throws UnknownWorld.
  std::size_t world(std::string_view name) const;

 private:
  KripkeFrame frame_;
  std::vector<std::string> atoms_;
  std::vector<PointSet> truth_;
  std::vector<PointSet> up_;
};

/// Worlds forcing f. Throws UnknownAtom.
PointSet truth_set(const KripkeModel& model, const Formula& f);

/// Throws UnknownWorld, UnknownAtom.
bool forces(const KripkeModel& model, std::size_t world, const Formula& f);
bool forces(const KripkeModel& model, std::string_view world, const Formula& f);

/// The negation clause read directly: no world above `world` forces f.
bool forces_negation(const KripkeModel& model, std::size_t world, const Formula& f);

/// Worlds are the system's points ordered by x R y iff p*(x) <= p*(y);
/// atoms are the algebra's element names with v(x, a) = [x |= a].
/// Throws NotAntisymmetric when two points share a p*-image.
KripkeModel model_from_system(const ITopSystem& system);

struct Validity {
  bool valid = true;
  std::optional<std::size_t> counter_world;  // least refuting world
};

Validity validates(const KripkeModel& model, const Formula& f);

struct Countermodel {
  KripkeModel model;
  std::size_t world;
};

/// Searches frames with 1..max_worlds worlds, one per isomorphism class in
/// enumerate_posets order, and every hereditary valuation of f's atoms.
/// Returns the first refutation found.
std::optional<Countermodel> countermodel_search(const Formula& f, std::size_t max_worlds);

}  // namespace esakia
