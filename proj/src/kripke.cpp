#include "esakia/kripke.hpp"

#include <algorithm>
#include <bit>

#include "esakia/error.hpp"

namespace esakia {

KripkeModel::KripkeModel(KripkeFrame frame, std::vector<std::string> atoms, std::vector<PointSet> truth)
    : frame_(std::move(frame)), atoms_(std::move(atoms)), truth_(std::move(truth)) {
  if (atoms_.size() != truth_.size()) throw Error(ErrorKind::InvalidInput, "valuation does not match atom list");
  const PointSet all = frame_.all();
  for (std::size_t w = 0; w < frame_.size(); ++w) up_.push_back(frame_.up(w));
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].empty()) throw Error(ErrorKind::InvalidInput, "atom names must be nonempty");
    if (std::count(atoms_.begin(), atoms_.end(), atoms_[i]) > 1)
      throw Error(ErrorKind::InvalidInput, "duplicate atom '" + atoms_[i] + "'", {atoms_[i]});
    if (truth_[i] & ~all) throw Error(ErrorKind::InvalidInput, "valuation mentions a world outside the frame");
    for (std::size_t w = 0; w < frame_.size(); ++w)
      if ((truth_[i] >> w & 1) && (up_[w] & ~truth_[i])) {
        const std::size_t u = std::countr_zero(up_[w] & ~truth_[i]);
        throw Error(ErrorKind::NotHereditary,
                    atoms_[i] + " holds at " + frame_.name(w) + " but not at " + frame_.name(u) + " above it",
                    {atoms_[i], frame_.name(w), frame_.name(u)});
      }
  }
}

std::optional<std::size_t> KripkeModel::atom_index(std::string_view name) const {
  const auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t KripkeModel::world(std::string_view name) const {
  if (auto w = frame_.find(name)) return *w;
  throw Error(ErrorKind::UnknownWorld, "no world named '" + std::string(name) + "'", {std::string(name)});
}

PointSet truth_set(const KripkeModel& model, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto i = model.atom_index(f.name());
      if (!i) throw Error(ErrorKind::UnknownAtom, "model has no atom '" + f.name() + "'", {f.name()});
      return model.truth(*i);
    }
    case Formula::Kind::Bottom: return 0;
    case Formula::Kind::And: return truth_set(model, f.left()) & truth_set(model, f.right());
    case Formula::Kind::Or: return truth_set(model, f.left()) | truth_set(model, f.right());
    case Formula::Kind::Implies: {
      const PointSet l = truth_set(model, f.left());
      const PointSet r = truth_set(model, f.right());
      PointSet out = 0;
      for (std::size_t w = 0; w < model.size(); ++w)
        if ((model.up(w) & l & ~r) == 0) out |= PointSet{1} << w;
      return out;
    }
  }
  return 0;
}

bool forces(const KripkeModel& model, std::size_t world, const Formula& f) {
  if (world >= model.size())
    throw Error(ErrorKind::UnknownWorld, "world index " + std::to_string(world) + " out of range",
                {std::to_string(world)});
  return truth_set(model, f) >> world & 1;
}

bool forces(const KripkeModel& model, std::string_view world, const Formula& f) {
  return forces(model, model.world(world), f);
}

bool forces_negation(const KripkeModel& model, std::size_t world, const Formula& f) {
  if (world >= model.size())
    throw Error(ErrorKind::UnknownWorld, "world index " + std::to_string(world) + " out of range",
                {std::to_string(world)});
  return (model.up(world) & truth_set(model, f)) == 0;
}

KripkeModel model_from_system(const ITopSystem& system) {
  const auto rows = p_star(system);
  Relation r(system.size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = 0; y < rows.size(); ++y) r.set(x, y, pointwise_leq(rows[x], rows[y]));
  if (auto clash = antisymmetry_violation(r)) {
    const auto [x, y] = *clash;
    throw Error(ErrorKind::NotAntisymmetric,
                system.point(x) + " and " + system.point(y) + " satisfy the same elements",
                {system.point(x), system.point(y)});
  }
  const auto& algebra = *system.algebra();
  std::vector<std::string> atoms(algebra.names().begin(), algebra.names().end());
  std::vector<PointSet> truth(algebra.size(), 0);
  for (std::size_t x = 0; x < system.size(); ++x)
    for (Elem a = 0; a < algebra.size(); ++a)
      if (system.sat(x, a)) truth[a] |= PointSet{1} << x;
  return KripkeModel(FinitePoset(system.points(), std::move(r)), std::move(atoms), std::move(truth));
}

Validity validates(const KripkeModel& model, const Formula& f) {
  const PointSet refuting = model.frame().all() & ~truth_set(model, f);
  if (refuting == 0) return {};
  return {false, static_cast<std::size_t>(std::countr_zero(refuting))};
}

}  // namespace esakia
