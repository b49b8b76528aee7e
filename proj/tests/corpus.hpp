#pragma once

// Shared finite test data: algebras from up-sets of small posets, and
// valid I-topological systems over them.

#include <string>
#include <vector>

#include "esakia/duality.hpp"
#include "esakia/lattice.hpp"
#include "esakia/poset.hpp"
#include "esakia/topsys.hpp"

namespace corpus {

using namespace esakia;

inline AlgebraRef algebra(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> covers) {
  return share(residuate(build_lattice({std::move(elements), std::move(covers), true})));
}

inline AlgebraRef chain3() { return chain_algebra(3); }

/// 0 < x, y < 1 with x, y incomparable.
inline AlgebraRef diamond() { return algebra({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}); }

/// Up-sets of the poset with one bottom below two incomparable tops.
inline FinitePoset vee() {
  return FinitePoset::from_pairs({"b", "t1", "t2"}, {{"b", "t1"}, {"b", "t2"}});
}

/// Every poset with at most `max_points` points, one per isomorphism class.
inline std::vector<FinitePoset> posets(std::size_t max_points) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 0; n <= max_points; ++n)
    for (auto& p : enumerate_posets(n)) out.push_back(std::move(p));
  return out;
}

/// Up-set algebras of all posets with at most `max_points` points, keeping
/// those with at most `max_size` elements, plus chains up to `max_size`.
inline std::vector<AlgebraRef> algebras(std::size_t max_points, std::size_t max_size) {
  std::vector<AlgebraRef> out;
  for (std::size_t n = 1; n <= max_size; ++n) out.push_back(chain_algebra(n));
  for (const auto& p : posets(max_points)) {
    auto ua = upset_algebra(p);
    if (ua.algebra->size() <= max_size) out.push_back(ua.algebra);
  }
  return out;
}

/// The two-point system over the 3-chain: x satisfies only 1, y satisfies a and 1.
inline ITopSystem two_point_system() {
  auto a = chain3();
  const Elem zero = a->index("0"), mid = a->index("a"), one = a->index("1");
  SatMatrix sat(2, std::vector<bool>(3, false));
  sat[0][one] = true;
  sat[1][mid] = sat[1][one] = true;
  (void)zero;
  return build_system({"x", "y"}, a, sat);
}

/// Valid systems over `a`: the canonical one, every nonempty up-closed
/// subset of spectrum points, and the canonical one with its first point
/// duplicated.
inline std::vector<ITopSystem> systems_over(const AlgebraRef& a) {
  std::vector<ITopSystem> out;
  const SpectrumPoset sp = spectrum(a);
  out.push_back(canonical_system(a));
  if (sp.size() == 0 || sp.size() > 16) return out;
  const FinitePoset p = sp.as_poset();
  for (PointSet s : up_sets(p)) {
    if (s == 0 || s == p.all()) continue;
    std::vector<std::string> points;
    SatMatrix sat;
    for (std::size_t i = 0; i < sp.size(); ++i)
      if (s >> i & 1) {
        points.push_back("x" + std::to_string(i));
        sat.push_back(sp.homs[i].bits);
      }
    out.push_back(build_system(points, a, sat));
  }
  std::vector<std::string> points{"d"};
  SatMatrix sat{sp.homs[0].bits};
  for (std::size_t i = 0; i < sp.size(); ++i) {
    points.push_back(hom_name(i));
    sat.push_back(sp.homs[i].bits);
  }
  out.push_back(build_system(points, a, sat));
  return out;
}

}  // namespace corpus
