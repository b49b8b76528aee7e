#include "esakia/duality.hpp"

#include <algorithm>
#include <map>

#include "esakia/error.hpp"

namespace esakia {

std::vector<Elem> TwoValuedHom::filter() const {
  std::vector<Elem> f;
  for (Elem a = 0; a < bits.size(); ++a)
    if (bits[a]) f.push_back(a);
  return f;
}

HomCandidate TwoValuedHom::as_candidate() const {
  HomCandidate c{source, two_element_algebra(), std::vector<Elem>(bits.size())};
  const auto& two = *two_element_algebra();
  for (Elem a = 0; a < bits.size(); ++a) c.map[a] = bits[a] ? two.top() : two.bottom();
  return c;
}

bool pointwise_leq(const TwoValuedHom& g, const TwoValuedHom& h) {
  for (std::size_t a = 0; a < g.bits.size(); ++a)
    if (g.bits[a] && !h.bits[a]) return false;
  return true;
}

std::string hom_name(std::size_t i) { return "h" + std::to_string(i); }

std::optional<std::size_t> SpectrumPoset::find(const std::vector<bool>& bits) const {
  const auto it = std::lower_bound(homs.begin(), homs.end(), bits,
                                   [](const TwoValuedHom& h, const std::vector<bool>& b) { return h.bits < b; });
  if (it == homs.end() || it->bits != bits) return std::nullopt;
  return static_cast<std::size_t>(it - homs.begin());
}

FinitePoset SpectrumPoset::as_poset() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < homs.size(); ++i) names.push_back(hom_name(i));
  return FinitePoset(std::move(names), order);
}

SpectrumPoset spectrum(const AlgebraRef& algebra) {
  const auto& a = *algebra;
  const Relation covers = cover_relation(a.lattice().order());
  SpectrumPoset sp{algebra, {}, {}};
  // Join-irreducibles are the non-bottom elements with exactly one lower
  // cover; their principal filters are the prime filters.
  for (Elem j = 0; j < a.size(); ++j) {
    if (j == a.bottom()) continue;
    std::size_t lower = 0;
    for (Elem c = 0; c < a.size(); ++c) lower += covers(c, j);
    if (lower != 1) continue;
    TwoValuedHom h{algebra, std::vector<bool>(a.size())};
    for (Elem x = 0; x < a.size(); ++x) h.bits[x] = a.leq(j, x);
    sp.homs.push_back(std::move(h));
  }
  std::sort(sp.homs.begin(), sp.homs.end(), [](const auto& g, const auto& h) { return g.bits < h.bits; });
  sp.order = Relation(sp.homs.size());
  for (std::size_t i = 0; i < sp.homs.size(); ++i)
    for (std::size_t k = 0; k < sp.homs.size(); ++k) sp.order.set(i, k, pointwise_leq(sp.homs[i], sp.homs[k]));
  return sp;
}

std::vector<std::vector<Elem>> prime_filters(const AlgebraRef& algebra) {
  std::vector<std::vector<Elem>> out;
  for (const auto& h : spectrum(algebra).homs) out.push_back(h.filter());
  return out;
}

std::optional<Elem> UpsetAlgebra::element_of(PointSet s) const {
  const auto it = std::find(upsets.begin(), upsets.end(), s);
  if (it == upsets.end()) return std::nullopt;
  return static_cast<Elem>(it - upsets.begin());
}

UpsetAlgebra upset_algebra(const FinitePoset& poset) {
  const std::vector<PointSet> sets = up_sets(poset);
  const std::size_t n = sets.size();

  std::vector<std::string> names;
  std::map<std::string, PointSet> by_name;
  for (PointSet s : sets) {
    std::string name = "{";
    for (std::size_t x = 0; x < poset.size(); ++x)
      if (s >> x & 1) {
        if (name.size() > 1) name += ',';
        name += poset.name(x);
      }
    name += '}';
    by_name.emplace(name, s);
    names.push_back(std::move(name));
  }
  Relation subset(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) subset.set(i, j, (sets[i] & ~sets[j]) == 0);

  Lattice lattice = lattice_from_order(std::move(names), std::move(subset));
  UpsetAlgebra ua{poset, nullptr, std::vector<PointSet>(n)};
  for (Elem e = 0; e < n; ++e) ua.upsets[e] = by_name.at(lattice.name(e));

  std::vector<Elem> residuum(n * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      PointSet w = 0;
      for (std::size_t x = 0; x < poset.size(); ++x)
        if ((poset.up(x) & ua.upsets[u] & ~ua.upsets[v]) == 0) w |= PointSet{1} << x;
      residuum[u * n + v] = ua.element_of(w).value();
    }
  ua.algebra = share(HeytingAlgebra::from_tables(std::move(lattice), std::move(residuum)));
  return ua;
}

namespace {

void require_bijection(const Isomorphism& iso, const std::string& what) {
  if (iso.forward.size() != iso.backward.size())
    throw Error(ErrorKind::NotIsomorphic, what + ": carriers differ in size");
  for (std::size_t i = 0; i < iso.forward.size(); ++i)
    if (iso.backward[iso.forward[i]] != i)
      throw Error(ErrorKind::NotIsomorphic, what + ": map is not injective", {std::to_string(i)});
}

}  // namespace

Isomorphism roundtrip_algebra(const AlgebraRef& algebra) {
  const auto& a = *algebra;
  const SpectrumPoset sp = spectrum(algebra);
  const UpsetAlgebra dual = upset_algebra(sp.as_poset());
  if (dual.algebra->size() != a.size())
    throw Error(ErrorKind::NotIsomorphic, "algebra has " + std::to_string(a.size()) +
                                              " elements but its dual has " +
                                              std::to_string(dual.algebra->size()));
  Isomorphism iso{std::vector<std::size_t>(a.size()), std::vector<std::size_t>(a.size(), a.size())};
  for (Elem e = 0; e < a.size(); ++e) {
    PointSet s = 0;
    for (std::size_t h = 0; h < sp.size(); ++h)
      if (sp.homs[h](e)) s |= PointSet{1} << h;
    const auto image = dual.element_of(s);
    if (!image)
      throw Error(ErrorKind::NotIsomorphic, "image of " + a.name(e) + " is not an up-set of the spectrum",
                  {a.name(e)});
    if (iso.backward[*image] != a.size())
      throw Error(ErrorKind::NotIsomorphic, a.name(e) + " and " + a.name(iso.backward[*image]) + " share an image",
                  {a.name(e)});
    iso.forward[e] = *image;
    iso.backward[*image] = e;
  }
  require_bijection(iso, "algebra round trip");

  const HomCandidate fwd{algebra, dual.algebra, iso.forward};
  const HomCandidate bwd{dual.algebra, algebra, iso.backward};
  if (auto check = check_hom(fwd, HomKind::Heyting); !check) {
    const auto& v = check.violations.front();
    throw Error(ErrorKind::NotIsomorphic, describe(fwd, v), {a.name(v.args.empty() ? a.top() : v.args[0])});
  }
  if (auto check = check_hom(bwd, HomKind::Heyting); !check)
    throw Error(ErrorKind::NotIsomorphic, describe(bwd, check.violations.front()));
  return iso;
}

Isomorphism roundtrip_poset(const FinitePoset& poset) {
  const UpsetAlgebra ua = upset_algebra(poset);
  const SpectrumPoset sp = spectrum(ua.algebra);
  if (sp.size() != poset.size())
    throw Error(ErrorKind::NotIsomorphic, "poset has " + std::to_string(poset.size()) +
                                              " points but its double dual has " + std::to_string(sp.size()));
  Isomorphism iso{std::vector<std::size_t>(poset.size()), std::vector<std::size_t>(sp.size(), sp.size())};
  for (std::size_t x = 0; x < poset.size(); ++x) {
    std::vector<bool> bits(ua.upsets.size());
    for (Elem e = 0; e < bits.size(); ++e) bits[e] = ua.upsets[e] >> x & 1;
    const auto h = sp.find(bits);
    if (!h) throw Error(ErrorKind::NotIsomorphic, "point " + poset.name(x) + " gives no spectrum element", {poset.name(x)});
    if (iso.backward[*h] != sp.size())
      throw Error(ErrorKind::NotIsomorphic, "points " + poset.name(x) + " and " +
                                                poset.name(iso.backward[*h]) + " share a hom",
                  {poset.name(x)});
    iso.forward[x] = *h;
    iso.backward[*h] = x;
  }
  require_bijection(iso, "poset round trip");
  for (std::size_t x = 0; x < poset.size(); ++x)
    for (std::size_t y = 0; y < poset.size(); ++y)
      if (poset.leq(x, y) != sp.order(iso.forward[x], iso.forward[y]))
        throw Error(ErrorKind::NotIsomorphic, "order between " + poset.name(x) + " and " + poset.name(y) +
                                                  " is not preserved",
                    {poset.name(x), poset.name(y)});
  return iso;
}

TwoValuedHom precompose(const TwoValuedHom& v, const HomCandidate& f) {
  TwoValuedHom r{f.source, std::vector<bool>(f.map.size())};
  for (Elem b = 0; b < f.map.size(); ++b) r.bits[b] = v(f(b));
  return r;
}

DualMap dualize_hom(const HomCandidate& f) {
  if (auto check = check_hom(f, HomKind::Heyting); !check)
    throw Error(ErrorKind::NotAHom, describe(f, check.violations.front()));
  DualMap d{spectrum(f.target), spectrum(f.source), {}, true, true};
  for (const auto& v : d.domain.homs) {
    const auto image = d.codomain.find(precompose(v, f).bits);
    if (!image) throw Error(ErrorKind::NotAHom, "v o f is not a two-valued hom");
    d.map.push_back(*image);
  }
  const std::size_t n = d.domain.size();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (d.domain.order(v, u) && !d.codomain.order(d.map[v], d.map[u])) d.monotone = false;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < d.codomain.size(); ++w) {
      if (!d.codomain.order(d.map[v], w)) continue;
      bool lifted = false;
      for (std::size_t u = 0; u < n && !lifted; ++u) lifted = d.domain.order(v, u) && d.map[u] == w;
      if (!lifted) d.p_morphism = false;
    }
  return d;
}

}  // namespace esakia
