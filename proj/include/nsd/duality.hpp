#ifndef NSD_DUALITY_HPP
#define NSD_DUALITY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsd/bis.hpp"
#include "nsd/common.hpp"
#include "nsd/groupoid.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

inline constexpr size_t kDefaultBisectionCap = 2'000'000;

// ---------------------------------------------------------------------------
// Gamma: the Boolean inverse semigroup of bisections of a finite groupoid.

struct GammaResult {
  Bis B;
  std::vector<std::uint64_t> masks;  // element -> arrow mask
  std::unordered_map<std::uint64_t, int> index;

  int element_of(std::uint64_t mask) const {
    auto it = index.find(mask);
    return it == index.end() ? -1 : it->second;
  }
};

inline GammaResult gamma(const Groupoid& G, size_t cap = kDefaultBisectionCap) {
  GammaResult out;
  out.masks = enumerate_bisections(G, cap);
  const int n = static_cast<int>(out.masks.size());
  for (int i = 0; i < n; ++i) out.index.emplace(out.masks[i], i);

  InverseSemigroup S;
  S.names.resize(n);
  for (int i = 0; i < n; ++i) {
    if (out.masks[i] == 0) {
      S.names[i] = "0";
    } else {
      std::string nm;
      for_bits(out.masks[i], [&](int g) {
        if (!nm.empty()) nm += '+';
        nm += G.arrow_names[g];
      });
      S.names[i] = nm;
    }
  }
  S.mul_.resize(static_cast<size_t>(n) * n);
  S.inv_.resize(n);
  for (int i = 0; i < n; ++i) {
    S.inv_[i] = out.element_of(bis_inv(G, out.masks[i]));
    for (int j = 0; j < n; ++j) {
      int p = out.element_of(bis_mul(G, out.masks[i], out.masks[j]));
      if (p < 0)
        throw error(errc::bad_argument, "bisection product escaped enumeration");
      S.mul_[static_cast<size_t>(i) * n + j] = p;
    }
  }
  S.zero = out.element_of(0);
  out.B = assemble_bis(std::move(S));
  // Atoms of Gamma(G) are exactly the singleton bisections; re-key the
  // element->mask table so atom id i corresponds to arrow i of G.
  if (out.B.n_atoms() != G.arrows())
    throw error(errc::not_atomistic, "atoms of Gamma do not match arrows");
  std::vector<int> atom_elt(G.arrows());
  for (int a : out.B.atom_elt) {
    std::uint64_t m = out.masks[a];
    if (popcount(m) != 1)
      throw error(errc::not_atomistic, "non-singleton atom in Gamma");
    int g = 0;
    for_bits(m, [&](int x) { g = x; });
    atom_elt[g] = a;
  }
  out.B.atom_elt = std::move(atom_elt);
  // Re-derive batoms so atom masks coincide with arrow masks.
  out.B.by_mask.clear();
  for (int b = 0; b < out.B.size(); ++b) {
    out.B.batoms[b] = out.masks[b];
    out.B.by_mask.emplace(out.masks[b], b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dual groupoid: atoms of a Boolean inverse semigroup.

struct DualGroupoid {
  Groupoid G;
  std::vector<int> arrow_elt;  // arrow (= atom id of B) -> element of B
  std::vector<int> unit_elt;   // unit -> idempotent element of B
};

inline DualGroupoid dual_groupoid(const Bis& B) {
  DualGroupoid out;
  const int na = B.n_atoms();
  std::vector<int> unit_of_atom(na, -1);  // idempotent atoms -> unit index
  std::vector<std::string> unit_names, arrow_names;
  for (int i = 0; i < na; ++i) {
    int a = B.atom_elt[i];
    if (B.S.is_idempotent(a)) {
      unit_of_atom[i] = static_cast<int>(out.unit_elt.size());
      out.unit_elt.push_back(a);
      unit_names.push_back(B.name(a));
    }
  }
  std::vector<int> src(na), tgt(na), inv(na), atom_of_elt(B.size(), -1);
  for (int i = 0; i < na; ++i) atom_of_elt[B.atom_elt[i]] = i;
  for (int i = 0; i < na; ++i) {
    int a = B.atom_elt[i];
    arrow_names.push_back(B.name(a));
    int s = atom_of_elt[B.S.supp(a)];
    int r = atom_of_elt[B.S.im(a)];
    int v = atom_of_elt[B.inv(a)];
    if (s < 0 || r < 0 || v < 0 || unit_of_atom[s] < 0 || unit_of_atom[r] < 0)
      throw error(errc::atom_composition_failure,
                  "support or image of an atom is not an idempotent atom",
                  {B.name(a)});
    src[i] = unit_of_atom[s];
    tgt[i] = unit_of_atom[r];
    inv[i] = v;
  }
  std::vector<std::vector<int>> comp(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      if (src[g] != tgt[h]) continue;
      int p = B.mul(B.atom_elt[g], B.atom_elt[h]);
      int q = atom_of_elt[p];
      if (q < 0)
        throw error(errc::atom_composition_failure,
                    "product of composable atoms is not an atom",
                    {B.name(B.atom_elt[g]), B.name(B.atom_elt[h])});
      comp[g][h] = q;
    }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(na) * na);
  for (auto& row : comp) flat.insert(flat.end(), row.begin(), row.end());
  Groupoid raw;
  raw.unit_names = std::move(unit_names);
  raw.arrow_names = std::move(arrow_names);
  raw.src = std::move(src);
  raw.tgt = std::move(tgt);
  raw.comp_ = std::move(flat);
  raw.inv = std::move(inv);
  out.G = verify_groupoid(raw);
  out.arrow_elt = B.atom_elt;
  return out;
}

// ---------------------------------------------------------------------------
// Roundtrip isomorphisms (finite Stone duality)

struct BisRoundtrip {
  bool ok = false;
  std::vector<int> iso;  // B element -> Gamma(dual(B)) element
  DualGroupoid dual;
  GammaResult regenerated;
};

// B -> Gamma(dual groupoid of B): b maps to the bisection consisting of the
// atoms below b.  Arrow i of the dual groupoid is atom i of B, so the atom
// mask of b is already an arrow mask.
inline BisRoundtrip duality_roundtrip(const Bis& B,
                                      size_t cap = kDefaultBisectionCap) {
  BisRoundtrip out;
  out.dual = dual_groupoid(B);
  out.regenerated = gamma(out.dual.G, cap);
  const Bis& C = out.regenerated.B;
  if (C.size() != B.size()) return out;
  out.iso.resize(B.size());
  std::vector<char> hit(C.size(), 0);
  for (int b = 0; b < B.size(); ++b) {
    int c = out.regenerated.element_of(B.batoms[b]);
    if (c < 0 || hit[c]) return out;
    hit[c] = 1;
    out.iso[b] = c;
  }
  out.ok = is_bis_morphism(B, C, out.iso);
  return out;
}

struct GroupoidRoundtrip {
  bool ok = false;
  std::vector<int> arrow_iso;  // G arrow -> dual(Gamma(G)) arrow
  GammaResult bisections;
  DualGroupoid regenerated;
};

// G -> dual groupoid of Gamma(G): arrow g maps to the singleton bisection
// {g}, which is an atom of Gamma(G).  After gamma() re-keys atoms, atom g of
// Gamma(G) is exactly {g}, so the arrow map is the identity on indices; the
// check is that composition, inverses and incidences agree.
inline GroupoidRoundtrip duality_roundtrip_groupoid(
    const Groupoid& G, size_t cap = kDefaultBisectionCap) {
  GroupoidRoundtrip out;
  out.bisections = gamma(G, cap);
  out.regenerated = dual_groupoid(out.bisections.B);
  const Groupoid& H = out.regenerated.G;
  if (H.arrows() != G.arrows() || H.units() != G.units()) return out;
  out.arrow_iso.resize(G.arrows());
  // Unit u of H carries the idempotent atom {unit_arrow(u)}; recover the
  // induced unit map and verify all structure.
  std::vector<int> umap(G.units(), -1);
  for (int u = 0; u < H.units(); ++u) {
    std::uint64_t m = out.bisections.masks[out.regenerated.unit_elt[u]];
    if (popcount(m) != 1) return out;
    int garrow = 0;
    for_bits(m, [&](int x) { garrow = x; });
    if (!G.is_unit_arrow(garrow)) return out;
    umap[G.src[garrow]] = u;
  }
  for (int u : umap)
    if (u < 0) return out;
  for (int g = 0; g < G.arrows(); ++g) {
    // Atom g of Gamma(G) is the singleton {g}; its arrow index in H is the
    // position of that atom, which gamma() pinned to g.
    out.arrow_iso[g] = g;
    if (H.src[g] != umap[G.src[g]] || H.tgt[g] != umap[G.tgt[g]]) return out;
    if (H.inv[g] != G.inv[g]) return out;
    for (int h = 0; h < G.arrows(); ++h)
      if (G.composable(g, h) && H.comp(g, h) != G.comp(g, h)) return out;
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// Invariant unit sets and additive-ideal quotients

// All invariant unit subsets, ascending by (size, lexicographic).  Each is a
// union of orbits; every candidate is re-verified against the definition.
inline std::vector<std::vector<int>> invariant_unit_sets(const Groupoid& G) {
  auto orbs = orbits(G);
  if (orbs.size() > 20)
    throw error(errc::too_large, "too many orbits for invariant-set enumeration");
  std::vector<std::vector<int>> out;
  for (std::uint64_t sel = 0; sel < bit(static_cast<int>(orbs.size())); ++sel) {
    std::vector<int> u;
    for (size_t i = 0; i < orbs.size(); ++i)
      if (sel & bit(static_cast<int>(i)))
        u.insert(u.end(), orbs[i].begin(), orbs[i].end());
    std::sort(u.begin(), u.end());
    if (!is_invariant(G, u))
      throw error(errc::not_invariant, "orbit union failed invariance check");
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    return std::pair(a.size(), a) < std::pair(b.size(), b);
  });
  return out;
}

struct IdealQuotient {
  Bis Q;                 // the quotient, realized as Gamma of a restriction
  std::vector<int> map;  // B element -> Q element, a surjective morphism
  std::vector<int> kept_units;  // complement invariant unit set in dual(B)
};

// Quotient of B by an additive ideal, computed dually: restrict the dual
// groupoid to the invariant unit set complementary to the ideal and take
// bisections.  The projection keeps the atoms of b whose support survives.
// Kernel is verified to be exactly the ideal.
inline IdealQuotient quotient_by_additive_ideal(const Bis& B,
                                                const AdditiveIdeal& I,
                                                size_t cap = kDefaultBisectionCap) {
  std::vector<char> in_ideal(B.size(), 0);
  for (int b : I.elems) in_ideal[b] = 1;
  if (!is_additive_ideal(B, in_ideal))
    throw error(errc::bad_argument, "not an additive ideal");

  DualGroupoid D = dual_groupoid(B);
  IdealQuotient out;
  for (int u = 0; u < D.G.units(); ++u)
    if (!in_ideal[D.unit_elt[u]]) out.kept_units.push_back(u);
  auto R = restrict_groupoid(D.G, out.kept_units);
  GammaResult GR = gamma(R.G, cap);
  out.Q = GR.B;

  // Atom id i of B = arrow i of D.G; surviving atoms re-index through the
  // restriction's arrow map.
  std::vector<int> new_arrow(D.G.arrows(), -1);
  for (int a = 0; a < R.G.arrows(); ++a) new_arrow[R.arrow_map[a]] = a;
  out.map.resize(B.size());
  for (int b = 0; b < B.size(); ++b) {
    std::uint64_t m = 0;
    for_bits(B.batoms[b], [&](int i) {
      if (new_arrow[i] >= 0) m |= bit(new_arrow[i]);
    });
    int q = GR.element_of(m);
    if (q < 0)
      throw error(errc::bad_argument, "projected atom set is not a bisection");
    out.map[b] = q;
  }
  std::string why;
  if (!is_bis_morphism(B, out.Q, out.map, &why))
    throw error(errc::not_a_homomorphism, "ideal projection: " + why);
  std::vector<char> hit(out.Q.size(), 0);
  for (int q : out.map) hit[q] = 1;
  for (char h : hit)
    if (!h) throw error(errc::not_a_homomorphism, "ideal projection not onto");
  for (int b = 0; b < B.size(); ++b)
    if ((out.map[b] == out.Q.zero()) != static_cast<bool>(in_ideal[b]))
      throw error(errc::not_well_defined, "kernel differs from the ideal",
                  {B.name(b)});
  return out;
}

// Restriction morphism Gamma(G) -> Gamma(G|_U) for an invariant unit set U.
inline std::vector<int> restriction_hom(const Groupoid& G, const GammaResult& GG,
                                        const std::vector<int>& unit_subset,
                                        const GroupoidRestriction& R,
                                        const GammaResult& GR) {
  if (!is_invariant(G, unit_subset))
    throw error(errc::not_invariant, "restriction target is not invariant");
  std::vector<int> new_arrow(G.arrows(), -1);
  for (int a = 0; a < R.G.arrows(); ++a) new_arrow[R.arrow_map[a]] = a;
  std::vector<int> map(GG.B.size());
  for (int b = 0; b < GG.B.size(); ++b) {
    std::uint64_t m = 0;
    for_bits(GG.masks[b], [&](int g) {
      if (new_arrow[g] >= 0) m |= bit(new_arrow[g]);
    });
    map[b] = GR.element_of(m);
    if (map[b] < 0)
      throw error(errc::bad_argument, "restricted mask is not a bisection");
  }
  std::string why;
  if (!is_bis_morphism(GG.B, GR.B, map, &why))
    throw error(errc::not_a_homomorphism, "restriction: " + why);
  return map;
}

// ---------------------------------------------------------------------------
// Isomorphism of Boolean inverse semigroups, via dual groupoids.

inline std::optional<std::vector<int>> bis_isomorphism(const Bis& A,
                                                       const Bis& B) {
  if (A.size() != B.size() || A.n_atoms() != B.n_atoms()) return std::nullopt;
  DualGroupoid DA = dual_groupoid(A);
  DualGroupoid DB = dual_groupoid(B);
  auto arrow_map = find_groupoid_iso(DA.G, DB.G);
  if (!arrow_map) return std::nullopt;
  // Lift along atoms: atom i of A -> atom arrow_map[i] of B.
  std::vector<int> map(A.size(), -1);
  for (int a = 0; a < A.size(); ++a) {
    std::uint64_t m = 0;
    for_bits(A.batoms[a], [&](int i) { m |= bit((*arrow_map)[i]); });
    map[a] = B.element_of_mask(m);
    if (map[a] < 0) return std::nullopt;
  }
  std::vector<char> hit(B.size(), 0);
  for (int b : map) {
    if (hit[b]) return std::nullopt;
    hit[b] = 1;
  }
  if (!is_bis_morphism(A, B, map)) return std::nullopt;
  return map;
}

}  // namespace nsd

#endif  // NSD_DUALITY_HPP
