#ifndef NSD_GROUPOID_HPP
#define NSD_GROUPOID_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nsd/common.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// Finite discrete groupoid.  Arrows are indices; comp(g, h) = gh is defined
// iff d(g) = r(h), where d = src and r = tgt.
struct Groupoid {
  std::vector<std::string> unit_names;
  std::vector<std::string> arrow_names;
  std::vector<int> src, tgt;   // d and r, per arrow
  std::vector<int> comp_;      // na*na, -1 where undefined
  std::vector<int> inv;
  std::vector<int> unit_arrow; // per unit, the identity arrow

  int units() const { return static_cast<int>(unit_names.size()); }
  int arrows() const { return static_cast<int>(arrow_names.size()); }
  bool composable(int g, int h) const { return src[g] == tgt[h]; }
  int comp(int g, int h) const { return comp_[g * arrows() + h]; }
  bool is_unit_arrow(int g) const {
    return src[g] == tgt[g] && unit_arrow[src[g]] == g;
  }
};

inline Groupoid verify_groupoid(std::vector<std::string> unit_names,
                                std::vector<std::string> arrow_names,
                                std::vector<int> src, std::vector<int> tgt,
                                std::vector<int> comp) {
  Groupoid G;
  G.unit_names = std::move(unit_names);
  G.arrow_names = std::move(arrow_names);
  G.src = std::move(src);
  G.tgt = std::move(tgt);
  G.comp_ = std::move(comp);
  const int na = G.arrows();
  if (static_cast<int>(G.comp_.size()) != na * na)
    throw error(errc::bad_composition, "composition table has wrong size");
  for (int g = 0; g < na; ++g) {
    if (G.src[g] < 0 || G.src[g] >= G.units() || G.tgt[g] < 0 ||
        G.tgt[g] >= G.units())
      throw error(errc::bad_composition, "arrow endpoint out of range",
                  {G.arrow_names[g]});
  }
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      int gh = G.comp(g, h);
      if (G.composable(g, h)) {
        if (gh < 0 || gh >= na)
          throw error(errc::bad_composition, "missing composite",
                      {G.arrow_names[g], G.arrow_names[h]});
        if (G.src[gh] != G.src[h] || G.tgt[gh] != G.tgt[g])
          throw error(errc::bad_composition, "composite has wrong endpoints",
                      {G.arrow_names[g], G.arrow_names[h]});
      } else if (gh != -1) {
        throw error(errc::bad_composition, "composite defined for non-composable pair",
                    {G.arrow_names[g], G.arrow_names[h]});
      }
    }
  // Associativity wherever defined.
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      if (!G.composable(g, h)) continue;
      for (int k = 0; k < na; ++k) {
        if (!G.composable(h, k)) continue;
        if (G.comp(G.comp(g, h), k) != G.comp(g, G.comp(h, k)))
          throw error(errc::bad_composition, "associativity fails",
                      {G.arrow_names[g], G.arrow_names[h], G.arrow_names[k]});
      }
    }
  // Identity arrows: for each unit the unique arrow acting as identity.
  G.unit_arrow.assign(G.units(), -1);
  for (int e = 0; e < na; ++e) {
    if (G.src[e] != G.tgt[e]) continue;
    bool ident = true;
    for (int g = 0; g < na && ident; ++g) {
      if (G.composable(g, e) && G.comp(g, e) != g) ident = false;
      if (G.composable(e, g) && G.comp(e, g) != g) ident = false;
    }
    if (ident) {
      if (G.unit_arrow[G.src[e]] != -1)
        throw error(errc::bad_units, "two identity arrows at unit",
                    {G.unit_names[G.src[e]]});
      G.unit_arrow[G.src[e]] = e;
    }
  }
  for (int u = 0; u < G.units(); ++u)
    if (G.unit_arrow[u] < 0)
      throw error(errc::bad_units, "no identity arrow at unit", {G.unit_names[u]});
  // Inverses.
  G.inv.assign(na, -1);
  for (int g = 0; g < na; ++g) {
    for (int h = 0; h < na; ++h) {
      if (G.src[h] != G.tgt[g] || G.tgt[h] != G.src[g]) continue;
      if (G.comp(g, h) == G.unit_arrow[G.tgt[g]] &&
          G.comp(h, g) == G.unit_arrow[G.src[g]]) {
        if (G.inv[g] != -1 && G.inv[g] != h)
          throw error(errc::bad_inverse, "two inverses for arrow",
                      {G.arrow_names[g]});
        G.inv[g] = h;
      }
    }
    if (G.inv[g] < 0)
      throw error(errc::bad_inverse, "arrow has no inverse", {G.arrow_names[g]});
  }
  return G;
}

inline Groupoid verify_groupoid(const Groupoid& raw) {
  return verify_groupoid(raw.unit_names, raw.arrow_names, raw.src, raw.tgt,
                         raw.comp_);
}

// ---------------------------------------------------------------------------
// Restriction, orbits, isotropy

struct GroupoidRestriction {
  Groupoid G;
  std::vector<int> unit_map;   // new unit -> old unit
  std::vector<int> arrow_map;  // new arrow -> old arrow
};

inline GroupoidRestriction restrict_groupoid(const Groupoid& G,
                                             const std::vector<int>& unit_subset) {
  std::vector<char> in(G.units(), 0);
  for (int u : unit_subset) in[u] = 1;
  GroupoidRestriction out;
  std::vector<int> unit_pos(G.units(), -1), arrow_pos(G.arrows(), -1);
  for (int u = 0; u < G.units(); ++u)
    if (in[u]) {
      unit_pos[u] = static_cast<int>(out.unit_map.size());
      out.unit_map.push_back(u);
      out.G.unit_names.push_back(G.unit_names[u]);
    }
  for (int g = 0; g < G.arrows(); ++g)
    if (in[G.src[g]] && in[G.tgt[g]]) {
      arrow_pos[g] = static_cast<int>(out.arrow_map.size());
      out.arrow_map.push_back(g);
      out.G.arrow_names.push_back(G.arrow_names[g]);
      out.G.src.push_back(unit_pos[G.src[g]]);
      out.G.tgt.push_back(unit_pos[G.tgt[g]]);
    }
  const int na = static_cast<int>(out.arrow_map.size());
  out.G.comp_.assign(na * na, -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      if (out.G.src[i] == out.G.tgt[j])
        out.G.comp_[i * na + j] = arrow_pos[G.comp(out.arrow_map[i], out.arrow_map[j])];
  out.G = verify_groupoid(out.G);
  return out;
}

inline std::vector<int> orbit_of(const Groupoid& G, int x) {
  std::vector<char> in(G.units(), 0);
  in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int g = 0; g < G.arrows(); ++g)
      if (in[G.src[g]] && !in[G.tgt[g]]) {
        in[G.tgt[g]] = 1;
        grew = true;
      }
  }
  std::vector<int> out;
  for (int u = 0; u < G.units(); ++u)
    if (in[u]) out.push_back(u);
  return out;
}

// Partition of the unit space into orbits, classes in order of least member.
inline std::vector<std::vector<int>> orbits(const Groupoid& G) {
  std::vector<char> seen(G.units(), 0);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < G.units(); ++u) {
    if (seen[u]) continue;
    auto orb = orbit_of(G, u);
    for (int v : orb) seen[v] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

// Isotropy group at x as a validated inverse semigroup (a group).
inline InverseSemigroup isotropy(const Groupoid& G, int x) {
  std::vector<int> elems;
  for (int g = 0; g < G.arrows(); ++g)
    if (G.src[g] == x && G.tgt[g] == x) elems.push_back(g);
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(G.arrows(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<std::string> names;
  std::vector<int> mul(m * m);
  for (int i = 0; i < m; ++i) {
    names.push_back(G.arrow_names[elems[i]]);
    for (int j = 0; j < m; ++j) mul[i * m + j] = pos[G.comp(elems[i], elems[j])];
  }
  InverseSemigroup H = verify_inverse_semigroup(std::move(names), std::move(mul));
  if (!is_group(H))
    throw error(errc::bad_argument, "isotropy is not a group");
  return H;
}

// Finite discrete case: dense = everything, so minimal means one orbit.
inline bool is_minimal(const Groupoid& G) {
  if (G.units() == 0) return true;  // degenerate, flagged by callers
  return orbits(G).size() == 1;
}

// Finite discrete case: the interior of Iso(G) \ G^(0) is the set itself.
inline bool is_effective(const Groupoid& G) {
  for (int g = 0; g < G.arrows(); ++g)
    if (G.src[g] == G.tgt[g] && !G.is_unit_arrow(g)) return false;
  return true;
}

inline bool is_invariant(const Groupoid& G, const std::vector<int>& unit_subset) {
  std::vector<char> in(G.units(), 0);
  for (int u : unit_subset) in[u] = 1;
  for (int g = 0; g < G.arrows(); ++g)
    if (in[G.src[g]] != in[G.tgt[g]]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bisections as arrow masks

inline bool is_bisection(const Groupoid& G, std::uint64_t mask) {
  std::uint64_t dom = 0, ran = 0;
  bool ok = true;
  for_bits(mask, [&](int g) {
    if (dom & bit(G.src[g])) ok = false;
    if (ran & bit(G.tgt[g])) ok = false;
    dom |= bit(G.src[g]);
    ran |= bit(G.tgt[g]);
  });
  return ok;
}

inline std::uint64_t bis_mul(const Groupoid& G, std::uint64_t U, std::uint64_t V) {
  std::uint64_t out = 0;
  for_bits(U, [&](int g) {
    for_bits(V, [&](int h) {
      if (G.composable(g, h)) out |= bit(G.comp(g, h));
    });
  });
  return out;
}

inline std::uint64_t bis_inv(const Groupoid& G, std::uint64_t U) {
  std::uint64_t out = 0;
  for_bits(U, [&](int g) { out |= bit(G.inv[g]); });
  return out;
}

inline std::uint64_t bis_supp(const Groupoid& G, std::uint64_t U) {
  return bis_mul(G, bis_inv(G, U), U);
}

inline std::uint64_t bis_im(const Groupoid& G, std::uint64_t U) {
  return bis_mul(G, U, bis_inv(G, U));
}

// Idempotent bisection of a unit subset.
inline std::uint64_t unit_bisection(const Groupoid& G,
                                    const std::vector<int>& unit_subset) {
  std::uint64_t out = 0;
  for (int u : unit_subset) out |= bit(G.unit_arrow[u]);
  return out;
}

// All bisections, by backtracking over arrows in index order; ascending
// (popcount, value) order of the result is established by the caller.
inline std::vector<std::uint64_t> enumerate_bisections(const Groupoid& G,
                                                       size_t cap) {
  if (G.arrows() > 62)
    throw error(errc::too_large, "too many arrows for bisection enumeration");
  std::vector<std::uint64_t> out;
  std::uint64_t cur = 0;
  std::uint64_t dom = 0, ran = 0;
  auto rec = [&](auto&& self, int g) -> void {
    if (g == G.arrows()) {
      if (out.size() >= cap)
        throw error(errc::too_large, "bisection count exceeds cap");
      out.push_back(cur);
      return;
    }
    self(self, g + 1);
    if (!(dom & bit(G.src[g])) && !(ran & bit(G.tgt[g]))) {
      cur |= bit(g);
      dom |= bit(G.src[g]);
      ran |= bit(G.tgt[g]);
      self(self, g + 1);
      cur &= ~bit(g);
      dom &= ~bit(G.src[g]);
      ran &= ~bit(G.tgt[g]);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search (small groupoids)

// First isomorphism G -> H found by backtracking over arrows, or nullopt.
// Returns the arrow map; the induced unit map is consistent by construction.
inline std::optional<std::vector<int>> find_groupoid_iso(const Groupoid& G,
                                                         const Groupoid& H) {
  if (G.units() != H.units() || G.arrows() != H.arrows()) return std::nullopt;
  const int na = G.arrows();
  std::vector<int> amap(na, -1), umap(G.units(), -1), upre(H.units(), -1);
  std::vector<char> used(na, 0);

  auto try_units = [&](int gu, int hu) {
    if (umap[gu] == hu) return 1;          // already matched
    if (umap[gu] != -1 || upre[hu] != -1) return -1;
    umap[gu] = hu;
    upre[hu] = gu;
    return 0;                              // newly matched, caller must undo
  };
  auto undo_units = [&](int gu, int hu) {
    umap[gu] = -1;
    upre[hu] = -1;
  };

  auto full_check = [&]() {
    for (int x = 0; x < na; ++x) {
      if (amap[G.inv[x]] != H.inv[amap[x]]) return false;
      for (int y = 0; y < na; ++y)
        if (G.composable(x, y) &&
            amap[G.comp(x, y)] != H.comp(amap[x], amap[y]))
          return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int g) -> bool {
    if (g == na) return full_check();
    for (int h = 0; h < na; ++h) {
      if (used[h]) continue;
      bool gunit = G.is_unit_arrow(g);
      if (gunit != H.is_unit_arrow(h)) continue;
      int m1 = try_units(G.src[g], H.src[h]);
      if (m1 < 0) continue;
      int m2 = try_units(G.tgt[g], H.tgt[h]);
      if (m2 < 0) {
        if (m1 == 0) undo_units(G.src[g], H.src[h]);
        continue;
      }
      amap[g] = h;
      used[h] = 1;
      bool ok = amap[G.inv[g]] == -1 || amap[G.inv[g]] == H.inv[h];
      if (ok) {
        for (int x = 0; x < na && ok; ++x) {
          if (amap[x] < 0) continue;
          if (G.composable(g, x)) {
            int c = G.comp(g, x);
            if (amap[c] != -1 && amap[c] != H.comp(h, amap[x])) ok = false;
          }
          if (G.composable(x, g)) {
            int c = G.comp(x, g);
            if (amap[c] != -1 && amap[c] != H.comp(amap[x], h)) ok = false;
          }
        }
      }
      if (ok && self(self, g + 1)) return true;
      used[h] = 0;
      amap[g] = -1;
      if (m2 == 0) undo_units(G.tgt[g], H.tgt[h]);
      if (m1 == 0) undo_units(G.src[g], H.src[h]);
    }
    return false;
  };
  if (rec(rec, 0)) return amap;
  return std::nullopt;
}

}  // namespace nsd

#endif  // NSD_GROUPOID_HPP
