#ifndef NSD_CORPUS_HPP
#define NSD_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "nsd/common.hpp"
#include "nsd/groupoid.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// ---------------------------------------------------------------------------
// Finite groups, represented as inverse semigroups (used as isotropy data).

inline InverseSemigroup make_group(std::vector<std::string> names,
                                   std::vector<int> mul) {
  return verify_inverse_semigroup(std::move(names), std::move(mul));
}

inline InverseSemigroup cyclic_group(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = n == 1 ? "e" : "c" + std::to_string(i);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return make_group(std::move(names), std::move(mul));
}

// Dihedral group of order 2n: elements r^i and s r^i.
inline InverseSemigroup dihedral_group(int n) {
  const int m = 2 * n;
  auto id = [&](int flip, int rot) { return flip * n + rot; };
  std::vector<std::string> names(m);
  for (int i = 0; i < n; ++i) {
    names[id(0, i)] = "r" + std::to_string(i);
    names[id(1, i)] = "s" + std::to_string(i);
  }
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int i = 0; i < n; ++i)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int j = 0; j < n; ++j) {
          // (s^f1 r^i)(s^f2 r^j) = s^(f1^f2) r^(±i + j)
          int rot = ((f2 ? n - i : i) + j) % n;
          mul[static_cast<size_t>(id(f1, i)) * m + id(f2, j)] =
              id(f1 ^ f2, rot);
        }
  return make_group(std::move(names), std::move(mul));
}

inline InverseSemigroup direct_product_group(const InverseSemigroup& G,
                                             const InverseSemigroup& H) {
  const int n = G.size() * H.size();
  std::vector<std::string> names(n);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  auto id = [&](int g, int h) { return g * H.size() + h; };
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < H.size(); ++h)
      names[id(g, h)] = "(" + G.names[g] + "," + H.names[h] + ")";
  for (int g1 = 0; g1 < G.size(); ++g1)
    for (int h1 = 0; h1 < H.size(); ++h1)
      for (int g2 = 0; g2 < G.size(); ++g2)
        for (int h2 = 0; h2 < H.size(); ++h2)
          mul[static_cast<size_t>(id(g1, h1)) * n + id(g2, h2)] =
              id(G.mul(g1, g2), H.mul(h1, h2));
  return make_group(std::move(names), std::move(mul));
}

inline InverseSemigroup quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign): axis 0 = scalar.
  std::vector<std::string> names = {"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  auto enc = [](int axis, int neg) { return 2 * axis + neg; };
  std::vector<int> mul(64);
  auto set = [&](int a, int b, int c) { mul[a * 8 + b] = c; };
  // quaternion table on axes, with sign tracking: i*j=k, j*k=i, k*i=j.
  int tab[4][4];     // resulting axis
  int sgn[4][4];     // extra sign
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0) { tab[a][b] = b; sgn[a][b] = 0; }
      else if (b == 0) { tab[a][b] = a; sgn[a][b] = 0; }
      else if (a == b) { tab[a][b] = 0; sgn[a][b] = 1; }
      else {
        // axes 1,2,3 = i,j,k; cyclic gives +, anticyclic gives -.
        tab[a][b] = 6 - a - b;
        sgn[a][b] = (b == a % 3 + 1) ? 0 : 1;
      }
    }
  for (int a = 0; a < 4; ++a)
    for (int na = 0; na < 2; ++na)
      for (int b = 0; b < 4; ++b)
        for (int nb = 0; nb < 2; ++nb)
          set(enc(a, na), enc(b, nb), enc(tab[a][b], na ^ nb ^ sgn[a][b]));
  return make_group(std::move(names), std::move(mul));
}

// All isomorphism classes of groups of the given order, order <= 8.
inline std::vector<InverseSemigroup> groups_of_order(int n) {
  switch (n) {
    case 1: return {cyclic_group(1)};
    case 2: return {cyclic_group(2)};
    case 3: return {cyclic_group(3)};
    case 4: return {cyclic_group(4),
                    direct_product_group(cyclic_group(2), cyclic_group(2))};
    case 5: return {cyclic_group(5)};
    case 6: return {cyclic_group(6), dihedral_group(3)};
    case 7: return {cyclic_group(7)};
    case 8:
      return {cyclic_group(8),
              direct_product_group(cyclic_group(4), cyclic_group(2)),
              direct_product_group(
                  direct_product_group(cyclic_group(2), cyclic_group(2)),
                  cyclic_group(2)),
              dihedral_group(4), quaternion_group()};
    default:
      throw error(errc::too_large, "group catalog covers orders 1..8");
  }
}

// ---------------------------------------------------------------------------
// Groupoid families

// Transitive groupoid on k units with isotropy group G: arrows (i, j, g)
// from unit j to unit i, (i,j,g)(j,l,h) = (i,l,gh).
inline Groupoid transitive_groupoid(int k, const InverseSemigroup& G,
                                    const std::string& prefix = "") {
  if (!is_group(G))
    throw error(errc::bad_argument, "isotropy data must be a group");
  const int m = G.size();
  const int na = k * k * m;
  auto id = [&](int i, int j, int g) { return (i * k + j) * m + g; };
  Groupoid raw;
  raw.unit_names.resize(k);
  for (int i = 0; i < k; ++i) raw.unit_names[i] = prefix + "u" + std::to_string(i);
  raw.arrow_names.resize(na);
  raw.src.resize(na);
  raw.tgt.resize(na);
  raw.inv.resize(na);
  raw.comp_.assign(static_cast<size_t>(na) * na, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < m; ++g) {
        int a = id(i, j, g);
        raw.arrow_names[a] = prefix + "a" + std::to_string(i) + "_" +
                             std::to_string(j) +
                             (m == 1 ? "" : "_" + G.names[g]);
        raw.src[a] = j;
        raw.tgt[a] = i;
        raw.inv[a] = id(j, i, G.inv(g));
      }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        for (int g = 0; g < m; ++g)
          for (int h = 0; h < m; ++h)
            raw.comp_[static_cast<size_t>(id(i, j, g)) * na + id(j, l, h)] =
                id(i, l, G.mul(g, h));
  return verify_groupoid(raw);
}

inline Groupoid pair_groupoid(int n, const std::string& prefix = "") {
  return transitive_groupoid(n, cyclic_group(1), prefix);
}

inline Groupoid group_groupoid(const InverseSemigroup& G,
                               const std::string& prefix = "") {
  return transitive_groupoid(1, G, prefix);
}

inline Groupoid disjoint_union(const Groupoid& A, const Groupoid& B,
                               const std::string& pa = "l_",
                               const std::string& pb = "r_") {
  Groupoid raw;
  const int na = A.arrows(), nb = B.arrows();
  const int n = na + nb;
  for (auto& s : A.unit_names) raw.unit_names.push_back(pa + s);
  for (auto& s : B.unit_names) raw.unit_names.push_back(pb + s);
  for (auto& s : A.arrow_names) raw.arrow_names.push_back(pa + s);
  for (auto& s : B.arrow_names) raw.arrow_names.push_back(pb + s);
  raw.src = A.src;
  raw.tgt = A.tgt;
  raw.inv = A.inv;
  for (int i = 0; i < nb; ++i) {
    raw.src.push_back(B.src[i] + A.units());
    raw.tgt.push_back(B.tgt[i] + A.units());
    raw.inv.push_back(B.inv[i] + na);
  }
  raw.comp_.assign(static_cast<size_t>(n) * n, -1);
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h)
      raw.comp_[static_cast<size_t>(g) * n + h] = A.comp(g, h);
  for (int g = 0; g < nb; ++g)
    for (int h = 0; h < nb; ++h) {
      int c = B.comp(g, h);
      raw.comp_[static_cast<size_t>(g + na) * n + (h + na)] =
          c < 0 ? -1 : c + na;
    }
  return verify_groupoid(raw);
}

// Groupoid underlying the n-truncated sequence-shift example: the pair
// groupoid on n+1 units together with one extra isolated unit.
inline Groupoid btone_groupoid(int n) {
  return disjoint_union(pair_groupoid(n + 1), pair_groupoid(1), "", "f_");
}

// ---------------------------------------------------------------------------
// Corpus generation

struct NamedGroupoid {
  std::string name;
  Groupoid G;
};

// Every finite groupoid is a disjoint union of transitive ones; enumerate
// isomorphism classes as multisets of (unit count, isotropy group).
inline std::vector<NamedGroupoid> exhaustive_small_corpus(int max_units = 3,
                                                          int max_arrows = 8) {
  struct Comp {
    int k;
    int order;
    int variant;
    std::string label;
  };
  std::vector<Comp> pool;
  for (int k = 1; k <= max_units; ++k)
    for (int o = 1; k * k * o <= max_arrows && o <= 8; ++o) {
      auto gs = groups_of_order(o);
      for (size_t v = 0; v < gs.size(); ++v)
        pool.push_back({k, o, static_cast<int>(v),
                        "t" + std::to_string(k) + "_o" + std::to_string(o) +
                            (gs.size() > 1 ? "v" + std::to_string(v) : "")});
    }
  std::vector<NamedGroupoid> out;
  std::vector<int> chosen;
  auto build = [&]() {
    Groupoid G;
    std::string name;
    bool first = true;
    for (size_t ci = 0; ci < chosen.size(); ++ci) {
      const Comp& c = pool[chosen[ci]];
      std::string pfx = "c" + std::to_string(ci) + "_";
      Groupoid part = transitive_groupoid(
          c.k, groups_of_order(c.order)[c.variant], first ? pfx : "");
      if (first) {
        G = std::move(part);
        name = c.label;
        first = false;
      } else {
        G = disjoint_union(G, part, "", pfx);
        name += "+" + c.label;
      }
    }
    out.push_back({name, std::move(G)});
  };
  auto rec = [&](auto&& self, size_t from, int units_left,
                 int arrows_left) -> void {
    if (!chosen.empty()) build();
    for (size_t i = from; i < pool.size(); ++i) {
      const Comp& c = pool[i];
      if (c.k > units_left || c.k * c.k * c.order > arrows_left) continue;
      chosen.push_back(static_cast<int>(i));
      self(self, i, units_left - c.k, arrows_left - c.k * c.k * c.order);
      chosen.pop_back();
    }
  };
  rec(rec, 0, max_units, max_arrows);
  return out;
}

// Random groupoid with at most max_units units and max_arrows arrows,
// drawn as a disjoint union of random transitive components.
inline Groupoid random_groupoid(std::uint64_t seed, int max_units = 4,
                                int max_arrows = 10) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    int units = std::uniform_int_distribution<int>(1, max_units)(rng);
    // Partition the units into components.
    std::vector<int> sizes;
    int left = units;
    while (left > 0) {
      int k = std::uniform_int_distribution<int>(1, left)(rng);
      sizes.push_back(k);
      left -= k;
    }
    std::vector<std::pair<int, InverseSemigroup>> comps;
    int arrows = 0;
    bool ok = true;
    for (int k : sizes) {
      int max_order = (max_arrows - arrows) / (k * k);
      if (max_order < 1) { ok = false; break; }
      int o = std::uniform_int_distribution<int>(1, std::min(max_order, 8))(rng);
      auto gs = groups_of_order(o);
      auto& g = gs[std::uniform_int_distribution<size_t>(0, gs.size() - 1)(rng)];
      arrows += k * k * o;
      comps.emplace_back(k, g);
    }
    if (!ok || arrows > max_arrows) continue;
    Groupoid G;
    for (size_t i = 0; i < comps.size(); ++i) {
      std::string pfx = "c" + std::to_string(i) + "_";
      Groupoid part = transitive_groupoid(comps[i].first, comps[i].second,
                                          i == 0 ? pfx : "");
      G = i == 0 ? std::move(part) : disjoint_union(G, part, "", pfx);
    }
    return G;
  }
  throw error(errc::bad_argument, "random groupoid sampling failed");
}

}  // namespace nsd

#endif  // NSD_CORPUS_HPP
