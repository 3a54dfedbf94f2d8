#ifndef NSD_INVERSE_SEMIGROUP_HPP
#define NSD_INVERSE_SEMIGROUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsd/common.hpp"

namespace nsd {

// Finite inverse semigroup given by a full multiplication table.  Elements
// are indices into `names`; `zero` is the absorbing element if one exists.
struct InverseSemigroup {
  std::vector<std::string> names;
  std::vector<int> mul_;  // n*n, row-major
  std::vector<int> inv_;
  int zero = -1;

  int size() const { return static_cast<int>(names.size()); }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int mul3(int a, int b, int c) const { return mul(mul(a, b), c); }
  int inv(int a) const { return inv_[a]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  int supp(int s) const { return mul(inv(s), s); }
  int im(int s) const { return mul(s, inv(s)); }

  // e <= f on idempotents.
  bool leq_idem(int e, int f) const { return mul(e, f) == e; }
  // Natural partial order on all elements.
  bool leq(int s, int t) const {
    return leq_idem(supp(s), supp(t)) && mul(t, supp(s)) == s;
  }
  bool has_zero() const { return zero >= 0; }

  std::vector<int> idempotent_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (is_idempotent(i)) out.push_back(i);
    return out;
  }
};

// Semilattice of idempotents of an inverse semigroup: carrier indices into
// the parent plus the restricted multiplication (= meet) table.
struct IdempotentSemilattice {
  std::vector<std::string> names;  // names[i] of carrier element i
  std::vector<int> carrier;        // parent indices, ascending
  std::vector<int> meet_;          // |carrier|^2 table of carrier positions
  int zero_pos = -1;               // position of the parent's zero, if any

  int size() const { return static_cast<int>(carrier.size()); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
};

struct Character {
  std::vector<char> assignment;  // over semilattice positions
  bool respects_zero = false;
  bool operator==(const Character&) const = default;
};

// A congruence as a normalized class assignment: cls[i] is the class of
// element i, classes numbered by first occurrence.
struct Congruence {
  std::vector<int> cls;
  int num_classes = 0;
  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return cls < o.cls; }
};

inline Congruence normalize_partition(std::vector<int> cls) {
  std::vector<int> remap(cls.size(), -1);
  int next = 0;
  for (int& c : cls) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
  return Congruence{std::move(cls), next};
}

// ---------------------------------------------------------------------------
// Validation

inline InverseSemigroup verify_inverse_semigroup(
    std::vector<std::string> names, std::vector<int> mul,
    std::optional<std::vector<int>> inv_hint = std::nullopt) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw error(errc::bad_argument, "empty carrier");
  if (static_cast<int>(mul.size()) != n * n)
    throw error(errc::bad_argument, "multiplication table has wrong size");
  for (int v : mul)
    if (v < 0 || v >= n)
      throw error(errc::bad_argument, "table entry out of range");

  InverseSemigroup S;
  S.names = std::move(names);
  S.mul_ = std::move(mul);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
          throw error(errc::not_associative, "witness triple",
                      {S.names[a], S.names[b], S.names[c]});

  S.inv_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (S.mul3(s, t, s) == s && S.mul3(t, s, t) == t) {
        if (S.inv_[s] >= 0)
          throw error(errc::inverse_not_unique, "two inverses for element",
                      {S.names[s], S.names[S.inv_[s]], S.names[t]});
        S.inv_[s] = t;
      }
    }
    if (S.inv_[s] < 0)
      throw error(errc::no_inverse, "element has no inverse", {S.names[s]});
  }
  if (inv_hint && *inv_hint != S.inv_)
    throw error(errc::bad_argument, "inverse hint does not match computed inverses");

  // Absorbing idempotent scan.
  for (int z = 0; z < n; ++z) {
    if (!S.is_idempotent(z)) continue;
    bool absorbing = true;
    for (int s = 0; s < n && absorbing; ++s)
      absorbing = S.mul(z, s) == z && S.mul(s, z) == z;
    if (absorbing) {
      S.zero = z;
      break;
    }
  }
  return S;
}

inline InverseSemigroup verify_inverse_semigroup(const InverseSemigroup& raw) {
  return verify_inverse_semigroup(raw.names, raw.mul_);
}

// ---------------------------------------------------------------------------
// Idempotents and characters

inline IdempotentSemilattice idempotents(const InverseSemigroup& S) {
  IdempotentSemilattice E;
  E.carrier = S.idempotent_indices();
  const int m = static_cast<int>(E.carrier.size());
  std::vector<int> pos(S.size(), -1);
  for (int i = 0; i < m; ++i) pos[E.carrier[i]] = i;
  E.meet_.assign(m * m, -1);
  for (int i = 0; i < m; ++i) {
    E.names.push_back(S.names[E.carrier[i]]);
    for (int j = 0; j < m; ++j) {
      int p = S.mul(E.carrier[i], E.carrier[j]);
      if (pos[p] < 0)
        throw error(errc::bad_argument, "idempotents not closed under meet",
                    {S.names[E.carrier[i]], S.names[E.carrier[j]]});
      E.meet_[i * m + j] = pos[p];
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (E.meet(i, j) != E.meet(j, i))
        throw error(errc::bad_argument, "meet not commutative");
  if (S.has_zero()) E.zero_pos = pos[S.zero];
  return E;
}

enum class zero_policy { enforce_zero, allow_trivial };

// All characters of a finite meet-semilattice.  Every filter of a finite
// semilattice is principal, so characters are exactly the maps
// chi_e(f) = [e <= f] for e in E.
inline std::vector<Character> characters(const IdempotentSemilattice& E,
                                         zero_policy policy) {
  std::vector<Character> out;
  for (int e = 0; e < E.size(); ++e) {
    if (policy == zero_policy::enforce_zero && e == E.zero_pos) continue;
    Character chi;
    chi.respects_zero = policy == zero_policy::enforce_zero;
    chi.assignment.resize(E.size());
    for (int f = 0; f < E.size(); ++f) chi.assignment[f] = E.leq(e, f) ? 1 : 0;
    out.push_back(std::move(chi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zero adjunction

inline std::pair<InverseSemigroup, bool> adjoin_zero(const InverseSemigroup& S) {
  if (S.has_zero()) return {S, true};
  const int n = S.size();
  InverseSemigroup T;
  T.names = S.names;
  std::string zname = "0";
  while (std::find(T.names.begin(), T.names.end(), zname) != T.names.end())
    zname += "_";
  T.names.push_back(zname);
  T.mul_.assign((n + 1) * (n + 1), n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) T.mul_[a * (n + 1) + b] = S.mul(a, b);
  T.inv_ = S.inv_;
  T.inv_.push_back(n);
  T.zero = n;
  return {T, false};
}

// ---------------------------------------------------------------------------
// Congruences

struct congruence_options {
  int size_cap = 12;
};

inline bool is_congruence(const InverseSemigroup& S, const std::vector<int>& cls) {
  const int n = S.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (cls[a] != cls[b]) continue;
      if (cls[S.inv(a)] != cls[S.inv(b)]) return false;
      for (int c = 0; c < n; ++c) {
        if (cls[S.mul(a, c)] != cls[S.mul(b, c)]) return false;
        if (cls[S.mul(c, a)] != cls[S.mul(c, b)]) return false;
      }
    }
  return true;
}

// Quotient semigroup of a congruence; revalidated.
inline InverseSemigroup quotient(const InverseSemigroup& S, const Congruence& c) {
  const int m = c.num_classes;
  std::vector<std::string> names(m);
  for (int i = 0; i < S.size(); ++i) {
    if (names[c.cls[i]].empty()) names[c.cls[i]] = S.names[i];
  }
  std::vector<int> mul(m * m, -1);
  for (int a = 0; a < S.size(); ++a)
    for (int b = 0; b < S.size(); ++b)
      mul[c.cls[a] * m + c.cls[b]] = c.cls[S.mul(a, b)];
  return verify_inverse_semigroup(std::move(names), std::move(mul));
}

// All involution-compatible congruences, enumerated over restricted growth
// strings in lexicographic order.
inline std::vector<Congruence> congruences(const InverseSemigroup& S,
                                           congruence_options opts = {}) {
  const int n = S.size();
  if (n > opts.size_cap)
    throw error(errc::too_large, "carrier exceeds congruence enumeration cap (" +
                                     std::to_string(opts.size_cap) + ")");
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int maxc) -> void {
    if (i == n) {
      if (is_congruence(S, rgs)) out.push_back(normalize_partition(rgs));
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      rgs[i] = c;
      self(self, i + 1, std::max(maxc, c));
    }
  };
  rec(rec, 1, 0);  // rgs[0] = 0 fixed
  return out;
}

// Refinement order on partitions: a <= b iff every a-class is inside a b-class.
inline bool refines(const Congruence& a, const Congruence& b) {
  std::map<int, int> img;
  for (size_t i = 0; i < a.cls.size(); ++i) {
    auto [it, fresh] = img.emplace(a.cls[i], b.cls[i]);
    if (!fresh && it->second != b.cls[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Groups and the minimum group congruence

inline bool is_group(const InverseSemigroup& S) {
  int idem = 0;
  for (int i = 0; i < S.size(); ++i)
    if (S.is_idempotent(i)) ++idem;
  return idem == 1;
}

// Group with adjoined zero: exactly two idempotents and the nonzero part
// closed under multiplication.
inline bool is_group_with_zero(const InverseSemigroup& S) {
  if (!S.has_zero()) return false;
  int idem = 0;
  for (int i = 0; i < S.size(); ++i)
    if (S.is_idempotent(i)) ++idem;
  if (idem != 2) return false;
  for (int a = 0; a < S.size(); ++a)
    for (int b = 0; b < S.size(); ++b)
      if (a != S.zero && b != S.zero && S.mul(a, b) == S.zero) return false;
  return true;
}

// Minimum group congruence: s ~ t iff s and t share a lower bound in the
// natural order (equivalently es = et for some idempotent e).
inline std::pair<Congruence, InverseSemigroup> min_group_congruence(
    const InverseSemigroup& S) {
  const int n = S.size();
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  auto root = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      bool related = false;
      for (int u = 0; u < n && !related; ++u)
        related = S.leq(u, s) && S.leq(u, t);
      if (related) cls[root(s)] = root(t);
    }
  for (int i = 0; i < n; ++i) cls[i] = root(i);
  Congruence c = normalize_partition(cls);
  if (!is_congruence(S, c.cls))
    throw error(errc::bad_argument, "minimum group relation is not a congruence");
  InverseSemigroup Q = quotient(S, c);
  if (!is_group(Q))
    throw error(errc::bad_argument, "minimum group quotient is not a group");
  return {c, Q};
}

// ---------------------------------------------------------------------------
// Substructures, homomorphisms, isomorphism (small-scale search helpers)

// Closed subsemigroup generated by `gens` (indices), with the involution.
inline std::vector<int> inverse_subsemigroup_closure(const InverseSemigroup& S,
                                                     std::vector<int> gens) {
  std::vector<char> in(S.size(), 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  for (int g : gens) {
    add(g);
    add(S.inv(g));
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      add(S.mul(work[i], work[j]));
      add(S.mul(work[j], work[i]));
    }
  std::vector<int> out;
  for (int x = 0; x < S.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Restriction of S to a subset closed under products and involution.
inline InverseSemigroup subsemigroup(const InverseSemigroup& S,
                                     const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<int> pos(S.size(), -1);
  for (int i = 0; i < m; ++i) pos[subset[i]] = i;
  std::vector<std::string> names(m);
  std::vector<int> mul(m * m);
  for (int i = 0; i < m; ++i) {
    names[i] = S.names[subset[i]];
    for (int j = 0; j < m; ++j) {
      int p = S.mul(subset[i], subset[j]);
      if (pos[p] < 0)
        throw error(errc::bad_argument, "subset not closed under products");
      mul[i * m + j] = pos[p];
    }
  }
  return verify_inverse_semigroup(std::move(names), std::move(mul));
}

inline bool is_semigroup_hom(const InverseSemigroup& S, const InverseSemigroup& T,
                             const std::vector<int>& map) {
  for (int a = 0; a < S.size(); ++a)
    for (int b = 0; b < S.size(); ++b)
      if (map[S.mul(a, b)] != T.mul(map[a], map[b])) return false;
  return true;
}

// All semigroup homomorphisms S -> T, with zero -> zero when both sides have
// one; backtracking with incremental consistency checks.
inline std::vector<std::vector<int>> semigroup_homs(const InverseSemigroup& S,
                                                    const InverseSemigroup& T,
                                                    size_t limit = SIZE_MAX) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(S.size(), -1);
  auto consistent = [&](int k) {
    for (int a = 0; a <= k; ++a) {
      if (map[a] < 0) continue;
      for (int b = 0; b <= k; ++b) {
        if (map[b] < 0) continue;
        int p = S.mul(a, b);
        if (p <= k && map[p] >= 0 && map[p] != T.mul(map[a], map[b]))
          return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (out.size() >= limit) return;
    if (k == S.size()) {
      if (is_semigroup_hom(S, T, map)) out.push_back(map);
      return;
    }
    if (S.has_zero() && k == S.zero && T.has_zero()) {
      map[k] = T.zero;
      if (consistent(k)) self(self, k + 1);
      map[k] = -1;
      return;
    }
    for (int t = 0; t < T.size(); ++t) {
      map[k] = t;
      if (consistent(k)) self(self, k + 1);
    }
    map[k] = -1;
  };
  rec(rec, 0);
  return out;
}

// First isomorphism between two inverse semigroups found by backtracking,
// or nullopt.  Intended for small carriers (groups in particular).
inline std::optional<std::vector<int>> find_semigroup_iso(
    const InverseSemigroup& S, const InverseSemigroup& T) {
  if (S.size() != T.size()) return std::nullopt;
  const int n = S.size();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto ok = [&](int k) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        int p = S.mul(a, b);
        if (p <= k && map[p] != T.mul(map[a], map[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return is_semigroup_hom(S, T, map);
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      if (S.is_idempotent(k) != T.is_idempotent(t)) continue;
      map[k] = t;
      used[t] = 1;
      if (ok(k) && self(self, k + 1)) return true;
      used[t] = 0;
      map[k] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace nsd

#endif  // NSD_INVERSE_SEMIGROUP_HPP
