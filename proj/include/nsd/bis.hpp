#ifndef NSD_BIS_HPP
#define NSD_BIS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsd/common.hpp"
#include "nsd/gba.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// Boolean inverse semigroup.  On top of the underlying inverse semigroup
// with zero we keep the canonical atom decomposition: `batoms[b]` is the
// set of atoms of B lying below b, as a mask over `atom_elt`.  Every
// element is the join of its atoms, so masks determine elements and joins
// of orthogonal families are mask unions.
struct Bis {
  InverseSemigroup S;
  std::vector<int> idems;                       // idempotent indices, ascending
  std::vector<int> atom_elt;                    // atom id -> element index
  std::vector<std::uint64_t> batoms;            // element -> atom mask
  std::unordered_map<std::uint64_t, int> by_mask;
  int unit = -1;                                // top idempotent (monoidal unit)

  int size() const { return S.size(); }
  int n_atoms() const { return static_cast<int>(atom_elt.size()); }
  int mul(int a, int b) const { return S.mul(a, b); }
  int inv(int a) const { return S.inv(a); }
  int zero() const { return S.zero; }
  bool leq(int a, int b) const { return (batoms[a] & ~batoms[b]) == 0; }
  bool orthogonal(int s, int t) const {
    return S.mul(s, S.inv(t)) == S.zero && S.mul(S.inv(s), t) == S.zero;
  }
  int element_of_mask(std::uint64_t m) const {
    auto it = by_mask.find(m);
    return it == by_mask.end() ? -1 : it->second;
  }
  const std::string& name(int i) const { return S.names[i]; }
};

namespace detail {

// Shared tail of BIS construction: atom decomposition, join existence and
// the GBA check on idempotents.
inline Bis finish_bis(InverseSemigroup S, bool check_joins) {
  if (!S.has_zero())
    throw error(errc::bad_argument, "Boolean inverse semigroup needs a zero");
  Bis B;
  B.S = std::move(S);
  B.idems = B.S.idempotent_indices();
  const int n = B.S.size();

  // Atoms of B: minimal nonzero elements in the natural order.
  std::vector<char> is_atom(n, 0);
  for (int a = 0; a < n; ++a) {
    if (a == B.S.zero) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b)
      if (b != a && b != B.S.zero && B.S.leq(b, a)) minimal = false;
    if (minimal) {
      is_atom[a] = 1;
      B.atom_elt.push_back(a);
    }
  }
  if (B.n_atoms() > 62)
    throw error(errc::too_large, "too many atoms for mask representation");

  B.batoms.assign(n, 0);
  for (int b = 0; b < n; ++b)
    for (int i = 0; i < B.n_atoms(); ++i)
      if (B.S.leq(B.atom_elt[i], b)) B.batoms[b] |= bit(i);
  for (int b = 0; b < n; ++b) {
    auto [it, fresh] = B.by_mask.emplace(B.batoms[b], b);
    if (!fresh)
      throw error(errc::bad_argument,
                  "elements not determined by their atoms (not a BIS)",
                  {B.S.names[it->second], B.S.names[b]});
  }

  // E(B) must be a generalized Boolean algebra.  Finite case: the map
  // e -> {atoms of E below e} must be onto the full power set of the atoms
  // of E, which follows from |E| = 2^k plus injectivity (already checked).
  std::uint64_t eatoms_all = 0;
  int k = 0;
  for (int e : B.idems)
    if (is_atom[e]) ++k;
  (void)eatoms_all;
  if (static_cast<std::uint64_t>(B.idems.size()) != bit(k)) {
    // Find a witness pair without a relative complement.
    for (int e : B.idems)
      for (int f : B.idems) {
        bool found = false;
        for (int x : B.idems) {
          if (B.S.mul(x, f) != B.S.zero) continue;
          if (!B.S.leq_idem(x, e)) continue;
          // Need x join (e*f) = e: check least upper bound property.
          int ef = B.S.mul(e, f);
          std::uint64_t m = B.batoms[x] | B.batoms[ef];
          if (m == B.batoms[e]) found = true;
        }
        if (!found)
          throw error(errc::idempotents_not_gba,
                      "no relative complement", {B.S.names[e], B.S.names[f]});
      }
    throw error(errc::idempotents_not_gba, "idempotent count is not a power of two");
  }

  // Orthogonal pairs have joins, and the join is the mask union.
  if (check_joins) {
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (!B.orthogonal(s, t)) continue;
        std::uint64_t m = B.batoms[s] | B.batoms[t];
        int j = B.element_of_mask(m);
        if (j < 0)
          throw error(errc::missing_join, "orthogonal pair has no join",
                      {B.S.names[s], B.S.names[t]});
        // j must be the least upper bound.
        if (!B.S.leq(s, j) || !B.S.leq(t, j))
          throw error(errc::missing_join, "join candidate is not an upper bound",
                      {B.S.names[s], B.S.names[t]});
        for (int v = 0; v < n; ++v)
          if (B.S.leq(s, v) && B.S.leq(t, v) && !B.S.leq(j, v))
            throw error(errc::missing_join, "no least upper bound",
                        {B.S.names[s], B.S.names[t], B.S.names[v]});
      }
  }

  // Monoidal unit: the top idempotent, if it acts as a two-sided identity.
  std::uint64_t full = 0;
  for (int i = 0; i < B.n_atoms(); ++i)
    if (B.S.is_idempotent(B.atom_elt[i])) full |= bit(i);
  int top = -1;
  for (int e : B.idems)
    if (B.batoms[e] == full) top = e;
  if (top >= 0) {
    bool ident = true;
    for (int b = 0; b < n && ident; ++b)
      ident = B.S.mul(top, b) == b && B.S.mul(b, top) == b;
    if (ident) B.unit = top;
  }
  return B;
}

}  // namespace detail

// Validate an inverse semigroup with zero as a Boolean inverse semigroup.
inline Bis verify_bis(const InverseSemigroup& S) {
  return detail::finish_bis(S, /*check_joins=*/true);
}

// Construction path for semigroups known to be Boolean (bisection algebras
// built by duality); runs the cheap structural checks only.
inline Bis assemble_bis(InverseSemigroup S) {
  return detail::finish_bis(std::move(S), /*check_joins=*/false);
}

// Least upper bound of a pairwise orthogonal family; join of the empty
// family is 0.
inline int orthogonal_join(const Bis& B, const std::vector<int>& family) {
  std::uint64_t m = 0;
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!B.orthogonal(family[i], family[j]))
        throw error(errc::not_orthogonal, "family is not pairwise orthogonal",
                    {B.name(family[i]), B.name(family[j])});
  for (int b : family) m |= B.batoms[b];
  int j = B.element_of_mask(m);
  if (j < 0)
    throw error(errc::missing_join, "join missing (corrupt structure)");
  return j;
}

// ---------------------------------------------------------------------------
// Corners

struct Corner {
  Bis B;
  std::vector<int> embed;  // corner element -> ambient element
};

inline Corner corner(const Bis& B, int p) {
  if (!B.S.is_idempotent(p))
    throw error(errc::not_idempotent, "corner base must be idempotent",
                {B.name(p)});
  std::vector<char> in(B.size(), 0);
  std::vector<int> elems;
  for (int b = 0; b < B.size(); ++b) {
    int c = B.S.mul(B.S.mul(p, b), p);
    if (!in[c]) {
      in[c] = 1;
      elems.push_back(c);
    }
  }
  std::sort(elems.begin(), elems.end());
  Corner out;
  out.embed = elems;
  out.B = verify_bis(subsemigroup(B.S, elems));
  return out;
}

// ---------------------------------------------------------------------------
// Additive ideals

struct AdditiveIdeal {
  std::vector<int> elems;  // ascending element indices, containing zero
  bool operator==(const AdditiveIdeal&) const = default;
};

inline bool is_additive_ideal(const Bis& B, const std::vector<char>& in) {
  if (!in[B.zero()]) return false;
  for (int b = 0; b < B.size(); ++b) {
    if (!in[b]) continue;
    for (int x = 0; x < B.size(); ++x)
      if (!in[B.mul(x, b)] || !in[B.mul(b, x)]) return false;
    for (int t = 0; t < B.size(); ++t)
      if (in[t] && B.orthogonal(b, t) &&
          !in[orthogonal_join(B, {b, t})])
        return false;
  }
  return true;
}

// Additive ideals are determined by the invariant atom sets of E(B): the
// ideal generated by a union of atom orbits under s e s*.  Enumerated over
// orbit unions and each candidate re-verified against the definition.
inline std::vector<AdditiveIdeal> additive_ideals(const Bis& B) {
  // Atom connectivity: atoms x, y of E are linked when some atom arrow of B
  // has support x and image y.
  const int k = B.n_atoms();
  std::vector<int> eatom_ids;  // atom ids that are idempotent
  std::vector<int> atom_to_class(k, -1);
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> atom_of_elt(B.size(), -1);
  for (int i = 0; i < k; ++i) atom_of_elt[B.atom_elt[i]] = i;
  for (int i = 0; i < k; ++i) {
    int a = B.atom_elt[i];
    int s = atom_of_elt[B.S.supp(a)];
    int r = atom_of_elt[B.S.im(a)];
    if (s < 0 || r < 0)
      throw error(errc::atom_composition_failure,
                  "support of an atom is not an atom", {B.name(a)});
    parent[root(s)] = root(r);
  }
  std::vector<int> classes;
  for (int i = 0; i < k; ++i)
    if (B.S.is_idempotent(B.atom_elt[i]) && root(i) == i) classes.push_back(i);
  // Non-idempotent atoms belong to the class of their support.
  if (classes.size() > 20)
    throw error(errc::too_large, "too many atom orbits for ideal enumeration");

  std::vector<AdditiveIdeal> out;
  for (std::uint64_t sel = 0; sel < bit(static_cast<int>(classes.size()));
       ++sel) {
    std::uint64_t allowed = 0;  // mask over idempotent atoms
    for (size_t c = 0; c < classes.size(); ++c)
      if (sel & bit(static_cast<int>(c)))
        for (int i = 0; i < k; ++i)
          if (B.S.is_idempotent(B.atom_elt[i]) && root(i) == classes[c])
            allowed |= bit(i);
    std::vector<char> in(B.size(), 0);
    AdditiveIdeal I;
    for (int b = 0; b < B.size(); ++b) {
      std::uint64_t se = B.batoms[B.S.supp(b)];
      if ((se & ~allowed) == 0) {
        in[b] = 1;
        I.elems.push_back(b);
      }
    }
    if (!is_additive_ideal(B, in))
      throw error(errc::bad_argument, "orbit union failed ideal verification");
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(), [](const AdditiveIdeal& a, const AdditiveIdeal& b) {
    return std::pair(a.elems.size(), a.elems) < std::pair(b.elems.size(), b.elems);
  });
  return out;
}

struct ZeroSimplifying {
  bool value = false;
  bool degenerate = false;                 // B = {0}
  std::optional<AdditiveIdeal> witness;    // proper nonzero ideal when false
};

inline ZeroSimplifying is_zero_simplifying(const Bis& B) {
  ZeroSimplifying out;
  if (B.size() == 1) {
    out.degenerate = true;
    out.value = false;  // {0} and B coincide, by convention not 0-simplifying
    return out;
  }
  auto ideals = additive_ideals(B);
  out.value = ideals.size() == 2;
  if (!out.value) {
    for (auto& I : ideals)
      if (I.elems.size() > 1 && static_cast<int>(I.elems.size()) < B.size()) {
        out.witness = I;
        break;
      }
  }
  return out;
}

struct Monoidal {
  bool value = false;
  bool degenerate = false;
  int unit = -1;
};

inline Monoidal is_monoidal(const Bis& B) {
  Monoidal out;
  out.degenerate = B.size() == 1;
  out.value = B.unit >= 0;
  out.unit = B.unit;
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

struct BisMorphism {
  std::vector<int> map;  // source element -> target element

  int operator()(int i) const { return map[i]; }
};

inline bool is_bis_morphism(const Bis& A, const Bis& B, const std::vector<int>& map,
                            std::string* why = nullptr) {
  if (map.size() != static_cast<size_t>(A.size())) return false;
  if (map[A.zero()] != B.zero()) {
    if (why) *why = "zero not preserved";
    return false;
  }
  for (int a = 0; a < A.size(); ++a) {
    if (map[A.inv(a)] != B.inv(map[a])) {
      if (why) *why = "involution not preserved at " + A.name(a);
      return false;
    }
    for (int b = 0; b < A.size(); ++b) {
      if (map[A.mul(a, b)] != B.mul(map[a], map[b])) {
        if (why) *why = "product not preserved at " + A.name(a) + "," + A.name(b);
        return false;
      }
      if (A.orthogonal(a, b)) {
        if (!B.orthogonal(map[a], map[b])) {
          if (why) *why = "orthogonality not preserved";
          return false;
        }
        int j = orthogonal_join(A, {a, b});
        if (map[j] != orthogonal_join(B, {map[a], map[b]})) {
          if (why) *why = "orthogonal join not preserved";
          return false;
        }
      }
    }
  }
  return true;
}

inline BisMorphism verify_bis_morphism(const Bis& A, const Bis& B,
                                       std::vector<int> map) {
  std::string why;
  if (!is_bis_morphism(A, B, map, &why))
    throw error(errc::not_a_homomorphism, why);
  return BisMorphism{std::move(map)};
}

inline std::vector<int> morphism_kernel(const Bis& A, const Bis& B,
                                        const BisMorphism& phi) {
  std::vector<int> out;
  for (int a = 0; a < A.size(); ++a)
    if (phi(a) == B.zero()) out.push_back(a);
  return out;
}

// All BIS morphisms A -> B (backtracking; small inputs only), optionally
// pinned on a subset of A.
inline std::vector<std::vector<int>> bis_morphisms(
    const Bis& A, const Bis& B,
    const std::vector<std::pair<int, int>>& pinned = {}, size_t limit = SIZE_MAX) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(A.size(), -1);
  for (auto [a, b] : pinned) {
    if (map[a] != -1 && map[a] != b) return out;
    map[a] = b;
  }
  std::vector<int> order;  // unassigned positions
  for (int a = 0; a < A.size(); ++a)
    if (map[a] < 0 && a != A.zero()) order.push_back(a);
  auto consistent = [&]() {
    for (int a = 0; a < A.size(); ++a) {
      if (map[a] < 0) continue;
      if (map[A.inv(a)] != -1 && map[A.inv(a)] != B.inv(map[a])) return false;
      for (int b = 0; b < A.size(); ++b) {
        if (map[b] < 0) continue;
        int p = A.mul(a, b);
        if (map[p] != -1 && map[p] != B.mul(map[a], map[b])) return false;
      }
    }
    return true;
  };
  map[A.zero()] = B.zero();
  if (!consistent()) return out;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (out.size() >= limit) return;
    if (i == order.size()) {
      if (is_bis_morphism(A, B, map)) out.push_back(map);
      return;
    }
    for (int b = 0; b < B.size(); ++b) {
      map[order[i]] = b;
      if (consistent()) self(self, i + 1);
    }
    map[order[i]] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace nsd

#endif  // NSD_BIS_HPP
