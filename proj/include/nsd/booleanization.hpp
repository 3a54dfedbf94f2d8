#ifndef NSD_BOOLEANIZATION_HPP
#define NSD_BOOLEANIZATION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nsd/bis.hpp"
#include "nsd/common.hpp"
#include "nsd/duality.hpp"
#include "nsd/groupoid.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// ---------------------------------------------------------------------------
// Universal groupoid of a finite inverse semigroup.
//
// Units are the characters of E(S) (with zero sent to zero), i.e. the
// principal filters at nonzero idempotents.  Germs at the character of e are
// classified by the element s*e, so arrows are exactly the nonzero elements
// u, with d(u) = supp(u), r(u) = im(u) and composition the semigroup product
// whenever supp matches im.

struct UniversalGroupoid {
  Groupoid G;
  InverseSemigroup S0;          // input with a zero adjoined if necessary
  bool zero_adjoined = false;
  std::vector<int> arrow_elt;   // arrow -> element of S0 (nonzero)
  std::vector<int> elt_arrow;   // S0 element -> arrow, -1 for zero
};

inline UniversalGroupoid universal_groupoid(const InverseSemigroup& S) {
  UniversalGroupoid out;
  auto [S0, had_zero] = adjoin_zero(S);
  out.S0 = std::move(S0);
  out.zero_adjoined = !had_zero;
  const InverseSemigroup& T = out.S0;

  out.elt_arrow.assign(T.size(), -1);
  std::vector<int> unit_of_elt(T.size(), -1);
  Groupoid raw;
  for (int e = 0; e < T.size(); ++e)
    if (e != T.zero && T.is_idempotent(e)) {
      unit_of_elt[e] = static_cast<int>(raw.unit_names.size());
      raw.unit_names.push_back(T.names[e]);
    }
  for (int u = 0; u < T.size(); ++u) {
    if (u == T.zero) continue;
    out.elt_arrow[u] = static_cast<int>(out.arrow_elt.size());
    out.arrow_elt.push_back(u);
    raw.arrow_names.push_back(T.names[u]);
    raw.src.push_back(unit_of_elt[T.supp(u)]);
    raw.tgt.push_back(unit_of_elt[T.im(u)]);
  }
  const int na = static_cast<int>(out.arrow_elt.size());
  raw.inv.resize(na);
  raw.comp_.assign(static_cast<size_t>(na) * na, -1);
  for (int g = 0; g < na; ++g) {
    raw.inv[g] = out.elt_arrow[T.inv(out.arrow_elt[g])];
    for (int h = 0; h < na; ++h) {
      if (raw.src[g] != raw.tgt[h]) continue;
      int p = T.mul(out.arrow_elt[g], out.arrow_elt[h]);
      if (p == T.zero)
        throw error(errc::atom_composition_failure,
                    "composable germs multiplied to zero",
                    {T.names[out.arrow_elt[g]], T.names[out.arrow_elt[h]]});
      raw.comp_[static_cast<size_t>(g) * na + h] = out.elt_arrow[p];
    }
  }
  out.G = verify_groupoid(raw);
  return out;
}

// ---------------------------------------------------------------------------
// Booleanization: bisections of the universal groupoid, with the canonical
// embedding s -> { u : 0 != u <= s }.

struct Booleanization {
  UniversalGroupoid U;
  GammaResult bis;
  std::vector<int> embed;  // original S element -> element of bis.B

  const Bis& B() const { return bis.B; }
};

inline Booleanization booleanize(const InverseSemigroup& S,
                                 size_t cap = kDefaultBisectionCap) {
  Booleanization out;
  out.U = universal_groupoid(S);
  out.bis = gamma(out.U.G, cap);
  const InverseSemigroup& T = out.U.S0;
  out.embed.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    std::uint64_t m = 0;
    for (int u = 0; u < T.size(); ++u)
      if (u != T.zero && T.leq(u, s)) m |= bit(out.U.elt_arrow[u]);
    int b = out.bis.element_of(m);
    if (b < 0)
      throw error(errc::not_well_defined,
                  "embedded element is not a bisection", {S.names[s]});
    out.embed[s] = b;
  }
  // The embedding must be an injective semigroup homomorphism.
  std::vector<char> hit(out.bis.B.size(), 0);
  for (int b : out.embed) {
    if (hit[b])
      throw error(errc::not_well_defined, "embedding is not injective");
    hit[b] = 1;
  }
  if (!is_semigroup_hom(S, out.bis.B.S, out.embed))
    throw error(errc::not_a_homomorphism,
                "embedding is not a semigroup homomorphism");
  return out;
}

// ---------------------------------------------------------------------------
// Formal sums over S and their equivalence in the booleanization.
//
// A formal mod-2 sum of elements represents a function on the universal
// groupoid; two sums are equivalent exactly when at every germ u the number
// of terms lying above u has the same parity.

struct FormalSum {
  std::vector<int> terms;  // element indices of S, duplicates allowed
};

inline std::uint64_t sum_germ_mask(const Booleanization& Bz,
                                   const FormalSum& f) {
  std::uint64_t m = 0;
  for (int s : f.terms)
    m ^= Bz.bis.masks[Bz.embed[s]];
  return m;
}

inline bool sums_equivalent(const Booleanization& Bz, const FormalSum& a,
                            const FormalSum& b) {
  return sum_germ_mask(Bz, a) == sum_germ_mask(Bz, b);
}

// Direct witness for the equivalence of two sums: for each germ u, the
// parity condition, checked without going through precomputed masks.
inline bool sums_equivalent_pointwise(const Booleanization& Bz,
                                      const FormalSum& a, const FormalSum& b) {
  const InverseSemigroup& T = Bz.U.S0;
  for (int u = 0; u < T.size(); ++u) {
    if (u == T.zero) continue;
    int pa = 0, pb = 0;
    for (int s : a.terms)
      if (T.leq(u, s)) pa ^= 1;
    for (int s : b.terms)
      if (T.leq(u, s)) pb ^= 1;
    if (pa != pb) return false;
  }
  return true;
}

// All subsets of S as formal sums (canonical representatives), capped.
inline std::vector<FormalSum> formal_sums(const InverseSemigroup& S,
                                          size_t cap) {
  if (S.size() > 20) throw error(errc::too_large, "formal sum enumeration");
  std::vector<FormalSum> out;
  for (std::uint64_t sel = 0; sel < bit(S.size()); ++sel) {
    if (out.size() >= cap) throw error(errc::too_large, "formal sum cap");
    FormalSum f;
    for (int i = 0; i < S.size(); ++i)
      if (sel & bit(i)) f.terms.push_back(i);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Universal property: extending a zero-preserving semigroup homomorphism
// phi : S -> B to a morphism of Boolean inverse semigroups B(S) -> B.

struct ExtendedHom {
  std::vector<int> map;  // element of B(S) -> element of B
};

inline ExtendedHom extend_hom(const Booleanization& Bz, const Bis& B,
                              const std::vector<int>& phi) {
  const InverseSemigroup& S = Bz.U.S0;  // may have the adjoined zero
  // Lift phi to S0 if a zero was adjoined.
  std::vector<int> phi0(S.size());
  if (Bz.U.zero_adjoined) {
    for (size_t i = 0; i + 1 < static_cast<size_t>(S.size()); ++i)
      phi0[i] = phi[i];
    phi0[S.zero] = B.zero();
  } else {
    phi0 = phi;
  }
  if (!is_semigroup_hom(S, B.S, phi0) || phi0[S.zero] != B.zero())
    throw error(errc::not_a_homomorphism,
                "input is not a zero-preserving homomorphism");

  // Image of the germ at u: phi(u) cut down to "exactly at supp u": remove
  // the atoms of B below phi(f) for every idempotent f strictly below
  // supp u.  Computed in atom masks of E(B).
  const int na = Bz.U.G.arrows();
  std::vector<int> atom_image(na, -1);
  for (int g = 0; g < na; ++g) {
    int u = Bz.U.arrow_elt[g];
    int e = S.supp(u);
    std::uint64_t keep = B.batoms[phi0[e]];
    for (int f = 0; f < S.size(); ++f)
      if (f != e && f != S.zero && S.is_idempotent(f) && S.leq_idem(f, e))
        keep &= ~B.batoms[phi0[f]];
    int t = B.element_of_mask(keep);
    if (t < 0)
      throw error(errc::not_well_defined,
                  "germ cut-down does not exist in the target",
                  {S.names[u]});
    atom_image[g] = B.mul(phi0[u], t);
  }

  ExtendedHom out;
  out.map.resize(Bz.bis.B.size());
  for (int b = 0; b < Bz.bis.B.size(); ++b) {
    std::vector<int> family;
    for_bits(Bz.bis.masks[b], [&](int g) { family.push_back(atom_image[g]); });
    out.map[b] = orthogonal_join(B, family);  // throws if not orthogonal
  }
  std::string why;
  if (!is_bis_morphism(Bz.bis.B, B, out.map, &why))
    throw error(errc::not_a_homomorphism, "extension: " + why);
  // The extension must restrict to phi along the embedding.
  for (int s = 0; s < static_cast<int>(phi.size()); ++s)
    if (out.map[Bz.embed[s]] != phi[s])
      throw error(errc::not_well_defined,
                  "extension does not restrict to the given map");
  return out;
}

// Check uniqueness of the extension: every morphism B(S) -> B agreeing with
// phi on the embedded copy of S equals the canonical extension.  Exhaustive;
// small inputs only.
inline bool extension_unique(const Booleanization& Bz, const Bis& B,
                             const std::vector<int>& phi,
                             const ExtendedHom& ext) {
  std::vector<std::pair<int, int>> pinned;
  for (size_t s = 0; s < phi.size(); ++s)
    pinned.emplace_back(Bz.embed[s], phi[s]);
  auto all = bis_morphisms(Bz.bis.B, B, pinned);
  for (auto& m : all)
    if (m != ext.map) return false;
  return !all.empty();
}

}  // namespace nsd

#endif  // NSD_BOOLEANIZATION_HPP
