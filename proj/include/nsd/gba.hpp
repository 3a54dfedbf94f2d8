#ifndef NSD_GBA_HPP
#define NSD_GBA_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "nsd/common.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// Finite Boolean rng in canonical form: elements are subsets of the atom
// set, encoded as bit masks.  Addition is symmetric difference (xor), the
// product is meet (and); the carrier is all 2^atom_count masks.
//
// For the semigroup rng I(S) = F2[E(S)] the atoms are in bijection with the
// characters of E, i.e. with the principal filters of E; `basis` records the
// embedding of E and `atom_rep` expresses each atom as an F2 combination of
// basis elements (used to extend maps defined on E).
struct BooleanRng {
  int atom_count = 0;
  std::vector<std::string> atom_names;
  std::vector<std::uint64_t> basis;        // semilattice position -> mask
  std::vector<std::vector<int>> atom_rep;  // atom -> semilattice positions
  std::vector<int> atom_filter;            // atom -> defining E position
  bool zero_identified = false;

  std::uint64_t top() const {
    return atom_count == 64 ? ~std::uint64_t(0) : bit(atom_count) - 1;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a ^ b; }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a & b; }
  static bool leq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
  std::uint64_t size() const { return bit(atom_count); }
};

// I(S) = F2[E] as a Boolean rng, with the basis embedding E -> I(S).
// When zero_identified is set (mandatory when the parent semigroup has a
// zero) the basis element at the zero of E is identified with the rng zero.
inline BooleanRng semigroup_rng(const IdempotentSemilattice& E,
                                bool zero_identified) {
  if (E.zero_pos >= 0 && !zero_identified)
    throw error(errc::bad_argument,
                "zero_identified is mandatory when the semilattice has a zero");
  if (zero_identified && E.zero_pos < 0)
    throw error(errc::bad_argument, "no zero to identify");

  BooleanRng R;
  R.zero_identified = zero_identified;
  // Atoms <-> characters <-> principal filters on elements of E (without
  // the zero, whose character is excluded by identification).
  for (int e = 0; e < E.size(); ++e) {
    if (zero_identified && e == E.zero_pos) continue;
    R.atom_filter.push_back(e);
    R.atom_names.push_back(E.names[e]);
  }
  R.atom_count = static_cast<int>(R.atom_filter.size());
  if (R.atom_count > 62)
    throw error(errc::too_large, "semilattice too large for rng construction");

  R.basis.assign(E.size(), 0);
  for (int f = 0; f < E.size(); ++f)
    for (int a = 0; a < R.atom_count; ++a)
      if (E.leq(R.atom_filter[a], f)) R.basis[f] |= bit(a);
  if (zero_identified) R.basis[E.zero_pos] = 0;

  // Sanity: the embedding must be injective and meet-preserving.
  for (int e = 0; e < E.size(); ++e)
    for (int f = 0; f < E.size(); ++f) {
      if ((R.basis[e] & R.basis[f]) != R.basis[E.meet(e, f)])
        throw error(errc::bad_argument, "basis embedding fails to preserve meet",
                    {E.names[e], E.names[f]});
      if (e != f && R.basis[e] == R.basis[f] &&
          !(zero_identified && (e == E.zero_pos || f == E.zero_pos)))
        throw error(errc::bad_argument, "basis embedding not injective",
                    {E.names[e], E.names[f]});
    }

  // Express each atom as an F2 combination of basis masks: Gauss-Jordan on
  // the augmented system [basis columns | identity].  The number of basis
  // positions equals the atom count, and the order matrix is triangular
  // under any linear extension, so the matrix is invertible.
  std::vector<int> positions;
  for (int e = 0; e < E.size(); ++e) {
    if (zero_identified && e == E.zero_pos) continue;
    positions.push_back(e);
  }
  const int d = R.atom_count;
  std::vector<std::uint64_t> row(d, 0), aug(d, 0);  // rows indexed by atom
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < d; ++i)
      if (R.basis[positions[i]] & bit(a)) row[a] |= bit(i);
    aug[a] = bit(a);
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d && piv < 0; ++r)
      if (row[r] & bit(col)) piv = r;
    if (piv < 0) throw error(errc::bad_argument, "basis not independent");
    std::swap(row[col], row[piv]);
    std::swap(aug[col], aug[piv]);
    for (int r = 0; r < d; ++r)
      if (r != col && (row[r] & bit(col))) {
        row[r] ^= row[col];
        aug[r] ^= aug[col];
      }
  }
  // Now aug holds the inverse: combination aug[i] (over atom rows) solves
  // for coordinate column i; recover the combination producing each atom.
  R.atom_rep.resize(d);
  for (int a = 0; a < d; ++a) {
    std::uint64_t combo = 0;
    for (int i = 0; i < d; ++i)
      if (aug[i] & bit(a)) combo |= bit(i);
    // combo holds basis positions whose sum is atom a; verify.
    std::uint64_t check = 0;
    for_bits(combo, [&](int i) {
      check ^= R.basis[positions[i]];
      R.atom_rep[a].push_back(positions[i]);
    });
    if (check != bit(a))
      throw error(errc::not_atomistic, "atom not in the span of the basis",
                  {R.atom_names[a]});
  }
  return R;
}

struct Atom {
  int index;
  std::uint64_t element;  // singleton mask
};

// Minimal nonzero elements; verifies the atomistic decomposition x = sum of
// atoms below x, which is structural in the mask encoding but re-checked
// against the order predicate.
inline std::vector<Atom> atoms(const BooleanRng& R) {
  std::vector<Atom> out;
  for (int a = 0; a < R.atom_count; ++a) {
    out.push_back({a, bit(a)});
    for (int b = 0; b < R.atom_count; ++b)
      if (b != a && BooleanRng::leq(bit(b), bit(a)))
        throw error(errc::not_atomistic, "atom not minimal", {R.atom_names[a]});
  }
  return out;
}

struct RngCharacter {
  int atom;  // chi(x) = 1 iff this atom lies below x
};

inline std::vector<RngCharacter> rng_characters(const BooleanRng& R) {
  std::vector<RngCharacter> out;
  for (int a = 0; a < R.atom_count; ++a) out.push_back({a});
  return out;
}

// Finite Stone duality for the commutative layer: the spectrum is the atom
// set, and x -> {atoms below x} identifies R with the power set rng of X.
struct StoneSpectrum {
  std::vector<std::string> points;  // one per atom
};

inline StoneSpectrum stone_spectrum(const BooleanRng& R) {
  StoneSpectrum X{R.atom_names};
  // Roundtrip check: the map x -> {a : a <= x} must be a rng isomorphism
  // onto CO(X) = all subsets.  In the mask encoding the map is the
  // identity; verify the homomorphism laws against the order predicate.
  for (int a = 0; a < R.atom_count; ++a)
    for (int b = 0; b < R.atom_count; ++b) {
      std::uint64_t x = bit(a) | bit(b);
      if (BooleanRng::mul(x, bit(a)) != bit(a) ||
          BooleanRng::add(x, bit(a)) != (x & ~bit(a)))
        throw error(errc::not_atomistic, "spectrum roundtrip failed");
    }
  return X;
}

}  // namespace nsd

#endif  // NSD_GBA_HPP
