#ifndef NSD_COMMON_HPP
#define NSD_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsd {

enum class errc {
  not_associative,
  no_inverse,
  inverse_not_unique,
  too_large,
  not_orthogonal,
  not_idempotent,
  idempotents_not_gba,
  missing_join,
  not_atomistic,
  bad_composition,
  bad_units,
  bad_inverse,
  not_invariant,
  atom_composition_failure,
  not_a_homomorphism,
  not_well_defined,
  syntax_error,
  undeclared_symbol,
  duplicate_entry,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_associative: return "NotAssociative";
    case errc::no_inverse: return "NoInverse";
    case errc::inverse_not_unique: return "InverseNotUnique";
    case errc::too_large: return "TooLarge";
    case errc::not_orthogonal: return "NotOrthogonal";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::idempotents_not_gba: return "IdempotentsNotGBA";
    case errc::missing_join: return "MissingJoin";
    case errc::not_atomistic: return "NotAtomistic";
    case errc::bad_composition: return "BadComposition";
    case errc::bad_units: return "BadUnits";
    case errc::bad_inverse: return "BadInverse";
    case errc::not_invariant: return "NotInvariant";
    case errc::atom_composition_failure: return "AtomCompositionFailure";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::syntax_error: return "SyntaxError";
    case errc::undeclared_symbol: return "UndeclaredSymbol";
    case errc::duplicate_entry: return "DuplicateEntry";
    case errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

// Single exception type carrying an error code and (optionally) witness
// names so callers can report the offending elements.
class error : public std::runtime_error {
 public:
  error(errc code, std::string msg, std::vector<std::string> witnesses = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        witnesses_(std::move(witnesses)) {}

  errc code() const { return code_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  errc code_;
  std::vector<std::string> witnesses_;
};

// Iterate over set bits of a mask.
template <typename F>
void for_bits(std::uint64_t mask, F&& f) {
  while (mask) {
    int b = __builtin_ctzll(mask);
    f(b);
    mask &= mask - 1;
  }
}

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

inline std::uint64_t bit(int i) { return std::uint64_t(1) << i; }

}  // namespace nsd

#endif  // NSD_COMMON_HPP
