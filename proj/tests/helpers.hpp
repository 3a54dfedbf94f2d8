#ifndef NSD_TESTS_HELPERS_HPP
#define NSD_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nsd/inverse_semigroup.hpp"

namespace nsd::testing {

// The combinatorial Brandt semigroup over a 2-set: matrix units e_ij plus 0.
inline InverseSemigroup brandt2() {
  std::vector<std::string> names = {"0", "e11", "e12", "e21", "e22"};
  auto idx = [](int i, int j) { return 1 + (i - 1) * 2 + (j - 1); };
  std::vector<int> mul(25, 0);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          if (j == k) mul[idx(i, j) * 5 + idx(k, l)] = idx(i, l);
  return verify_inverse_semigroup(std::move(names), std::move(mul));
}

// Symmetric inverse monoid on an n-set, built directly from partial
// bijections (independent of the library's groupoid machinery).  A partial
// bijection is encoded as image[i] in {-1, 0..n-1}, injective on its domain.
inline InverseSemigroup symmetric_inverse_monoid(int n) {
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      maps.push_back(cur);
      return;
    }
    self(self, i + 1);
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int j = 0; j < i; ++j)
        if (cur[j] == v) used = true;
      if (used) continue;
      cur[i] = v;
      self(self, i + 1);
      cur[i] = -1;
    }
  };
  rec(rec, 0);
  auto find = [&](const std::vector<int>& m) {
    for (size_t k = 0; k < maps.size(); ++k)
      if (maps[k] == m) return static_cast<int>(k);
    return -1;
  };
  const int sz = static_cast<int>(maps.size());
  std::vector<std::string> names(sz);
  for (int k = 0; k < sz; ++k) {
    std::string s = "p";
    for (int i = 0; i < n; ++i)
      s += maps[k][i] < 0 ? "x" : std::to_string(maps[k][i]);
    names[k] = s;
  }
  std::vector<int> mul(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      std::vector<int> comp(n, -1);  // a after b
      for (int i = 0; i < n; ++i)
        if (maps[b][i] >= 0) comp[i] = maps[a][maps[b][i]];
      mul[static_cast<size_t>(a) * sz + b] = find(comp);
    }
  return verify_inverse_semigroup(std::move(names), std::move(mul));
}

// Closed-form count of bisections of the pair groupoid on an n-set:
// sum over k of C(n,k)^2 k!  (choose domain, choose range, choose bijection).
inline std::uint64_t pair_bisection_count(int n) {
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::uint64_t total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

// Free meet-semilattice check oracle: all characters of a finite
// semilattice by brute force over all 0/1 vectors.
inline int character_count_oracle(const IdempotentSemilattice& E,
                                  bool enforce_zero) {
  const int m = static_cast<int>(E.carrier.size());
  int count = 0;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v) {
    bool ok = true;
    auto chi = [&](int i) { return (v >> i) & 1; };
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b)
        if (chi(E.meet(a, b)) != (chi(a) & chi(b))) ok = false;
    if (ok && enforce_zero && E.zero_pos >= 0 && chi(E.zero_pos)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace nsd::testing

#endif
