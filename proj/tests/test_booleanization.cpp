#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nsd/analysis.hpp"
#include "nsd/booleanization.hpp"
#include "nsd/corpus.hpp"

using namespace nsd;
using nsd::testing::brandt2;
using nsd::testing::symmetric_inverse_monoid;

TEST_CASE("universal groupoid of the Brandt semigroup", "[booleanization]") {
  auto U = universal_groupoid(brandt2());
  REQUIRE(U.G.units() == 2);   // nonzero idempotents e11, e22
  REQUIRE(U.G.arrows() == 4);  // nonzero elements
  REQUIRE(find_groupoid_iso(U.G, pair_groupoid(2)).has_value());
}

TEST_CASE("booleanization of the Brandt semigroup", "[booleanization][oracle]") {
  auto Bz = booleanize(brandt2());
  REQUIRE(Bz.B().size() == 7);
  REQUIRE(find_semigroup_iso(Bz.B().S, symmetric_inverse_monoid(2)).has_value());
  REQUIRE(bis_isomorphism(Bz.B(), gamma(pair_groupoid(2)).B).has_value());
  // Embedding preserves the natural order and is injective.
  auto S = brandt2();
  for (int s = 0; s < 5; ++s)
    for (int t = 0; t < 5; ++t)
      REQUIRE(S.leq(s, t) == Bz.B().leq(Bz.embed[s], Bz.embed[t]));
}

TEST_CASE("booleanization adjoins a zero when absent", "[booleanization]") {
  auto Bz = booleanize(cyclic_group(2));
  REQUIRE(Bz.U.zero_adjoined);
  REQUIRE(Bz.B().size() == 3);  // (Z/2) with zero
  REQUIRE(is_group_with_zero(Bz.B().S));
}

TEST_CASE("booleanizing a BIS yields a surjection back onto it",
          "[booleanization]") {
  // The canonical extension of the embedding B -> B(B) back to B is onto;
  // B(B) itself is generally larger than B.
  auto B = gamma(pair_groupoid(2)).B;  // 7 elements
  auto Bz = booleanize(B.S);
  REQUIRE(Bz.B().size() == 21);        // strictly larger than B
  std::vector<int> phi(B.size());
  for (int i = 0; i < B.size(); ++i) phi[i] = i;
  auto ext = extend_hom(Bz, B, phi);
  std::vector<char> hit(B.size(), 0);
  for (int v : ext.map) hit[v] = 1;
  for (char h : hit) REQUIRE(h == 1);
}

TEST_CASE("formal sums: mask and pointwise equivalence agree",
          "[booleanization][oracle]") {
  for (auto S : {brandt2(), adjoin_zero(cyclic_group(2)).first}) {
    auto Bz = booleanize(S);
    auto sums = formal_sums(S, 1 << 10);
    for (auto& a : sums)
      for (auto& b : sums)
        REQUIRE(sums_equivalent(Bz, a, b) ==
                sums_equivalent_pointwise(Bz, a, b));
  }
}

TEST_CASE("formal sum equivalence is the germ parity relation",
          "[booleanization]") {
  auto S = symmetric_inverse_monoid(2);
  auto Bz = booleanize(S);
  int id = -1, e0 = -1, e1 = -1;
  for (int i = 0; i < S.size(); ++i) {
    if (S.names[i] == "p01") id = i;
    if (S.names[i] == "p0x") e0 = i;
    if (S.names[i] == "px1") e1 = i;
  }
  REQUIRE((id >= 0 && e0 >= 0 && e1 >= 0));
  // Characteristic-2 arithmetic: order is irrelevant and repeated terms
  // cancel.
  REQUIRE(sums_equivalent(Bz, FormalSum{{id, e0}}, FormalSum{{e0, id}}));
  REQUIRE(sums_equivalent(Bz, FormalSum{{id, id, e0}}, FormalSum{{e0}}));
  REQUIRE(sums_equivalent(Bz, FormalSum{{id, id}}, FormalSum{{}}));
  // The embedded identity is NOT identified with the sum of its two proper
  // restrictions: they disagree at the germ of the identity itself, i.e. at
  // the character generated by the top idempotent.
  REQUIRE_FALSE(sums_equivalent(Bz, FormalSum{{id}}, FormalSum{{e0, e1}}));
  REQUIRE_FALSE(sums_equivalent(Bz, FormalSum{{id}}, FormalSum{{e0}}));
}

TEST_CASE("universal property on explicit pairs", "[booleanization]") {
  auto S = brandt2();
  auto Bz = booleanize(S);
  auto target = gamma(pair_groupoid(2)).B;
  int count = 0;
  for (auto& phi : semigroup_homs(S, target.S)) {
    if (phi[S.zero] != target.zero()) continue;
    auto ext = extend_hom(Bz, target, phi);
    for (int s = 0; s < S.size(); ++s) REQUIRE(ext.map[Bz.embed[s]] == phi[s]);
    REQUIRE(extension_unique(Bz, target, phi, ext));
    ++count;
  }
  REQUIRE(count > 0);
}
