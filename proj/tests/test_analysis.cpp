#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nsd/analysis.hpp"

using namespace nsd;
using nsd::testing::symmetric_inverse_monoid;

TEST_CASE("subgroup enumeration", "[analysis][oracle]") {
  REQUIRE(subgroups(cyclic_group(6)).size() == 4);   // divisors of 6
  REQUIRE(subgroups(dihedral_group(3)).size() == 6); // 1,3xZ2,Z3,S3
  REQUIRE(subgroups(quaternion_group()).size() == 6);
  // Every subgroup of Q8 is normal.
  auto Q8 = quaternion_group();
  for (auto& H : subgroups(Q8)) REQUIRE(is_normal_subgroup(Q8, H));
}

TEST_CASE("group quotients", "[analysis]") {
  auto qs = group_quotients(dihedral_group(3));
  REQUIRE(qs.size() == 3);  // trivial, Z2, S3
  auto q4 = group_quotients(cyclic_group(4));
  REQUIRE(q4.size() == 3);  // trivial, Z2, Z4
}

TEST_CASE("virtual abelianness witnesses", "[analysis]") {
  auto t = is_virtually_abelian(cyclic_group(2));
  REQUIRE((t.value && t.abelian && t.index == 1));
  auto s3 = is_virtually_abelian(dihedral_group(3));
  REQUIRE(s3.value);
  REQUIRE_FALSE(s3.abelian);
  REQUIRE(s3.witness.size() == 3);  // the rotation subgroup
  REQUIRE(s3.index == 2);
  auto triv = is_virtually_abelian(cyclic_group(1));
  REQUIRE((triv.value && triv.index == 1));
}

TEST_CASE("group-with-zero quotients: dual route matches congruence oracle",
          "[analysis][oracle]") {
  std::vector<Bis> cases;
  cases.push_back(group_with_zero(cyclic_group(2)));
  cases.push_back(gamma(pair_groupoid(2)).B);
  cases.push_back(gamma(group_groupoid(cyclic_group(4))).B);
  cases.push_back(gamma(disjoint_union(pair_groupoid(1),
                                       group_groupoid(cyclic_group(2)))).B);
  for (auto& B : cases) {
    std::vector<InverseSemigroup> dual_route;
    for (auto& q : group_with_zero_quotients(B))
      add_group_upto_iso(dual_route, q.group);
    auto oracle = group_with_zero_quotients_oracle(B);
    REQUIRE(same_groups_upto_iso(dual_route, oracle));
  }
}

TEST_CASE("corner quotient examples", "[analysis]") {
  // (Z/2)_0: quotients trivial and Z/2.
  auto gz = corner_quotient_groups(group_with_zero(cyclic_group(2)));
  REQUIRE(gz.size() == 2);
  // I2: only the trivial group.
  auto i2 = corner_quotient_groups(gamma(pair_groupoid(2)).B);
  REQUIRE(i2.size() == 1);
  REQUIRE(i2[0].size() == 1);
  // Z/2 groupoid plus isolated unit: corner over the group unit gives Z/2.
  auto mix = gamma(disjoint_union(group_groupoid(cyclic_group(2)),
                                  pair_groupoid(1))).B;
  bool z2_found = false;
  for (auto& e : group_quotients_of_corners(mix))
    if (e.group.size() == 2) z2_found = true;
  REQUIRE(z2_found);
}

TEST_CASE("isotropy versus corners on named families", "[analysis]") {
  auto a = isotropy_vs_corner_check(pair_groupoid(2));
  REQUIRE(a.ok);
  REQUIRE(a.corner_side.size() == 1);
  auto b = isotropy_vs_corner_check(group_groupoid(cyclic_group(2)));
  REQUIRE(b.ok);
  REQUIRE(b.corner_side.size() == 2);
  auto c = isotropy_vs_corner_check(btone_groupoid(1));
  REQUIRE(c.ok);
  REQUIRE(c.corner_side.size() == 1);
}

TEST_CASE("booleanization quotient checks", "[analysis]") {
  for (auto S : {cyclic_group(2), nsd::testing::brandt2(),
                 adjoin_zero(cyclic_group(3)).first}) {
    auto r = booleanization_quotient_check(S);
    REQUIRE(r.surjectivity_ok);
    REQUIRE(r.corners_ok);
  }
  // Semilattice {0, e, f} with ef = 0.
  auto E3 = verify_inverse_semigroup({"0", "e", "f"},
                                     {0, 0, 0, 0, 1, 0, 0, 0, 2});
  auto r = booleanization_quotient_check(E3);
  REQUIRE(r.surjectivity_ok);
  REQUIRE(r.corners_ok);
}

TEST_CASE("truncation relations", "[analysis]") {
  for (int n = 1; n <= 5; ++n) {
    auto t = btone_truncation(n, /*build_gamma=*/n <= 3);
    REQUIRE(t.relations_ok);
    REQUIRE(orbits(t.G).size() == 2);
    REQUIRE(static_cast<int>(t.s.size()) == n);
  }
  REQUIRE(btone_truncation(1).bis->B.size() == 14);
}

TEST_CASE("subquotient search finds planted witnesses", "[analysis]") {
  auto B = gamma(pair_groupoid(2)).B;
  // Target = B itself.
  auto self_w = subquotient_search(B, B);
  REQUIRE(self_w.has_value());
  REQUIRE(self_w->sub.size() == 7);
  // (Z/2)_0 inside I2 via the diagonal-and-swap subalgebra.
  auto zw = subquotient_search(B, group_with_zero(cyclic_group(2)));
  REQUIRE(zw.has_value());
  REQUIRE(zw->sub.size() == 3);
  // Cardinality obstruction.
  REQUIRE_FALSE(
      subquotient_search(group_with_zero(cyclic_group(2)), B).has_value());
}

TEST_CASE("subquotient roundtrip soundness on planted quotients", "[analysis]") {
  auto GG = gamma(btone_groupoid(1));
  auto ideals = additive_ideals(GG.B);
  for (auto& I : ideals) {
    auto q = quotient_by_additive_ideal(GG.B, I);
    auto w = subquotient_search(GG.B, q.Q);
    REQUIRE(w.has_value());
  }
}

TEST_CASE("classification reports", "[analysis]") {
  auto I2 = gamma(pair_groupoid(2)).B;
  auto r = classify_ccr(I2, "I2");
  REQUIRE(r.verdict == "CCR");
  REQUIRE(r.clauses.size() == 2);
  REQUIRE(r.clauses[1].status == "vacuous");
  REQUIRE_FALSE(r.clauses[1].caveats.empty());

  auto t = classify_type_i(I2, "I2");
  REQUIRE(t.verdict == "type I");
  REQUIRE(t.clauses[1].status == "vacuous");

  // 4-element algebra of two isolated points: no 0-simplifying subquotient
  // larger than two elements.
  auto gba4 = gamma(disjoint_union(pair_groupoid(1), pair_groupoid(1))).B;
  auto t4 = classify_type_i(gba4, "gba4");
  REQUIRE(t4.clauses[1].witnesses[0] ==
          "monoidal 0-simplifying subquotient sizes: {2}");

  // I3 lists itself (size 34) among the monoidal 0-simplifying subquotients.
  auto I3 = gamma(pair_groupoid(3)).B;
  auto t3 = classify_type_i(I3, "I3");
  REQUIRE(t3.clauses[1].witnesses[0].find("34") != std::string::npos);

  // Truncation embedding depth grows with the input.
  auto bt2 = btone_truncation(2);
  auto r2 = classify_ccr(bt2.bis->B, "bt2");
  REQUIRE(r2.clauses[1].witnesses[0] == "truncation embedding depth 2");
}
