#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "nsd/cli.hpp"
#include "nsd/corpus.hpp"
#include "nsd/frontend.hpp"

using namespace nsd;

namespace {

int cli(std::vector<std::string> args, const std::string& in, std::string* out,
        std::string* err = nullptr) {
  std::istringstream is(in);
  std::ostringstream os, es;
  int rc = run_cli(std::move(args), is, os, es);
  if (out) *out = os.str();
  if (err) *err = es.str();
  return rc;
}

const char* kZ2WithZero =
    "kind: inverse_semigroup\n"
    "name: z2_with_zero\n"
    "elements: 0 e g\n"
    "mul: 0 0 = 0\n"
    "mul: e e = e\n"
    "mul: e g = g\n"
    "mul: g e = g\n"
    "mul: g g = e\n";

}  // namespace

TEST_CASE("parse and validate a semigroup document", "[frontend]") {
  auto doc = parse(kZ2WithZero);
  REQUIRE(doc.kind == StructureKind::inverse_semigroup);
  REQUIRE(doc.name == "z2_with_zero");
  auto S = document_to_semigroup(doc);
  REQUIRE(S.size() == 3);
  REQUIRE(is_group_with_zero(S));
}

TEST_CASE("parser error positions and codes", "[frontend]") {
  try {
    parse("kind: inverse_semigroup\nelements: a b\nmul: a b = x\n");
    FAIL("expected rejection");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::undeclared_symbol);
    REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse("kind: inverse_semigroup\nelements: a a\n");
    FAIL("expected rejection");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::duplicate_entry);
  }
  try {
    parse("kind: nonsense\n");
    FAIL("expected rejection");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::syntax_error);
  }
  REQUIRE_THROWS_AS(parse("elements: a\n"), error);  // missing kind
}

TEST_CASE("serialize/parse roundtrip on corpus structures", "[frontend]") {
  // Groupoids.
  for (auto& ng : exhaustive_small_corpus(2, 6)) {
    std::string text = serialize(ng.G, ng.name);
    auto G2 = document_to_groupoid(parse(text));
    REQUIRE(serialize(G2, ng.name) == text);
    REQUIRE(find_groupoid_iso(ng.G, G2).has_value());
  }
  // Boolean inverse semigroups.
  auto B = gamma(pair_groupoid(2)).B;
  std::string text = serialize(B, "I2");
  auto B2 = document_to_bis(parse(text));
  REQUIRE(serialize(B2, "I2") == text);
  REQUIRE(bis_isomorphism(B, B2).has_value());
  // Plain inverse semigroup without zero.
  auto Z2 = cyclic_group(2);
  std::string gt = serialize(Z2, StructureKind::inverse_semigroup, "Z2");
  REQUIRE(find_semigroup_iso(document_to_semigroup(parse(gt)), Z2).has_value());
}

TEST_CASE("cli: gen pair 2 through gamma counts bisections", "[frontend][cli]") {
  std::string pair2;
  REQUIRE(cli({"gen", "pair", "2"}, "", &pair2) == 0);
  std::string bis;
  REQUIRE(cli({"gamma", "-"}, pair2, &bis) == 0);
  auto B = document_to_bis(parse(bis));
  REQUIRE(B.size() == 7);
  std::string report;
  REQUIRE(cli({"validate", "-"}, bis, &report) == 0);
  REQUIRE(report.find("7 elements") != std::string::npos);
}

TEST_CASE("cli: booleanize and check duality", "[frontend][cli]") {
  auto S = nsd::testing::brandt2();
  std::string doc = serialize(S, StructureKind::inverse_semigroup, "b2");
  std::string out;
  REQUIRE(cli({"booleanize", "-"}, doc, &out) == 0);
  REQUIRE(document_to_bis(parse(out)).size() == 7);
  REQUIRE(cli({"check", "duality", "-"}, out, &out) == 0);
}

TEST_CASE("cli: analyze json is schema-shaped and byte-stable",
          "[frontend][cli]") {
  std::string bt2;
  REQUIRE(cli({"gen", "btone", "2"}, "", &bt2) == 0);
  std::string a, b;
  REQUIRE(cli({"--json", "analyze", "-"}, bt2, &a) == 0);
  REQUIRE(cli({"--json", "analyze", "-"}, bt2, &b) == 0);
  REQUIRE(a == b);
  auto j = nlohmann::json::parse(a);
  REQUIRE(j["schema_version"] == 1);
  REQUIRE(j.contains("kind"));
  REQUIRE(j.contains("counts"));
  REQUIRE(j["clauses"].is_array());
  for (auto& c : j["clauses"]) {
    REQUIRE(c.contains("witnesses"));
    REQUIRE(c.contains("caveats"));
  }
  // Orbits report the isolated unit separately.
  REQUIRE(j["counts"]["orbits"] == 2);
}

TEST_CASE("cli: subquotient search exit codes", "[frontend][cli]") {
  std::string i2doc = serialize(gamma(pair_groupoid(2)).B, "I2");
  std::string z2doc = serialize(group_with_zero(cyclic_group(2)), "Z2z");
  // Write temp files since the command reads two inputs.
  auto tmp = [](const std::string& name, const std::string& text) {
    std::string path = "cli_tmp_" + name + ".nsd";
    std::ofstream f(path);
    f << text;
    return path;
  };
  std::string big = tmp("big", i2doc), small = tmp("small", z2doc);
  std::string out;
  REQUIRE(cli({"subquotient", big, small}, "", &out) == 0);
  REQUIRE(out.find("witness") != std::string::npos);
  REQUIRE(cli({"subquotient", small, big}, "", &out) == 1);
  std::remove(big.c_str());
  std::remove(small.c_str());
}

TEST_CASE("cli: errors and usage", "[frontend][cli]") {
  std::string out, err;
  REQUIRE(cli({"validate", "-"}, "kind: inverse_semigroup\nelements: a\nmul: a a = a\n",
               &out) == 0);
  REQUIRE(cli({"nonsense"}, "", &out, &err) == 2);
  REQUIRE(cli({"validate", "/no/such/file"}, "", &out, &err) == 1);
  // JSON error object.
  REQUIRE(cli({"--json", "validate", "/no/such/file"}, "", &out, &err) == 1);
  auto j = nlohmann::json::parse(err);
  REQUIRE(j["error"].contains("code"));
}

TEST_CASE("cli: seeded random generation is stable", "[frontend][cli]") {
  std::string a, b;
  REQUIRE(cli({"--seed", "7", "gen", "random"}, "", &a) == 0);
  REQUIRE(cli({"--seed", "7", "gen", "random"}, "", &b) == 0);
  REQUIRE(a == b);
  std::string c;
  REQUIRE(cli({"--seed", "8", "gen", "random"}, "", &c) == 0);
  REQUIRE(document_to_groupoid(parse(c)).units() <= 4);
}
