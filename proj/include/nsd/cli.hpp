#ifndef NSD_CLI_HPP
#define NSD_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsd/analysis.hpp"
#include "nsd/booleanization.hpp"
#include "nsd/corpus.hpp"
#include "nsd/duality.hpp"
#include "nsd/frontend.hpp"

namespace nsd {

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_) {
  if (path == "-") {
    std::ostringstream ss;
    ss << stdin_.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw error(errc::bad_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& stdout_) {
  if (path.empty() || path == "-") {
    stdout_ << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw error(errc::bad_argument, "cannot write '" + path + "'");
  f << text;
}

inline nlohmann::ordered_json clause_json(const ClauseResult& c) {
  return {{"name", c.name},
          {"status", c.status},
          {"witnesses", c.witnesses},
          {"caveats", c.caveats}};
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::istream& stdin_,
                   std::ostream& stdout_, std::ostream& stderr_) {
  CLI::App app{"exact engine for inverse semigroups, Boolean inverse "
               "semigroups and finite groupoids"};
  app.require_subcommand(1);
  bool json_errors = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json_errors, "machine-readable output and errors");
  app.add_option("--seed", seed, "seed for randomized generation");

  std::string file, file2, outpath;
  int max_size = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate a structure");
  validate->add_option("FILE", file)->required();

  auto* boolz = app.add_subcommand("booleanize", "booleanization of an inverse semigroup");
  boolz->add_option("FILE", file)->required();
  boolz->add_option("-o", outpath);

  auto* dual = app.add_subcommand("dual", "dual groupoid of a Boolean inverse semigroup");
  dual->add_option("FILE", file)->required();
  dual->add_option("-o", outpath);

  auto* gam = app.add_subcommand("gamma", "Boolean inverse semigroup of bisections");
  gam->add_option("FILE", file)->required();
  gam->add_option("-o", outpath);

  auto* analyze = app.add_subcommand("analyze", "structural summary and classification report");
  analyze->add_option("FILE", file)->required();

  auto* subq = app.add_subcommand("subquotient", "search for a subquotient");
  subq->add_option("BIG", file)->required();
  subq->add_option("SMALL", file2)->required();
  subq->add_option("--max-size", max_size);

  auto* check = app.add_subcommand("check", "verification runs");
  std::string check_what;
  check->add_option("WHAT", check_what)->required()->check(CLI::IsMember({"duality"}));
  check->add_option("FILE", file)->required();

  auto* gen = app.add_subcommand("gen", "generate a named family member");
  std::string family;
  std::vector<std::string> gen_args;
  gen->add_option("FAMILY", family)->required()
      ->check(CLI::IsMember({"pair", "btone", "group", "union", "random"}));
  gen->add_option("ARGS", gen_args);
  gen->add_option("-o", outpath);

  std::vector<const char*> argv;
  argv.push_back("nsd");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      stdout_ << app.help();
      return 0;
    }
    stderr_ << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      if (doc.kind == StructureKind::groupoid) {
        Groupoid G = document_to_groupoid(doc);
        stdout_ << "valid groupoid: " << G.units() << " units, " << G.arrows()
                << " arrows\n";
      } else if (doc.kind == StructureKind::bis) {
        Bis B = document_to_bis(doc);
        stdout_ << "valid Boolean inverse semigroup: " << B.size()
                << " elements, " << B.n_atoms() << " atoms\n";
      } else {
        InverseSemigroup S = document_to_semigroup(doc);
        stdout_ << "valid inverse semigroup: " << S.size() << " elements, "
                << S.idempotent_indices().size() << " idempotents\n";
      }
      return 0;
    }

    if (*boolz) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      InverseSemigroup S = document_to_semigroup(doc);
      Booleanization Bz = booleanize(S);
      detail::write_output(outpath, serialize(Bz.B(), doc.name.empty() ? "" : "B_" + doc.name),
                           stdout_);
      return 0;
    }

    if (*dual) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      Bis B = document_to_bis(doc);
      DualGroupoid D = dual_groupoid(B);
      detail::write_output(outpath, serialize(D.G, doc.name.empty() ? "" : "G_" + doc.name),
                           stdout_);
      return 0;
    }

    if (*gam) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      Groupoid G = document_to_groupoid(doc);
      GammaResult GG = gamma(G);
      detail::write_output(outpath, serialize(GG.B, doc.name.empty() ? "" : "Gamma_" + doc.name),
                           stdout_);
      return 0;
    }

    if (*analyze) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      std::string name = doc.name.empty() ? "input" : doc.name;
      Bis B;
      Groupoid G;
      std::string kind;
      if (doc.kind == StructureKind::groupoid) {
        kind = "groupoid";
        G = document_to_groupoid(doc);
        B = gamma(G).B;
      } else if (doc.kind == StructureKind::bis) {
        kind = "bis";
        B = document_to_bis(doc);
        G = dual_groupoid(B).G;
      } else {
        kind = "inverse_semigroup";
        InverseSemigroup S = document_to_semigroup(doc);
        B = booleanize(S).B();
        G = dual_groupoid(B).G;
      }
      auto ideals = additive_ideals(B);
      auto orbs = orbits(G);
      AnalysisReport ccr = classify_ccr(B, name);
      AnalysisReport ti = classify_type_i(B, name);

      if (json_errors) {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = kind;
        j["name"] = name;
        j["counts"] = {{"elements", B.size()},
                       {"idempotents", B.idems.size()},
                       {"atoms", B.n_atoms()},
                       {"additive_ideals", ideals.size()},
                       {"units", G.units()},
                       {"arrows", G.arrows()},
                       {"orbits", orbs.size()}};
        auto& jo = j["orbits"] = nlohmann::ordered_json::array();
        for (auto& o : orbs) {
          nlohmann::ordered_json names = nlohmann::ordered_json::array();
          for (int u : o) names.push_back(G.unit_names[u]);
          jo.push_back(names);
        }
        auto& ji = j["isotropy"] = nlohmann::ordered_json::array();
        for (auto& o : orbs) {
          InverseSemigroup K = isotropy(G, o[0]);
          ji.push_back({{"unit", G.unit_names[o[0]]},
                        {"order", K.size()},
                        {"abelian", is_abelian(K)}});
        }
        j["verdicts"] = {{"ccr", ccr.verdict}, {"type_i", ti.verdict}};
        auto& jc = j["clauses"] = nlohmann::ordered_json::array();
        for (auto& c : ccr.clauses) jc.push_back(detail::clause_json(c));
        for (auto& c : ti.clauses) jc.push_back(detail::clause_json(c));
        stdout_ << j.dump(2) << "\n";
      } else {
        stdout_ << name << " (" << kind << "): " << B.size() << " elements, "
                << B.idems.size() << " idempotents, " << B.n_atoms()
                << " atoms, " << ideals.size() << " additive ideals, "
                << orbs.size() << " orbits\n";
        for (auto& o : orbs) {
          stdout_ << "  orbit {";
          for (size_t i = 0; i < o.size(); ++i)
            stdout_ << (i ? "," : "") << G.unit_names[o[i]];
          InverseSemigroup K = isotropy(G, o[0]);
          stdout_ << "} isotropy order " << K.size() << "\n";
        }
        for (auto* r : {&ccr, &ti}) {
          stdout_ << "verdict: " << r->verdict << "\n";
          for (auto& c : r->clauses) {
            stdout_ << "  [" << c.status << "] " << c.name << "\n";
            for (auto& w : c.witnesses) stdout_ << "    witness: " << w << "\n";
            for (auto& v : c.caveats) stdout_ << "    caveat: " << v << "\n";
          }
        }
      }
      return 0;
    }

    if (*subq) {
      Bis big = document_to_bis(parse(detail::read_input(file, stdin_)));
      Bis small = document_to_bis(parse(detail::read_input(file2, stdin_)));
      subquotient_bounds bounds;
      auto w = subquotient_search(big, small, bounds);
      if (!w) {
        stdout_ << "no subquotient found\n";
        return 1;
      }
      if (max_size && static_cast<int>(w->sub.size()) > max_size) {
        stdout_ << "witness exceeds --max-size\n";
        return 1;
      }
      stdout_ << "witness sub-algebra {";
      for (size_t i = 0; i < w->sub.size(); ++i)
        stdout_ << (i ? "," : "") << big.name(w->sub[i]);
      stdout_ << "} with ideal of size " << w->ideal.elems.size() << "\n";
      return 0;
    }

    if (*check) {
      StructureDocument doc = parse(detail::read_input(file, stdin_));
      bool ok;
      if (doc.kind == StructureKind::groupoid) {
        ok = duality_roundtrip_groupoid(document_to_groupoid(doc)).ok;
      } else {
        ok = duality_roundtrip(document_to_bis(doc)).ok;
      }
      stdout_ << "duality roundtrip: " << (ok ? "ok" : "FAILED") << "\n";
      return ok ? 0 : 1;
    }

    if (*gen) {
      auto num = [&](size_t i) {
        if (i >= gen_args.size())
          throw error(errc::bad_argument, "missing numeric argument");
        return std::stoi(gen_args[i]);
      };
      Groupoid G;
      std::string name;
      if (family == "pair") {
        G = pair_groupoid(num(0));
        name = "pair" + gen_args[0];
      } else if (family == "btone") {
        G = btone_groupoid(num(0));
        name = "btone" + gen_args[0];
      } else if (family == "group") {
        if (gen_args.empty())
          throw error(errc::bad_argument, "gen group needs a FILE");
        InverseSemigroup S =
            document_to_semigroup(parse(detail::read_input(gen_args[0], stdin_)));
        G = group_groupoid(S);
        name = "group";
      } else if (family == "union") {
        if (gen_args.size() < 2)
          throw error(errc::bad_argument, "gen union needs two FILEs");
        Groupoid A = document_to_groupoid(parse(detail::read_input(gen_args[0], stdin_)));
        Groupoid Bg = document_to_groupoid(parse(detail::read_input(gen_args[1], stdin_)));
        G = disjoint_union(A, Bg);
        name = "union";
      } else {  // random
        G = random_groupoid(seed);
        name = "random" + std::to_string(seed);
      }
      detail::write_output(outpath, serialize(G, name), stdout_);
      return 0;
    }
  } catch (const error& e) {
    if (json_errors) {
      nlohmann::ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
      stderr_ << j.dump(2) << "\n";
    } else {
      stderr_ << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return 2;
}

}  // namespace nsd

#endif  // NSD_CLI_HPP
