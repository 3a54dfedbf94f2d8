#ifndef NSD_FRONTEND_HPP
#define NSD_FRONTEND_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsd/bis.hpp"
#include "nsd/common.hpp"
#include "nsd/duality.hpp"
#include "nsd/groupoid.hpp"
#include "nsd/inverse_semigroup.hpp"

namespace nsd {

// Line-oriented structure description:
//
//   kind: inverse_semigroup | bis | groupoid
//   name: NAME                      (optional)
//   elements: a b c                 (semigroup kinds)
//   units: u v                      (groupoid)
//   arrows: g: u -> v               (groupoid; one arrow per line)
//   mul: a b = c                    (semigroup kinds)
//   compose: g h = k                (groupoid)
//   # comment
//
// Unlisted products are zero for semigroups when an element named "0" is
// declared, and undefined (non-composable) for groupoids.

enum class StructureKind { inverse_semigroup, bis, groupoid };

struct StructureDocument {
  StructureKind kind = StructureKind::inverse_semigroup;
  std::string name;
  std::vector<std::string> elements;                       // semigroup kinds
  std::vector<std::string> units;                          // groupoid
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      arrows;                                              // g: u -> v
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>>
      products;                                            // a b = c
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] inline void syntax(int line, int col, const std::string& msg) {
  throw error(errc::syntax_error, "line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + msg);
}

}  // namespace detail

inline StructureDocument parse(const std::string& text) {
  StructureDocument doc;
  bool kind_seen = false;
  std::map<std::string, int> declared;
  auto declare = [&](const std::string& s, int line) {
    if (!declared.emplace(s, line).second)
      throw error(errc::duplicate_entry,
                  "line " + std::to_string(line) + ": symbol '" + s +
                      "' declared twice");
  };
  auto need_declared = [&](const std::string& s, int line) {
    if (!declared.count(s))
      throw error(errc::undeclared_symbol,
                  "line " + std::to_string(line) + ": symbol '" + s +
                      "' is not declared");
  };
  std::set<std::pair<std::string, std::string>> product_keys;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = detail::tokens(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    auto rest = std::vector<std::string>(toks.begin() + 1, toks.end());
    int col = static_cast<int>(line.find(head)) + 1;
    if (head == "kind:") {
      if (rest.size() != 1) detail::syntax(lineno, col, "kind needs one value");
      if (rest[0] == "inverse_semigroup") doc.kind = StructureKind::inverse_semigroup;
      else if (rest[0] == "bis") doc.kind = StructureKind::bis;
      else if (rest[0] == "groupoid") doc.kind = StructureKind::groupoid;
      else detail::syntax(lineno, col, "unknown kind '" + rest[0] + "'");
      kind_seen = true;
    } else if (head == "name:") {
      if (rest.size() != 1) detail::syntax(lineno, col, "name needs one value");
      doc.name = rest[0];
    } else if (head == "elements:") {
      for (auto& s : rest) {
        declare(s, lineno);
        doc.elements.push_back(s);
      }
    } else if (head == "units:") {
      for (auto& s : rest) {
        declare(s, lineno);
        doc.units.push_back(s);
      }
    } else if (head == "arrows:") {
      // arrows: g: u -> v
      if (rest.size() != 4 || rest[2] != "->" || rest[0].empty() ||
          rest[0].back() != ':')
        detail::syntax(lineno, col, "expected 'arrows: NAME: SRC -> TGT'");
      std::string g = rest[0].substr(0, rest[0].size() - 1);
      need_declared(rest[1], lineno);
      need_declared(rest[3], lineno);
      declare(g, lineno);
      doc.arrows.push_back({g, {rest[1], rest[3]}});
    } else if (head == "mul:" || head == "compose:") {
      if (rest.size() != 4 || rest[2] != "=")
        detail::syntax(lineno, col, "expected '" + head + " A B = C'");
      for (int i : {0, 1, 3}) need_declared(rest[i], lineno);
      if (!product_keys.insert({rest[0], rest[1]}).second)
        throw error(errc::duplicate_entry,
                    "line " + std::to_string(lineno) + ": product '" + rest[0] +
                        " " + rest[1] + "' given twice");
      doc.products.push_back({{rest[0], rest[1]}, rest[3]});
    } else {
      detail::syntax(lineno, col, "unknown directive '" + head + "'");
    }
  }
  if (!kind_seen) throw error(errc::syntax_error, "missing 'kind:' line");
  return doc;
}

// ---------------------------------------------------------------------------
// Document -> validated structure

inline InverseSemigroup document_to_semigroup(const StructureDocument& doc) {
  if (doc.kind == StructureKind::groupoid)
    throw error(errc::bad_argument, "document describes a groupoid");
  const int n = static_cast<int>(doc.elements.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i) pos[doc.elements[i]] = i;
  auto el = [&](const std::string& s) {
    auto it = pos.find(s);
    if (it == pos.end())
      throw error(errc::undeclared_symbol, "'" + s + "' is not an element");
    return it->second;
  };
  int zero = pos.count("0") ? pos.at("0") : -1;
  std::vector<int> mul(static_cast<size_t>(n) * n, zero);
  std::vector<char> given(static_cast<size_t>(n) * n, 0);
  for (auto& [ab, c] : doc.products) {
    size_t k = static_cast<size_t>(el(ab.first)) * n + el(ab.second);
    mul[k] = el(c);
    given[k] = 1;
  }
  if (zero < 0)
    for (size_t k = 0; k < given.size(); ++k)
      if (!given[k])
        throw error(errc::syntax_error,
                    "incomplete multiplication table without a '0' element");
  return verify_inverse_semigroup(doc.elements, std::move(mul));
}

inline Bis document_to_bis(const StructureDocument& doc) {
  return verify_bis(document_to_semigroup(doc));
}

inline Groupoid document_to_groupoid(const StructureDocument& doc) {
  if (doc.kind != StructureKind::groupoid)
    throw error(errc::bad_argument, "document does not describe a groupoid");
  const int nu = static_cast<int>(doc.units.size());
  const int na = static_cast<int>(doc.arrows.size());
  std::map<std::string, int> upos, apos;
  for (int i = 0; i < nu; ++i) upos[doc.units[i]] = i;
  auto unit = [&](const std::string& s) {
    auto it = upos.find(s);
    if (it == upos.end())
      throw error(errc::undeclared_symbol, "'" + s + "' is not a unit");
    return it->second;
  };
  Groupoid raw;
  raw.unit_names = doc.units;
  raw.src.resize(na);
  raw.tgt.resize(na);
  for (int i = 0; i < na; ++i) {
    raw.arrow_names.push_back(doc.arrows[i].first);
    apos[doc.arrows[i].first] = i;
    raw.src[i] = unit(doc.arrows[i].second.first);
    raw.tgt[i] = unit(doc.arrows[i].second.second);
  }
  auto arrow = [&](const std::string& s) {
    auto it = apos.find(s);
    if (it == apos.end())
      throw error(errc::undeclared_symbol, "'" + s + "' is not an arrow");
    return it->second;
  };
  raw.comp_.assign(static_cast<size_t>(na) * na, -1);
  for (auto& [gh, k] : doc.products)
    raw.comp_[static_cast<size_t>(arrow(gh.first)) * na + arrow(gh.second)] =
        arrow(k);
  // Inverses are recovered from the composition table by verify_groupoid's
  // caller contract; derive them here: g^-1 is the arrow h with gh and hg
  // unit arrows.
  raw.inv.assign(na, -1);
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      int gh = raw.comp_[static_cast<size_t>(g) * na + h];
      int hg = raw.comp_[static_cast<size_t>(h) * na + g];
      if (gh < 0 || hg < 0) continue;
      if (raw.src[gh] == raw.tgt[gh] && gh == raw.comp_[static_cast<size_t>(gh) * na + gh] &&
          raw.src[hg] == raw.tgt[hg] && hg == raw.comp_[static_cast<size_t>(hg) * na + hg])
        raw.inv[g] = h;
    }
  for (int g = 0; g < na; ++g)
    if (raw.inv[g] < 0)
      throw error(errc::bad_inverse, "no inverse arrow derivable",
                  {raw.arrow_names[g]});
  return verify_groupoid(raw);
}

// ---------------------------------------------------------------------------
// Structure -> canonical document text

inline std::string serialize(const InverseSemigroup& S, StructureKind kind,
                             const std::string& name = "") {
  std::ostringstream out;
  out << "kind: "
      << (kind == StructureKind::bis ? "bis" : "inverse_semigroup") << "\n";
  if (!name.empty()) out << "name: " << name << "\n";
  std::vector<std::string> elems = S.names;
  std::sort(elems.begin(), elems.end());
  out << "elements:";
  for (auto& e : elems) out << " " << e;
  out << "\n";
  std::map<std::string, int> pos;
  for (int i = 0; i < S.size(); ++i) pos[S.names[i]] = i;
  // Zero products are left implicit, but only when the reader's convention
  // (an element literally named "0") applies.
  bool implicit_zero = S.has_zero() && S.names[S.zero] == "0";
  for (auto& a : elems)
    for (auto& b : elems) {
      int c = S.mul(pos[a], pos[b]);
      if (implicit_zero && c == S.zero &&
          !(pos[a] == S.zero && pos[b] == S.zero))
        continue;
      out << "mul: " << a << " " << b << " = " << S.names[c] << "\n";
    }
  return out.str();
}

inline std::string serialize(const Bis& B, const std::string& name = "") {
  return serialize(B.S, StructureKind::bis, name);
}

inline std::string serialize(const Groupoid& G, const std::string& name = "") {
  std::ostringstream out;
  out << "kind: groupoid\n";
  if (!name.empty()) out << "name: " << name << "\n";
  std::vector<std::string> units = G.unit_names;
  std::sort(units.begin(), units.end());
  out << "units:";
  for (auto& u : units) out << " " << u;
  out << "\n";
  std::vector<int> order(G.arrows());
  for (int i = 0; i < G.arrows(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return G.arrow_names[a] < G.arrow_names[b];
  });
  for (int g : order)
    out << "arrows: " << G.arrow_names[g] << ": " << G.unit_names[G.src[g]]
        << " -> " << G.unit_names[G.tgt[g]] << "\n";
  for (int g : order)
    for (int h : order)
      if (G.composable(g, h))
        out << "compose: " << G.arrow_names[g] << " " << G.arrow_names[h]
            << " = " << G.arrow_names[G.comp(g, h)] << "\n";
  return out.str();
}

}  // namespace nsd

#endif  // NSD_FRONTEND_HPP
