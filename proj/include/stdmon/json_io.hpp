#ifndef STDMON_JSON_IO_HPP
#define STDMON_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stdmon/chains.hpp"
#include "stdmon/characters.hpp"
#include "stdmon/combination.hpp"
#include "stdmon/matrix.hpp"
#include "stdmon/scanning.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

using json = nlohmann::json;

inline json tabloid_to_json(const Tabloid& t) {
  return json{{"n", t.n()}, {"shape", t.shape().parts()}, {"columns", t.columns()}};
}

inline Tabloid tabloid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("columns"))
    throw error("tabloid json needs n and columns");
  int n = j.at("n").get<int>();
  auto cols = j.at("columns").get<std::vector<std::vector<int>>>();
  std::vector<int> parts;
  if (j.contains("shape")) {
    parts = j.at("shape").get<std::vector<int>>();
  } else {
    parts.assign(n, 0);
    for (int r = 1; r <= n; ++r)
      for (const auto& col : cols) parts[r - 1] += ((int)col.size() >= r);
  }
  return Tabloid(Partition(n, std::move(parts)), std::move(cols));
}

inline json chain_to_json(const QChain& chain) {
  return json{{"n", chain.n()}, {"q", chain.qset().q()}, {"sets", chain.sets()}};
}

inline QChain chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw error("chain json needs n and sets");
  int n = j.at("n").get<int>();
  auto sets = j.at("sets").get<std::vector<std::vector<int>>>();
  std::vector<int> q;
  if (j.contains("q")) {
    q = j.at("q").get<std::vector<int>>();
  } else {
    for (const auto& s : sets) q.push_back((int)s.size());
  }
  return QChain(QSet(n, std::move(q)), std::move(sets));
}

inline json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    json row = json::array();
    for (int c = 1; c <= m.cols(); ++c) row.push_back(format_rational(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw error("matrix json needs a nonempty array of rows");
  std::vector<std::vector<Rat>> grid;
  for (const auto& row : j) {
    std::vector<Rat> r;
    for (const auto& cell : row) {
      if (cell.is_string())
        r.push_back(parse_rational(cell.get<std::string>()));
      else if (cell.is_number_integer())
        r.push_back(Rat(cell.get<long long>()));
      else
        throw error("matrix entries must be strings or integers");
    }
    grid.push_back(std::move(r));
  }
  return RationalMatrix(std::move(grid));
}

inline json combo_to_json(const LinearCombination& combo) {
  json terms = json::array();
  for (const auto& [t, a] : combo.terms())
    terms.push_back(json{{"tabloid", tabloid_to_json(t)}, {"coefficient", format_rational(a)}});
  return terms;
}

// Accepts either a single tabloid object (coefficient 1) or a nonempty list
// of {tabloid, coefficient} entries.
inline LinearCombination combo_from_json(const json& j) {
  if (j.is_object()) return LinearCombination::single(tabloid_from_json(j));
  if (!j.is_array() || j.empty())
    throw error("combination json needs a tabloid or a nonempty term list");
  Tabloid first = tabloid_from_json(j.front().at("tabloid"));
  LinearCombination combo(first.shape());
  for (const auto& entry : j) {
    Tabloid t = tabloid_from_json(entry.at("tabloid"));
    Rat a(1);
    if (entry.contains("coefficient")) {
      const auto& c = entry.at("coefficient");
      a = c.is_string() ? parse_rational(c.get<std::string>()) : Rat(c.get<long long>());
    }
    combo.add(t, a);
  }
  return combo;
}

inline json scan_to_json(const ScanResult& res, bool with_paths) {
  json out{{"scan", res.scan_tableau.columns()}};
  if (with_paths) {
    json paths = json::object();
    for (const auto& [loc, path] : res.paths) {
      std::string key = "(" + std::to_string(loc.first) + "," + std::to_string(loc.second) + ")";
      json plist = json::array();
      for (auto [r, c] : path) plist.push_back(json::array({r, c}));
      paths[key] = std::move(plist);
    }
    out["paths"] = std::move(paths);
  }
  return out;
}

inline json region_to_json(const Region& mu) {
  json out = json::array();
  for (auto [r, c] : mu) out.push_back(json::array({r, c}));
  return out;
}

inline Region region_from_json(const json& j) {
  if (!j.is_array()) throw error("region json needs an array of [row, column] pairs");
  Region mu;
  for (const auto& loc : j) {
    if (!loc.is_array() || loc.size() != 2) throw error("region location needs two entries");
    mu.emplace_back(loc[0].get<int>(), loc[1].get<int>());
  }
  return mu;
}

inline json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(json{{"exponents", it->first}, {"coefficient", it->second.str()}});
  return json{{"text", p.to_string()}, {"terms", std::move(terms)}};
}

}  // namespace stdmon

#endif
