#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qf/cm.hpp"
#include "qf/complex.hpp"
#include "qf/enumerate.hpp"
#include "qf/graph.hpp"
#include "qf/ideal.hpp"
#include "qf/io.hpp"

// Report documents shared by the command-line tool and the tests. The text
// form of each is io::to_text of the same document.

namespace qf::report {

using nlohmann::json;

inline std::string type_string(const TypeVector& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

/// Parses "0,2,2" or "(0,2,2)".
inline TypeVector parse_type(std::string text) {
  std::erase(text, '(');
  std::erase(text, ')');
  std::erase(text, ' ');
  TypeVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw Error(Errc::ParseError, "bad type vector '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline json ideal_report(const SquarefreeIdeal& ideal) {
  json j;
  j["n"] = ideal.ambient();
  json gens = json::array();
  for (VertexSet g : ideal.generators()) gens.push_back(g.labels());
  j["generators"] = gens;
  const auto r = quasi_f_report(ideal);
  j.update(io::to_json(r));
  j["is_f_ideal"] = r.is_f_ideal();
  const auto degree = ideal.degree();
  j["degree"] = degree ? json(*degree) : json(nullptr);
  if (degree) {
    j["upper_perfect"] = is_upper_perfect(ideal.generators(), ideal.ambient());
    j["lower_perfect"] = is_lower_perfect(ideal.generators(), ideal.ambient());
  } else {
    j["upper_perfect"] = nullptr;
    j["lower_perfect"] = nullptr;
  }
  return j;
}

inline json graph_report(const Graph& g) {
  require_no_isolated_vertex(g);
  json j;
  j["n"] = g.order();
  j["edges"] = io::edge_list(g);
  j["b"] = type_parameter(g);
  const auto direct = is_quasi_f_direct(g);
  const auto characterized = is_quasi_f_characterized(g);
  j["quasi_f_direct"] = direct.is_quasi_f;
  j["quasi_f_characterized"] = characterized.verdict;
  j["verdicts_agree"] = direct.is_quasi_f == characterized.verdict;
  j["type"] = direct.type ? json(*direct.type) : json(nullptr);
  j["failure_reason"] =
      direct.failure_reason ? json(std::string(to_string(*direct.failure_reason))) : json(nullptr);
  j["f_facet"] = io::to_json(direct.f_facet);
  j["f_nonface"] = io::to_json(direct.f_nonface);
  const auto triangle = find_triangle(complement(g));
  j["complement_triangle"] = triangle ? json(*triangle) : json(nullptr);
  j["connected"] = is_connected(g);
  const auto mn = is_mn_graph(g);
  j["mn_graph"] = mn.verdict ? json{{"m", mn.m}, {"n", mn.n2}} : json(nullptr);
  j["cm"] = io::to_json(cm_check(g));
  return j;
}

inline json construction_report(const CmConstructionSpec& spec, const Graph& g) {
  const auto direct = is_quasi_f_direct(g);
  const auto cm = cm_check(g);
  json j;
  j["n"] = spec.n;
  j["b"] = spec.b;
  j["case_id"] = std::string(to_string(spec.case_id));
  j["k"] = spec.k;
  j["b_prime"] = spec.b_prime;
  j["p"] = spec.p;
  j["q"] = spec.q;
  j["join_count"] = spec.join_count;
  j["edge_count"] = g.edge_count();
  j["is_quasi_f"] = direct.is_quasi_f && (*direct.type)[1] == spec.b;
  j["cm_verdict"] = std::string(to_string(cm.verdict));
  j["exception_matched"] =
      cm.exception_matched ? json(static_cast<int>(*cm.exception_matched)) : json(nullptr);
  j["mode"] = spec.mode == BoundMode::Strict ? "strict" : "extended";
  return j;
}

inline json nr_report(int n, int r, const NrConstruction& c) {
  const auto direct = is_quasi_f_direct(c.graph);
  json j;
  j["n"] = n;
  j["r"] = r;
  j["m"] = n;
  j["second"] = n - r;
  j["b"] = c.b;
  j["edge_count"] = c.graph.edge_count();
  j["is_quasi_f"] = direct.is_quasi_f && (*direct.type)[1] == c.b;
  j["connected"] = is_connected(c.graph);
  return j;
}

inline json complex_census(int n, int d, const std::optional<TypeVector>& type_filter) {
  const auto complexes = enumerate_quasi_f_complexes(n, d, type_filter);
  json j;
  j["n"] = n;
  j["dim"] = d;
  j["total"] = complexes.size();
  json by_type = json::object();
  json list = json::array();
  for (const auto& c : complexes) {
    const auto r = quasi_f_report(facet_ideal(c, n));
    const std::string key = type_string(*r.type);
    by_type[key] = by_type.value(key, 0) + 1;
    list.push_back(io::facet_list(c));
  }
  j["by_type"] = by_type;
  j["complexes"] = list;
  return j;
}

}  // namespace qf::report
