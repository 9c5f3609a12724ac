#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qf/cm.hpp"
#include "qf/complex.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/graph.hpp"
#include "qf/ideal.hpp"

namespace qf::io {

// Text formats. Lines whose first non-blank character is '#' and blank
// lines are ignored everywhere.
//
//   complex:  optional "n <count>" header, then one facet per line
//   ideal:    "n <count>", then one generator support per line
//   graph:    "n <count>", then one edge per line ("u v")

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (int number = 1; std::getline(in, text); ++number) {
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] inline void fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline int parse_int(const Line& line, const std::string& token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line.number, "expected an integer, got '" + token + "'");
  }
  return value;
}

inline std::optional<int> parse_header(const Line& line) {
  if (line.tokens.front() != "n") return std::nullopt;
  if (line.tokens.size() != 2) fail(line.number, "header must be 'n <count>'");
  const int n = parse_int(line, line.tokens[1]);
  if (n < 1 || n > kMaxVertices) {
    fail(line.number, "vertex count must lie in 1.." + std::to_string(kMaxVertices));
  }
  return n;
}

inline VertexSet parse_set(const Line& line, int limit) {
  VertexSet s;
  for (const auto& token : line.tokens) {
    const int v = parse_int(line, token);
    if (v < 1 || v > limit) {
      fail(line.number, "label " + std::to_string(v) + " outside 1.." + std::to_string(limit));
    }
    s = s.with(v);
  }
  return s;
}

inline std::string set_line(VertexSet s) {
  std::string out;
  for (int v : s.labels()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace detail

inline SimplicialComplex parse_complex(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "no facets");
  std::size_t start = 0;
  const auto declared = detail::parse_header(lines.front());
  if (declared) start = 1;
  std::vector<VertexSet> facets;
  for (std::size_t i = start; i < lines.size(); ++i) {
    facets.push_back(detail::parse_set(lines[i], declared.value_or(kMaxVertices)));
  }
  if (facets.empty()) throw Error(Errc::ParseError, "no facets");
  return declared ? build_complex(std::move(facets), *declared) : build_complex(std::move(facets));
}

inline std::string write_complex(const SimplicialComplex& c) {
  std::string out;
  for (VertexSet f : c.facets()) out += detail::set_line(f) + "\n";
  return out;
}

inline SquarefreeIdeal parse_ideal(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "missing 'n <count>' header");
  const auto n = detail::parse_header(lines.front());
  if (!n) detail::fail(lines.front().number, "first line must be 'n <count>'");
  std::vector<VertexSet> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    gens.push_back(detail::parse_set(lines[i], *n));
  }
  return SquarefreeIdeal(*n, std::move(gens));
}

inline std::string write_ideal(const SquarefreeIdeal& ideal) {
  std::string out = "n " + std::to_string(ideal.ambient()) + "\n";
  for (VertexSet g : ideal.generators()) out += detail::set_line(g) + "\n";
  return out;
}

inline Graph parse_graph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "missing 'n <count>' header");
  const auto n = detail::parse_header(lines.front());
  if (!n) detail::fail(lines.front().number, "first line must be 'n <count>'");
  Graph g(*n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) detail::fail(line.number, "an edge needs exactly two labels");
    const int u = detail::parse_int(line, line.tokens[0]);
    const int v = detail::parse_int(line, line.tokens[1]);
    if (u < 1 || v < 1 || u > *n || v > *n) {
      detail::fail(line.number, "label outside 1.." + std::to_string(*n));
    }
    if (u == v) detail::fail(line.number, "loops are not allowed");
    g.add_edge(u, v);
  }
  return g;
}

inline std::string write_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

template <class T, class Parser>
T parse_string(const std::string& text, Parser parser) {
  std::istringstream in(text);
  return parser(in);
}

// ---------------------------------------------------------------------------
// Machine-readable documents.

using nlohmann::json;

inline json to_json(const FVector& f) { return f.counts; }

inline json to_json(const QuasiFReport& r) {
  json j;
  j["is_quasi_f"] = r.is_quasi_f;
  j["type"] = r.type ? json(*r.type) : json(nullptr);
  j["f_facet"] = to_json(r.f_facet);
  j["f_nonface"] = to_json(r.f_nonface);
  j["failure_reason"] =
      r.failure_reason ? json(std::string(to_string(*r.failure_reason))) : json(nullptr);
  return j;
}

inline json edge_list(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

inline json facet_list(const SimplicialComplex& c) {
  json facets = json::array();
  for (VertexSet f : c.facets()) facets.push_back(f.labels());
  return facets;
}

inline json census(const GraphClass& cls) {
  json j;
  j["n"] = cls.n;
  j["total"] = cls.graphs.size();
  json by_type = json::object();
  for (auto [b, count] : cls.by_type) by_type[std::to_string(b)] = count;
  j["by_type"] = by_type;
  json graphs = json::array();
  for (const Graph& g : cls.graphs) graphs.push_back(edge_list(g));
  j["graphs"] = graphs;
  return j;
}

inline json to_json(const CmReport& r) {
  json j;
  j["cm_verdict"] = std::string(to_string(r.verdict));
  j["height"] = r.height;
  j["nonface_connected"] = r.nonface_connected;
  j["exception_matched"] =
      r.exception_matched ? json(static_cast<int>(*r.exception_matched)) : json(nullptr);
  return j;
}

/// Flattens a document into "key: value" lines; nested objects use dotted
/// keys and arrays are printed as compact JSON. Carries exactly the same
/// facts as the JSON form.
inline std::string to_text(const json& doc, const std::string& prefix = "") {
  std::string out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object() && !it->empty()) {
      out += to_text(*it, key);
    } else if (it->is_string()) {
      out += key + ": " + it->get<std::string>() + "\n";
    } else {
      out += key + ": " + it->dump() + "\n";
    }
  }
  return out;
}

}  // namespace qf::io
