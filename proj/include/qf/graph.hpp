#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/canonical.hpp"
#include "qf/complex.hpp"
#include "qf/error.hpp"
#include "qf/ideal.hpp"
#include "qf/vertex_set.hpp"

namespace qf {

using Edge = std::pair<int, int>;

/// Simple graph on the vertex set {1..n}.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(Errc::TooLarge, "graph order " + std::to_string(n) + " outside 0.." +
                                      std::to_string(kMaxVertices));
    }
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Bit i of `bits` selects the i-th pair of {1..n} in colex order
  /// (12, 13, 23, 14, 24, 34, ...).
  static Graph from_edge_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int index = 0;
    for (int v = 1; v <= n; ++v) {
      for (int u = 1; u < v; ++u, ++index) {
        if ((bits >> index) & 1U) g.add_edge(u, v);
      }
    }
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > n_ || v > n_) {
      throw Error(Errc::InvalidLabel, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                          " outside 1.." + std::to_string(n_));
    }
    if (u == v) throw Error(Errc::InvalidLabel, "loop at vertex " + std::to_string(u));
    adj_[u - 1] |= Mask{1} << (v - 1);
    adj_[v - 1] |= Mask{1} << (u - 1);
  }

  int order() const noexcept { return n_; }

  int edge_count() const noexcept {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += std::popcount(adj_[i]);
    return twice / 2;
  }

  bool adjacent(int u, int v) const noexcept {
    return u >= 1 && u <= n_ && ((adj_[u - 1] >> (v - 1)) & 1U);
  }

  VertexSet neighbors(int v) const noexcept { return VertexSet::from_mask(adj_[v - 1]); }
  int degree(int v) const noexcept { return std::popcount(adj_[v - 1]); }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
      for (int v : neighbors(u).labels()) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Edges as 2-element vertex sets.
  std::vector<VertexSet> edge_sets() const {
    std::vector<VertexSet> out;
    for (auto [u, v] : edges()) out.push_back(VertexSet{u, v});
    return out;
  }

  bool has_isolated_vertex() const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (adj_[i] == 0) return true;
    }
    return false;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

inline std::string to_string(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Edge set becomes every non-adjacent pair.
inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

/// Lexicographically first triangle (u < v < w), if any.
inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 1; u <= g.order(); ++u) {
    for (int v : g.neighbors(u).labels()) {
      if (v <= u) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (int w : common.labels()) {
        if (w > v) return std::array<int, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

inline bool has_triangle(const Graph& g) { return find_triangle(g).has_value(); }

/// Vertex sets of the connected components, ordered by smallest label.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = 1; s <= g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet{s};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.labels()) next = next | g.neighbors(v);
      frontier = next - comp;
      comp = comp | next;
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_clique(const Graph& g, VertexSet vs) {
  for (int v : vs.labels()) {
    if (!(vs.without(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

/// Edge ideal I(G) in k[x_1..x_n].
inline SquarefreeIdeal edge_ideal(const Graph& g) {
  return SquarefreeIdeal(std::max(1, g.order()), g.edge_sets());
}

/// The graph as a 1-dimensional complex (requires no isolated vertices).
inline SimplicialComplex as_complex(const Graph& g) {
  if (g.has_isolated_vertex() || g.edge_count() == 0) {
    throw Error(Errc::IsolatedVertex, "graph has an isolated vertex: " + to_string(g));
  }
  return build_complex(g.edge_sets());
}

/// b = C(n,2) - 2|E(G)|.
inline std::int64_t type_parameter(const Graph& g) {
  return binomial(g.order(), 2) - 2 * static_cast<std::int64_t>(g.edge_count());
}

inline void require_no_isolated_vertex(const Graph& g) {
  if (g.order() == 0 || g.has_isolated_vertex()) {
    throw Error(Errc::IsolatedVertex, "graph has an isolated vertex: " + to_string(g));
  }
}

/// Quasi f-graph test through the f-vectors of the facet and non-face
/// complexes of the edge ideal. Requires type of the form (0, b).
inline QuasiFReport is_quasi_f_direct(const Graph& g) {
  require_no_isolated_vertex(g);
  QuasiFReport r = quasi_f_report(edge_ideal(g));
  if (r.is_quasi_f && !(r.type->size() == 2 && (*r.type)[0] == 0)) {
    r.is_quasi_f = false;
    r.type.reset();
    r.failure_reason = FailureReason::TypeShape;
  }
  return r;
}

struct Characterization {
  bool verdict = false;
  std::optional<std::int64_t> b;
};

/// Quasi f-graph test by the combinatorial criterion: |b| < C(n,2) and the
/// complement is triangle-free.
inline Characterization is_quasi_f_characterized(const Graph& g) {
  require_no_isolated_vertex(g);
  const std::int64_t b = type_parameter(g);
  const bool ok = (b < 0 ? -b : b) < binomial(g.order(), 2) && !has_triangle(complement(g));
  if (!ok) return {false, std::nullopt};
  return {true, b};
}

struct MnClassification {
  bool verdict = false;
  int m = 0;
  int n2 = 0;
};

/// [m:n]-graph test: the complement is complete bipartite K_{m,n2} with
/// m >= n2 >= 1, i.e. G = K_m + K_n2 (disjoint union).
inline MnClassification is_mn_graph(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() != 2) return {};
  for (VertexSet c : comps) {
    if (!is_clique(g, c)) return {};
  }
  const int a = comps[0].size(), b = comps[1].size();
  return {true, std::max(a, b), std::min(a, b)};
}

/// For a disconnected quasi f-graph of type (0, b): checks that it is an
/// [m:n]-graph with (m - n)^2 = m + n - 2b.
inline bool check_disconnected_classification(const Graph& g) {
  const auto report = is_quasi_f_direct(g);
  if (!report.is_quasi_f) {
    throw Error(Errc::PreconditionViolated, "graph is not a quasi f-graph: " + to_string(g));
  }
  if (is_connected(g)) {
    throw Error(Errc::PreconditionViolated, "graph is connected: " + to_string(g));
  }
  const auto mn = is_mn_graph(g);
  if (!mn.verdict) return false;
  const std::int64_t b = (*report.type)[1];
  const std::int64_t diff = mn.m - mn.n2;
  return diff * diff == mn.m + mn.n2 - 2 * b;
}

/// K_m + K_n2 on {1..m} and {m+1..m+n2}.
inline Graph disjoint_cliques(int m, int n2) {
  Graph g(m + n2);
  for (int u = 1; u <= m; ++u) {
    for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
  }
  for (int u = m + 1; u <= m + n2; ++u) {
    for (int v = u + 1; v <= m + n2; ++v) g.add_edge(u, v);
  }
  return g;
}

struct NrConstruction {
  Graph graph;
  std::int64_t b = 0;
};

/// The [n : n-r]-graph K_n + K_{n-r}, a disconnected quasi f-graph of type
/// (0, (2n - r - r^2) / 2). Requires 1 < r < n - 1 and n >= 4; r = n - 1
/// would leave a K_1 component, which is an isolated vertex.
inline NrConstruction construct_n_nr_graph(int n, int r) {
  if (n < 4 || r <= 1 || r >= n) {
    throw Error(Errc::ParameterOutOfRange, "need n >= 4 and 1 < r < n");
  }
  if (r == n - 1) {
    throw Error(Errc::ParameterOutOfRange,
                "r = n - 1 gives a K_1 component, i.e. an isolated vertex");
  }
  if (2 * n - r > kMaxVertices) {
    throw Error(Errc::TooLarge, "construction exceeds the vertex limit");
  }
  NrConstruction c{disjoint_cliques(n, n - r), (2 * std::int64_t{n} - r - std::int64_t{r} * r) / 2};
  const auto report = is_quasi_f_direct(c.graph);
  if (!report.is_quasi_f || (*report.type)[1] != c.b) {
    throw Error(Errc::PreconditionViolated, "construction failed self-check");
  }
  return c;
}

/// Isomorphism-invariant relabelling: lexicographically least adjacency
/// string, pairs in colex order (12, 13, 23, 14, ...).
inline Graph canonical_graph(const Graph& g, int cap = kCanonicalCap) {
  if (g.order() > cap) {
    throw Error(Errc::TooLarge, "graph order " + std::to_string(g.order()) +
                                    " exceeds canonicalization cap " + std::to_string(cap));
  }
  std::vector<Mask> sets;
  for (VertexSet e : g.edge_sets()) sets.push_back(e.mask());
  const auto canon = canonical_labeling(g.order(), sets);
  Graph out(g.order());
  for (Mask m : canon.sets) {
    const VertexSet e = VertexSet::from_mask(m);
    out.add_edge(e.min_label(), e.max_label());
  }
  return out;
}

/// Ordering key matching the canonical tie-break: edges as masks, sorted.
inline std::vector<Mask> edge_key(const Graph& g) {
  std::vector<Mask> key;
  for (VertexSet e : g.edge_sets()) key.push_back(e.mask());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace qf
