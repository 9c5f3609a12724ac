#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qf/complex.hpp"
#include "qf/graph.hpp"
#include "qf/ideal.hpp"
#include "qf/vertex_set.hpp"

namespace qf {

struct GraphFilter {
  std::optional<std::int64_t> b;
  /// true: connected only, false: disconnected only.
  std::optional<bool> connected;
};

/// Pairwise non-isomorphic quasi f-graphs on n vertices, canonical labels.
struct GraphClass {
  int n = 0;
  GraphFilter filter;
  std::vector<Graph> graphs;
  std::map<std::int64_t, std::int64_t> by_type;
};

/// Sort order for canonical graphs: by edge count, then by edge masks.
inline bool canonical_graph_less(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return edge_key(a) < edge_key(b);
}

/// Triangle-free graphs on n vertices up to isomorphism, canonical labels.
/// Built one vertex at a time: a triangle-free graph minus its last vertex
/// is triangle-free, and the new vertex must see an independent set.
inline std::vector<Graph> triangle_free_classes(int n, int cap = enumeration_cap()) {
  if (n < 1 || n > cap) {
    throw Error(Errc::TooLarge, "n = " + std::to_string(n) + " outside enumeration range 1.." +
                                    std::to_string(cap));
  }
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::set<std::vector<Mask>> seen;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      for (Mask s = 0; s < (Mask{1} << k); ++s) {
        const VertexSet independent = VertexSet::from_mask(s);
        bool ok = true;
        for (int v : independent.labels()) {
          if (h.neighbors(v).intersects(independent)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        Graph ext(k + 1, h.edges());
        for (int v : independent.labels()) ext.add_edge(v, k + 1);
        Graph canon = canonical_graph(ext, kMaxVertices);
        if (seen.insert(edge_key(canon)).second) next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), canonical_graph_less);
  return level;
}

/// Every quasi f-graph on n vertices up to isomorphism: complements of the
/// triangle-free graphs that have an edge and no vertex of full degree.
inline GraphClass enumerate_quasi_f_graphs(int n, GraphFilter filter = {},
                                           int cap = enumeration_cap()) {
  if (n < 2 || n > cap) {
    throw Error(Errc::TooLarge, "n = " + std::to_string(n) + " outside enumeration range 2.." +
                                    std::to_string(cap));
  }
  GraphClass out;
  out.n = n;
  out.filter = filter;
  for (const Graph& h : triangle_free_classes(n, cap)) {
    if (h.edge_count() == 0) continue;
    bool full_degree = false;
    for (int v = 1; v <= n; ++v) full_degree = full_degree || h.degree(v) == n - 1;
    if (full_degree) continue;
    Graph g = canonical_graph(complement(h), kMaxVertices);
    const auto verdict = is_quasi_f_characterized(g);
    if (!verdict.verdict) continue;
    if (filter.b && *filter.b != *verdict.b) continue;
    if (filter.connected && *filter.connected != is_connected(g)) continue;
    ++out.by_type[*verdict.b];
    out.graphs.push_back(std::move(g));
  }
  std::sort(out.graphs.begin(), out.graphs.end(), canonical_graph_less);
  return out;
}

/// Calls fn(graph) for every labelled graph on {1..n} without isolated
/// vertices whose edge bits lie in [begin, end).
template <class Fn>
void for_each_labeled_graph(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    Graph g = Graph::from_edge_bits(n, bits);
    if (g.has_isolated_vertex()) continue;
    fn(g);
  }
}

inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << binomial(n, 2);
}

// ---------------------------------------------------------------------------
// Pure complexes.

inline constexpr int kComplexEnumMaxN = 6;
inline constexpr int kComplexEnumMaxD = 3;

namespace detail {

// Facet families of pure d-dimensional complexes on {1..n}, one per
// isomorphism class: each is the numerically least member of its orbit,
// with bit i standing for the i-th (d+1)-subset in mask order.
struct PureOrbits {
  std::vector<Mask> level;            // (d+1)-subsets
  std::vector<std::uint64_t> reps;    // orbit representatives

  std::vector<VertexSet> facets(std::uint64_t bits) const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if ((bits >> i) & 1U) out.push_back(VertexSet::from_mask(level[i]));
    }
    return out;
  }
};

inline PureOrbits pure_orbits(int n, int d) {
  PureOrbits out;
  out.level = level_masks(n, d + 1);
  const std::size_t k = out.level.size();
  std::vector<int> index_of(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < k; ++i) index_of[out.level[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> perm_maps;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<int> map(k);
    for (std::size_t i = 0; i < k; ++i) {
      Mask image = 0;
      for (Mask t = out.level[i]; t != 0; t &= t - 1) image |= Mask{1} << perm[std::countr_zero(t)];
      map[i] = index_of[image];
    }
    perm_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint64_t total = std::uint64_t{1} << k;
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    if ((visited[bits / 64] >> (bits % 64)) & 1U) continue;
    for (const auto& map : perm_maps) {
      std::uint64_t image = 0;
      for (std::uint64_t t = bits; t != 0; t &= t - 1) image |= std::uint64_t{1} << map[std::countr_zero(t)];
      visited[image / 64] |= std::uint64_t{1} << (image % 64);
    }
    out.reps.push_back(bits);
  }
  return out;
}

}  // namespace detail

/// Pure d-dimensional complexes on exactly the vertices {1..n} whose facet
/// ideal is a quasi f-ideal, one per isomorphism class, canonical labels.
inline std::vector<SimplicialComplex> enumerate_quasi_f_complexes(
    int n, int d, const std::optional<TypeVector>& type_filter = std::nullopt) {
  if (n < 2 || n > kComplexEnumMaxN || d < 1 || d > kComplexEnumMaxD) {
    throw Error(Errc::TooLarge, "complex enumeration limited to n <= 6, 1 <= d <= 3");
  }
  if (d >= n) throw Error(Errc::DimensionOutOfRange, "dimension must be below n");
  const auto orbits = detail::pure_orbits(n, d);
  std::vector<SimplicialComplex> out;
  for (std::uint64_t bits : orbits.reps) {
    auto facets = orbits.facets(bits);
    SimplicialComplex c = build_complex(facets);
    if (c.vertices() != VertexSet::range(n)) continue;
    const auto report = quasi_f_report(facet_ideal(c, n));
    if (!report.is_quasi_f) continue;
    if (type_filter && *report.type != *type_filter) continue;
    out.push_back(canonical_complex(c));
  }
  std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
    const auto fa = a.facets(), fb = b.facets();
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
  });
  return out;
}

}  // namespace qf
