#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "qf/complex.hpp"
#include "qf/error.hpp"
#include "qf/graph.hpp"
#include "qf/ideal.hpp"

namespace qf {

/// Residue class of n mod 4 selecting the construction case.
enum class ConstructionCase { FourK, FourKPlus1, FourKPlus2, FourKPlus3 };

constexpr std::string_view to_string(ConstructionCase c) noexcept {
  switch (c) {
    case ConstructionCase::FourK: return "4k";
    case ConstructionCase::FourKPlus1: return "4k+1";
    case ConstructionCase::FourKPlus2: return "4k+2";
    case ConstructionCase::FourKPlus3: return "4k+3";
  }
  return "?";
}

enum class BoundMode {
  /// |b| < floor(n/2)
  Strict,
  /// |b| <= floor(n/2); boundary cases may fail to be Cohen-Macaulay.
  Extended,
};

/// Two cliques K_p (labels 1..p) and K_q (labels p+1..p+q) joined by
/// join_count edges, giving a quasi f-graph of type (0, b).
struct CmConstructionSpec {
  int n = 0;
  std::int64_t b = 0;
  ConstructionCase case_id = ConstructionCase::FourK;
  int k = 0;
  std::int64_t b_prime = 0;
  int p = 0;
  int q = 0;
  std::int64_t join_count = 0;
  BoundMode mode = BoundMode::Strict;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Resolves the case, k, b' and part sizes for n vertices and type (0, b).
///   n = 4k:   b = 2b',   parts (2k, 2k)
///   n = 4k+1: b = 2b',   parts (2k+1, 2k)
///   n = 4k+2: b = 2b'+1, parts (2k+1, 2k+1)
///   n = 4k+3: b = 2b'+1, parts (2k+2, 2k+1)
/// and join_count = k - b'.
inline CmConstructionSpec plan_construction(int n, std::int64_t b,
                                            BoundMode mode = BoundMode::Strict) {
  if (n < 4 || n > kMaxVertices) {
    throw Error(Errc::ParameterOutOfRange, "construction needs 4 <= n <= " +
                                               std::to_string(kMaxVertices));
  }
  CmConstructionSpec s;
  s.n = n;
  s.b = b;
  s.mode = mode;
  s.k = n / 4;
  const int residue = n % 4;
  const bool want_even = residue <= 1;
  const bool is_even = (b % 2) == 0;
  if (want_even != is_even) {
    throw Error(Errc::ParityMismatch, "n = " + std::to_string(n) + " needs " +
                                          (want_even ? "even" : "odd") + " b, got " +
                                          std::to_string(b));
  }
  const std::int64_t half = n / 2;
  const std::int64_t abs_b = b < 0 ? -b : b;
  if (abs_b > half || (mode == BoundMode::Strict && abs_b == half)) {
    const bool extended_ok = abs_b == half;
    throw Error(Errc::BoundViolation,
                "|b| = " + std::to_string(abs_b) + " against floor(n/2) = " +
                    std::to_string(half) +
                    (extended_ok ? "; accepted with --extended" : "; not accepted in any mode"));
  }
  switch (residue) {
    case 0:
      s.case_id = ConstructionCase::FourK;
      s.p = 2 * s.k;
      s.q = 2 * s.k;
      break;
    case 1:
      s.case_id = ConstructionCase::FourKPlus1;
      s.p = 2 * s.k + 1;
      s.q = 2 * s.k;
      break;
    case 2:
      s.case_id = ConstructionCase::FourKPlus2;
      s.p = 2 * s.k + 1;
      s.q = 2 * s.k + 1;
      break;
    default:
      s.case_id = ConstructionCase::FourKPlus3;
      s.p = 2 * s.k + 2;
      s.q = 2 * s.k + 1;
      break;
  }
  s.b_prime = want_even ? b / 2 : floor_div(b - 1, 2);
  s.join_count = s.k - s.b_prime;
  return s;
}

/// K_p and K_q plus a matching: vertex i joined to vertex p + i for
/// i = 1..join_count.
inline Graph build_cm_graph(const CmConstructionSpec& spec) {
  if (spec.join_count < 0 || spec.join_count > std::min(spec.p, spec.q)) {
    throw Error(Errc::JoinExceedsParts, std::to_string(spec.join_count) +
                                            " join edges do not fit a matching between parts of " +
                                            std::to_string(spec.p) + " and " +
                                            std::to_string(spec.q));
  }
  Graph g = disjoint_cliques(spec.p, spec.q);
  for (int i = 1; i <= spec.join_count; ++i) g.add_edge(i, spec.p + i);
  return g;
}

/// Maximum independent set size by exhaustive branching on the lowest
/// remaining vertex (take it, or drop it).
inline int independence_number(const Graph& g) {
  auto rec = [&](auto&& self, Mask candidates) -> int {
    if (candidates == 0) return 0;
    const int v = std::countr_zero(candidates) + 1;
    const Mask without_v = candidates & ~(Mask{1} << (v - 1));
    const int skip = self(self, without_v);
    const int take = 1 + self(self, without_v & ~g.neighbors(v).mask());
    return std::max(skip, take);
  };
  return rec(rec, g.vertices().mask());
}

/// Height of I(G): minimum vertex cover size = n - independence number.
inline int edge_ideal_height(const Graph& g) {
  if (g.order() > kMaxVertices) throw Error(Errc::TooLarge, "graph too large");
  return g.order() - independence_number(g);
}

enum class CmVerdict { Yes, No, CriterionInapplicable };

constexpr std::string_view to_string(CmVerdict v) noexcept {
  switch (v) {
    case CmVerdict::Yes: return "yes";
    case CmVerdict::No: return "no";
    case CmVerdict::CriterionInapplicable: return "criterion_inapplicable";
  }
  return "?";
}

/// Boundary configurations that fail to be Cohen-Macaulay.
enum class RemarkPattern {
  /// The 4-cycle, type (0, -2).
  CycleFour = 1,
  /// K_2k + K_2k or K_2k+1 + K_2k, one vertex of the first joined to all
  /// 2k vertices of the second; type (0, -2k).
  StarJoinEven = 2,
  /// K_2k+1 + K_2k+1 or K_2k+2 + K_2k+1 with a 2k+1 star join; type
  /// (0, -2k-1).
  StarJoinOdd = 3,
};

/// Structural match: C_4, or a vertex v adjacent to everything such that
/// G - v is two cliques whose sizes differ by at most one.
inline std::optional<RemarkPattern> match_remark_exceptions(const Graph& g) {
  const int n = g.order();
  if (n == 4 && g.edge_count() == 4) {
    bool two_regular = true;
    for (int v = 1; v <= 4; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular) return RemarkPattern::CycleFour;
  }
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != n - 1) continue;
    const VertexSet rest = g.vertices().without(v);
    // Components of G - v.
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int s : rest.labels()) {
      if (seen.contains(s)) continue;
      VertexSet comp{s}, frontier{s};
      while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier.labels()) next = next | (g.neighbors(u) & rest);
        frontier = next - comp;
        comp = comp | next;
      }
      seen = seen | comp;
      comps.push_back(comp);
    }
    if (comps.size() != 2 || !is_clique(g, comps[0]) || !is_clique(g, comps[1])) continue;
    const int a = comps[0].size(), c = comps[1].size();
    if (std::abs(a - c) > 1) continue;
    const int second = std::max(a, c);
    if (second % 2 == 0 && second >= 2) return RemarkPattern::StarJoinEven;
    if (second % 2 == 1 && second >= 3) return RemarkPattern::StarJoinOdd;
  }
  return std::nullopt;
}

/// First clique K_first, second K_second, vertex 1 joined to every vertex
/// of the second clique.
inline Graph star_join_graph(int first, int second) {
  Graph g = disjoint_cliques(first, second);
  for (int u = first + 1; u <= first + second; ++u) g.add_edge(1, u);
  return g;
}

struct CmReport {
  CmVerdict verdict = CmVerdict::CriterionInapplicable;
  int height = 0;
  bool nonface_connected = false;
  std::optional<RemarkPattern> exception_matched;
};

/// Cohen-Macaulay test valid when ht I(G) = n - 2: then G is CM iff the
/// non-face complex of I(G) is connected. Characteristic-free.
inline CmReport cm_check(const Graph& g) {
  CmReport r;
  r.exception_matched = match_remark_exceptions(g);
  if (g.order() == 0 || g.has_isolated_vertex()) return r;
  r.height = edge_ideal_height(g);
  if (!is_quasi_f_direct(g).is_quasi_f) return r;
  r.nonface_connected = is_connected(nonface_complex(edge_ideal(g)));
  if (r.height != g.order() - 2) return r;
  r.verdict = r.nonface_connected ? CmVerdict::Yes : CmVerdict::No;
  return r;
}

}  // namespace qf
