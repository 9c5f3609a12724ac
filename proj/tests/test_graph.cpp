#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qf/enumerate.hpp"
#include "qf/graph.hpp"

using qf::Graph;
using qf::VertexSet;

namespace {

// The edge ideal's f-vectors straight from subset enumeration; b is the
// difference of edge counts.
std::optional<std::int64_t> oracle_b(const Graph& g) {
  const auto gens = oracle::edge_masks(g);
  const auto facet = oracle::f_vector(g.order(), gens);
  const auto nonface = oracle::nonface_f_vector(g.order(), gens);
  if (facet.size() != nonface.size() || facet[0] != nonface[0]) return std::nullopt;
  return nonface[1] - facet[1];
}

bool oracle_triangle_free(const Graph& g) {
  const int n = g.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

}  // namespace

TEST(Graph, Basics) {
  Graph g(4, {{1, 2}, {2, 3}, {3, 1}, {2, 1}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(1, 4));
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.neighbors(1), (VertexSet{2, 3}));
  EXPECT_TRUE(g.has_isolated_vertex());
  const std::vector<qf::Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), edges);
  EXPECT_ERRC(g.add_edge(1, 1), qf::Errc::InvalidLabel);
  EXPECT_ERRC(g.add_edge(1, 5), qf::Errc::InvalidLabel);
  EXPECT_ERRC(Graph(17), qf::Errc::TooLarge);
}

TEST(Graph, EdgeBitsUseColexPairs) {
  EXPECT_EQ(Graph::from_edge_bits(3, 0b001).edges(), (std::vector<qf::Edge>{{1, 2}}));
  EXPECT_EQ(Graph::from_edge_bits(3, 0b010).edges(), (std::vector<qf::Edge>{{1, 3}}));
  EXPECT_EQ(Graph::from_edge_bits(3, 0b100).edges(), (std::vector<qf::Edge>{{2, 3}}));
  EXPECT_EQ(Graph::from_edge_bits(4, 0b001000).edges(), (std::vector<qf::Edge>{{1, 4}}));
}

TEST(Graph, ComplementAndComponents) {
  const Graph g = qf::disjoint_cliques(3, 2);
  const Graph h = qf::complement(g);
  EXPECT_EQ(h.edge_count(), 6);
  EXPECT_EQ(qf::complement(h), g);
  EXPECT_EQ(qf::components(g).size(), 2u);
  EXPECT_TRUE(qf::is_connected(h));
  EXPECT_TRUE(qf::is_clique(g, {1, 2, 3}));
  EXPECT_FALSE(qf::is_clique(g, {1, 4}));
}

TEST(Graph, ComplementTriangleExample) {
  const Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {1, 5}});
  const auto triangle = qf::find_triangle(qf::complement(g));
  ASSERT_TRUE(triangle.has_value());
  EXPECT_EQ(*triangle, (std::array<int, 3>{2, 4, 5}));
  const auto r = qf::is_quasi_f_direct(g);
  EXPECT_FALSE(r.is_quasi_f);
  EXPECT_EQ(r.failure_reason, qf::FailureReason::DimensionMismatch);
  EXPECT_FALSE(qf::is_quasi_f_characterized(g).verdict);
}

TEST(Graph, TwoCliquesTypeZeroOne) {
  const Graph g = qf::disjoint_cliques(4, 2);
  const auto r = qf::is_quasi_f_direct(g);
  ASSERT_TRUE(r.is_quasi_f);
  EXPECT_EQ(*r.type, (qf::TypeVector{0, 1}));
  const auto mn = qf::is_mn_graph(g);
  EXPECT_TRUE(mn.verdict);
  EXPECT_EQ(mn.m, 4);
  EXPECT_EQ(mn.n2, 2);
  EXPECT_TRUE(qf::check_disconnected_classification(g));
}

TEST(Graph, FourCycleTypeZeroMinusTwo) {
  const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const auto r = qf::is_quasi_f_direct(c4);
  ASSERT_TRUE(r.is_quasi_f);
  EXPECT_EQ(*r.type, (qf::TypeVector{0, -2}));
  EXPECT_TRUE(qf::is_connected(c4));
}

TEST(Graph, IsolatedVertexRejected) {
  const Graph g(4, {{1, 2}, {2, 3}});
  EXPECT_ERRC(qf::is_quasi_f_direct(g), qf::Errc::IsolatedVertex);
  EXPECT_ERRC(qf::is_quasi_f_characterized(g), qf::Errc::IsolatedVertex);
  EXPECT_ERRC(qf::is_quasi_f_direct(Graph(0)), qf::Errc::IsolatedVertex);
}

TEST(Graph, ClassificationPreconditions) {
  // P_4 is a connected quasi f-graph; K_4 is not a quasi f-graph.
  EXPECT_ERRC(qf::check_disconnected_classification(Graph(4, {{1, 2}, {2, 3}, {3, 4}})),
              qf::Errc::PreconditionViolated);
  EXPECT_ERRC(qf::check_disconnected_classification(qf::disjoint_cliques(4, 0)),
              qf::Errc::PreconditionViolated);
}

// Both verdicts, and b, against an independent f-vector computation.
TEST(Graph, VerdictsAgreeWithOracleUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    qf::for_each_labeled_graph(n, 0, qf::labeled_graph_count(n), [&](const Graph& g) {
      const auto direct = qf::is_quasi_f_direct(g);
      const auto ch = qf::is_quasi_f_characterized(g);
      const auto b = oracle_b(g);
      const bool expected = b.has_value() && std::abs(*b) < qf::binomial(n, 2) &&
                            oracle_triangle_free(qf::complement(g));
      EXPECT_EQ(direct.is_quasi_f, expected) << qf::to_string(g);
      EXPECT_EQ(ch.verdict, expected) << qf::to_string(g);
      if (expected) {
        EXPECT_EQ((*direct.type)[1], *b);
        EXPECT_EQ(*ch.b, *b);
        EXPECT_EQ(*b, qf::binomial(n, 2) - 2 * g.edge_count());
      }
    });
  }
}

// The edge set of a quasi f-graph is a perfect set of degree-2 monomials.
TEST(Graph, QuasiFEdgeSetsArePerfect) {
  for (int n = 3; n <= 6; ++n) {
    qf::for_each_labeled_graph(n, 0, qf::labeled_graph_count(n), [&](const Graph& g) {
      if (!qf::is_quasi_f_direct(g).is_quasi_f) return;
      EXPECT_TRUE(qf::is_perfect(g.edge_sets(), n)) << qf::to_string(g);
    });
  }
}

TEST(Graph, DisconnectedQuasiFAreTwoCliques) {
  for (int n = 2; n <= 6; ++n) {
    qf::for_each_labeled_graph(n, 0, qf::labeled_graph_count(n), [&](const Graph& g) {
      if (!qf::is_quasi_f_direct(g).is_quasi_f || qf::is_connected(g)) return;
      EXPECT_TRUE(qf::is_mn_graph(g).verdict) << qf::to_string(g);
      EXPECT_TRUE(qf::check_disconnected_classification(g)) << qf::to_string(g);
    });
  }
}

TEST(Graph, TypeBoundsHold) {
  for (int n = 4; n <= 6; ++n) {
    const auto bounds = qf::type_bounds_d2(n);
    qf::for_each_labeled_graph(n, 0, qf::labeled_graph_count(n), [&](const Graph& g) {
      const auto r = qf::is_quasi_f_direct(g);
      if (!r.is_quasi_f) return;
      EXPECT_GE((*r.type)[1], bounds.lower);
      EXPECT_LE((*r.type)[1], bounds.upper);
    });
  }
}

TEST(NrConstruction, FiveTwo) {
  const auto c = qf::construct_n_nr_graph(5, 2);
  EXPECT_EQ(c.b, 2);
  EXPECT_EQ(c.graph, qf::disjoint_cliques(5, 3));
  EXPECT_EQ(c.graph.edge_count(), 13);
}

TEST(NrConstruction, FormulaAcrossRange) {
  for (int n = 4; n <= 8; ++n) {
    for (int r = 2; r < n - 1; ++r) {
      const auto c = qf::construct_n_nr_graph(n, r);
      EXPECT_EQ(2 * c.b, 2 * n - r - r * r);
      EXPECT_EQ(qf::type_parameter(c.graph), c.b);
    }
  }
}

TEST(NrConstruction, Errors) {
  EXPECT_ERRC(qf::construct_n_nr_graph(5, 4), qf::Errc::ParameterOutOfRange);
  EXPECT_ERRC(qf::construct_n_nr_graph(5, 1), qf::Errc::ParameterOutOfRange);
  EXPECT_ERRC(qf::construct_n_nr_graph(3, 2), qf::Errc::ParameterOutOfRange);
  EXPECT_ERRC(qf::construct_n_nr_graph(12, 2), qf::Errc::TooLarge);
}
