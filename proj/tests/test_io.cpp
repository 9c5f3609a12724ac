#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qf/io.hpp"
#include "qf/report.hpp"

using qf::io::parse_string;

namespace {

qf::Graph graph_from(const std::string& text) {
  return parse_string<qf::Graph>(text, [](std::istream& in) { return qf::io::parse_graph(in); });
}

qf::SquarefreeIdeal ideal_from(const std::string& text) {
  return parse_string<qf::SquarefreeIdeal>(text,
                                           [](std::istream& in) { return qf::io::parse_ideal(in); });
}

qf::SimplicialComplex complex_from(const std::string& text) {
  return parse_string<qf::SimplicialComplex>(
      text, [](std::istream& in) { return qf::io::parse_complex(in); });
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const qf::Error& e) {
    EXPECT_EQ(e.code(), qf::Errc::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return {};
}

}  // namespace

TEST(Io, CommentsOnlyOnTheirOwnLine) {
  const auto what = error_of([] { graph_from("n 5\n1 2\n3 4 # note\n"); });
  EXPECT_NE(what.find("line 3"), std::string::npos);
}

TEST(Io, GraphParsing) {
  const auto g = graph_from("# header comment\n\nn 4\n1 2\n\n# between\n3 4\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edges(), (std::vector<qf::Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(graph_from(qf::io::write_graph(g)), g);
}

TEST(Io, GraphErrorsCarryLineNumbers) {
  EXPECT_NE(error_of([] { graph_from("n 4\n1 2\n1 x\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { graph_from("n 4\n1 2 3\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { graph_from("n 4\n1 5\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { graph_from("n 4\n2 2\n"); }).find("loops"), std::string::npos);
  EXPECT_NE(error_of([] { graph_from("1 2\n"); }).find("line 1"), std::string::npos);
  error_of([] { graph_from(""); });
  error_of([] { graph_from("n 0\n"); });
  error_of([] { graph_from("n 17\n"); });
}

TEST(Io, MalformedIdealLine) {
  const auto what = error_of([] { ideal_from("n 3\n1 x\n"); });
  EXPECT_NE(what.find("line 2"), std::string::npos);
  EXPECT_NE(what.find("'x'"), std::string::npos);
}

TEST(Io, IdealRoundTrip) {
  const auto ideal = ideal_from("n 5\n1 2 4\n1 2 5\n3 4 5\n1 4 5\n");
  EXPECT_EQ(ideal.ambient(), 5);
  EXPECT_EQ(ideal.generators().size(), 4u);
  EXPECT_EQ(ideal_from(qf::io::write_ideal(ideal)), ideal);
  EXPECT_NE(error_of([] { ideal_from("n 3\n1 4\n"); }).find("line 2"), std::string::npos);
}

TEST(Io, ComplexWithAndWithoutHeader) {
  const auto a = complex_from("1 2\n2 3 4\n");
  EXPECT_EQ(a.vertices(), (qf::VertexSet{1, 2, 3, 4}));
  const auto b = complex_from("n 4\n1 2\n2 3 4\n");
  EXPECT_EQ(a, b);
  EXPECT_EQ(complex_from(qf::io::write_complex(a)), a);
  EXPECT_ERRC(complex_from("n 5\n1 2\n2 3 4\n"), qf::Errc::IsolatedVertexDeclared);
  error_of([] { complex_from("# nothing\n"); });
  error_of([] { complex_from("n 3\n"); });
}

TEST(Io, RandomGraphsRoundTrip) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const auto bits = std::uniform_int_distribution<std::uint64_t>(
        0, (std::uint64_t{1} << qf::binomial(n, 2)) - 1)(rng);
    const auto g = qf::Graph::from_edge_bits(n, bits);
    EXPECT_EQ(graph_from(qf::io::write_graph(g)), g);
  }
}

TEST(Io, TextFlatteningCarriesEveryField) {
  const nlohmann::json doc = {{"a", 1}, {"b", {{"c", "x"}, {"d", nullptr}}}, {"e", {1, 2}}, {"f", nlohmann::json::object()}};
  EXPECT_EQ(qf::io::to_text(doc), "a: 1\nb.c: x\nb.d: null\ne: [1,2]\nf: {}\n");
}

TEST(Io, ReportJson) {
  const auto r = qf::quasi_f_report(ideal_from("n 5\n1 2 4\n1 2 5\n3 4 5\n1 4 5\n"));
  const auto j = qf::io::to_json(r);
  EXPECT_EQ(j["type"], nlohmann::json({0, 2, 2}));
  EXPECT_EQ(j["f_facet"], nlohmann::json({5, 8, 4}));
  EXPECT_TRUE(j["failure_reason"].is_null());
}

TEST(Io, CensusDocument) {
  const auto doc = qf::io::census(qf::enumerate_quasi_f_graphs(4));
  EXPECT_EQ(doc["total"], 5);
  EXPECT_EQ(doc["by_type"]["-2"], 2);
  EXPECT_EQ(doc["graphs"].size(), 5u);
}

TEST(Report, TypeParsing) {
  EXPECT_EQ(qf::report::parse_type("0,2,2"), (qf::TypeVector{0, 2, 2}));
  EXPECT_EQ(qf::report::parse_type("(0, -1)"), (qf::TypeVector{0, -1}));
  EXPECT_EQ(qf::report::parse_type("-2"), (qf::TypeVector{-2}));
  EXPECT_ERRC(qf::report::parse_type("0,,1"), qf::Errc::ParseError);
  EXPECT_ERRC(qf::report::parse_type(""), qf::Errc::ParseError);
  EXPECT_EQ(qf::report::type_string({0, 1, 0}), "(0,1,0)");
}

TEST(Report, GraphReportFields) {
  const auto doc = qf::report::graph_report(qf::disjoint_cliques(4, 2));
  EXPECT_EQ(doc["b"], 1);
  EXPECT_EQ(doc["quasi_f_direct"], true);
  EXPECT_EQ(doc["connected"], false);
  EXPECT_EQ(doc["mn_graph"]["m"], 4);
  EXPECT_EQ(doc["mn_graph"]["n"], 2);
  EXPECT_EQ(doc["cm"]["cm_verdict"], "yes");
  EXPECT_ERRC(qf::report::graph_report(qf::Graph(3, {{1, 2}})), qf::Errc::IsolatedVertex);
}
