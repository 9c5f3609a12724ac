#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qf/io.hpp"
#include "qf/verify.hpp"

using qf::verify::Caps;

namespace {

Caps small_caps(int workers) {
  Caps caps;
  caps.graph_max_n = 5;
  caps.complex_max_n = 4;
  caps.construction_max_n = 8;
  caps.workers = workers;
  return caps;
}

}  // namespace

TEST(Verify, EverySuitePassesAtDefaultCaps) {
  const auto results = qf::verify::run_all(Caps{});
  ASSERT_EQ(results.size(), qf::verify::suite_ids().size());
  for (const auto& r : results) {
    EXPECT_TRUE(r.pass()) << r.id << "\n" << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_GT(r.cases_run, 0) << r.id;
    EXPECT_FALSE(r.parameter_range.empty());
  }
  EXPECT_TRUE(qf::verify::all_pass(results));
}

TEST(Verify, CasesRunCountsIsolatedFreeGraphs) {
  // Labelled graphs on n vertices without isolated vertices:
  // 1, 4, 41, 768, 27449 for n = 2..6.
  Caps caps;
  const auto r = qf::verify::run_suite("thm_3_4", caps);
  EXPECT_EQ(r.cases_run, 1 + 4 + 41 + 768 + 27449);
  caps.graph_max_n = 3;
  EXPECT_EQ(qf::verify::run_suite("thm_3_4", caps).cases_run, 1 + 4);
}

TEST(Verify, CensusSuite) {
  const auto r = qf::verify::run_suite("census_n4", Caps{});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.cases_run, 5);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes.front().find("CM 2, non-CM 3"), std::string::npos);
}

TEST(Verify, DualityCoversEveryIdeal) {
  // Non-empty antichains of non-empty subsets, n = 1..5: Dedekind numbers
  // minus the two trivial antichains.
  const auto r = qf::verify::run_suite("duality_roundtrip", Caps{});
  EXPECT_EQ(r.cases_run, (3 - 2) + (6 - 2) + (20 - 2) + (168 - 2) + (7581 - 2));
}

TEST(Verify, IndependentOfWorkerCount) {
  for (auto id : qf::verify::suite_ids()) {
    const auto one = qf::verify::run_suite(id, small_caps(1));
    const auto four = qf::verify::run_suite(id, small_caps(4));
    EXPECT_EQ(one.cases_run, four.cases_run) << id;
    EXPECT_EQ(one.violations, four.violations) << id;
    EXPECT_EQ(one.notes, four.notes) << id;
  }
}

TEST(Verify, Errors) {
  EXPECT_ERRC(qf::verify::run_suite("thm_9_9", Caps{}), qf::Errc::UnknownSuite);
  Caps zero;
  zero.graph_max_n = 0;
  EXPECT_ERRC(qf::verify::run_all(zero), qf::Errc::CapExceeded);
  Caps big;
  big.graph_max_n = 8;
  EXPECT_ERRC(qf::verify::run_suite("thm_3_4", big), qf::Errc::CapExceeded);
  Caps dim;
  dim.complex_max_dim = 4;
  EXPECT_ERRC(qf::verify::run_suite("thm_4_1", dim), qf::Errc::CapExceeded);
  Caps workers;
  workers.workers = 0;
  EXPECT_ERRC(qf::verify::run_suite("census_n4", workers), qf::Errc::CapExceeded);
}

TEST(Verify, CounterexamplesReplayAsGraphFiles) {
  const qf::Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {1, 5}});
  const auto text = qf::verify::detail::counterexample("example check", g);
  std::istringstream in(text);
  EXPECT_EQ(qf::io::parse_graph(in), g);
  EXPECT_EQ(text.rfind("# example check\n", 0), 0u);
}

TEST(Verify, ConformanceDocument) {
  std::vector<qf::verify::SuiteResult> results{
      qf::verify::run_suite("census_n4", Caps{}),
      {"fake", "none", 1, {"# broken\nn 2\n1 2\n"}, {}, {}},
  };
  const auto doc = qf::verify::conformance(results);
  EXPECT_EQ(doc["overall"], false);
  ASSERT_EQ(doc["suites"].size(), 2u);
  EXPECT_EQ(doc["suites"][0]["id"], "census_n4");
  EXPECT_EQ(doc["suites"][0]["pass"], true);
  EXPECT_EQ(doc["suites"][0]["cases_run"], 5);
  EXPECT_EQ(doc["suites"][1]["pass"], false);
  EXPECT_EQ(doc["suites"][1]["violations"].size(), 1u);
  const auto text = qf::verify::to_text(results);
  EXPECT_NE(text.find("census_n4: PASS cases_run=5"), std::string::npos);
  EXPECT_NE(text.find("fake: FAIL"), std::string::npos);
  EXPECT_NE(text.find("    # broken\n    n 2\n"), std::string::npos);
  EXPECT_NE(text.find("overall: FAIL"), std::string::npos);
}

TEST(Verify, AntichainEnumerationMatchesScan) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<qf::Mask>> seen;
    qf::verify::detail::for_each_antichain(n, [&](const std::vector<qf::VertexSet>& sets) {
      std::vector<qf::Mask> m;
      for (auto s : sets) m.push_back(s.mask());
      std::sort(m.begin(), m.end());
      EXPECT_TRUE(seen.insert(m).second);
    });
    // Scan every family of non-empty subsets for the antichain property.
    const int subsets = (1 << n) - 1;
    std::size_t expected = 0;
    for (std::uint32_t fam = 1; fam < (1u << subsets); ++fam) {
      bool antichain = true;
      for (int a = 0; a < subsets && antichain; ++a) {
        for (int b = 0; b < subsets && antichain; ++b) {
          if (a == b || !((fam >> a) & 1U) || !((fam >> b) & 1U)) continue;
          const qf::Mask ma = a + 1, mb = b + 1;
          if ((ma & ~mb) == 0) antichain = false;
        }
      }
      expected += antichain;
    }
    EXPECT_EQ(seen.size(), expected) << "n=" << n;
  }
}
