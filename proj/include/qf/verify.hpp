#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qf/cm.hpp"
#include "qf/complex.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/graph.hpp"
#include "qf/ideal.hpp"
#include "qf/io.hpp"
#include "qf/parallel.hpp"

namespace qf::verify {

/// Parameter ranges for the exhaustive suites. Nothing scales itself.
struct Caps {
  int graph_max_n = 6;          // labelled graph sweeps run n = 2..graph_max_n
  int complex_max_n = 5;        // pure complexes on up to this many vertices
  int complex_max_dim = 2;      // ... of dimension 2..complex_max_dim
  int construction_max_n = 12;  // two-clique constructions up to this order
  int workers = default_workers();
};

inline constexpr int kGraphSweepLimit = 7;

inline void validate(const Caps& caps) {
  auto bad = [](const std::string& what) { throw Error(Errc::CapExceeded, what); };
  if (caps.graph_max_n < 2 || caps.graph_max_n > kGraphSweepLimit) {
    bad("graph cap must lie in 2.." + std::to_string(kGraphSweepLimit));
  }
  if (caps.complex_max_n < 3 || caps.complex_max_n > kComplexEnumMaxN) {
    bad("complex vertex cap must lie in 3.." + std::to_string(kComplexEnumMaxN));
  }
  if (caps.complex_max_dim < 2 || caps.complex_max_dim > kComplexEnumMaxD) {
    bad("complex dimension cap must lie in 2.." + std::to_string(kComplexEnumMaxD));
  }
  if (caps.construction_max_n < 4 || caps.construction_max_n > kMaxVertices) {
    bad("construction cap must lie in 4.." + std::to_string(kMaxVertices));
  }
  if (caps.workers < 1) bad("worker count must be positive");
}

struct SuiteResult {
  std::string id;
  std::string parameter_range;
  std::int64_t cases_run = 0;
  /// Replayable counterexamples: a '#' comment line with the failed
  /// check, followed by the input in its file format.
  std::vector<std::string> violations;
  /// Observations that are recorded but do not fail the suite.
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{};

  bool pass() const noexcept { return violations.empty(); }
};

inline const std::vector<std::string_view>& suite_ids() {
  static const std::vector<std::string_view> ids = {
      "thm_3_4", "lemma_3_1", "prop_3_2",   "thm_4_1",    "thm_4_2",          "cor_4_4",
      "thm_5_3", "remark_5_4", "n_formula", "duality_roundtrip", "census_n4"};
  return ids;
}

namespace detail {

struct Tally {
  std::int64_t cases = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  void absorb(Tally&& other) {
    cases += other.cases;
    for (auto& v : other.violations) violations.push_back(std::move(v));
    for (auto& v : other.notes) notes.push_back(std::move(v));
  }
};

inline std::string counterexample(const std::string& check, const Graph& g) {
  return "# " + check + "\n" + io::write_graph(g);
}

inline std::string counterexample(const std::string& check, const SquarefreeIdeal& ideal) {
  return "# " + check + "\n" + io::write_ideal(ideal);
}

inline std::string counterexample(const std::string& check, const SimplicialComplex& c) {
  return "# " + check + "\n" + io::write_complex(c);
}

// Runs `check(graph, tally)` over every labelled graph without isolated
// vertices on n = from..caps.graph_max_n.
template <class Check>
Tally labeled_sweep(int from, const Caps& caps, Check check) {
  Tally total;
  for (int n = from; n <= caps.graph_max_n; ++n) {
    auto parts = parallel_chunks<Tally>(labeled_graph_count(n), caps.workers,
                                        [&](std::uint64_t begin, std::uint64_t end) {
                                          Tally t;
                                          for_each_labeled_graph(n, begin, end, [&](const Graph& g) {
                                            ++t.cases;
                                            check(g, t);
                                          });
                                          return t;
                                        });
    for (auto& p : parts) total.absorb(std::move(p));
  }
  return total;
}

inline std::string graph_range(int from, const Caps& caps) {
  return "labelled graphs without isolated vertices, n = " + std::to_string(from) + ".." +
         std::to_string(caps.graph_max_n);
}

// Direct f-vector verdict against the triangle-free-complement criterion,
// with matching b; also the parity of b against C(n,2).
inline SuiteResult suite_characterization(const Caps& caps) {
  auto t = labeled_sweep(2, caps, [](const Graph& g, Tally& t) {
    const auto direct = is_quasi_f_direct(g);
    const auto characterized = is_quasi_f_characterized(g);
    if (direct.is_quasi_f != characterized.verdict) {
      t.violations.push_back(counterexample("direct and characterized verdicts differ", g));
    } else if (direct.is_quasi_f) {
      const auto b = (*direct.type)[1];
      if (b != *characterized.b) {
        t.violations.push_back(counterexample("b differs between the two routes", g));
      }
      if ((binomial(g.order(), 2) - b) % 2 != 0) {
        t.violations.push_back(counterexample("parity of b differs from C(n,2)", g));
      }
    }
  });
  return {"thm_3_4", graph_range(2, caps), t.cases, std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_complement_triangle_free(const Caps& caps) {
  auto t = labeled_sweep(2, caps, [](const Graph& g, Tally& t) {
    if (is_quasi_f_direct(g).is_quasi_f && has_triangle(complement(g))) {
      t.violations.push_back(counterexample("quasi f-graph with a triangle in the complement", g));
    }
  });
  return {"lemma_3_1", graph_range(2, caps), t.cases, std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_type_bounds(const Caps& caps) {
  auto t = labeled_sweep(4, caps, [](const Graph& g, Tally& t) {
    const auto r = is_quasi_f_direct(g);
    if (!r.is_quasi_f) return;
    const auto bounds = type_bounds_d2(g.order());
    const auto b = (*r.type)[1];
    if (b < bounds.lower || b > bounds.upper) {
      t.violations.push_back(counterexample("b = " + std::to_string(b) + " outside [" +
                                                std::to_string(bounds.lower) + ", " +
                                                std::to_string(bounds.upper) + "]",
                                            g));
    }
  });
  return {"prop_3_2", graph_range(4, caps), t.cases, std::move(t.violations), std::move(t.notes)};
}

// Every pure quasi f-complex of dimension >= 2 is connected; one
// representative per isomorphism class.
inline SuiteResult suite_pure_connected(const Caps& caps) {
  Tally t;
  for (int d = 2; d <= caps.complex_max_dim; ++d) {
    for (int n = d + 1; n <= caps.complex_max_n; ++n) {
      const auto orbits = qf::detail::pure_orbits(n, d);
      for (std::uint64_t bits : orbits.reps) {
        SimplicialComplex c = build_complex(orbits.facets(bits));
        if (c.vertices() != VertexSet::range(n)) continue;
        ++t.cases;
        if (quasi_f_report(facet_ideal(c, n)).is_quasi_f && !is_connected(c)) {
          t.violations.push_back(counterexample("disconnected pure quasi f-complex", c));
        }
      }
    }
  }
  return {"thm_4_1",
          "pure complexes up to isomorphism, dim 2.." + std::to_string(caps.complex_max_dim) +
              ", n <= " + std::to_string(caps.complex_max_n),
          t.cases, std::move(t.violations), std::move(t.notes)};
}

// Disconnected quasi f-graphs are exactly the [m:n]-graphs with
// (m - n)^2 = m + n - 2b, and a quasi f-graph that is not an [m:n]-graph is
// connected.
inline SuiteResult suite_disconnected(const Caps& caps) {
  auto t = labeled_sweep(2, caps, [](const Graph& g, Tally& t) {
    if (!is_quasi_f_direct(g).is_quasi_f) return;
    const bool connected = is_connected(g);
    const bool mn = is_mn_graph(g).verdict;
    if (connected == mn) {
      t.violations.push_back(counterexample("connectivity disagrees with [m:n] test", g));
    }
    if (!connected && !check_disconnected_classification(g)) {
      t.violations.push_back(counterexample("(m-n)^2 = m+n-2b fails", g));
    }
  });
  for (int m = 2; m <= caps.graph_max_n; ++m) {
    for (int n2 = 2; n2 <= m && m + n2 <= caps.graph_max_n; ++n2) {
      ++t.cases;
      const Graph g = disjoint_cliques(m, n2);
      const std::int64_t b = (m + n2 - std::int64_t{m - n2} * (m - n2)) / 2;
      if ((b < 0 ? -b : b) >= binomial(m + n2, 2)) continue;
      const auto r = is_quasi_f_direct(g);
      if (!r.is_quasi_f || (*r.type)[1] != b || is_connected(g)) {
        t.violations.push_back(counterexample(
            "[" + std::to_string(m) + ":" + std::to_string(n2) + "]-graph is not of type (0," +
                std::to_string(b) + ")",
            g));
      }
    }
  }
  return {"thm_4_2", graph_range(2, caps) + "; [m:n]-graphs with m + n <= " +
                         std::to_string(caps.graph_max_n),
          t.cases, std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_n_nr(const Caps& caps) {
  Tally t;
  for (int n = 4; 2 * n - 2 <= caps.construction_max_n; ++n) {
    for (int r = 2; r < n && 2 * n - r <= caps.construction_max_n; ++r) {
      ++t.cases;
      if (r == n - 1) {
        try {
          construct_n_nr_graph(n, r);
          t.violations.push_back("# n = " + std::to_string(n) + ", r = n-1 accepted a K_1 component\n");
        } catch (const Error& e) {
          if (e.code() != Errc::ParameterOutOfRange) throw;
        }
        continue;
      }
      const auto c = construct_n_nr_graph(n, r);
      const auto report = is_quasi_f_direct(c.graph);
      const auto mn = is_mn_graph(c.graph);
      const bool ok = report.is_quasi_f && (*report.type)[1] == c.b && !is_connected(c.graph) &&
                      mn.verdict && mn.m == n && mn.n2 == n - r &&
                      2 * c.b == 2 * n - r - r * r;
      if (!ok) {
        t.violations.push_back(counterexample("K_" + std::to_string(n) + " + K_" +
                                                  std::to_string(n - r) + " check failed",
                                              c.graph));
      }
    }
  }
  t.notes.push_back("r = n - 1 is rejected: it yields a K_1 component");
  return {"cor_4_4", "n >= 4, 1 < r < n, 2n - r <= " + std::to_string(caps.construction_max_n),
          t.cases, std::move(t.violations), std::move(t.notes)};
}

// Complement of the construction must be K_{p,q} minus a matching of
// join_count edges.
inline bool complement_is_bipartite_minus_matching(const Graph& g, const CmConstructionSpec& s) {
  const Graph h = complement(g);
  for (int u = 1; u <= s.n; ++u) {
    for (int v = u + 1; v <= s.n; ++v) {
      const bool across = u <= s.p && v > s.p;
      const bool matched = across && v == s.p + u && u <= s.join_count;
      if (h.adjacent(u, v) != (across && !matched)) return false;
    }
  }
  return true;
}

inline std::vector<std::int64_t> compatible_b_values(int n, bool extended) {
  const std::int64_t half = n / 2;
  const bool even = n % 4 <= 1;
  std::vector<std::int64_t> out;
  for (std::int64_t b = -half; b <= half; ++b) {
    if (((b % 2) == 0) != even) continue;
    const std::int64_t a = b < 0 ? -b : b;
    if (extended ? a == half : a < half) out.push_back(b);
  }
  return out;
}

inline SuiteResult suite_construction(const Caps& caps) {
  Tally t;
  for (int n = 4; n <= caps.construction_max_n; ++n) {
    for (std::int64_t b : compatible_b_values(n, false)) {
      ++t.cases;
      const auto spec = plan_construction(n, b);
      const Graph g = build_cm_graph(spec);
      const auto report = is_quasi_f_direct(g);
      const auto cm = cm_check(g);
      const std::int64_t expected_edges = (binomial(n, 2) - b) / 2;
      const std::int64_t case_edges =
          binomial(spec.p, 2) + binomial(spec.q, 2) + spec.k - spec.b_prime;
      std::string failed;
      if (spec.join_count < 1) failed = "no join edges";
      else if (!report.is_quasi_f || (*report.type)[1] != b) failed = "type is not (0,b)";
      else if (g.edge_count() != expected_edges || case_edges != expected_edges) failed = "edge count";
      else if (has_triangle(complement(g))) failed = "complement has a triangle";
      else if (!complement_is_bipartite_minus_matching(g, spec)) failed = "complement structure";
      else if (cm.verdict != CmVerdict::Yes) failed = "not Cohen-Macaulay";
      else if (cm.exception_matched) failed = "matches a boundary exception";
      if (!failed.empty()) {
        t.violations.push_back(counterexample(
            "n = " + std::to_string(n) + ", b = " + std::to_string(b) + ": " + failed, g));
      }
    }
  }
  return {"thm_5_3",
          "n = 4.." + std::to_string(caps.construction_max_n) + ", |b| < floor(n/2), parity-compatible",
          t.cases, std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_boundary(const Caps& caps) {
  Tally t;
  // Matching-join constructions at |b| = floor(n/2).
  for (int n = 4; n <= caps.construction_max_n; ++n) {
    for (std::int64_t b : compatible_b_values(n, true)) {
      ++t.cases;
      const auto spec = plan_construction(n, b, BoundMode::Extended);
      const Graph g = build_cm_graph(spec);
      const auto report = is_quasi_f_direct(g);
      const auto cm = cm_check(g);
      const std::string tag = "extended n = " + std::to_string(n) + ", b = " + std::to_string(b);
      if (!report.is_quasi_f || (*report.type)[1] != b) {
        t.violations.push_back(counterexample(tag + ": type is not (0,b)", g));
      } else if (cm.exception_matched && cm.verdict != CmVerdict::No) {
        t.violations.push_back(counterexample(tag + ": matched exception but CM", g));
      } else if (!cm.exception_matched && cm.verdict != CmVerdict::Yes) {
        t.notes.push_back(tag + ": not CM and no exception pattern matched");
      }
    }
  }
  // Explicit exception graphs.
  const int limit = std::min(10, caps.construction_max_n);
  auto expect = [&](const Graph& g, RemarkPattern pattern, std::int64_t b, const std::string& tag) {
    ++t.cases;
    const auto report = is_quasi_f_direct(g);
    const auto cm = cm_check(g);
    if (match_remark_exceptions(g) != pattern) {
      t.violations.push_back(counterexample(tag + ": pattern not recognised", g));
    } else if (!report.is_quasi_f || (*report.type)[1] != b) {
      t.violations.push_back(counterexample(tag + ": type is not (0," + std::to_string(b) + ")", g));
    } else if (cm.verdict != CmVerdict::No) {
      t.violations.push_back(counterexample(tag + ": expected non-CM", g));
    }
  };
  expect(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), RemarkPattern::CycleFour, -2, "C_4");
  for (int k = 1; 4 * k <= limit; ++k) {
    for (int first : {2 * k, 2 * k + 1}) {
      if (first + 2 * k <= limit) {
        expect(star_join_graph(first, 2 * k), RemarkPattern::StarJoinEven, -2 * k,
               "K_" + std::to_string(first) + " + K_" + std::to_string(2 * k) + " star join");
      }
    }
    for (int first : {2 * k + 1, 2 * k + 2}) {
      if (first + 2 * k + 1 <= limit) {
        expect(star_join_graph(first, 2 * k + 1), RemarkPattern::StarJoinOdd, -2 * k - 1,
               "K_" + std::to_string(first) + " + K_" + std::to_string(2 * k + 1) + " star join");
      }
    }
  }
  return {"remark_5_4",
          "|b| = floor(n/2) constructions, n = 4.." + std::to_string(caps.construction_max_n) +
              "; exception graphs up to n = " + std::to_string(limit),
          t.cases, std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_perfect_number(const Caps&) {
  Tally t;
  for (int n = 4; n <= 6; ++n) {
    ++t.cases;
    const auto brute = perfect_number_bruteforce(n, 2);
    const auto closed = perfect_number_d2(n);
    if (brute != closed) {
      t.violations.push_back("# N(" + std::to_string(n) + ",2): search " + std::to_string(brute) +
                             " vs closed form " + std::to_string(closed) + "\n");
    }
  }
  for (auto [n, expected] : {std::pair{6, 6}, std::pair{7, 9}}) {
    ++t.cases;
    if (perfect_number_d2(n) != expected) {
      t.violations.push_back("# N(" + std::to_string(n) + ",2) closed form != " +
                             std::to_string(expected) + "\n");
    }
  }
  return {"n_formula", "exhaustive minimum perfect sets, d = 2, n = 4..6", t.cases,
          std::move(t.violations), std::move(t.notes)};
}

// Non-empty antichains of non-empty subsets of {1..n}: the minimal
// generating sets of all non-zero square-free monomial ideals.
inline void for_each_antichain(int n, const std::function<void(const std::vector<VertexSet>&)>& fn) {
  std::vector<VertexSet> chosen;
  const Mask limit = Mask{1} << n;
  auto rec = [&](auto&& self, Mask start) -> void {
    for (Mask m = start; m < limit; ++m) {
      const VertexSet s = VertexSet::from_mask(m);
      const bool free = std::none_of(chosen.begin(), chosen.end(), [&](VertexSet c) {
        return c.subset_of(s) || s.subset_of(c);
      });
      if (!free) continue;
      chosen.push_back(s);
      fn(chosen);
      self(self, m + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
}

inline SuiteResult suite_duality(const Caps&) {
  Tally t;
  std::int64_t void_cases = 0;
  for (int n = 1; n <= 5; ++n) {
    for_each_antichain(n, [&](const std::vector<VertexSet>& gens) {
      ++t.cases;
      const SquarefreeIdeal ideal(n, gens);
      if (facet_ideal(facet_complex(ideal), n) != ideal) {
        t.violations.push_back(counterexample("facet ideal of facet complex differs", ideal));
      }
      try {
        if (stanley_reisner_ideal(nonface_complex(ideal), n) != ideal) {
          t.violations.push_back(counterexample("non-face ideal of non-face complex differs", ideal));
        }
      } catch (const Error& e) {
        if (e.code() != Errc::VoidComplex) throw;
        ++void_cases;
      }
    });
  }
  t.notes.push_back(std::to_string(void_cases) +
                    " ideals contain every variable; their non-face complex is void");
  return {"duality_roundtrip", "all square-free monomial ideals, n = 1..5", t.cases,
          std::move(t.violations), std::move(t.notes)};
}

inline SuiteResult suite_census_n4(const Caps&) {
  Tally t;
  const auto cls = enumerate_quasi_f_graphs(4);
  int cm_yes = 0, cm_no = 0;
  for (const Graph& g : cls.graphs) {
    ++t.cases;
    const auto verdict = cm_check(g).verdict;
    if (verdict == CmVerdict::Yes) ++cm_yes;
    if (verdict == CmVerdict::No) ++cm_no;
  }
  if (cls.graphs.size() != 5 || cm_yes != 2 || cm_no != 3) {
    t.violations.push_back("# n = 4: " + std::to_string(cls.graphs.size()) + " graphs, CM " +
                           std::to_string(cm_yes) + " / non-CM " + std::to_string(cm_no) +
                           " (expected 5, 2 / 3)\n");
  }
  t.notes.push_back(std::to_string(cls.graphs.size()) + " quasi f-graphs on 4 vertices, CM " +
                    std::to_string(cm_yes) + ", non-CM " + std::to_string(cm_no));
  return {"census_n4", "quasi f-graphs on 4 vertices up to isomorphism", t.cases,
          std::move(t.violations), std::move(t.notes)};
}

}  // namespace detail

inline SuiteResult run_suite(std::string_view id, const Caps& caps) {
  validate(caps);
  using Runner = SuiteResult (*)(const Caps&);
  static const std::vector<std::pair<std::string_view, Runner>> table = {
      {"thm_3_4", detail::suite_characterization},
      {"lemma_3_1", detail::suite_complement_triangle_free},
      {"prop_3_2", detail::suite_type_bounds},
      {"thm_4_1", detail::suite_pure_connected},
      {"thm_4_2", detail::suite_disconnected},
      {"cor_4_4", detail::suite_n_nr},
      {"thm_5_3", detail::suite_construction},
      {"remark_5_4", detail::suite_boundary},
      {"n_formula", detail::suite_perfect_number},
      {"duality_roundtrip", detail::suite_duality},
      {"census_n4", detail::suite_census_n4},
  };
  for (auto [name, runner] : table) {
    if (name != id) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = runner(caps);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
  }
  throw Error(Errc::UnknownSuite, "no suite named '" + std::string(id) + "'");
}

inline std::vector<SuiteResult> run_all(const Caps& caps) {
  validate(caps);
  std::vector<SuiteResult> out;
  for (auto id : suite_ids()) out.push_back(run_suite(id, caps));
  return out;
}

inline bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
}

/// {suites: [{id, pass, cases_run, violations, ...}], overall}
inline nlohmann::json conformance(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : results) {
    suites.push_back({{"id", r.id},
                      {"pass", r.pass()},
                      {"cases_run", r.cases_run},
                      {"parameter_range", r.parameter_range},
                      {"violations", r.violations},
                      {"notes", r.notes},
                      {"elapsed_seconds", r.elapsed.count()}});
  }
  return {{"suites", suites}, {"overall", all_pass(results)}};
}

/// One line per suite, then indented notes and violations, then the
/// overall verdict.
inline std::string to_text(const std::vector<SuiteResult>& results) {
  std::string out;
  char elapsed[32];
  for (const auto& r : results) {
    std::snprintf(elapsed, sizeof elapsed, "%.2f", r.elapsed.count());
    out += r.id + ": " + (r.pass() ? "PASS" : "FAIL") + " cases_run=" + std::to_string(r.cases_run) +
           " elapsed=" + elapsed + "s range=" + r.parameter_range + "\n";
    for (const auto& n : r.notes) out += "  note: " + n + "\n";
    for (const auto& v : r.violations) {
      out += "  violation:\n";
      std::size_t pos = 0;
      while (pos < v.size()) {
        const auto nl = v.find('\n', pos);
        out += "    " + v.substr(pos, nl - pos) + "\n";
        if (nl == std::string::npos) break;
        pos = nl + 1;
      }
    }
  }
  out += std::string("overall: ") + (all_pass(results) ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace qf::verify
