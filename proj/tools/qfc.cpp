// qfc: command-line front end for the quasi f-ideal toolkit.
//
// Exit codes: 0 success (including "not quasi-f" verdicts), 1 verification
// violations, 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qf/cm.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/graph.hpp"
#include "qf/io.hpp"
#include "qf/report.hpp"
#include "qf/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::string out;
  int workers = qf::default_workers();
  std::optional<int> max_n;
  bool extended = false;
  std::optional<std::string> type;
  bool connected = false;
  bool disconnected = false;
  int n = 0;
  std::int64_t b = 0;
  int r = 0;
  int dim = 2;
  std::string path;
  std::vector<std::string> suites;
  bool all = false;
  std::optional<int> complex_max_n;
  std::optional<int> complex_max_dim;
  std::optional<int> construction_max_n;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw qf::Error(qf::Errc::ParseError, "cannot write " + opt.out);
  file << text;
}

std::string render(const Options& opt, const json& doc) {
  return opt.json ? doc.dump(2) + "\n" : qf::io::to_text(doc);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qf::Error(qf::Errc::ParseError, "cannot read " + path);
  return in;
}

// A graph file whose header comment carries the report, so the output can
// be fed straight back to analyze-graph.
std::string graph_with_report(const qf::Graph& g, const json& doc) {
  std::string out;
  std::istringstream lines(qf::io::to_text(doc));
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  return out + qf::io::write_graph(g);
}

int analyze_ideal(const Options& opt) {
  auto in = open_input(opt.path);
  const auto ideal = qf::io::parse_ideal(in);
  emit(opt, render(opt, qf::report::ideal_report(ideal)));
  return kExitOk;
}

int analyze_graph(const Options& opt) {
  auto in = open_input(opt.path);
  const auto g = qf::io::parse_graph(in);
  const auto doc = qf::report::graph_report(g);
  emit(opt, render(opt, doc));
  if (!doc["verdicts_agree"].get<bool>()) {
    std::cerr << "warning: direct and characterized verdicts disagree\n";
    return kExitViolation;
  }
  return kExitOk;
}

int enumerate(const Options& opt) {
  qf::GraphFilter filter;
  if (opt.type) filter.b = qf::report::parse_type(*opt.type).at(0);
  if (opt.connected) filter.connected = true;
  if (opt.disconnected) filter.connected = false;
  const int cap = opt.max_n.value_or(qf::enumeration_cap());
  if (cap > qf::kCanonicalCap) {
    throw qf::Error(qf::Errc::TooLarge,
                    "--max-n above " + std::to_string(qf::kCanonicalCap) + " is not supported");
  }
  const auto cls = qf::enumerate_quasi_f_graphs(opt.n, filter, cap);
  auto doc = qf::io::census(cls);
  if (opt.type) doc["filter_b"] = *filter.b;
  if (filter.connected) doc["filter_connected"] = *filter.connected;
  emit(opt, render(opt, doc));
  return kExitOk;
}

int enumerate_complexes(const Options& opt) {
  std::optional<qf::TypeVector> type;
  if (opt.type) type = qf::report::parse_type(*opt.type);
  emit(opt, render(opt, qf::report::complex_census(opt.n, opt.dim, type)));
  return kExitOk;
}

int construct_cm(const Options& opt) {
  const auto mode = opt.extended ? qf::BoundMode::Extended : qf::BoundMode::Strict;
  const auto spec = qf::plan_construction(opt.n, opt.b, mode);
  const auto g = qf::build_cm_graph(spec);
  const auto doc = qf::report::construction_report(spec, g);
  if (opt.json) {
    auto full = doc;
    full["edges"] = qf::io::edge_list(g);
    emit(opt, full.dump(2) + "\n");
  } else {
    emit(opt, graph_with_report(g, doc));
  }
  if (!doc["is_quasi_f"].get<bool>()) {
    std::cerr << "error: constructed graph is not of type (0," << opt.b << ")\n";
    return kExitViolation;
  }
  const auto verdict = doc["cm_verdict"].get<std::string>();
  if (!doc["exception_matched"].is_null()) {
    std::cerr << "warning: boundary exception pattern " << doc["exception_matched"].get<int>()
              << " matched; cm_verdict = " << verdict << "\n";
    return verdict == "no" ? kExitOk : kExitViolation;
  }
  if (verdict != "yes") {
    if (mode == qf::BoundMode::Extended) {
      std::cerr << "warning: cm_verdict = " << verdict << " without a matched exception pattern\n";
      return kExitOk;
    }
    std::cerr << "error: constructed graph is not Cohen-Macaulay\n";
    return kExitViolation;
  }
  return kExitOk;
}

int construct_nr(const Options& opt) {
  const auto c = qf::construct_n_nr_graph(opt.n, opt.r);
  const auto doc = qf::report::nr_report(opt.n, opt.r, c);
  if (opt.json) {
    auto full = doc;
    full["edges"] = qf::io::edge_list(c.graph);
    emit(opt, full.dump(2) + "\n");
  } else {
    emit(opt, graph_with_report(c.graph, doc));
  }
  return doc["is_quasi_f"].get<bool>() ? kExitOk : kExitViolation;
}

int verify(const Options& opt) {
  qf::verify::Caps caps;
  caps.workers = opt.workers;
  if (opt.max_n) caps.graph_max_n = *opt.max_n;
  if (opt.complex_max_n) caps.complex_max_n = *opt.complex_max_n;
  if (opt.complex_max_dim) caps.complex_max_dim = *opt.complex_max_dim;
  if (opt.construction_max_n) caps.construction_max_n = *opt.construction_max_n;
  qf::verify::validate(caps);

  std::vector<std::string> ids = opt.suites;
  if (opt.all || ids.empty()) {
    ids.assign(qf::verify::suite_ids().begin(), qf::verify::suite_ids().end());
  }
  // Unknown ids are rejected before anything runs.
  for (const auto& id : ids) {
    const auto& known = qf::verify::suite_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw qf::Error(qf::Errc::UnknownSuite, "no suite named '" + id + "'");
    }
  }
  std::vector<qf::verify::SuiteResult> results;
  for (const auto& id : ids) results.push_back(qf::verify::run_suite(id, caps));
  emit(opt, opt.json ? qf::verify::conformance(results).dump(2) + "\n"
                     : qf::verify::to_text(results));
  return qf::verify::all_pass(results) ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi f-ideals, quasi f-graphs and Cohen-Macaulay constructions"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--out", opt.out, "Write output to this path");
  app.add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* ideal_cmd = app.add_subcommand("analyze-ideal", "f-vectors, quasi f verdict and type of an ideal");
  ideal_cmd->add_option("path", opt.path, "Ideal file")->required();

  auto* graph_cmd = app.add_subcommand("analyze-graph", "Quasi f and Cohen-Macaulay report for a graph");
  graph_cmd->add_option("path", opt.path, "Graph file")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "Quasi f-graphs on n vertices up to isomorphism");
  enum_cmd->add_option("--n", opt.n, "Number of vertices")->required();
  enum_cmd->add_option("--type", opt.type, "Keep only type (0,B)");
  auto* conn = enum_cmd->add_flag("--connected", opt.connected, "Connected graphs only");
  auto* disc = enum_cmd->add_flag("--disconnected", opt.disconnected, "Disconnected graphs only");
  conn->excludes(disc);
  enum_cmd->add_option("--max-n", opt.max_n, "Enumeration cap (default QF_CAP or 8)");

  auto* cx_cmd = app.add_subcommand("enumerate-complexes",
                                    "Pure quasi f-complexes up to isomorphism");
  cx_cmd->add_option("--n", opt.n, "Number of vertices")->required();
  cx_cmd->add_option("--dim", opt.dim, "Dimension")->required();
  cx_cmd->add_option("--type", opt.type, "Keep only this type, e.g. 0,2,2");

  auto* cm_cmd = app.add_subcommand("construct-cm", "Cohen-Macaulay quasi f-graph of type (0,b)");
  cm_cmd->add_option("--n", opt.n, "Number of vertices")->required();
  cm_cmd->add_option("--b", opt.b, "Type parameter")->required();
  cm_cmd->add_flag("--extended", opt.extended, "Accept |b| = floor(n/2)");

  auto* nr_cmd = app.add_subcommand("construct-nr", "K_n + K_(n-r)");
  nr_cmd->add_option("--n", opt.n, "Size of the first clique")->required();
  nr_cmd->add_option("--r", opt.r, "Size difference")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify_cmd->add_option("--suite", opt.suites, "Suite id (repeatable)");
  verify_cmd->add_flag("--all", opt.all, "Run every suite");
  verify_cmd->add_option("--max-n", opt.max_n, "Largest graph order in labelled sweeps");
  verify_cmd->add_option("--complex-max-n", opt.complex_max_n, "Largest complex vertex count");
  verify_cmd->add_option("--complex-max-dim", opt.complex_max_dim, "Largest complex dimension");
  verify_cmd->add_option("--construction-max-n", opt.construction_max_n,
                         "Largest order for constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ideal_cmd) return analyze_ideal(opt);
    if (*graph_cmd) return analyze_graph(opt);
    if (*enum_cmd) return enumerate(opt);
    if (*cx_cmd) return enumerate_complexes(opt);
    if (*cm_cmd) return construct_cm(opt);
    if (*nr_cmd) return construct_nr(opt);
    if (*verify_cmd) return verify(opt);
  } catch (const qf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
