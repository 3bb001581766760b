// Command-line front end. Every subcommand is a thin adapter over the C
// API: parse arguments, dispatch, emit a JSON (or CSV) report. Exit codes:
// 0 success (including "not found" and budget-exhausted results), 2 usage
// or argument error, 3 input format error, 4 acceptance failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qturan.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitAcceptance = 4;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

[[noreturn]] void fail(qt_status status) {
  const int code = (status == QT_ERROR_PARSE || status == QT_ERROR_IO) ? kExitFormat : kExitUsage;
  throw CliError(code, qt_last_error());
}

void check(qt_status status) {
  if (status != QT_OK) fail(status);
}

// Owned JSON string from a C API call.
std::string take_string(char* s) {
  std::string out(s ? s : "");
  qt_string_free(s);
  return out;
}

using QGraphPtr = std::unique_ptr<qt_qgraph, decltype(&qt_qgraph_free)>;
using PatternPtr = std::unique_ptr<qt_pattern, decltype(&qt_pattern_free)>;

QGraphPtr load_qgraph(const std::string& path) {
  qt_qgraph* g = nullptr;
  check(qt_qgraph_read(path.c_str(), &g));
  return {g, &qt_qgraph_free};
}

// Built-in names (c5, k2,3,3, ...) take precedence; anything else is a path.
PatternPtr load_pattern(const std::string& spec) {
  qt_pattern* p = nullptr;
  if (qt_pattern_named(spec.c_str(), &p) == QT_OK) return {p, &qt_pattern_free};
  check(qt_pattern_read(spec.c_str(), &p));
  return {p, &qt_pattern_free};
}

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json result;
  double seconds = 0.0;
};

void emit_json(const Report& report) {
  const Json out{{"command", report.command},
                 {"parameters", report.parameters},
                 {"result", report.result},
                 {"seconds", report.seconds}};
  std::cout << out.dump(2) << "\n";
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Rows of identical objects -> header line plus one line per row.
void emit_csv(const Json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_object())
    throw CliError(kExitUsage, "this command has no tabular output; use --format json");
  std::string header;
  for (const auto& [key, value] : rows[0].items()) header += (header.empty() ? "" : ",") + key;
  std::cout << header << "\n";
  for (const auto& row : rows) {
    std::string line;
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      line += (first ? "" : ",") + csv_cell(value);
      first = false;
    }
    std::cout << line << "\n";
  }
}

double default_budget_secs() {
  if (const char* env = std::getenv("QTURAN_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw CliError(kExitUsage, "QTURAN_BUDGET_SECS is not a number");
    }
  }
  return -1.0;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"exact search and verification toolkit for weighted-edge Turan problems"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  Report report;
  Json csv_rows;

  // detect ------------------------------------------------------------
  auto* detect = app.add_subcommand("detect", "find s-copies of a pattern in a q-graph");
  struct {
    std::string host, pattern;
    int s = 0;
    bool all = false;
    long long limit = 1000;
  } det;
  detect->add_option("--host", det.host, "q-graph file")->required();
  detect->add_option("--pattern", det.pattern, "pattern file or built-in name")->required();
  detect->add_option("--s", det.s, "intersection threshold")->required();
  detect->add_flag("--all", det.all, "enumerate embeddings (up to --limit)");
  detect->add_option("--limit", det.limit, "enumeration cap (with --all)");
  detect->callback([&] {
    const auto host = load_qgraph(det.host);
    const auto pattern = load_pattern(det.pattern);
    char* json = nullptr;
    check(qt_detect(host.get(), pattern.get(), det.s, det.all ? det.limit : 0, &json));
    report.command = "detect";
    report.parameters = {{"host", det.host}, {"pattern", det.pattern}, {"s", det.s},
                         {"all", det.all},   {"limit", det.limit}};
    report.result = Json::parse(take_string(json));
  });

  // extremal ------------------------------------------------------------
  auto* extremal = app.add_subcommand("extremal", "exact ex(n,F,q,s) by branch and bound");
  struct {
    int n = 0, q = 0, s = 0, jobs = 1;
    std::string pattern;
    long long budget_nodes = -1;
    double budget_secs = -2.0;  // sentinel: fall back to the environment
  } ext;
  extremal->add_option("--n", ext.n, "number of vertices")->required();
  extremal->add_option("--q", ext.q, "weight cap")->required();
  extremal->add_option("--s", ext.s, "intersection threshold")->required();
  extremal->add_option("--pattern", ext.pattern, "pattern file or built-in name")->required();
  extremal->add_option("--budget-nodes", ext.budget_nodes, "node budget (<0: unlimited)");
  extremal->add_option("--budget-secs", ext.budget_secs, "time budget (<0: unlimited)");
  extremal->add_option("--jobs", ext.jobs,
                       "worker threads for root branches (1: fully deterministic report)");
  extremal->callback([&] {
    const auto pattern = load_pattern(ext.pattern);
    const double budget = ext.budget_secs <= -2.0 ? default_budget_secs() : ext.budget_secs;
    char* json = nullptr;
    check(qt_extremal(ext.n, ext.q, ext.s, pattern.get(), ext.budget_nodes, budget, ext.jobs,
                      &json));
    report.command = "extremal";
    report.parameters = {{"n", ext.n},
                         {"q", ext.q},
                         {"s", ext.s},
                         {"pattern", ext.pattern},
                         {"budget_nodes", ext.budget_nodes},
                         {"budget_secs", budget},
                         {"jobs", ext.jobs}};
    report.result = Json::parse(take_string(json));
    csv_rows = Json::array({Json{{"value", report.result["value"]},
                                 {"status", report.result["status"]},
                                 {"nodes", report.result["nodes"]},
                                 {"seconds", report.result["seconds"]}}});
  });

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "certify that a q-graph avoids a pattern");
  struct {
    std::string host, pattern;
    int s = 0;
  } ver;
  verify->add_option("--host", ver.host, "q-graph file")->required();
  verify->add_option("--pattern", ver.pattern, "pattern file or built-in name")->required();
  verify->add_option("--s", ver.s, "intersection threshold")->required();
  verify->callback([&] {
    const auto host = load_qgraph(ver.host);
    const auto pattern = load_pattern(ver.pattern);
    char* json = nullptr;
    check(qt_verify_free(host.get(), pattern.get(), ver.s, &json));
    report.command = "verify";
    report.parameters = {{"host", ver.host}, {"pattern", ver.pattern}, {"s", ver.s}};
    report.result = Json::parse(take_string(json));
  });

  // construct ------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "generate a named construction");
  construct->require_subcommand(1);
  std::string out_path;
  struct {
    int q = 2, n = 6, variant = 1;
    std::string pattern;
    std::vector<int> blocks;
    bool pruned = false;
  } con;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", out_path, "output file");
  };
  auto finish_graph = [&](const std::string& name, qt_qgraph* raw, Json parameters) {
    QGraphPtr graph(raw, &qt_qgraph_free);
    report.command = "construct " + name;
    report.parameters = std::move(parameters);
    Json result{{"n", qt_qgraph_n(graph.get())},
                {"q", qt_qgraph_q(graph.get())},
                {"edges", qt_qgraph_size(graph.get())}};
    if (!out_path.empty()) {
      check(qt_qgraph_write(graph.get(), out_path.c_str()));
      result["written"] = out_path;
    } else {
      char* json = nullptr;
      check(qt_qgraph_to_json(graph.get(), &json));
      result["graph"] = Json::parse(take_string(json));
    }
    report.result = std::move(result);
  };

  auto* c_utree = construct->add_subcommand("universal-tree", "cycle-avoiding family");
  c_utree->add_option("--q", con.q)->required();
  c_utree->add_option("--n", con.n)->required();
  add_output(c_utree);
  c_utree->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_universal_tree(con.q, con.n, &g));
    finish_graph("universal-tree", g, {{"q", con.q}, {"n", con.n}});
  });

  auto* c_blow = construct->add_subcommand("blowup", "all q-edges over a pattern's edges");
  c_blow->add_option("--pattern", con.pattern)->required();
  c_blow->add_option("--q", con.q)->required();
  add_output(c_blow);
  c_blow->callback([&] {
    const auto pattern = load_pattern(con.pattern);
    qt_qgraph* g = nullptr;
    check(qt_construct_blowup(pattern.get(), con.q, &g));
    finish_graph("blowup", g, {{"pattern", con.pattern}, {"q", con.q}});
  });

  auto* c_lowc = construct->add_subcommand("low-complement", "q-edges with a low weight");
  c_lowc->add_option("--q", con.q)->required();
  c_lowc->add_option("--n", con.n)->required();
  add_output(c_lowc);
  c_lowc->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_low_complement(con.q, con.n, &g));
    finish_graph("low-complement", g, {{"q", con.q}, {"n", con.n}});
  });

  auto* c_chi1 = construct->add_subcommand("chi1-lower", "low complement plus a Turan-graph top layer");
  c_chi1->add_option("--pattern", con.pattern)->required();
  c_chi1->add_option("--q", con.q)->required();
  c_chi1->add_option("--n", con.n)->required();
  add_output(c_chi1);
  c_chi1->callback([&] {
    const auto pattern = load_pattern(con.pattern);
    qt_qgraph* g = nullptr;
    check(qt_construct_chi1_lower(pattern.get(), con.q, con.n, &g));
    finish_graph("chi1-lower", g, {{"pattern", con.pattern}, {"q", con.q}, {"n", con.n}});
  });

  auto* c_tree = construct->add_subcommand("tree-family", "q=2 tree-avoiding family over a partition");
  c_tree->add_option("--blocks", con.blocks, "block sizes, e.g. --blocks 3 3 3")->required();
  c_tree->add_flag("--pruned", con.pruned, "drop low-weight pairs inside the last block");
  add_output(c_tree);
  c_tree->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_tree_family(con.blocks.data(), static_cast<int>(con.blocks.size()),
                                   con.pruned ? 1 : 0, &g));
    finish_graph("tree-family", g, {{"blocks", con.blocks}, {"pruned", con.pruned}});
  });

  auto* c_tri = construct->add_subcommand("tripart-13-4", "q=2 family avoiding K_{2,3,3}");
  c_tri->add_option("--n", con.n)->required();
  add_output(c_tri);
  c_tri->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_tripart_13_4(con.n, &g));
    finish_graph("tripart-13-4", g, {{"n", con.n}});
  });

  auto* c_tfam = construct->add_subcommand("triangle-family", "triangle-avoiding families 1..4");
  c_tfam->add_option("--q", con.q)->required();
  c_tfam->add_option("--n", con.n)->required();
  c_tfam->add_option("--variant", con.variant)->required();
  add_output(c_tfam);
  c_tfam->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_triangle_family(con.q, con.n, con.variant, &g));
    finish_graph("triangle-family", g, {{"q", con.q}, {"n", con.n}, {"variant", con.variant}});
  });

  auto* c_trip = construct->add_subcommand("triple-partition",
                                           "partition of Q(3,2) into (q+1)-triangles");
  c_trip->add_option("--q", con.q)->required();
  add_output(c_trip);
  c_trip->callback([&] {
    char* json = nullptr;
    check(qt_triple_partition(con.q, &json));
    report.command = "construct triple-partition";
    report.parameters = {{"q", con.q}};
    report.result = Json::parse(take_string(json));
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw CliError(kExitFormat, "cannot open '" + out_path + "' for writing");
      out << report.result.dump(2) << "\n";
      report.result = Json{{"q", con.q}, {"triples", report.result["triples"].size()},
                           {"written", out_path}};
    }
  });

  auto* c_q3 = construct->add_subcommand("q3-pair", "q=3 two-slice family avoiding 4-triangles");
  c_q3->add_option("--n", con.n)->required();
  add_output(c_q3);
  c_q3->callback([&] {
    qt_qgraph* g = nullptr;
    check(qt_construct_q3_pair(con.n, &g));
    finish_graph("q3-pair", g, {{"n", con.n}});
  });

  // chromatic numbers ----------------------------------------------------
  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  std::string chi_pattern;
  chi->add_option("--pattern", chi_pattern, "pattern file or built-in name")->required();
  chi->callback([&] {
    const auto pattern = load_pattern(chi_pattern);
    int value = 0;
    check(qt_chromatic(pattern.get(), &value));
    report.command = "chi";
    report.parameters = {{"pattern", chi_pattern}};
    report.result = Json{{"value", value}};
  });

  auto* chi1 = app.add_subcommand("chi1", "exact robust chromatic number");
  std::string chi1_pattern;
  chi1->add_option("--pattern", chi1_pattern, "pattern file or built-in name")->required();
  chi1->callback([&] {
    const auto pattern = load_pattern(chi1_pattern);
    int value = 0;
    check(qt_robust_chromatic(pattern.get(), &value));
    report.command = "chi1";
    report.parameters = {{"pattern", chi1_pattern}};
    report.result = Json{{"value", value}};
  });

  // random experiment ------------------------------------------------------
  auto* rtrial = app.add_subcommand("random-chi1", "robust chromatic number of random multipartite graphs");
  struct {
    int m = 0, r = 0, trials = 0, jobs = 0;
    double p = 0.0;
    std::uint64_t seed = 1;
  } exp;
  rtrial->add_option("--m", exp.m, "part size")->required();
  rtrial->add_option("--r", exp.r, "number of parts")->required();
  rtrial->add_option("--p", exp.p, "cross-part edge probability")->required();
  rtrial->add_option("--trials", exp.trials, "number of trials")->required();
  rtrial->add_option("--seed", exp.seed, "base seed");
  rtrial->add_option("--jobs", exp.jobs, "worker threads (0: all cores)");
  rtrial->callback([&] {
    char* json = nullptr;
    check(qt_chi1_experiment(exp.m, exp.r, exp.p, exp.trials, exp.seed, exp.jobs, &json));
    report.command = "random-chi1";
    report.parameters = {{"m", exp.m},         {"r", exp.r},       {"p", exp.p},
                         {"trials", exp.trials}, {"seed", exp.seed}, {"jobs", exp.jobs}};
    report.result = Json::parse(take_string(json));
    csv_rows = report.result["log"];
  });

  // weight functions ---------------------------------------------------------
  auto* wmax = app.add_subcommand("wstar-max", "maximize total weight under the star condition");
  int wk = 0;
  wmax->add_option("--k", wk, "number of vertices")->required();
  wmax->callback([&] {
    char* json = nullptr;
    check(qt_wstar_max(wk, &json));
    report.command = "wstar-max";
    report.parameters = {{"k", wk}};
    report.result = Json::parse(take_string(json));
  });

  auto* wcheck = app.add_subcommand("wstar-check", "check a weight function against the star condition");
  std::string wpath;
  wcheck->add_option("--in", wpath, "weight-function file")->required();
  wcheck->callback([&] {
    char* json = nullptr;
    check(qt_wstar_check_file(wpath.c_str(), &json));
    report.command = "wstar-check";
    report.parameters = {{"in", wpath}};
    report.result = Json::parse(take_string(json));
  });

  // acceptance ----------------------------------------------------------------
  bool acceptance_failed = false;
  auto* acc = app.add_subcommand("acceptance", "run the full release grid");
  acc->callback([&] {
    int all_passed = 0;
    char* json = nullptr;
    check(qt_acceptance_run(&all_passed, &json));
    report.command = "acceptance";
    report.result = Json::parse(take_string(json));
    for (const auto& r : report.result["criteria"])
      std::cerr << (r["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << "criterion "
                << r["id"].get<int>() << ": " << r["name"].get<std::string>() << " ("
                << r["detail"].get<std::string>() << ")\n";
    acceptance_failed = all_passed == 0;
  });

  // Let options like --format trail the subcommand.
  const auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  Timer timer;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report.seconds = timer.elapsed();

  if (format == "csv")
    emit_csv(csv_rows);
  else
    emit_json(report);
  return acceptance_failed ? kExitAcceptance : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
