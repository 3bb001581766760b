// Black-box tests of the shared-library C API, plus integration tests that
// spawn the CLI and compare its report payloads against direct API calls
// (the CLI must stay a thin adapter).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

#include "qturan.h"

namespace {

using Json = nlohmann::ordered_json;

std::string take(char* s) {
  std::string out(s ? s : "");
  qt_string_free(s);
  return out;
}

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(QTURAN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "qturan_capi_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("q-graph handles, formats and error codes") {
  qt_qgraph* g = nullptr;
  REQUIRE(qt_qgraph_parse("qgraph n=3 q=2\n1 2 1 1\n1 3 2 2\n", &g) == QT_OK);
  CHECK(qt_qgraph_n(g) == 3);
  CHECK(qt_qgraph_q(g) == 2);
  CHECK(qt_qgraph_size(g) == 2);

  const std::string text = take(nullptr) + [&] {
    char* s = nullptr;
    REQUIRE(qt_qgraph_format(g, &s) == QT_OK);
    return take(s);
  }();
  qt_qgraph* g2 = nullptr;
  REQUIRE(qt_qgraph_parse(text.c_str(), &g2) == QT_OK);
  CHECK(qt_qgraph_size(g2) == 2);

  const auto path = (temp_dir() / "g.qg").string();
  CHECK(qt_qgraph_write(g, path.c_str()) == QT_OK);
  qt_qgraph* g3 = nullptr;
  CHECK(qt_qgraph_read(path.c_str(), &g3) == QT_OK);
  CHECK(qt_qgraph_size(g3) == 2);

  qt_qgraph* bad = nullptr;
  CHECK(qt_qgraph_parse("qgraph n=3 q=2\n1 2 9 9\n", &bad) == QT_ERROR_PARSE);
  CHECK(std::string(qt_last_error()).find("line 2") != std::string::npos);
  CHECK(qt_qgraph_read("/nonexistent/file.qg", &bad) == QT_ERROR_IO);
  CHECK(qt_qgraph_parse(nullptr, &bad) == QT_ERROR_ARGUMENT);

  qt_qgraph_free(g);
  qt_qgraph_free(g2);
  qt_qgraph_free(g3);
}

TEST_CASE("pattern handles") {
  qt_pattern* p = nullptr;
  REQUIRE(qt_pattern_named("c3", &p) == QT_OK);
  CHECK(qt_pattern_n(p) == 3);
  CHECK(qt_pattern_size(p) == 3);
  qt_pattern* bad = nullptr;
  CHECK(qt_pattern_named("nope", &bad) == QT_ERROR_ARGUMENT);
  CHECK(qt_pattern_parse("graph n=2\n1 1\n", &bad) == QT_ERROR_PARSE);
  qt_pattern_free(p);
}

TEST_CASE("detect, verify, extremal through the C API") {
  qt_pattern* c3 = nullptr;
  REQUIRE(qt_pattern_named("c3", &c3) == QT_OK);
  qt_pattern* c4 = nullptr;
  REQUIRE(qt_pattern_named("c4", &c4) == QT_OK);

  qt_qgraph* blow = nullptr;
  REQUIRE(qt_construct_blowup(c3, 2, &blow) == QT_OK);
  CHECK(qt_qgraph_size(blow) == 12);

  char* out = nullptr;
  REQUIRE(qt_detect(blow, c3, 3, 5, &out) == QT_OK);
  const Json found = Json::parse(take(out));
  CHECK(found["found"] == true);
  CHECK(found["count"] == 5);
  CHECK(found["embeddings"].size() == 5);

  qt_qgraph* utree = nullptr;
  REQUIRE(qt_construct_universal_tree(3, 6, &utree) == QT_OK);
  REQUIRE(qt_verify_free(utree, c4, 4, &out) == QT_OK);
  CHECK(Json::parse(take(out))["free"] == true);
  REQUIRE(qt_verify_free(blow, c3, 3, &out) == QT_OK);
  const Json viol = Json::parse(take(out));
  CHECK(viol["free"] == false);
  CHECK(viol.contains("violation"));

  REQUIRE(qt_extremal(3, 2, 3, c3, -1, -1.0, 1, &out) == QT_OK);
  const Json ex = Json::parse(take(out));
  CHECK(ex["value"] == 8);
  CHECK(ex["status"] == "exact");
  REQUIRE(qt_extremal(3, 3, 4, c3, 1, -1.0, 1, &out) == QT_OK);
  CHECK(Json::parse(take(out))["status"] == "lower_bound");

  qt_pattern_free(c3);
  qt_pattern_free(c4);
  qt_qgraph_free(blow);
  qt_qgraph_free(utree);
}

TEST_CASE("constructions through the C API") {
  qt_qgraph* g = nullptr;
  REQUIRE(qt_construct_low_complement(2, 6, &g) == QT_OK);
  CHECK(qt_qgraph_size(g) == 45);
  qt_qgraph_free(g);

  REQUIRE(qt_construct_tripart_13_4(8, &g) == QT_OK);
  CHECK(qt_qgraph_size(g) == 94);
  qt_qgraph_free(g);

  REQUIRE(qt_construct_triangle_family(4, 6, 4, &g) == QT_OK);
  CHECK(qt_qgraph_size(g) == 130);
  qt_qgraph_free(g);

  const int blocks[2] = {3, 3};
  REQUIRE(qt_construct_tree_family(blocks, 2, 1, &g) == QT_OK);
  CHECK(qt_qgraph_size(g) == 21);
  qt_qgraph_free(g);

  REQUIRE(qt_construct_q3_pair(8, &g) == QT_OK);
  CHECK(qt_qgraph_size(g) == 66);
  qt_qgraph_free(g);
  CHECK(qt_construct_q3_pair(10, &g) == QT_ERROR_ARGUMENT);

  qt_pattern* c4 = nullptr;
  REQUIRE(qt_pattern_named("c4", &c4) == QT_OK);
  CHECK(qt_construct_chi1_lower(c4, 2, 6, &g) == QT_ERROR_ARGUMENT);
  qt_pattern_free(c4);

  char* out = nullptr;
  REQUIRE(qt_triple_partition(3, &out) == QT_OK);
  const Json tp = Json::parse(take(out));
  CHECK(tp["triples"].size() == 9);
}

TEST_CASE("chromatic numbers and the experiment through the C API") {
  qt_pattern* p = nullptr;
  REQUIRE(qt_pattern_named("c5", &p) == QT_OK);
  int chi = 0;
  CHECK(qt_chromatic(p, &chi) == QT_OK);
  CHECK(chi == 3);
  int chi1 = 0;
  CHECK(qt_robust_chromatic(p, &chi1) == QT_OK);
  CHECK(chi1 == 1);
  qt_pattern_free(p);

  char* out = nullptr;
  REQUIRE(qt_chi1_experiment(6, 2, 1.0, 3, 7, 1, &out) == QT_OK);
  const Json a = Json::parse(take(out));
  CHECK(a["frequency"] == 1.0);
  REQUIRE(qt_chi1_experiment(6, 2, 1.0, 3, 7, 2, &out) == QT_OK);
  CHECK(Json::parse(take(out)) == a);  // independent of jobs
}

TEST_CASE("weight functions through the C API") {
  char* out = nullptr;
  REQUIRE(qt_wstar_max(3, &out) == QT_OK);
  const Json m = Json::parse(take(out));
  CHECK(m["value"] == 8);
  CHECK(m["witness"]["total"] == 8);

  const auto path = (temp_dir() / "w.ws").string();
  std::ofstream(path) << "wstar k=3\n1 2 3\n1 3 3\n2 3 2\n";
  REQUIRE(qt_wstar_check_file(path.c_str(), &out) == QT_OK);
  const Json c = Json::parse(take(out));
  CHECK(c["ok"] == true);
  CHECK(c["total"] == 8);
  CHECK(qt_wstar_check_file("/nonexistent.ws", &out) == QT_ERROR_IO);
  CHECK(qt_wstar_max(99, &out) == QT_ERROR_LIMIT);
}

TEST_CASE("cli: reports match direct library calls") {
  const Run ex = run_cli("extremal --n 3 --q 2 --s 3 --pattern c3");
  REQUIRE(ex.exit_code == 0);
  const Json ex_report = Json::parse(ex.output);
  qt_pattern* c3 = nullptr;
  REQUIRE(qt_pattern_named("c3", &c3) == QT_OK);
  char* raw = nullptr;
  REQUIRE(qt_extremal(3, 2, 3, c3, -1, -1.0, 1, &raw) == QT_OK);
  const Json direct = Json::parse(take(raw));
  // identical payload apart from the timing field
  for (const char* key : {"value", "status", "witness", "nodes"})
    CHECK(ex_report["result"][key] == direct[key]);

  const Run chi1 = run_cli("chi1 --pattern k3,3,3");
  REQUIRE(chi1.exit_code == 0);
  CHECK(Json::parse(chi1.output)["result"]["value"] == 3);

  const Run det = run_cli("detect --host /dev/stdin --pattern c3 --s 3 < /dev/null");
  CHECK(det.exit_code == 3);  // empty q-graph file: parse error
  qt_pattern_free(c3);
}

TEST_CASE("cli: construct then verify round trip") {
  const auto dir = temp_dir();
  const auto upath = (dir / "u25.qg").string();
  const Run made = run_cli("construct universal-tree --q 2 --n 5 -o " + upath);
  REQUIRE(made.exit_code == 0);
  CHECK(Json::parse(made.output)["result"]["edges"] == 20);

  // the written file is byte-identical to the canonical library format
  qt_qgraph* direct = nullptr;
  REQUIRE(qt_construct_universal_tree(2, 5, &direct) == QT_OK);
  char* fmt = nullptr;
  REQUIRE(qt_qgraph_format(direct, &fmt) == QT_OK);
  std::ifstream in(upath);
  const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(on_disk == take(fmt));
  qt_qgraph_free(direct);

  const Run free = run_cli("verify --host " + upath + " --pattern c4 --s 3");
  REQUIRE(free.exit_code == 0);
  CHECK(Json::parse(free.output)["result"]["free"] == true);
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
  CHECK(run_cli("extremal --n 3").exit_code == 2);  // missing required options
  const auto bad = (temp_dir() / "bad.qg").string();
  std::ofstream(bad) << "qgraph n=3 q=2\n1 2 9 9\n";
  CHECK(run_cli("verify --host " + bad + " --pattern c3 --s 3").exit_code == 3);
  CHECK(run_cli("chi --pattern not-a-pattern").exit_code == 3);  // falls back to file read
}

TEST_CASE("cli: csv output") {
  const Run csv = run_cli("random-chi1 --m 3 --r 2 --p 1.0 --trials 2 --seed 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("trial,seed,edges,chi,chi1\n", 0) == 0);
  CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 3);
}
