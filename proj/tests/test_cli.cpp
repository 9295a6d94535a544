#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#ifndef COXBRAID_CLI_PATH
#error "COXBRAID_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(COXBRAID_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the class profile") {
  auto r = run_cli("analyze --system D:4 --word 4341232");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "dimension: 3"));
  CHECK(contains(r.output, "link: yes"));
  CHECK(contains(r.output, "class size: 5"));
  CHECK(contains(r.output, "isometric dimension: 3"));
  CHECK(contains(r.output, "median: yes"));
}

TEST_CASE("analyze emits JSON with a stable schema") {
  auto r = run_cli("analyze --system D:4 --word 4341232 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["dimension"] == 3);
  CHECK(j["link"] == true);
  CHECK(j["classSize"] == 5);
  CHECK(j["signature"] == "(3,1,3)");
  CHECK(j["graph"]["vertices"] == 5);
  CHECK(j["isometricDimension"] == 3);
  CHECK(j["median"] == true);
}

TEST_CASE("analyze handles the long factored word") {
  auto r = run_cli("analyze --system D:8 --word 3231343565787");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "factorization: 3231343 | 565 | 787"));
  CHECK(contains(r.output, "class size: 20"));
}

TEST_CASE("analyze covers degenerate and non-reduced words") {
  auto single = run_cli("analyze --system A:1 --word 1");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.output, "dimension: 0"));
  CHECK(contains(single.output, "graph: 1 vertices"));

  auto tired = run_cli("analyze --system A:2 --word 1211");
  CHECK(tired.exit_code == 0);
  CHECK(contains(tired.output, "reduced: no"));
  CHECK(contains(tired.output, "a reduced form: 12"));

  auto bad = run_cli("analyze --system A:2 --word 99");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("graph exports") {
  auto dot = run_cli("graph --system D:4 --word 4341232 --kind braid --format dot");
  CHECK(dot.exit_code == 0);
  const std::string expected =
      "graph braid {\n"
      "  v0 [label=\"3413123\"];\n"
      "  v1 [label=\"3431232\"];\n"
      "  v2 [label=\"3431323\"];\n"
      "  v3 [label=\"4341232\"];\n"
      "  v4 [label=\"4341323\"];\n"
      "  v0 -- v2 [label=2];\n"
      "  v1 -- v2 [label=3];\n"
      "  v1 -- v3 [label=1];\n"
      "  v2 -- v4 [label=1];\n"
      "  v3 -- v4 [label=3];\n"
      "}\n";
  CHECK(dot.output == expected);

  auto mj = run_cli("graph --system D:4 --word 1321434 --kind matsumoto --format json");
  CHECK(mj.exit_code == 0);
  auto j = nlohmann::json::parse(mj.output);
  CHECK(j["vertices"].size() == 15);

  auto empty = run_cli("graph --system D:4 --word - --format json");
  CHECK(empty.exit_code == 0);
  CHECK(nlohmann::json::parse(empty.output)["vertices"].size() == 1);
}

TEST_CASE("median subcommand") {
  auto r = run_cli(
      "median --system D:5 --word 34131234354 --word 43412324354 --word 43413243545");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "median: 43413234354"));
  CHECK(contains(r.output, "signature: (3,1,2,4,5)"));

  auto same = run_cli("median --system D:5 --word 32345 --word 32345 --word 32345");
  CHECK(same.exit_code == 0);
  CHECK(contains(same.output, "median: 32345"));

  auto bad = run_cli("median --system D:5 --word 32345 --word 34131234354 --word 43412324354");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "braid equivalent"));
}

TEST_CASE("sweep exit codes distinguish outcomes") {
  auto ok_cfg = write_temp("coxbraid_sweep_ok.json",
                           R"({"system":"D:4","mode":"exhaustive","L":7})");
  auto ok = run_cli("sweep --config " + ok_cfg.string());
  CHECK(ok.exit_code == 0);
  auto j = nlohmann::json::parse(ok.output);
  CHECK(j["counterexamples"].empty());
  CHECK(j["invariantFailure"] == false);

  auto tiny_cfg = write_temp("coxbraid_sweep_tiny.json",
                             R"({"system":"D:4","mode":"exhaustive","L":9,
                                 "caps":{"budget":10}})");
  auto tiny = run_cli("sweep --config " + tiny_cfg.string());
  CHECK(tiny.exit_code == 4);

  auto aff_cfg = write_temp("coxbraid_sweep_aff.json",
                            R"({"system":"affA:2","mode":"exhaustive","L":5})");
  auto aff = run_cli("sweep --config " + aff_cfg.string());
  CHECK(aff.exit_code == 1);
  CHECK(contains(aff.output, "triangle-free"));

  auto missing = run_cli("sweep --config /nonexistent/sweep.json");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("sweep writes report and CSV files") {
  auto cfg = write_temp("coxbraid_sweep_files.json",
                        R"({"system":"A:3","mode":"exhaustive","L":5,
                            "checks":["diam-eq-dim"]})");
  auto out = std::filesystem::temp_directory_path() / "coxbraid_report.json";
  auto csv = std::filesystem::temp_directory_path() / "coxbraid_report.csv";
  auto r = run_cli("sweep --config " + cfg.string() + " --out " + out.string() + " --csv " +
                   csv.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  nlohmann::json j;
  in >> j;
  CHECK(j["results"].size() == j["instances"].get<std::size_t>());
  std::ifstream csv_in(csv);
  std::string header;
  std::getline(csv_in, header);
  CHECK(header == "word,check,status,detail");
}

TEST_CASE("environment budget override") {
  auto r = run_cli("analyze --system D:4 --word 1321434", "COXBRAID_BUDGET=10 ");
  CHECK(r.exit_code == 4);
  CHECK(contains(r.output, "budget"));

  auto flag_wins = run_cli("analyze --system D:4 --word 1321434 --budget 100000",
                           "COXBRAID_BUDGET=10 ");
  CHECK(flag_wins.exit_code == 0);

  auto bad_env = run_cli("analyze --system D:4 --word 1321434", "COXBRAID_BUDGET=zero ");
  CHECK(bad_env.exit_code == 1);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("analyze --word 123").exit_code == 1);  // missing system
  CHECK(run_cli("analyze --system D:4").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("analyze --system D:4 --system-file /tmp/x --word 1").exit_code == 1);
}

TEST_CASE("system files and the commutation switch") {
  auto sys_file = write_temp("coxbraid_sys.txt", "n=3; 3: (1,2)(2,3)\n");
  auto r = run_cli("analyze --system-file " + sys_file.string() + " --word 121");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "class size: 2"));

  // Without commutation moves the full move graph equals the braid graph.
  auto frozen = run_cli("graph --system D:4 --word 1321434 --kind matsumoto --format json "
                        "--no-commutations");
  CHECK(frozen.exit_code == 0);
  CHECK(nlohmann::json::parse(frozen.output)["vertices"].size() == 2);
}

TEST_CASE("affine exploration is CLI-gated") {
  auto plain = run_cli("analyze --system affA:2 --word 1213121");
  CHECK(plain.exit_code == 0);
  CHECK(contains(plain.output, "median analysis refused"));
  CHECK_FALSE(contains(plain.output, "median: yes"));

  auto explored = run_cli("analyze --system affA:2 --word 1213121 --explore");
  CHECK(explored.exit_code == 0);
  CHECK(contains(explored.output, "median: yes (observed"));
  CHECK(contains(explored.output, "exploration:"));
}
