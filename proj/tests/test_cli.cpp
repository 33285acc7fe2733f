#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "hamspan/graph.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HAMSPAN_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path temp_file(const std::string& tag) {
  return fs::temp_directory_path() / ("hamspan_cli_" + tag + "_" + std::to_string(getpid()));
}

// Byte comparison after dropping wall-clock content: the trailing wall_ms
// CSV column and any JSON wall_ms line.
std::string strip_wall(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"wall_ms\"") != std::string::npos) continue;
    if (line.rfind("property,", 0) == 0 || line.find(',') == std::string::npos) {
      out << line << '\n';
      continue;
    }
    auto cut = line.find_last_of(',');
    out << line.substr(0, cut) << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("verify-k43 reports the certificate and exits zero") {
  RunResult r = run_cli("verify-k43");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["rank"] == 7);
  CHECK(report["total_hamilton_circuits"] == 12);
  CHECK(report["matrix_matches_reference"] == true);
  CHECK(report["full_span"] == true);
  CHECK(report["all_ok"] == true);
  CHECK(report["matrix"][0] == "1111111");
}

TEST_CASE("gen then status round trip") {
  fs::path file = temp_file("khat");
  RunResult gen = run_cli("gen --family khat --s 4 --output " + file.string());
  REQUIRE(gen.exit_code == 0);

  std::ifstream in(file);
  hamspan::Graph g = hamspan::read_graph_text(in);
  CHECK(g == hamspan::gen_k_hat(4));

  RunResult status = run_cli("status --input " + file.string());
  CHECK(status.exit_code == 0);
  json report = json::parse(status.out);
  CHECK(report["n"] == 8);
  CHECK(report["m"] == 14);
  CHECK(report["structural"]["is_bipartite"] == true);
  CHECK(report["structural"]["min_degree"] == 2);
  CHECK(report["hamilton"]["kind"] == "full");
  fs::remove(file);
}

TEST_CASE("status classifies a 2-vertex graph as vacuous") {
  fs::path file = temp_file("tiny");
  std::ofstream(file) << "2 1\n0 1\n";
  RunResult r = run_cli("status --input " + file.string());
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["hamilton"]["kind"] == "vacuous-no-cycle");
  fs::remove(file);
}

TEST_CASE("conjecture subcommand") {
  RunResult s3 = run_cli("conjecture --s 3");
  CHECK(s3.exit_code == 0);
  json r3 = json::parse(s3.out);
  CHECK(r3["status"]["kind"] == "deficient");
  CHECK(r3["status"]["quotient"] == 1);
  CHECK(r3["total_circuits"] == 2);

  RunResult s4 = run_cli("conjecture --s 4");
  CHECK(s4.exit_code == 0);
  CHECK(json::parse(s4.out)["status"]["kind"] == "full");

  // Cap exhaustion surfaces as the dedicated exit code.
  RunResult capped = run_cli("conjecture --s 5 --cap 10");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("bad arguments exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("gen --family nosuch --output /dev/null").exit_code == 2);
  CHECK(run_cli("conjecture").exit_code == 2);                    // missing --s
  CHECK(run_cli("sweep --n 10 --trials 5").exit_code == 2);       // no p mode
  CHECK(run_cli("sweep --n 10 --p 0.5 --eps 0.1").exit_code == 2);// two p modes
  CHECK(run_cli("status --input /nonexistent/file").exit_code == 2);
}

TEST_CASE("sweep produces the documented CSV") {
  RunResult r = run_cli(
      "sweep --n 10,12 --p 0.4 --property contains_triangle --trials 25 --seed 5");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "property,n,p,trials,successes,unknown,p_hat,ci_low,ci_high,seed,wall_ms");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(row.rfind("contains_triangle,1", 0) == 0);
  }
  CHECK(rows == 2);
}

TEST_CASE("seeded commands are byte-identical across runs") {
  const std::string sweep_args =
      "sweep --n 14 --formula 1,0.5 --property exists_degree2 --trials 40 --seed 9";
  RunResult a = run_cli(sweep_args);
  RunResult b = run_cli(sweep_args);
  CHECK(a.exit_code == 0);
  CHECK(strip_wall(a.out) == strip_wall(b.out));

  RunResult g1 = run_cli("gen --family gnp --n 60 --p 0.2 --seed 77");
  RunResult g2 = run_cli("gen --family gnp --n 60 --p 0.2 --seed 77");
  CHECK(g1.exit_code == 0);
  CHECK(g1.out == g2.out);

  RunResult c1 = run_cli("conjecture --s 4");
  RunResult c2 = run_cli("conjecture --s 4");
  CHECK(strip_wall(c1.out) == strip_wall(c2.out));
}
