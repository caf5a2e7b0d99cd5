#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef CHROMABIJ_CLI_PATH
#error "CHROMABIJ_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_path = "cli_stdout.txt";
  const std::string cmd =
      env + (env.empty() ? "" : " ") + CHROMABIJ_CLI_PATH + " " + args + " > " +
      out_path + " 2> cli_stderr.txt";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  r.out = buffer.str();
  while (!r.out.empty() && (r.out.back() == '\n' || r.out.back() == '\r'))
    r.out.pop_back();
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const RunResult r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  return nlohmann::json::parse(r.out);
}

const char* fig1_path() {
  static const std::string path = [] {
    std::ofstream out("cli_fig1.el");
    out << "4 4\n0 2\n0 1\n1 2\n1 3\n";
    return std::string("cli_fig1.el");
  }();
  return path.c_str();
}

}  // namespace

TEST_CASE("chi subcommand") {
  const RunResult eval = run_cli(std::string("chi --graph ") + fig1_path() + " --at 4");
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "72");

  const nlohmann::json poly = run_json(std::string("chi --graph ") + fig1_path());
  CHECK(poly == nlohmann::json::parse(R"({"coeffs":[0,-2,5,-4,1]})"));

  for (const std::string method : {"count", "subgraphs", "nbc", "delcon"}) {
    const RunResult r =
        run_cli("chi --graph fig1 --method " + method + " --at 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "12");
  }

  CHECK(run_cli("chi --graph fig1 --at -2").out == "72");
}

TEST_CASE("csf subcommand") {
  const nlohmann::json j = run_json("csf --graph fig1 --method nbc");
  CHECK(j["basis"] == "p");
  CHECK(j["terms"].size() > 0);

  const nlohmann::json expanded = run_json("csf --graph fig1 --expand 2");
  CHECK(expanded["mu"] == 2);

  const nlohmann::json omega_j = run_json("csf --graph fig1 --omega");
  CHECK(omega_j["terms"].size() == j["terms"].size());
}

TEST_CASE("acyclic and compat subcommands") {
  CHECK(run_json("acyclic --graph fig1")["count"] == 12);
  const nlohmann::json listed = run_json("acyclic --graph fig1 --list");
  CHECK(listed["orientations"].size() == 12);

  const nlohmann::json compat = run_json("compat --graph fig1 --t 2 --check");
  CHECK(compat["count"] == 72);
  CHECK(compat["match"] == true);
}

TEST_CASE("bijection subcommand") {
  const nlohmann::json image = run_json("bijection --graph fig1 --phi ++++");
  CHECK(image["subset"] == nlohmann::json::array({2, 3, 4}));

  const nlohmann::json back = run_json("bijection --graph fig1 --psi 2,3,4");
  CHECK(back["orientation"] == "++++");

  const nlohmann::json traced = run_json("bijection --graph fig1 --phi ++++ --trace");
  REQUIRE(traced["stages"].size() == 5);
  CHECK(traced["stages"][1]["action"] == "removed");
  CHECK(traced["stages"][1]["rule"] == "B");
  CHECK(traced["subset"] == nlohmann::json::array({2, 3, 4}));

  CHECK(run_cli("bijection --graph fig1 --phi ++++ --psi 1").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  const nlohmann::json single = run_json("verify --graph fig1 --tmax 2 --mumax 2");
  CHECK(single["failed"] == 0);

  const RunResult compare = run_cli("verify --graph butterfly --against kite");
  CHECK(compare.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(compare.out);
  CHECK(j["x_equal"] == true);
  CHECK(j["same_degree_sequence"] == false);

  const RunResult different = run_cli("verify --graph fig1 --against kite");
  CHECK(different.exit_code == 1);

  const nlohmann::json sweep = run_json("verify --n 3 --tmax 2 --mumax 2");
  CHECK(sweep["graphs"] == 8);
  CHECK(sweep["all_passed"] == true);
}

TEST_CASE("trees subcommand") {
  const nlohmann::json j = run_json("trees --n 4");
  CHECK(j["labeled_trees"] == 16);
  CHECK(j["iso_classes"] == 2);
  CHECK(j["collisions"].empty());
}

TEST_CASE("bench subcommand") {
  const nlohmann::json j = run_json("bench --graph fig1");
  CHECK(j["agree"] == true);
  CHECK(j["full"]["subsets"] == 16);
  CHECK(j["nbc"]["subsets"] == 12);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("chi --graph does_not_exist.el").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("chi").exit_code == 2);  // missing --graph
  CHECK(run_cli("chi --graph fig1 --method count --at 3", "CHROMABIJ_BUDGET=4")
            .exit_code == 3);
  // Malformed graph file.
  std::ofstream("cli_bad.el") << "2 1\n0 0\n";
  CHECK(run_cli("chi --graph cli_bad.el").exit_code == 2);
}

TEST_CASE("pretty output renders text for humans") {
  const RunResult chi = run_cli("chi --graph fig1 --pretty");
  CHECK(chi.exit_code == 0);
  CHECK(chi.out == "chi(G;t) = t^4 - 4*t^3 + 5*t^2 - 2*t");

  const RunResult trace = run_cli("bijection --graph fig1 --phi ++++ --trace --pretty");
  CHECK(trace.exit_code == 0);
  CHECK(trace.out.find("stage 0:") != std::string::npos);
  CHECK(trace.out.find("rule B") != std::string::npos);

  const RunResult verify = run_cli("verify --graph fig1 --tmax 2 --mumax 2 --pretty");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("12 passed, 0 failed") != std::string::npos);

  CHECK(run_cli("bench --graph fig1 --pretty").out.find("polynomials agree") !=
        std::string::npos);
  CHECK(run_cli("csf --graph k2_missing --pretty").exit_code == 2);
}
