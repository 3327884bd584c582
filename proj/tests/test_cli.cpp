#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hybisect/bench.hpp"
#include "hybisect/io.hpp"

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// run the built binary; stderr is dropped (timings live there)
CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(HYBISECT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) result.out += buf.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/hybisect_test_") + name;
}

}  // namespace

TEST_CASE("gen writes a canonical file that parses back") {
  auto path = temp_path("gen.txt");
  auto res = run_cli("gen --regular -n 30 -r 3 -d 4 --seed 7 -o " + path);
  REQUIRE(res.exit_code == 0);
  auto h = hybisect::read_hypergraph_file(path);
  CHECK(h.n == 30);
  CHECK(h.r == 3);
  for (long long d : degrees(h)) CHECK(d == 4);
  std::remove(path.c_str());
}

TEST_CASE("gen writes json when asked") {
  auto path = temp_path("gen.json");
  auto res = run_cli("gen --binomial -n 12 -r 3 -p 0.2 --seed 3 -o " + path);
  REQUIRE(res.exit_code == 0);
  std::ifstream in(path);
  nlohmann::json j;
  in >> j;
  CHECK(hybisect::hypergraph_from_json(j).n == 12);
  std::remove(path.c_str());
}

TEST_CASE("bisect reports a cross size below the baseline") {
  auto path = temp_path("bis.txt");
  REQUIRE(run_cli("gen --regular -n 60 -r 3 -d 6 --seed 5 -o " + path).exit_code == 0);
  auto res = run_cli("--format records bisect -i " + path + " --trials 80 --seed 1");
  REQUIRE(res.exit_code == 0);
  // records: "bisect ... cross=C ... baseline_f=B ..."
  auto grab = [&](const std::string& key) {
    auto pos = res.out.find(" " + key + "=");
    REQUIRE(pos != std::string::npos);
    pos += key.size() + 2;
    auto end = res.out.find_first_of(" \n", pos);
    return res.out.substr(pos, end - pos);
  };
  double cross = std::stod(grab("cross"));
  double baseline = std::stod(grab("baseline_f"));
  CHECK(cross < baseline);
  std::remove(path.c_str());
}

TEST_CASE("identity suites pass through the check subcommand") {
  auto res = run_cli("check --all -n 12 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("ok=false") == std::string::npos);
  CHECK(res.out.find("ok=true") != std::string::npos);
}

TEST_CASE("mu subcommand with an angle") {
  auto res = run_cli("--format records mu --angle 1.0471975511965976 --trials 50000 --seed 2");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("mu_hat=") != std::string::npos);
  CHECK(res.out.find("exact=0.333333") != std::string::npos);
}

TEST_CASE("oracle subcommand and guard exit code") {
  auto path = temp_path("small.txt");
  {
    std::ofstream out(path);
    out << "4 2\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  auto res = run_cli("--format records oracle bw -i " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("bw=4") != std::string::npos);

  auto big = temp_path("big.txt");
  {
    std::ofstream out(big);
    out << "30 2\n0 1\n";
  }
  CHECK(run_cli("oracle bw -i " + big).exit_code == 3);  // guard violation
  std::remove(path.c_str());
  std::remove(big.c_str());
}

TEST_CASE("mu subcommand with a gram file") {
  auto path = temp_path("gram.txt");
  {
    std::ofstream out(path);
    out << "1 0 0\n0 1 0\n0 0 1\n";
  }
  auto res = run_cli("--format records mu --gram " + path + " --trials 200000 --seed 4");
  REQUIRE(res.exit_code == 0);
  auto pos = res.out.find("mu_hat=");
  REQUIRE(pos != std::string::npos);
  double mu_hat = std::stod(res.out.substr(pos + 7));
  CHECK(std::fabs(mu_hat - 0.125) < 0.01);
  std::remove(path.c_str());
}

TEST_CASE("json inputs feed the other subcommands") {
  auto path = temp_path("in.json");
  REQUIRE(run_cli("gen --regular -n 12 -r 3 -d 4 --seed 2 -o " + path).exit_code == 0);
  auto res = run_cli("--format records oracle bw -i " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("bw=") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("impossible regular instances exit with the numeric-failure code") {
  // two vertices of degree two cannot form a simple 2-uniform pairing:
  // every stub grouping repeats a vertex or duplicates the edge
  auto res = run_cli("gen --regular -n 2 -r 2 -d 2 --seed 1 --max-retries 50 -o /tmp/never.txt");
  CHECK(res.exit_code == 4);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("gen -n 10 -o /tmp/x.txt").exit_code == 2);  // neither --regular nor --binomial
  auto bad = temp_path("bad.txt");
  {
    std::ofstream out(bad);
    out << "4 2\n0 1 2\n";
  }
  CHECK(run_cli("bisect -i " + bad).exit_code == 2);  // parse error
  std::remove(bad.c_str());
}

TEST_CASE("spectral subcommand reports a witness") {
  auto path = temp_path("spec.txt");
  REQUIRE(run_cli("gen --regular -n 24 -r 3 -d 4 --seed 9 -o " + path).exit_code == 0);
  auto res = run_cli("--format records spectral -i " + path + " --kind lambda2 --seed 4");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("witness=") != std::string::npos);
  CHECK(res.out.find("value=") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bisect handles mixed inputs through the CLI") {
  auto path = temp_path("mixed.txt");
  {
    std::ofstream out(path);
    out << "7 mixed 3\n0 1\n2 3 4\n4 5 6\n1 2\n";
  }
  auto res = run_cli("--format records bisect --mixed -i " + path + " --trials 40 --seed 1");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("cross=") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bench sweep: graph cells behave classically, empty grid is empty") {
  SECTION("r=2 advantage is positive with a roughly d-invariant constant") {
    auto records = hybisect::bench_sweep({60}, {2}, {4, 16}, 3, 19, 120, 0.05);
    REQUIRE(records.size() == 6);
    std::vector<double> c4, c16;
    for (const auto& rec : records) {
      REQUIRE(rec.ok);
      CHECK(rec.advantage > 0);
      (rec.d == 4 ? c4 : c16).push_back(rec.c_emp);
    }
    std::sort(c4.begin(), c4.end());
    std::sort(c16.begin(), c16.end());
    double ratio = c4[1] / c16[1];
    if (ratio < 1) ratio = 1 / ratio;
    CHECK(ratio < 3.0);
    // s(H) consistency: advantage recomputes from the asymptote and the cut
    for (const auto& rec : records) {
      hybisect::Rat asym = hybisect::Rat(rec.e) *
                           (hybisect::Rat(1) - hybisect::Rat(hybisect::BigInt(2),
                                                             hybisect::bigint_pow(hybisect::BigInt(2), rec.r)));
      CHECK(rec.advantage == asym - hybisect::Rat(rec.cross));
    }
  }
  SECTION("empty grid") {
    auto records = hybisect::bench_sweep({}, {2}, {4}, 3, 1, 50, 0.05);
    CHECK(records.empty());
    CHECK(hybisect::bench_summarize(records).empty());
  }
  SECTION("infeasible cells carry errors but the sweep continues") {
    auto records = hybisect::bench_sweep({7}, {3}, {2, 3}, 1, 1, 30, 0.05);
    REQUIRE(records.size() == 2);
    CHECK_FALSE(records[0].ok);  // 7*2 not divisible by 3
    CHECK(records[0].error.find("infeasible") != std::string::npos);
    CHECK(records[1].ok);
  }
}

TEST_CASE("bench emits a deterministic table") {
  std::string args = "bench --n-list 16 --r-list 3 --d-list 3 --seeds 2 --seed 11 --trials 30";
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("bench version=") != std::string::npos);
  CHECK(a.out.find(" n=16") != std::string::npos);
  CHECK(a.out.find("bench-summary") != std::string::npos);
  CHECK(a.out.find("oracle_bw=") != std::string::npos);  // filled in at oracle scale
}
