#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pqb_cli/cli.hpp"

using pqb::cli::main_entry;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pqb");
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) v.push_back(c);
  return v;
}

const std::vector<std::vector<std::string>>& every_subcommand() {
  static const std::vector<std::vector<std::string>> cmds{
      {"pq", "--p", "0.9", "--q", "0.6", "--n-max", "6"},
      {"eval", "--f", "ripple", "--n", "7", "--m", "5", "--p", "0.9", "--q", "0.6"},
      {"moments", "--n", "10", "--p", "0.9", "--q", "0.6"},
      {"central-moments", "--n", "10", "--p", "0.9", "--q", "0.6"},
      {"korovkin", "--f", "quad", "--degrees", "8,16"},
      {"certify", "--f", "vee;quad", "--degrees", "4,8", "--modulus-grid", "60", "--grid", "20"},
      {"voronovskaja", "--f", "quad", "--degrees", "16,32,64"},
      {"selftest", "--seed", "7"},
  };
  return cmds;
}

}  // namespace

TEST_CASE("every subcommand is byte-stable across consecutive runs") {
  for (const auto& cmd : every_subcommand()) {
    INFO(cmd[0]);
    const auto a = invoke(cmd);
    const auto b = invoke(cmd);
    CHECK(a.status == b.status);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);
    CHECK(a.out.back() == '\n');
  }
}

TEST_CASE("every subcommand has a JSON mirror with the same rows") {
  for (auto cmd : every_subcommand()) {
    INFO(cmd[0]);
    const auto csv = invoke(cmd);
    cmd.push_back("--json");
    const auto js = invoke(cmd);
    CHECK(js.status == csv.status);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == cmd[0]);
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() >= 2);
    CHECK(doc["rows"].size() == rows.size() - 1);
    const auto header = split(rows[0]);
    CHECK(doc["columns"].size() == header.size());
    for (std::size_t c = 0; c < header.size(); ++c) CHECK(doc["columns"][c] == header[c]);
  }
}

TEST_CASE("moments example: closed form agrees with the oracle") {
  const auto r = invoke({"moments", "--n", "10", "--p", "0.9", "--q", "0.6"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "i,x,closed_form,oracle,abs_diff,statement_form,exact_equal");
  CHECK(rows.size() == 1 + 5 * 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    CHECK(std::stod(cells[4]) <= 1e-11);
    CHECK(cells[6] == "true");
  }
}

TEST_CASE("eval of the constant 1 is a column of ones") {
  const auto r = invoke({"eval", "--f", "1", "--n", "5", "--m", "5", "--p", "0.9", "--q", "0.6"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "x,y,f,Bf,abs_error");
  CHECK(rows.size() == 1 + 11 * 11);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(split(rows[i])[3]) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eval at a single point") {
  const auto r = invoke({"eval", "--f", "x*y", "--n", "6", "--p", "0.8", "--q", "0.5", "--point", "0.3,0.7"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(split(rows[1])[3]) == doctest::Approx(0.21).epsilon(1e-12));
}

TEST_CASE("voronovskaja example ends near a/2") {
  const auto r = invoke({"voronovskaja", "--f", "x^2+y^2", "--schedule", "i", "--point", "0.5,0.5"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "n,scaled_value,predicted_limit,residual,richardson");
  const auto last = split(rows.back());
  CHECK(last[0] == "2048");
  CHECK(std::fabs(std::stod(last[1]) - 0.18394) <= 2e-2);
  CHECK(std::fabs(std::stod(last[4]) - 0.5 * std::exp(-1.0)) <= 2e-2 * 0.5 * std::exp(-1.0));
}

TEST_CASE("voronovskaja on a corpus function without partials needs --allow-fd") {
  CHECK(invoke({"voronovskaja", "--f", "vee", "--degrees", "16,32"}).status == 2);
  CHECK(invoke({"voronovskaja", "--f", "vee", "--degrees", "16,32", "--allow-fd"}).status == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"moments", "--n", "ten"}).status == 2);
  CHECK(invoke({"moments", "--n", "5", "--p", "0.5", "--q", "0.9"}).status == 2);
  CHECK(invoke({"eval", "--f", "x+", "--n", "4", "--p", "0.9", "--q", "0.5"}).status == 2);
  CHECK(invoke({"korovkin", "--schedule", "iv"}).status == 2);
  CHECK(invoke({"korovkin", "--f", "quad", "--grid", "5"}).status == 2);
  CHECK(invoke({"certify", "--theorem", "nonsense"}).status == 2);
  CHECK(invoke({"pq", "--p", "0.9", "--q", "0.6", "--n-max", "21"}).status == 2);
  const auto r = invoke({"eval", "--f", "sin(x", "--n", "4", "--p", "0.9", "--q", "0.5"});
  CHECK(r.err.find("offset 5") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"certify", "--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("Columns:") != std::string::npos);
}

TEST_CASE("certify flags unmet hypotheses without failing") {
  const auto r = invoke({"certify", "--f", "vee", "--theorem", "c1", "--degrees", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("hypothesis-not-met") != std::string::npos);
}

TEST_CASE("--output writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "pqb_cli_output_test.csv";
  std::filesystem::remove(path);
  const std::vector<std::string> base{"central-moments", "--n", "6", "--p", "0.8", "--q", "0.4"};
  const auto to_stdout = invoke(base);
  auto with_file = base;
  with_file.insert(with_file.end(), {"--output", path.string()});
  const auto to_file = invoke(with_file);
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == to_stdout.out);
  std::filesystem::remove(path);
}

TEST_CASE("unwritable output path is an error") {
  const auto r = invoke({"pq", "--p", "0.9", "--q", "0.6", "--output", "/nonexistent-dir/x.csv"});
  CHECK(r.status != 0);
}

TEST_CASE("selftest reports the documented discrepancies") {
  const auto r = invoke({"selftest"});
  CHECK(r.status == 0);
  CHECK(r.out.find("moment-statement-forms,discrepancy") != std::string::npos);
  CHECK(r.out.find("fourth-moment-limit,discrepancy") != std::string::npos);
  CHECK(r.out.find(",fail,") == std::string::npos);
}

TEST_CASE("an under-resolved modulus lattice yields a named counterexample and exit 1") {
  // sin(60 pi x) vanishes on every node of a 4x4 lattice, so the estimated
  // modulus is zero while the operator error is not.
  const auto r = invoke({"certify", "--f", "sin(60*pi*x)", "--theorem", "complete-modulus", "--modulus-grid", "4",
                         "--degrees", "32", "--schedule", "i"});
  CHECK(r.status == 1);
  CHECK(r.out.find(",FAIL,") != std::string::npos);
  CHECK(r.err.find("counterexample: complete-modulus f=sin(60*pi*x) schedule=i n=32") != std::string::npos);
}
