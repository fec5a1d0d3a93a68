#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "logder/cli.hpp"

using namespace logder;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("logder_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("cli: exponents and basis") {
  const auto f = write_temp("x5y2.txt", "field Q\n1 0 5\n0 1 2\n");
  const auto r = run({"exponents", f});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "exponents: {5, 2}\n");

  const auto empty = write_temp("empty.txt", "field Q\n");
  const auto b = run({"basis", empty});
  CHECK(b.code == kExitOk);
  CHECK(b.out == "theta1 = ∂x  [degree 0]\ntheta2 = ∂y  [degree 0]\n");

  const auto three = write_temp("three.txt", "field Q\n1 0 1\n0 1 1\n1 1 1\n");
  CHECK(run({"basis", three}).out ==
        "theta1 = (x^2 + x*y) ∂x  [degree 2]\ntheta2 = (x) ∂x + (y) ∂y  [degree 1]\n");
}

TEST_CASE("cli: verify exit codes") {
  const auto f = write_temp("x1.txt", "field Q\n1 0 1\n");
  CHECK(run({"verify", f, "--theta1", "(x) ∂x", "--theta2", "∂y"}).code == kExitOk);
  const auto no = run({"verify", f, "--theta1", "x, 0", "--theta2", "x, 0"});
  CHECK(no.code == kExitNegative);
  CHECK(no.out.find("basis: no") != std::string::npos);
  CHECK(run({"verify", f, "--theta1", "(x) dq", "--theta2", "dy"}).code == kExitUsage);
}

TEST_CASE("cli: parse errors exit 2 with a line number") {
  const auto dup = write_temp("dup.txt", "field Q\n1 0 1\n2 0 1\n");
  const auto r = run({"exponents", dup});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.err.find("duplicate") != std::string::npos);
  CHECK(run({"exponents", "/nonexistent/file"}).code == kExitUsage);
  CHECK(run({"no-such-command"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli: oracle") {
  const auto f = write_temp("oracle.txt", "field Q\n1 0 1\n0 1 1\n1 1 1\n");
  const auto r = run({"oracle", f});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "degree dim\n0 0\n1 1\n2 3\n3 5\nexponents: {2, 1}\nfree shape: yes\n");
  const auto big = write_temp("big.txt", "field Q\n1 0 9\n0 1 8\n");
  CHECK(run({"oracle", big}).code == kExitUsage);
}

TEST_CASE("cli: trace") {
  const auto f = write_temp("trace.txt", "field Q\n1 0 1\n");
  const auto r = run({"trace", f});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "step 1: x 0->1  g-vanishing  difference 0 -> 1\nexponents: {1, 0}\n");
}

TEST_CASE("cli: frobenius") {
  const auto r = run({"frobenius", "2", "0", "--shifts", "1,0,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("theta1 = (x^2) ∂x + (x*y) ∂y  [degree 2]") != std::string::npos);
  CHECK(r.out.find("verified: yes") != std::string::npos);
  CHECK(r.out.find("alg3 exponents: {2, 2}") != std::string::npos);
  CHECK(run({"frobenius", "2", "0", "--shifts", "1,0,5"}).code == kExitUsage);
  CHECK(run({"frobenius", "4", "0"}).code == kExitUsage);
}

TEST_CASE("cli: prop-experiment on a small range") {
  const auto csv = (std::filesystem::temp_directory_path() / "logder_test_report.csv").string();
  const auto r = run({"prop-experiment", "--lo", "20", "--hi", "21", "--out", csv});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("16 tuples, 0 disagreements\n", 0) == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "mu1,mu2,mu3,mu4,total,d1,d2,d,predicted_d2,agrees");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 16);
}
