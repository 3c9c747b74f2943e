// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adiclp/certcheck.hpp"
#include "adiclp/cli.hpp"
#include "adiclp/problemfile.hpp"

using namespace adiclp;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv{"adiclp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmpfile(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p;
}

const char* kUnattained =
    "vars 1\n"
    "set dyadic\n"
    "max 1\n"
    "3 <= 1\n"
    "nonneg 1\n"
    "eps 1/64\n";

const char* kAttained =
    "vars 1\n"
    "set dyadic\n"
    "max 1\n"
    "3 <= 3\n"
    "nonneg 1\n";

}  // namespace

TEST_CASE("problem files parse, render and canonicalize") {
  ProblemFile pf = parse_problem_string(kUnattained);
  CHECK(pf.nvars == 1);
  CHECK(pf.L.p() == 2);
  CHECK(pf.rows.size() == 1);
  CHECK(pf.nonneg == std::vector<size_t>{0});
  REQUIRE(pf.eps.has_value());
  CHECK(*pf.eps == Rat(1, 64));
  CHECK(parse_problem_string(render_problem(pf)) == pf);

  LlpInstance inst = to_instance(pf);
  CHECK(inst.P.A.rows() == 2);
  CHECK(inst.P.A(0, 0) == 3);
  CHECK(inst.P.A(1, 0) == -1);

  // equality rows split in place, min negates the objective
  ProblemFile eq = parse_problem_string("vars 2\nset bracket 3\nmin 1 2\n1 1 = 1\n2 -1 >= 0\n");
  CHECK(parse_problem_string(render_problem(eq)) == eq);
  LlpInstance ieq = to_instance(eq);
  CHECK(ieq.P.A.rows() == 3);
  CHECK(ieq.c == IntVec{Int(-1), Int(-2)});
  CHECK(ieq.P.A(2, 0) == -2);  // >= row negated

  CHECK_THROWS_WITH_AS(parse_problem_string("vars 1\nset dyadic\n1 2 <= 1\n"),
                       doctest::Contains("line 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_string(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_string("vars 1\nset padic 6\n"), std::invalid_argument);
}

TEST_CASE("solve exit codes per outcome") {
  auto unatt = tmpfile("cli_o4.txt", kUnattained);
  CliRun r = run({"solve", unatt.string(), "--json"});
  CHECK(r.code == 14);
  CHECK(r.out.find("\"o4\"") != std::string::npos);

  auto att = tmpfile("cli_o3.txt", kAttained);
  CHECK(run({"solve", att.string()}).code == 13);

  auto inf = tmpfile("cli_o1a.txt", "vars 1\nset dyadic\nmax 3\n3 = 1\nnonneg 1\n");
  CHECK(run({"solve", inf.string()}).code == 11);

  auto rinf = tmpfile("cli_o1r.txt", "vars 1\nset dyadic\n1 <= 0\n1 >= 1\n");
  CHECK(run({"solve", rinf.string()}).code == 10);

  auto unb = tmpfile("cli_o2.txt", "vars 1\nset dyadic\nmax 1\nnonneg 1\n");
  CHECK(run({"solve", unb.string()}).code == 12);

  auto empty = tmpfile("cli_o3_empty.txt", "vars 1\nset dyadic\nmax 0\n");
  CliRun e = run({"solve", empty.string(), "--json"});
  CHECK(e.code == 13);

  auto bad = tmpfile("cli_bad.txt", "vars 1\nset dyadic\n1 2 3\n");
  CHECK(run({"solve", bad.string()}).code == 2);

  auto integer = tmpfile("cli_int.txt", "vars 1\nset integer\n1 <= 1\n");
  CHECK(run({"solve", integer.string()}).code == 2);
}

TEST_CASE("solve output feeds check") {
  auto inst = tmpfile("cli_roundtrip.txt", kUnattained);
  CliRun solved = run({"solve", inst.string(), "--json"});
  REQUIRE(solved.code == 14);
  auto cert = tmpfile("cli_roundtrip_cert.json", solved.out);
  CliRun checked = run({"check", inst.string(), cert.string()});
  CHECK(checked.code == 0);

  // tamper one field of the first certificate
  nlohmann::json doc = nlohmann::json::parse(solved.out);
  doc["certificates"][0]["fields"]["ystar"][0] = "7";
  auto bad = tmpfile("cli_tampered_cert.json", doc.dump());
  CliRun rejected = run({"check", inst.string(), bad.string()});
  CHECK(rejected.code == 20);
  CHECK(rejected.err.find("invalid:") != std::string::npos);

  // wrong species shape is a schema error
  nlohmann::json wrong = {{"species", "real-infeasibility"}, {"fields", {{"y", {"1"}}}}};
  auto wrongf = tmpfile("cli_wrong_cert.json", wrong.dump());
  CHECK(run({"check", inst.string(), wrongf.string()}).code == 2);

  nlohmann::json bogus = {{"species", "bogus"}, {"fields", nlohmann::json::object()}};
  auto bogusf = tmpfile("cli_bogus_cert.json", bogus.dump());
  CHECK(run({"check", inst.string(), bogusf.string()}).code == 2);
}

TEST_CASE("hnf command") {
  auto mat = tmpfile("cli_hnf.txt", "1 2\n4 6\n");
  CliRun r = run({"hnf", mat.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("B\n1 1\n2\n") != std::string::npos);
  CHECK(r.out.find("U\n") != std::string::npos);
}

TEST_CASE("gen writes instances that parse and report expected bounds") {
  auto out = std::filesystem::temp_directory_path() / "cli_gen51.txt";
  CliRun g = run({"gen", "--kind", "eg-5.1", "--k", "1", "--n", "2", "--out", out.string()});
  REQUIRE(g.code == 0);
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  ProblemFile pf = parse_problem_string(buf.str());
  CHECK(pf.nvars == 2);
  CHECK(pf.rows.size() == 1);
  CHECK(pf.rows[0].a == IntVec{Int(5), Int(3)});
  CHECK(pf.L.kind() == AdicClass::Kind::BracketPAdic);

  CliRun b = run({"bounds", out.string(), "--min-support"});
  REQUIRE(b.code == 0);
  nlohmann::json doc = nlohmann::json::parse(b.out);
  CHECK(doc["support"]["min_support"] == 2);

  CliRun g53 = run({"gen", "--kind", "eg-5.3", "--n", "3"});
  REQUIRE(g53.code == 0);
  ProblemFile pf53 = parse_problem_string(g53.out);
  CHECK(pf53.rows[0].a == IntVec{Int(1), Int(2), Int(4)});
  CHECK(pf53.rows[0].rhs == 7);
  REQUIRE(pf53.objective.has_value());
  CHECK(pf53.minimize);
  CHECK(parse_problem_string(render_problem(pf53)) == pf53);

  CHECK(run({"gen", "--kind", "nope"}).code == 2);
}

TEST_CASE("bounds command on a fractionality instance") {
  auto inst = tmpfile("cli_frac.txt", "vars 1\nset dyadic\n2 = 1\n");
  CliRun r = run({"bounds", inst.string(), "--xi-exact", "6"});
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["fractionality"]["kappa"] == 1);
  CHECK(doc["fractionality"]["xi_exact"] == 1);
  CHECK(doc["fractionality"]["xi_bound"].get<long>() >= 1);
}
