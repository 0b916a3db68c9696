#include <doctest.h>

#include "affvoa/reports.hpp"

using namespace affvoa;

namespace {

RunRequest request(std::string command) {
  RunRequest r;
  r.command = std::move(command);
  r.seed = 7;
  return r;
}

}  // namespace

TEST_SUITE("cli_reports") {
  TEST_CASE("level resolution") {
    auto r = request("singular");
    r.m = 0;
    CHECK(resolve_level(r) == Rational(-1));
    r.m = 1;
    CHECK(resolve_level(r) == Rational(-7, 3));
    r.m.reset();
    r.n = 4;
    r.q = 2;
    CHECK(resolve_level(r) == Rational(-5, 2));
    r.q.reset();
    CHECK_THROWS_AS(resolve_level(r), UsageError);
    r.m = 1;
    CHECK_THROWS_AS(resolve_level(r), UsageError);  // m only parametrizes sl_3
    r.n = 3;
    r.m = -1;
    CHECK_THROWS_AS(resolve_level(r), UsageError);
  }

  TEST_CASE("usage errors") {
    auto r = request("singular");
    r.m = 0;
    CHECK_THROWS_AS(run_command(r), UsageError);  // no depth
    r.depth = 3;
    r.weight = {2};
    CHECK_THROWS_AS(run_command(r), UsageError);
    CHECK_THROWS_AS(run_command(request("frobnicate")), UsageError);
    auto s = request("slice");
    s.slice = "subregular";
    CHECK_THROWS_AS(run_command(s), UsageError);
    auto z = request("zhu");
    z.m = 0;
    z.cap = 0;
    CHECK_THROWS_AS(run_command(z), UsageError);
  }

  TEST_CASE("solve size estimate and refusal") {
    auto est = estimate_singular_solve(3, 3, {2, 1}, 60000);
    CHECK(est.columns == 6);
    CHECK(est.feasible);
    CHECK(estimate_singular_solve(3, 9, {2, 1}, 60000).columns == 4350);
    CHECK_FALSE(estimate_singular_solve(3, 15, {2, 1}, 60000).feasible);
    auto r = request("singular");
    r.m = 2;
    r.depth = 15;
    r.weight = {2, 1};
    CHECK_THROWS_AS(run_command(r), std::length_error);
  }

  TEST_CASE("singular run at level -1") {
    auto r = request("singular");
    r.m = 0;
    r.depth = 3;
    r.weight = {2, 1};
    RunResult res = run_command(r);
    CHECK(res.certified);
    CHECK(res.payload["dimension"] == 1);
  }

  TEST_CASE("result documents are reproducible") {
    auto r = request("slice");
    auto a = result_document(r, run_command(r));
    auto b = result_document(r, run_command(r));
    CHECK(a.dump() == b.dump());
    CHECK(a["certified"] == true);
    auto full = full_report(r, run_command(r), 0.5);
    CHECK(full["manifest"]["digest"] == sha256_hex(a));
    CHECK(full["manifest"]["version"] == library_version());
  }

  TEST_CASE("sha256 of a known document") {
    CHECK(sha256_hex(nlohmann::json{{"a", 1}}) == "015abd7f5cc57a2dd94b7590f04ad8084273905ee33ec5cebeae62276a97f862");
  }
}
