#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "weylab/cli.hpp"
#include "weylab/commutant.hpp"
#include "weylab/curve.hpp"
#include "weylab/parser.hpp"

using namespace weylab;
using namespace weylab::testing;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parser round trip on random operators") {
  Rng rng(71);
  for (int t = 0; t < 1000; ++t) {
    const WeylOp<Rat> a = random_op(rng, 5, 5);
    CHECK(parse_op(print_op(a)) == a);
  }
}

TEST_CASE("parser accepts equivalent spellings") {
  CHECK(parse_op("D*x") == parse_op("x*D + 1"));
  CHECK(parse_op("  (D ^ 2 + x) * 3 ") == parse_op("3*D^2 + 3*x"));
  CHECK(parse_op("1/2*x") == parse_op("x") * Rat(1, 2));
  CHECK(parse_op("\xe2\x88\x82^2") == parse_op("D^2"));
  CHECK(parse_op("-x + 1") == parse_op("1 - x"));
}

TEST_CASE("parser error positions and classes") {
  CHECK_THROWS_AS(parse_op("x*"), SyntaxError);
  CHECK_THROWS_AS(parse_op("x^-2"), NegativeExponent);
  CHECK_THROWS_AS(parse_op("x%2"), SyntaxError);
  CHECK_THROWS_AS(parse_op("(x"), SyntaxError);
  CHECK_THROWS_AS(parse_op("x^999"), SyntaxError);
  try {
    parse_op("x @ 2");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("eval subcommand") {
  const RunResult r = run({"eval", "D*x"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x)*D + 1\n");
  CHECK(run({"eval", "x**2"}).code == 2);
}

TEST_CASE("commute subcommand exit codes") {
  CHECK(run({"commute", "D^2", "D^3"}).code == 0);
  CHECK(run({"commute", "x", "D"}).code == 1);
  const WeylOp<Rat> L4 = parse_op("(D^2 + x^3 + 5)^2 + 2*x");
  const WeylOp<Rat> M = find_partner(L4, 6, default_partner_bound(L4));
  CHECK(run({"commute", print_op(L4), print_op(M)}).code == 0);
}

TEST_CASE("partner subcommand lists a basis") {
  const RunResult r =
      run({"partner", "--order", "6", "--maxdeg", "10", "(D^2 + x^3 + 5)^2 + 2*x"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);
}

TEST_CASE("curve subcommand emits JSON") {
  const WeylOp<Rat> L4 = parse_op("(D^2 + x^3 + 5)^2 + 2*x");
  const WeylOp<Rat> M = find_partner(L4, 6, default_partner_bound(L4));
  const RunResult r = run({"curve", "--genus", "1", print_op(L4), print_op(M)});
  REQUIRE(r.code == 0);
  const SpectralCurve c = curve_from_json(nlohmann::json::parse(r.out));
  CHECK(c == SpectralCurve(1, {Rat(-5), Rat(0), Rat(0)}));
  // non-commuting pair maps to exit 1
  CHECK(run({"curve", "--genus", "1", print_op(L4), "D"}).code == 1);
}

TEST_CASE("family subcommand") {
  const RunResult r = run({"family", "dixmier", "--a1", "0", "--a0", "5"});
  CHECK(r.code == 0);
  CHECK(parse_op(r.out) == parse_op("(D^2 + x^3 + 5)^2 + 2*x"));
  CHECK(run({"family", "nosuch"}).code == 2);

  const RunResult rc = run({"family", "dixmier", "--a1", "0", "--a0", "5", "--curve"});
  REQUIRE(rc.code == 0);
  const std::size_t nl = rc.out.find('\n');
  const SpectralCurve c = curve_from_json(nlohmann::json::parse(rc.out.substr(nl + 1)));
  CHECK(c.c == std::vector<Rat>{-5, 0, 0});
}

TEST_CASE("recurrence-curve subcommand") {
  const RunResult r =
      run({"recurrence-curve", "--g", "1", "--alpha0", "0", "--alpha1", "1"});
  REQUIRE(r.code == 0);
  const SpectralCurve c = curve_from_json(nlohmann::json::parse(r.out));
  CHECK(c.c == std::vector<Rat>{Rat(1, 4), Rat(-15, 16), Rat(1, 2)});
}

TEST_CASE("aut apply subcommand") {
  const RunResult r = run({"aut", "apply", "--word", "phi3:x^2", "D"});
  CHECK(r.code == 0);
  CHECK(parse_op(r.out) == parse_op("D + x^2"));
  CHECK(run({"aut", "apply", "--word", "phi9:x", "D"}).code == 2);
  CHECK(run({"aut", "apply", "--word", "phi3:D", "D"}).code == 2);
}

TEST_CASE("certificate subcommand") {
  const RunResult one =
      run({"certificate", "--dega", "0", "--r", "9", "--r1", "7", "--n", "2", "--m", "9"});
  REQUIRE(one.code == 0);
  CHECK(nlohmann::json::parse(one.out)["branch"] == 3);

  const RunResult grid = run({"certificate", "--dega", "0", "--r", "9", "--r1", "7"});
  REQUIRE(grid.code == 0);
  const nlohmann::json j = nlohmann::json::parse(grid.out);
  CHECK(j["branch1"].get<int>() + j["branch2"].get<int>() + j["branch3"].get<int>() ==
        51 * 51);

  // precondition failures are usage errors
  CHECK(run({"certificate", "--dega", "0", "--r", "8", "--r1", "7"}).code == 2);
}

TEST_CASE("solve-vw subcommand reports JSON") {
  const RunResult r = run({"solve-vw", "--m", "1", "--curve", "0,0,-5", "--seed", "7",
                           "--starts", "60"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["status"] == "accepted");
  CHECK(j[0]["residual"].get<double>() < 1e-10);
  CHECK(run({"solve-vw", "--m", "1", "--curve", "0,0"}).code == 1);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
