#include <doctest.h>

#include <random>

#include "twotors/cli/commands.hpp"
#include "twotors/cli/poly_parser.hpp"
#include "twotors/cli/render.hpp"

using namespace twotors;
using namespace twotors::cli;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

ParseError parse_failure(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  return ParseError(0, {}, "");
}

Json run_json(std::vector<std::string> args, int expected_exit) {
  args.push_back("--json");
  const auto out = run_cli(args);
  CHECK_MESSAGE(out.exit_code == expected_exit, out.err);
  REQUIRE(!out.out.empty());
  CHECK(out.out.back() == '\n');
  return Json::parse(out.out);
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x^3 - x") == Poly{R(0), R(-1), R(0), R(1)});
  CHECK(parse_poly("1/3*x*(x-1)*(x+3)") == Poly{R(0), R(-1), R(2, 3), R(1, 3)});
  CHECK(parse_poly(" ( x + 1 ) ^ 2 ") == Poly{R(1), R(2), R(1)});
  CHECK(parse_poly("-3/6") == Poly{R(-1, 2)});
  CHECK(parse_poly("x - -1") == Poly{R(1), R(1)});
  CHECK(parse_poly("0*x^5") == Poly{});
}

TEST_CASE("parse errors carry offset and expected tokens") {
  auto e = parse_failure("x^");
  CHECK(e.offset() == 2);
  CHECK(e.expected().count("uint") == 1);
  e = parse_failure("2(x+1)");
  CHECK(e.offset() == 1);
  e = parse_failure("2x");
  CHECK(e.offset() == 1);
  e = parse_failure("(x+1");
  CHECK(e.offset() == 4);
  CHECK(e.expected().count(")") == 1);
  e = parse_failure("1/0");
  CHECK(e.offset() == 2);
  e = parse_failure("");
  CHECK(e.offset() == 0);
  CHECK_THROWS_AS(parse_poly("x^999"), ParseError);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
  CHECK(parse_rational_list("0, 1/2,-3") == std::vector<Rational>{R(0), R(1, 2), R(-3)});
  CHECK(parse_bit_list("1,0,1") == std::vector<int>{1, 0, 1});
  CHECK(parse_bit_list("").empty());
  CHECK_THROWS_AS(parse_bit_list("1,2"), ParseError);
}

TEST_CASE("render/parse round trip (randomized)") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = R(num(rng), den(rng));
    const Poly p(c);
    REQUIRE_MESSAGE(parse_poly(to_string(p)) == p, to_string(p));
  }
}

TEST_CASE("table rendering") {
  Table t({"a", "bbb"});
  t.add_row({"xyz", "1"});
  CHECK(t.render(false) == "a    bbb\n--------\nxyz  1\n");
  CHECK(render_checks({Check::reported("h", "true", "false")}, false) == "[REPORTED] h: expected true, got false\n");
}

TEST_CASE("documented command examples") {
  auto j = run_json({"hyper-table", "--roots", "0,1,2,3,4,5", "--lead", "1"}, 0);
  const std::vector<std::string> expected{"1", "5", "-10", "10", "-5", "1", "2", "-2",
                                          "1", "-5", "1",  "-2", "10", "2", "-10", "5"};
  REQUIRE(j["result"]["classes"].size() == 16);
  for (std::size_t i = 0; i < 16; ++i) CHECK(j["result"]["classes"][i]["q2"] == expected[i]);
  CHECK(j["command"] == "hyper-table");
  for (const auto& c : j["paper_checks"]) CHECK(c["status"] == "pass");

  j = run_json({"theta-counts", "--g", "2", "--s", "1", "--a", "1", "--orientation", "0", "--parity", "0"}, 0);
  CHECK(j["result"]["even"] == 1);
  CHECK(j["result"]["odd"] == 1);

  const auto human = run_cli({"conjecture", "--genus", "1", "--poly", "x^3 - x"});
  CHECK(human.exit_code == 0);
  CHECK(human.out.find("isometric: true") != std::string::npos);

  j = run_json({"conjecture", "--genus", "2", "--roots", "0,1,2,3,4,5"}, 0);
  bool reported = false;
  for (const auto& c : j["paper_checks"]) reported = reported || c["status"] == "reported";
  CHECK(reported);
}

TEST_CASE("other commands succeed") {
  CHECK(run_json({"elliptic-q2", "--poly", "1/3*x*(x-1)*(x+3)"}, 0)["result"]["points"][0]["q2"] == "3");
  CHECK(run_json({"elliptic-table", "--poly", "x^3 - x"}, 0)["result"]["b2"][0][1] == "-1");
  auto j = run_json({"hyper-q2", "--poly", "x*(x-1)*(x-2)*(x-3)*(x-4)*(x-5)", "--class", "0,2", "--pair-with", "0,2"}, 0);
  CHECK(j["result"]["q2"] == "-10");
  CHECK(j["result"]["pair"]["b2"] == "-10");
  CHECK(run_json({"signed-count", "--g", "3", "--s", "1", "--a", "1"}, 0)["result"]["signed_count"] == 8);
  CHECK(run_json({"signed-count", "--roots", "-2,0,1,7"}, 0)["result"]["signed_count"] == 2);
  CHECK(run_json({"odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "--nu", "10|00"}, 0)["result"]["sum"] == 2);
  j = run_json({"gw-trace-form", "--poly", "x^2 - 2", "--alpha", "1/4*x"}, 0);
  CHECK(j["result"]["gram"] == Json::parse(R"([["0","1"],["1","0"]])"));
  CHECK(j["result"]["invariants"]["signature"] == 0);
  CHECK(j["result"]["invariants"]["discriminant"] == "-1");
  CHECK(run_cli({"hyper-table", "--help"}).exit_code == 0);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({}).exit_code == kUsageError);
  CHECK(run_cli({"no-such-command"}).exit_code == kUsageError);
  CHECK(run_cli({"hyper-table"}).exit_code == kUsageError);
  CHECK(run_cli({"hyper-table", "--roots", "0,1,x"}).exit_code == kUsageError);
  CHECK(run_cli({"gw-trace-form", "--poly", "x^"}).exit_code == kUsageError);
  CHECK(run_cli({"signed-count", "--g", "two"}).exit_code == kUsageError);
  CHECK(run_cli({"verify", "--inject-fault", "nothing"}).exit_code == kUsageError);
}

TEST_CASE("domain errors exit 2") {
  CHECK(run_cli({"hyper-table", "--roots", "0,1,1,2"}).exit_code == kDomainError);
  CHECK(run_cli({"hyper-table", "--poly", "x^4 + 1"}).exit_code == kDomainError);
  CHECK(run_cli({"elliptic-table", "--poly", "x^2*(x-1)"}).exit_code == kDomainError);
  CHECK(run_cli({"hyper-q2", "--roots", "0,1,2,3,4,5", "--class", "0,1", "--pair-with", "1,2"}).exit_code ==
        kDomainError);
  CHECK(run_cli({"signed-count", "--poly", "x^3 - 2"}).exit_code == kDomainError);
  CHECK(run_cli({"theta-counts", "--g", "2", "--s", "2", "--a", "1"}).exit_code == kDomainError);
  CHECK(run_cli({"odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "--nu", "00|11"}).exit_code == kDomainError);
  const auto j = run_json({"hyper-table", "--roots", "0,0,1,2"}, kDomainError);
  CHECK(j["result"]["error"] == "EqualRoots");
}

TEST_CASE("verification failure exits 3") {
  const auto out = run_cli({"verify", "--inject-fault", "q2-sign"});
  CHECK(out.exit_code == kVerificationFailure);
  CHECK(out.out.find("[FAIL] 1.") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable") {
  const std::vector<std::string> args{"conjecture", "--genus", "2", "--roots", "0,1,2,3,4,5", "--json"};
  CHECK(run_cli(args).out == run_cli(args).out);
}
