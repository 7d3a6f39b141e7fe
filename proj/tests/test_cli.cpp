#include "forge/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "forge/families.hpp"
#include "forge/oracle.hpp"
#include "json.hpp"

using namespace forge;
using forge::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand") {
  SUBCASE("taylor coefficients of the integer family") {
    auto r = invoke({"expand", "(1+53x+9x^2)/(1-82x-82x^2+x^3)", "--count", "3", "--taylor"});
    CHECK_EQ(r.code, 0);
    CHECK_EQ(r.out, "1\n135\n11161\n");
  }
  SUBCASE("geometric series") {
    auto r = invoke({"expand", "1/(1-x)", "--count", "2"});
    CHECK_EQ(r.code, 0);
    CHECK_EQ(r.out, "1\n1\n");
  }
  SUBCASE("laurent with rational output") {
    auto r = invoke({"expand", "(2-8x-90x^2)/(1-58x-522x^2+729x^3)", "--count", "1", "--laurent"});
    CHECK_EQ(r.code, 0);
    CHECK_EQ(r.out, "-10/81\n");
  }
  SUBCASE("csv and json forms") {
    auto r = invoke({"expand", "1/(1-x)", "--count", "2", "--csv"});
    CHECK_EQ(r.out, "n,coefficient\n0,1\n1,1\n");
    auto rj = invoke({"expand", "1/(1-x)", "--count", "2", "--json"});
    auto j = nlohmann::json::parse(rj.out);
    CHECK_EQ(j["coefficients"], nlohmann::json::array({"1", "1"}));
  }
  SUBCASE("parse errors exit with the parse code") {
    CHECK_EQ(invoke({"expand", "(1+z)/(1-x)", "--count", "2"}).code, cli::kExitParse);
  }
  SUBCASE("precondition violations exit with the domain code") {
    CHECK_EQ(invoke({"expand", "(1+x)/(1-x)", "--count", "2", "--laurent"}).code, cli::kExitDomain);
    CHECK_EQ(invoke({"expand", "1/x", "--count", "2", "--taylor"}).code, cli::kExitDomain);
  }
  SUBCASE("format flags are mutually exclusive") {
    CHECK_EQ(invoke({"expand", "1/(1-x)", "--json", "--csv"}).code, cli::kExitParse);
  }
}

TEST_CASE("family") {
  SUBCASE("rows with residuals") {
    auto r = invoke({"family", "thm2.5", "--n-max", "1", "--csv"});
    CHECK_EQ(r.code, 0);
    CHECK_EQ(r.out, "n,a,b,c,residual\n0,2,1,2,1\n1,108,111,138,-9\n");
  }
  SUBCASE("cleared laurent rows") {
    auto r = invoke({"family", "thm2.5-laurent", "--n-max", "0", "--clear-base", "9", "--csv"});
    CHECK_EQ(r.out, "n,a,b,c,residual\n0,-10,1,-12,-9\n");
  }
  SUBCASE("text rows are printed as equations") {
    auto r = invoke({"family", "thm2.4", "--n-max", "1"});
    CHECK(r.out.find("(-1)^3 + 10^3 = 12^3 + (-9)^3") != std::string::npos);
  }
  SUBCASE("json emission parses back into the generated rows") {
    auto r = invoke({"family", "thm2.6-laurent", "--n-max", "3", "--json"});
    auto parsed = families::tuples_from_json(r.out);
    auto direct = families::generate_laurent(families::family_by_name("thm2.6-laurent"), 3);
    CHECK(parsed == direct);
  }
  SUBCASE("unknown families list the valid names") {
    auto r = invoke({"family", "bogus", "--n-max", "1"});
    CHECK_EQ(r.code, cli::kExitDomain);
    CHECK(r.err.find("thm2.4") != std::string::npos);
    CHECK(r.err.find("thm2.6-laurent") != std::string::npos);
  }
}

TEST_CASE("certify") {
  SUBCASE("built-in identities") {
    auto r = invoke({"certify", "eq1.4"});
    CHECK_EQ(r.code, 0);
    CHECK(r.out.find("CERTIFIED") == 0);
    CHECK(r.out.find("7 monomials") != std::string::npos);
    CHECK_EQ(invoke({"certify", "eq1.5"}).code, 0);
    CHECK_EQ(invoke({"certify", "eq3.9"}).code, 0);
    CHECK_EQ(invoke({"certify", "eq3.12"}).code, 0);
  }
  SUBCASE("seed-driven certification") {
    auto r = invoke({"certify", "euler", "--seed", "3,4,5,6"});
    CHECK_EQ(r.code, 0);
    CHECK(r.out.find("CERTIFIED") == 0);
    auto rf = invoke({"certify", "five", "--seed", "-3,0,6,0,-4,5", "--json"});
    CHECK_EQ(rf.code, 0);
    auto j = nlohmann::json::parse(rf.out);
    CHECK_EQ(j["verdict"], "CERTIFIED");
  }
  SUBCASE("invalid seeds are rejected before certification") {
    auto r = invoke({"certify", "euler", "--seed", "1,1,1,1"});
    CHECK_EQ(r.code, cli::kExitDomain);
    CHECK(r.err.find("does not satisfy") != std::string::npos);
  }
  SUBCASE("unknown identity name") {
    auto r = invoke({"certify", "nope"});
    CHECK_EQ(r.code, cli::kExitDomain);
    CHECK(r.err.find("eq3.12") != std::string::npos);
  }
  SUBCASE("tuples round-trip through the CLI surface") {
    auto emitted = invoke({"certify", "eq1.5", "--emit-tuple", "--json"});
    auto j = nlohmann::json::parse(emitted.out);
    auto r = invoke({"certify", "--tuple-json", j["tuple"].dump()});
    CHECK_EQ(r.code, 0);
    CHECK(r.out.find("CERTIFIED") == 0);
  }
  SUBCASE("a broken tuple yields a FAILED verdict") {
    auto emitted = invoke({"certify", "eq1.4", "--emit-tuple", "--json"});
    auto j = nlohmann::json::parse(emitted.out);
    j["tuple"]["lhs"][0][0]["coefficient"]["components"][0] = "4";  // 3a^2 -> 4a^2
    auto r = invoke({"certify", "--tuple-json", j["tuple"].dump()});
    CHECK_EQ(r.code, cli::kExitFailedCheck);
    CHECK(r.out.find("FAILED") == 0);
    CHECK_EQ(invoke({"certify", "--tuple-json", "{"}).code, cli::kExitParse);
  }
}

TEST_CASE("taxicab") {
  SUBCASE("the classic pair") {
    auto r = invoke({"taxicab", "2", "20"});
    CHECK_EQ(r.code, 0);
    CHECK_EQ(r.out, "1729\n1^3 + 12^3\n9^3 + 10^3\n");
  }
  SUBCASE("trivial instance") {
    auto r = invoke({"taxicab", "1", "2"});
    CHECK_EQ(r.out, "2\n1^3 + 1^3\n");
  }
  SUBCASE("json line round-trips") {
    auto r = invoke({"taxicab", "2", "20", "--json"});
    auto [n, pairs] = oracle::representations_from_json(r.out);
    CHECK_EQ(n, exact::Integer(1729));
    CHECK_EQ(pairs, (std::vector<oracle::CubePair>{{1, 12}, {9, 10}}));
  }
  SUBCASE("three representations") {
    auto r = invoke({"taxicab", "3", "500"});
    CHECK_EQ(r.code, 0);
    CHECK(r.out.find("87539319\n") == 0);
    CHECK(r.err.find("pairs") != std::string::npos);  // progress goes to stderr
  }
  SUBCASE("insufficient bound has its own exit code") {
    CHECK_EQ(invoke({"taxicab", "2", "10"}).code, cli::kExitBound);
  }
  SUBCASE("non-positive arguments are parse errors") {
    CHECK_EQ(invoke({"taxicab", "0", "20"}).code, cli::kExitParse);
    CHECK_EQ(invoke({"taxicab", "2", "-5"}).code, cli::kExitParse);
  }
}

TEST_CASE("seeds") {
  SUBCASE("three-cube seeds as text equations") {
    auto r = invoke({"seeds", "three", "--bound", "9"});
    CHECK_EQ(r.code, 0);
    CHECK(r.out.find("3^3 + 4^3 + 5^3 = 6^3") != std::string::npos);
    CHECK(r.out.find("1^3 + 6^3 + 8^3 = 9^3") != std::string::npos);
  }
  SUBCASE("csv with certification column") {
    auto r = invoke({"seeds", "three", "--bound", "6", "--csv", "--certify"});
    CHECK_EQ(r.out, "p,q,r,s,certified\n3,4,5,6,true\n");
  }
  SUBCASE("five-cube seeds all certify at a tiny bound") {
    auto r = invoke({"seeds", "five", "--bound", "1", "--json", "--certify"});
    auto j = nlohmann::json::parse(r.out);
    for (const auto& row : j) CHECK_EQ(row["certified"], true);
  }
  SUBCASE("bad kind") {
    CHECK_EQ(invoke({"seeds", "both", "--bound", "3"}).code, cli::kExitDomain);
  }
}

TEST_CASE("top-level parse failures") {
  CHECK_EQ(invoke({}).code, cli::kExitParse);
  CHECK_EQ(invoke({"no-such-command"}).code, cli::kExitParse);
  CHECK_EQ(invoke({"expand", "1/(1-x)", "--frobnicate"}).code, cli::kExitParse);
  CHECK_EQ(invoke({"--help"}).code, 0);
}
