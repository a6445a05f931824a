#include <doctest.h>

#include <sstream>

#include "fibsum/cli.hpp"
#include "fibsum/report.hpp"

using namespace fibsum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fibsum");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("interval JSON") {
  const Json j = to_json(Interval(BigRational(1, 3), 128));
  CHECK(j.at("bits") == "128");
  CHECK(j.at("value").get<std::string>().rfind("3.33333", 0) == 0);
  CHECK(j.at("radius").is_string());
}

TEST_CASE("polynomial JSON round trip") {
  const IntPolynomial p{-1, 6, -20, 26};
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"(["-1","6","-20","26"])");
}

TEST_CASE("search JSON and CSV") {
  const auto r = find_solutions(3, 1, 50);
  const Json j = to_json(r);
  CHECK(j.at("solutions").size() == 5);
  CHECK(j.at("solutions")[0].dump() == R"(["3","1","-1","0","0"])");
  CHECK_FALSE(j.contains("elapsed_ns"));
  CHECK(to_json(r, true).contains("elapsed_ns"));
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("k,d,n,m,value\n3,1,-1,0,0\n", 0) == 0);
}

TEST_CASE("bound JSON") {
  const Json j = to_json(derive_bounds(3, 1, 256));
  CHECK(j.at("N") == "9223372036854775808");
  CHECK(j.at("gammas").size() == 4);
}

TEST_CASE("cli basics") {
  CHECK(run({"seq", "--k", "3", "--n", "6"}).out == "13\n");
  CHECK(run({"threshold", "--a", "1.46e17", "--b", "85.53e15", "--c", "0.78"}).out ==
        "9223372036854775808\n");
  const auto s = run({"search", "--k", "3", "--d", "1", "--n-max", "100", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out).at("solutions").size() == 5);
  const auto csv = run({"search", "--k", "3", "--d", "1", "--n-max", "100", "--format", "csv",
                        "--threads", "4"});
  CHECK(csv.out.rfind("k,d,n,m,value\n", 0) == 0);
  CHECK(run({"minpoly", "--k", "3", "--d", "1", "--den", "-2,4"}).out.rfind(
            "26*T^3 - 20*T^2 + 6*T - 1\n", 0) == 0);
  CHECK(run({"height", "--poly", "-5,0,1", "--format", "json"}).code == 0);
  CHECK(run({"norm", "--k", "2", "--k-max", "10"}).code == 0);
  CHECK(run({"v5-check"}).code == 0);
  CHECK(run({"verify-k2", "--d-max", "4", "--n-max", "50"}).code == 0);
  CHECK(run({"verify-growth", "--k", "3", "--n-max", "50"}).code == 0);
  CHECK(run({"binet-check", "--k", "4", "--n-max", "60"}).code == 0);
  CHECK(run({"intersect", "--k", "3", "--n-max", "100"}).out == "0\n1\n2\n13\n");
  CHECK(run({"nonvanishing", "--k", "3", "--d", "1", "--n", "2", "--m", "4"}).code == 0);
  CHECK(run({"repro-example-3-4"}).code == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"seq"}).code == cli::kUsage);
  CHECK(run({"seq", "--k", "1", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"seq", "--n", "3", "--precision", "32"}).code == cli::kUsage);
  CHECK(run({"search", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"binet-check", "--k", "3", "--n-max", "3000", "--precision", "64"}).code ==
        cli::kInsufficientPrecision);
  CHECK(run({"--help"}).code == cli::kOk);
}
