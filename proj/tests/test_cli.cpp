#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mpbern/cli.hpp"
#include "mpbern/rational.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mpbern::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table examples") {
  auto r = cli({"table", "--family", "multi", "--k", "1", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n0,1\n1,1/2\n2,1/6\n3,0\n");
  r = cli({"table", "--family", "imatomi", "--k", "0,0", "--n-max", "3"});
  CHECK(r.out == "n,value\n0,0\n1,1\n2,3\n3,7\n");
  r = cli({"table", "--family", "hurwitz", "--k", "1", "--a-shift", "1", "--n-max", "1"});
  CHECK(r.out == "n,value\n0,1\n1,1/2\n");
  r = cli({"table", "--family", "reduced", "--k", "-1", "--n-max", "2"});
  CHECK(r.out == "n,value\n0,1\n1,2\n2,4\n");
}

TEST_CASE("eval examples") {
  CHECK(cli({"eval", "--family", "multi", "--k", "1", "--n", "1", "--poly-x"}).out == "1/2, 1\n");
  CHECK(cli({"eval", "--family", "symmetrized", "--r", "2", "--m", "0", "--n", "1", "--x", "1/2", "--y", "7"}).out ==
        "3/2\n");
  CHECK(cli({"eval", "--family", "multi", "--k", "1", "--n", "0"}).out == "1\n");
}

TEST_CASE("polynomial CSV pads coefficient columns") {
  const auto r = cli({"table", "--family", "multi", "--k", "1", "--n-max", "2", "--poly-x"});
  CHECK(r.out == "n,c0,c1,c2\n0,1,0,0\n1,1/2,1,0\n2,1/6,1,1\n");
}

TEST_CASE("JSON and CSV carry the same exact values") {
  const std::vector<std::string> base{"table", "--family", "multi", "--k", "2,-1", "--n-max", "6",
                                      "--ln-a", "2/3", "--ln-b", "1/5", "--ln-c", "3/7", "--x", "-2/3"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto doc = nlohmann::json::parse(cli(json_args).out);
  CHECK(doc["family"] == "multi");
  CHECK(doc["params"]["ln_b"] == "1/5");
  std::ostringstream rebuilt;
  rebuilt << "n,value\n";
  for (const auto& row : doc["values"]) {
    const auto text = row["value"].get<std::string>();
    CHECK(mpbern::Rational::parse(text).str() == text);
    rebuilt << row["n"].get<int>() << ',' << text << '\n';
  }
  CHECK(rebuilt.str() == cli(base).out);
}

TEST_CASE("polynomial JSON rows use poly_x") {
  const auto doc = nlohmann::json::parse(
      cli({"eval", "--family", "multi", "--k", "1", "--n", "1", "--poly-x", "--format", "json"}).out);
  CHECK(doc["values"][0]["n"] == 1);
  CHECK(doc["values"][0]["poly_x"] == nlohmann::json::array({"1/2", "1"}));
  CHECK_FALSE(doc["params"].contains("x"));
}

TEST_CASE("validation errors exit 2 and name the field") {
  struct Case {
    std::vector<std::string> args;
    std::string field;
  };
  const Case cases[] = {
      {{"table", "--family", "multi", "--k", "1", "--n-max", "3", "--x", "1/0"}, "--x"},
      {{"table", "--family", "multi", "--k", "1", "--n-max", "3", "--ln-a", "e"}, "--ln-a"},
      {{"table", "--family", "multi", "--k", "1", "--n-max", "3", "--ln-a", "1", "--ln-b", "-1"}, "--ln-b"},
      {{"table", "--family", "hurwitz", "--k", "1,1", "--a-shift", "1", "--n-max", "3"}, "--a-shift"},
      {{"table", "--family", "hurwitz", "--k", "1", "--n-max", "3"}, "--a-shift"},
      {{"table", "--family", "multi", "--n-max", "3"}, "--k"},
      {{"table", "--family", "multi", "--k", "1,x", "--n-max", "3"}, "--k"},
      {{"table", "--family", "bogus", "--k", "1", "--n-max", "3"}, "--family"},
      {{"table", "--family", "multi", "--k", "1", "--n-max", "-1"}, "--n-max"},
      {{"table", "--family", "symmetrized", "--r", "1", "--n-max", "3"}, "--r"},
      {{"eval", "--family", "imatomi", "--k", "1", "--n", "2", "--poly-x"}, "--poly-x"},
      {{"table", "--family", "multi", "--k", "1"}, "--n-max"},
      {{"table", "--family", "multi", "--k", "1", "--n-max", "3", "--format", "xml"}, "--format"},
      {{"verify", "all", "--lambda", "1"}, "--lambda"},
      {{"verify", "no-such-id"}, "no-such-id"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.field);
    const auto r = cli(c.args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find(c.field) != std::string::npos);
  }
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("printed-variant failures do not change the exit code") {
  const auto r = cli({"verify", "duality-as-printed", "--n-max", "2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["identities"][0]["failures"].size() > 0);
}

TEST_CASE("verify overrides and CSV output") {
  const auto r = cli({"verify", "frobenius-euler-expansion", "--n-max", "2", "--s", "3", "--lambda", "2,-1/2",
                      "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("id,variant,cases,failures\n", 0) == 0);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
  const std::string path = "mpbern_cli_test_out.csv";
  const auto r = cli({"table", "--family", "multi", "--k", "1", "--n-max", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "n,value\n0,1\n1,1/2\n");
  std::remove(path.c_str());
  CHECK(cli({"table", "--family", "multi", "--k", "1", "--n-max", "1", "--out", "/no/such/dir/x"}).code == 2);
}
