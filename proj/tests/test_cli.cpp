#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "abfactor/graph6.hpp"
#include "cli.hpp"

using abfactor::cli::run;
using json = nlohmann::ordered_json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> keys(const json& j) {
  std::vector<std::string> out;
  for (const auto& item : j.items()) out.push_back(item.key());
  return out;
}

}  // namespace

TEST_CASE("decide") {
  const Result r = call({"decide", "--graph6", "Bw", "--a", "1", "--b", "2"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"tool", "version", "config", "config_hash", "result"});
  CHECK(j["tool"] == "abfactor");
  CHECK(j["result"]["has_factor"] == true);
  CHECK(j["result"]["witness"]["degrees"] == json::array({2, 2, 2}));
  CHECK(j["config"]["command"] == "decide");
  CHECK(j["config"]["params"]["a"] == 1);

  const Result none = call({"decide", "--graph6", "Bw", "--a", "3", "--b", "3"});
  CHECK(none.status == 0);
  CHECK(json::parse(none.out)["result"]["has_factor"] == false);

  const Result parts = call({"decide", "--graph6", abfactor::to_graph6(abfactor::complete_bipartite_graph(2, 5)),
                             "--parts", "2", "5", "--a", "1", "--b", "2"});
  REQUIRE(parts.status == 0);
  const json pj = json::parse(parts.out)["result"];
  CHECK(pj["has_factor"] == false);
  CHECK(pj["backends"]["flow"] == false);
  CHECK(pj["backends"]["backtracking"] == false);
  CHECK(pj["backends"]["criterion"] == false);
  CHECK(pj["violation"]["deficiency"] == -1);
}

TEST_CASE("bound and verify") {
  const Result b = call({"bound", "--theorem", "1.1", "--n", "6", "--a", "2", "--b", "2"});
  REQUIRE(b.status == 0);
  const json bj = json::parse(b.out)["result"];
  CHECK(bj["bound"]["integer"] == 11);
  CHECK(bj["extremal"][0]["name"] == "K_{1}∨(K_{4}∪K_{1})");

  const Result v = call({"verify", "--target", "1.2", "--n", "6", "--a", "2", "--b", "3"});
  REQUIRE(v.status == 0);
  const json report = json::parse(v.out)["report"];
  CHECK(keys(report) == std::vector<std::string>{"target", "params", "brute_value", "brute_extremal",
                                                 "formula_value", "formula_extremal", "case_label", "verdict",
                                                 "counterexample", "notes", "stats"});
  CHECK(report["verdict"] == "pass");
  CHECK(std::abs(report["brute_value"].get<double>() - 4.0513742417) < 1e-9);

  const Result p = call({"verify", "--target", "1.1", "--params", "n=6", "a=2", "b=2"});
  CHECK(p.status == 0);
  CHECK(json::parse(p.out)["report"]["brute_value"] == 11);
}

TEST_CASE("exit codes") {
  CHECK(call({"decide", "--graph6", "Bw", "--a", "2", "--b", "1"}).status == 2);
  CHECK(call({"decide", "--graph6", "B", "--a", "1", "--b", "1"}).status == 2);
  CHECK(call({"decide", "--a", "1", "--b", "1"}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"bound", "--theorem", "1.1", "--n", "6", "--a", "2", "--b", "2", "--z", "1"}).status == 2);
  CHECK(call({"bound", "--theorem", "1.1", "--params", "n=6", "a=2", "b=2", "zz=1"}).status == 2);
  CHECK(call({"bound", "--theorem", "1.1", "--params", "n=six"}).status == 2);
  CHECK(call({"verify", "--target", "1.1", "--n", "5", "--a", "1", "--b", "1"}).status == 2);
  CHECK(call({"verify", "--target", "1.2", "--n", "8", "--a", "2", "--b", "2"}).status == 3);
  CHECK(call({"batch", "--suite", "nightly"}).status == 2);
  const Result help = call({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("decide") != std::string::npos);
}

TEST_CASE("construct round trip") {
  for (const std::vector<std::string>& family :
       {std::vector<std::string>{"--family", "petersen"},
        {"--family", "threshold_extremal", "--n", "7", "--a", "3"},
        {"--family", "double_nested", "--ps", "1,3", "--qs", "4,1"},
        {"--family", "near_complete_bipartite", "--p", "3", "--q", "4", "--e", "10"}}) {
    std::vector<std::string> args{"construct"};
    args.insert(args.end(), family.begin(), family.end());
    args.insert(args.end(), {"--format", "graph6"});
    const Result c = call(args);
    REQUIRE(c.status == 0);
    const std::string code = c.out.substr(0, c.out.size() - 1);
    CHECK(abfactor::to_graph6(abfactor::from_graph6(code)) == code);
    const Result d = call({"decide", "--graph6", code, "--a", "1", "--b", "1"});
    REQUIRE(d.status == 0);
    CHECK(json::parse(d.out)["result"]["graph"]["graph6"] == code);
  }
  const Result json_out = call({"construct", "--family", "double_nested", "--ps", "1,3", "--qs", "4,1"});
  CHECK(json::parse(json_out.out)["result"]["parts"] == json::array({4, 5}));
}

TEST_CASE("csv output") {
  const Result v = call({"verify", "--target", "1.1", "--n", "6", "--a", "2", "--b", "2", "--format", "csv"});
  REQUIRE(v.status == 0);
  std::istringstream lines(v.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header ==
        "target,params,verdict,brute_value,formula_value,case_label,brute_extremal,counterexample,graphs_scanned,"
        "factor_decisions,wall_time_ms");
  CHECK(row.rfind("1.1,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
}

TEST_CASE("output file and config hash") {
  const std::string path = "cli_test_output.json";
  std::remove(path.c_str());
  const Result r = call({"spectral", "--graph6", "Bw", "--output", path});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json file = json::parse(in);
  CHECK(std::abs(file["result"]["radius"].get<double>() - 2.0) < 1e-12);
  std::remove(path.c_str());

  const json first = json::parse(call({"spectral", "--graph6", "Bw"}).out);
  const json second = json::parse(call({"spectral", "--graph6", "Bw"}).out);
  const json other = json::parse(call({"spectral", "--graph6", "Bw", "--tol", "1e-10"}).out);
  CHECK(first["config_hash"] == second["config_hash"]);
  CHECK(first["config_hash"] != other["config_hash"]);
}
