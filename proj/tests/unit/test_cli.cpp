#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result glp_run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = glp::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide") {
  auto r = glp_run({"decide", "<0><1>T -> <0>T"});
  CHECK(r.code == 0);
  CHECK(r.out == "provable\n");
  r = glp_run({"decide", "<0>T -> <0><0>T"});
  CHECK(r.code == 1);
  CHECK(r.out == "not provable\n");
  CHECK(glp_run({"decide", "-o", "int", "<10>T -> <-5>T"}).code == 0);
  CHECK(glp_run({"-o", "int", "decide", "<10>T -> <-5>T"}).code == 0);
}

TEST_CASE("worm verbs") {
  CHECK(glp_run({"nf", "<1><0><0>T"}).out == "<1>T\n");
  CHECK(glp_run({"worm", "nf", "201"}).out == "<2>T\n");
  CHECK(glp_run({"worm", "compare", "--alpha", "1", "1", "2"}).out == "Lt\n");
  CHECK(glp_run({"compare", "0", "00"}).out == "Lt\n");
  CHECK(glp_run({"conj", "1", "0"}).out == "<1><0>T\n");
  CHECK(glp_run({"-o", "int", "nf", "<4><-1><-1>T"}).out == "<4>T\n");
  CHECK(glp_run({"-o", "int", "compare", "<4>T", "<9>T"}).out == "Lt\n");
  CHECK(glp_run({"-o", "int", "compare", "--alpha", "4", "<4>T", "<9>T"}).out == "Lt\n");
  CHECK(glp_run({"worm", "compare", "--alpha", "1", "1", "01"}).code == 2);
}

TEST_CASE("bcw, wnf and reduce") {
  CHECK(glp_run({"bcw", "<0>~<0>T"}).out == "<0>T\n");
  CHECK(glp_run({"wnf", "<1>T -> <0>T"}).out == "<1>T -> <0>T\n");
  CHECK(glp_run({"wnf", "T"}).out == "T\n");
  auto r = glp_run({"reduce", "<3>T -> <7>T"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hat: <0>T -> <1>T\nmap: 0 -> 3, 1 -> 7\ntarget: ") == 0);
  CHECK(glp_run({"reduce", "--mplus", "[0]F & [2]F"}).out.find("[1]F") != std::string::npos);
}

TEST_CASE("countermodels and model files") {
  auto r = glp_run({"countermodel", "<0>T -> <0><0>T"});
  CHECK(r.code == 1);
  CHECK(r.out == "refuted at x\n{\"worlds\":[\"x\",\"y\"],\"relations\":{\"0\":[[\"x\",\"y\"]]}}\n");
  CHECK(glp_run({"countermodel", "--max-worlds", "3", "<0><1>T -> <0>T"}).code == 0);
  CHECK(glp_run({"countermodel", "--max-worlds", "9", "T"}).code == 2);

  auto path = std::filesystem::temp_directory_path() / "glp_cli_model.json";
  std::ofstream(path) << R"({"worlds":["x","y"],"relations":{"0":[["x","y"]]}})";
  r = glp_run({"check-model", path.string(), "<0>T"});
  CHECK(r.code == 1);
  CHECK(r.out == "refuted at y\n");
  CHECK(glp_run({"check-model", path.string(), "[3]F"}).out == "valid\n");
  CHECK(glp_run({"check-model", path.string()}, "<0>T | [0]F\n[0]F\n").code == 1);
  std::ofstream(path) << R"({"worlds":["x","y","z"],"relations":{"0":[["x","z"]],"1":[["x","y"]]}})";
  r = glp_run({"check-model", path.string()}, "");
  CHECK(r.code == 2);
  CHECK(r.err.find("FrameViolation") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(glp_run({"check-model", "/nonexistent/model.json", "T"}).code == 2);
  CHECK(glp_run({"check-model", "/nonexistent/model.json"}, "T\n").code == 2);
}

TEST_CASE("json output") {
  auto r = glp_run({"--json", "decide", "<0>T -> <0><0>T"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "decide");
  CHECK(j["provable"] == false);
  CHECK(j["witness"] == 0);
  CHECK(j["ast"]["kind"] == "imp");
  CHECK(j["ast"]["children"][0]["modal"] == "0");

  r = glp_run({"--json", "decide", "<0>T ->"});
  CHECK(r.code == 2);
  j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["kind"] == "ParseError");
  CHECK(j["error"]["position"] == 7);
}

TEST_CASE("errors and guards") {
  auto r = glp_run({"decide", "<0>p"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotClosed") != std::string::npos);
  CHECK(glp_run({"decide", "<x>T"}).code == 2);
  CHECK(glp_run({"frobnicate"}).code == 2);
  CHECK(glp_run({}).code == 2);
  CHECK(glp_run({"--help"}).code == 0);

  std::string big = "T";
  for (int i = 0; i < 250; ++i) big = "~" + big;
  r = glp_run({"decide", big});
  CHECK(r.code == 2);
  CHECK(r.err.find("GuardExceeded") != std::string::npos);
  CHECK(glp_run({"--guard", "500", "decide", big}).code == 0);
}

TEST_CASE("batch mode") {
  auto r = glp_run({"decide"}, "<0><1>T -> <0>T\n\n<0>T -> <0><0>T\n");
  CHECK(r.code == 1);
  CHECK(r.out == "provable\nnot provable\n");
  r = glp_run({"decide"}, "T\n<0>(\n");
  CHECK(r.code == 2);
  CHECK(glp_run({"conj"}, "1 0\n").out == "<1><0>T\n");
  CHECK(glp_run({"--json", "nf"}, "100\n201\n").out.find('\n') < 200);
}

TEST_CASE("order from the environment") {
  setenv("GLP_ORDER", "int", 1);
  CHECK(glp_run({"decide", "<10>T -> <-5>T"}).code == 0);
  unsetenv("GLP_ORDER");
  CHECK(glp_run({"decide", "<10>T -> <-5>T"}).code == 2);
}
