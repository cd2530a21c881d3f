#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "torelli/cli.hpp"
#include "torelli/epsilon.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = torelli::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word eps: text and JSON forms") {
  CliResult text = run({"word", "eps", "-g", "1", "z1 z2"});
  CHECK(text.code == 0);
  CHECK(text.out == "e1 - e2\n");

  CliResult js = run({"word", "eps", "-g", "1", "--json", "z1 z2"});
  CHECK(js.code == 0);
  CHECK(js.out ==
        "{\"inputs\":{\"command\":\"word eps\",\"g\":1,\"rank\":3,"
        "\"word\":\"z1 z2\"},\"result\":[1,-1,0]}\n");
  json parsed = json::parse(js.out);
  CHECK(parsed["result"] == json::parse("[1,-1,0]"));
  CHECK(parsed["inputs"]["command"] == "word eps");
}

TEST_CASE("identical invocations are byte-identical") {
  auto args = std::vector<std::string>{"word", "factor", "-g", "2", "--json",
                                       "z3 z1 z2 z1 z1^-1 z3^-1 z1^-1 z2^-1"};
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("word reduce prints <id> for the identity in text mode") {
  CliResult r = run({"word", "reduce", "-g", "1", "z1 z1^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "<id>\n");
  CliResult js = run({"word", "reduce", "-g", "1", "--json", "z1 z1^-1"});
  CHECK(json::parse(js.out)["result"] == "");
}

TEST_CASE("word kernel and split") {
  CHECK(run({"word", "kernel", "-g", "1", "z1 z1"}).out == "true\n");
  CHECK(run({"word", "kernel", "-g", "1", "z1 z2"}).out == "false\n");
  CliResult s = run({"word", "split", "-g", "1", "z2 z1"});
  CHECK(s.out == "k = <id>\nv = -e1 + e2\n");
}

TEST_CASE("JSON word strings round-trip through the grammar") {
  using torelli::Word;
  CliResult js =
      run({"word", "split", "-g", "1", "--json", "z1 z3 z2 z1 z1 z1"});
  json parsed = json::parse(js.out);
  Word original = Word::parse("z1 z3 z2 z1 z1 z1", 3);
  Word k = Word::parse(parsed["result"]["k"].get<std::string>(), 3);
  std::vector<long long> coords;
  for (const auto& c : parsed["result"]["v"])
    coords.push_back(c.get<long long>());
  torelli::BalancedVector v(1, coords);
  CHECK(k * torelli::section(v) == original);
}

TEST_CASE("word factor: one-entry factorization, verified") {
  CliResult r = run({"word", "factor", "-g", "1", "z1 z1"});
  CHECK(r.code == 0);
  CHECK(r.out == "conj=<id> gen=sq:1 exp=+1\nverified: true\n");

  CliResult js = run({"word", "factor", "-g", "1", "--json", "z1 z1"});
  json parsed = json::parse(js.out);
  CHECK(parsed["result"]["verified"] == true);
  REQUIRE(parsed["result"]["factorization"].size() == 1);
  CHECK(parsed["result"]["factorization"][0]["gen"] == "sq:1");
  CHECK(parsed["result"]["factorization"][0]["conj"] == "");
  CHECK(parsed["result"]["factorization"][0]["exp"] == 1);
}

TEST_CASE("word enum respects the bound") {
  CliResult r = run({"word", "enum", "-g", "1", "--max-len", "2"});
  CHECK(r.code == 0);
  // identity + 30 two-letter words
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 31);
  CHECK(r.out.substr(0, 5) == "<id>\n");
}

TEST_CASE("word schreier emits kernel generators") {
  CliResult js = run({"word", "schreier", "-g", "1", "--radius", "0", "--json"});
  json parsed = json::parse(js.out);
  CHECK(parsed["result"].size() > 0);
  bool found = false;
  for (const auto& s : parsed["result"]) found = found || s == "z1 z1";
  CHECK(found);
}

TEST_CASE("braid kernel reports the -I obstruction") {
  CliResult r = run({"braid", "kernel", "-n", "3", "s1 s2 s1 s2 s1 s2"});
  CHECK(r.code == 0);
  CHECK(r.out == "false (image = -I)\n");
  CliResult yes =
      run({"braid", "kernel", "-n", "3", "s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"});
  CHECK(yes.out == "true\n");
  CliResult impure = run({"braid", "kernel", "-n", "3", "s1"});
  CHECK(impure.out == "false (not pure)\n");
}

TEST_CASE("braid burau and eval") {
  CliResult r = run({"braid", "burau", "-n", "3", "s1"});
  CHECK(r.out == "[-t, 1]\n[0, 1]\n");
  CliResult js = run({"braid", "burau", "-n", "3", "--json", "s1"});
  json parsed = json::parse(js.out);
  CHECK(parsed["result"]["dim"] == 2);
  CHECK(parsed["result"]["entries"][0][0] == json::parse("[[1,-1]]"));

  CliResult ev = run({"braid", "eval", "-n", "3", "s1 s2 s1 s2 s1 s2"});
  CHECK(ev.out == "[-1, 0]\n[0, -1]\n");
}

TEST_CASE("braid perm and center; -g derives the strand count") {
  CliResult p = run({"braid", "perm", "-n", "3", "s1"});
  CHECK(p.out == "(1 2)\npure: false\n");
  CliResult c = run({"braid", "center", "-g", "1"});
  CHECK(c.out == "s1 s2 s1 s2 s1 s2\n");
}

TEST_CASE("action subcommands") {
  CliResult fix = run({"action", "fix", "-g", "1", "z1 z1"});
  CHECK(fix.out == "true\n");
  CliResult beta =
      run({"action", "matrix", "-g", "1", "--beta", "3", "z1 z2"});
  CHECK(beta.out == "-2b1 + 2b2 + b3\n");
  CliResult m = run({"action", "matrix", "-g", "1", "z1"});
  CHECK(m.out == "[-1, -2, -2]\n[0, 1, 0]\n[0, 0, 1]\n");
}

TEST_CASE("domain errors exit 1 with a message on stderr") {
  CliResult odd = run({"word", "eps", "-g", "1", "z1"});
  CHECK(odd.code == 1);
  CHECK(odd.out.empty());
  CHECK(odd.err.find("even") != std::string::npos);

  CliResult nonkernel = run({"word", "factor", "-g", "1", "z1 z2"});
  CHECK(nonkernel.code == 1);

  CliResult badword = run({"word", "eps", "-g", "1", "z9"});
  CHECK(badword.code == 1);
  CHECK(badword.err.find("token") != std::string::npos);

  CliResult badpoint =
      run({"braid", "eval", "-n", "3", "--at", "0", "s1 s1^-1"});
  CHECK(badpoint.code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"word", "eps", "z1 z2"}).code == 2);       // missing -g
  CHECK(run({"word", "eps", "-g", "0", "z1"}).code == 2);  // g out of range
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"word"}).code == 2);  // missing sub-subcommand
  CHECK(run({"braid", "kernel", "s1"}).code == 2);  // neither -n nor -g
}

TEST_CASE("help exits 0") {
  CliResult h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("word") != std::string::npos);
}
