#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kWork = fs::temp_directory_path() / "stringob_cli_test";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt";
  std::string cmd = std::string(STRINGOB_CLI) + " " + args + " > " + out.string() + " 2> " + (kWork / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& text) {
  fs::create_directories(kWork);
  fs::path p = kWork / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("gen") {
  Run r = run("gen heawood");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["edges"].size() == 21);
  CHECK(json::parse(run("gen complete 5").out)["edges"].size() == 10);
  json c7 = json::parse(run("gen c_cbar 7").out);
  CHECK(c7["n"] == 28);
  CHECK(c7["edges"].size() == 7 * 4 / 2 + 28);
  CHECK(run("gen nonsense").code == 2);
}

TEST_CASE("obstruction") {
  Run h = run("obstruction heawood --pairs s");
  REQUIRE(h.code == 0);
  json hj = json::parse(h.out);
  CHECK(hj["vanishes"] == false);
  CHECK(hj["kind"] == "s");

  Run fig = run("obstruction heawood --pairs s --layout figure");
  CHECK(json::parse(fig.out)["odd_pairs"] == 7);

  CHECK(json::parse(run("obstruction gp --pairs s").out)["vanishes"] == true);
  CHECK(json::parse(run("obstruction complete 5 --pairs delta").out)["vanishes"] == false);
  CHECK(json::parse(run("obstruction complete 5 --pairs delta --mode integer").out)["mode"] == "integer");

  std::string graph = write("k33.json", run("gen complete_bipartite 3 3").out);
  CHECK(run("obstruction " + graph + " --pairs delta --expect obstructed").code == 0);
  CHECK(run("obstruction " + graph + " --pairs delta --expect vanishes").code == 1);

  std::string svg = (kWork / "h.svg").string();
  CHECK(run("obstruction heawood --layout figure --svg " + svg).code == 0);
  CHECK(fs::file_size(svg) > 100);

  CHECK(run("obstruction heawood --pairs nope").code == 2);
  CHECK(run("obstruction grid 3 3 --layout figure").code == 2);
  CHECK(run("obstruction " + write("broken.json", "{\"n\": 2, ") ).code == 2);
}

TEST_CASE("strings") {
  std::string good = write("k2.json", R"({"n": 2, "edges": [[0, 1]],
    "curves": [[["0/1","0/1"],["2/1","2/1"]], [["0/1","2/1"],["2/1","0/1"]]]})");
  std::string bad = write("k2_bad.json", R"({"n": 2, "edges": [[0, 1]],
    "curves": [[["0/1","0/1"],["2/1","2/1"]], [["3/1","0/1"],["5/1","0/1"]]]})");
  CHECK(run("strings verify " + good).code == 0);
  Run b = run("strings verify " + bad);
  CHECK(b.code == 1);
  CHECK(json::parse(b.out)["violations"].size() == 1);

  std::string drawing = (kWork / "k2_star.json").string();
  CHECK(run("strings to-drawing " + good + " -o " + drawing).code == 0);
  std::string graph = write("k2_graph.json", R"({"n": 2, "edges": [[0, 1]]})");
  Run back = run("strings from-drawing " + drawing + " --graph " + graph);
  CHECK(back.code == 0);
  std::string rep = write("k2_back.json", back.out);
  CHECK(run("strings verify " + rep).code == 0);
  CHECK(run("strings to-drawing " + bad).code == 1);
  CHECK(run("strings from-drawing " + drawing).code == 2);
}

TEST_CASE("corpus") {
  std::string spec = write("spec.json", R"({"seed": 5, "count": 12, "n_range": [4, 9],
    "edge_probability": [0.3, 0.5], "checks": ["ob_eq_equivalence", "integer_vs_mod2"]})");
  Run r = run("corpus " + spec);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["instances"] == 12);
  CHECK(run("corpus " + write("badspec.json", R"({"checks": ["x"]})")).code == 2);
}
