#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
  bool has(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BBGKIT_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze") {
  Run t = run("analyze trefoil");
  CHECK(t.code == 0);
  CHECK(t.has("vertices: 6\nedges: 9\ntriangles: 4\n"));
  CHECK(t.has("H1: rank 0"));
  CHECK(t.has("biconnected: yes"));

  Run c = run("analyze c4");
  CHECK(c.has("H1: rank 1"));
  CHECK(c.has("NOT_SIMPLY_CONNECTED"));
  CHECK(run("analyze k4").has("dimension: 3"));

  auto doc = nlohmann::json::parse(run("analyze trefoil --json").out);
  CHECK(doc["vertices"] == 6);
}

TEST_CASE("recognize") {
  Run t = run("recognize trefoil");
  CHECK(t.code == 0);
  CHECK(t.has("NOT_RAAG_NOT_ARTIN"));
  CHECK(t.has("redundant triangle {2,3,5}"));

  Run a = run("recognize fig6a");
  CHECK(a.has("RAAG"));
  CHECK(a.has("dual graph: 5 vertices, 4 edges"));
  CHECK(run("recognize cone:trefoil").has("dual graph: 6 vertices, 9 edges"));

  auto doc = nlohmann::json::parse(run("recognize trefoil --json").out);
  CHECK(doc["status"] == "NOT_RAAG_NOT_ARTIN");
  CHECK(run("recognize trefoil --json").out == run("--seed 0 recognize trefoil --json").out);
}

TEST_CASE("bns") {
  Run t = run("bns trefoil");
  CHECK(t.code == 0);
  CHECK(t.has("3 missing subspheres"));
  CHECK(run("bns extended_trefoil").has("4 missing subspheres"));

  Run m = run("bns trefoil --character 1,1,5,7,9");
  CHECK(m.has("NOT_IN_SIGMA, dead separator {2,3}"));
  CHECK(run("bns trefoil --character 1,2,4,8,16").has("IN_SIGMA\n"));
  CHECK(run("bns trefoil --character 1/2,0.5,1,1,1").has("NOT_IN_SIGMA"));

  auto doc = nlohmann::json::parse(run("bns trefoil --json").out);
  CHECK(doc["subspheres"].size() == 3);
  CHECK(doc["coordinates"].size() == 5);

  Run custom = run("bns trefoil --tree '2>5,3>5,5>4,5>6,1>3'");
  CHECK(custom.code == 0);
  CHECK(custom.has("3 missing subspheres"));
  CHECK(run("bns trefoil --tree '2>5,3>5'").code == 2);
  CHECK(run("bns trefoil --character 1,2").code == 2);
  CHECK(run("bns trefoil --character 0,0,0,0,0").code == 2);
}

TEST_CASE("spanner and presentation") {
  Run s = run("spanner fig5_bouquet");
  CHECK(s.code == 0);
  CHECK(s.has("tree 2-spanner found"));
  CHECK(run("spanner trefoil").has("no tree 2-spanner"));
  CHECK(run("spanner fig6a --dot").has("red"));

  Run p = run("presentation trefoil --kind tree");
  CHECK(p.has("< e1, e2, e3, e4, e5 | [e1 e2^-1, e5^-1], [e1, e2], [e1, e3], [e2, e4] >"));
  CHECK(p.has("abelianization rank 5"));
  CHECK(run("presentation fig6a --kind raag").has("abelianization rank 5"));
  CHECK(run("presentation trefoil --kind raag").code == 3);  // no tree 2-spanner
  CHECK(run("presentation c4 --kind dl").code == 3);
  CHECK(run("presentation trefoil --kind nope").code == 2);
}

TEST_CASE("odd contraction reads weighted JSON") {
  const std::string path = "bbgkit_cli_weights.json";
  {
    std::ofstream f(path);
    f << R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]], "weights": {"a-b": 3, "b-c": 2}})";
  }
  Run r = run("contract " + path);
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"] == nlohmann::json::array({"{a,b}", "{c}"}));
  CHECK(doc["edges"].size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run("recognize nope").code == 2);
  CHECK(run("analyze /nonexistent/graph.json").code == 2);
  CHECK(run("bns fig9_right").code == 3);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("fixtures").has("trefoil"));
}

TEST_CASE("reproduction suite subcommand passes") {
  Run r = run("paper-suite");
  CHECK(r.code == 0);
  CHECK(r.has("all 10 passed"));
}
