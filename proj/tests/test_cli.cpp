#include "doctest.h"

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ecctree/canonical.hpp"
#include "ecctree/edge_list.hpp"
#include "oracles.hpp"

using namespace ecctree;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ECCTREE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(ECCTREE_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

// Drops "#" comment lines.
std::string body(const std::string& edge_list) {
  std::istringstream in(edge_list);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("validate") {
  auto a = run("validate 1,2,2,2");
  CHECK(a.status == 0);
  CHECK(a.out == "VALID 1;3\n");

  auto b = run("validate 2,2,2,3,3");
  CHECK(b.status == 1);
  CHECK(b.out == "INVALID CenterCondition\n");

  auto c = run("validate '4;4,3,4'");
  CHECK(c.status == 0);
  CHECK(c.out == "VALID 4;4,3,4\n");

  CHECK(run("validate 'x;y'").status == 2);
  CHECK(run("validate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("build") {
  auto p4 = run("build '2;2'");
  CHECK(p4.status == 0);
  CHECK(body(p4.out) == "4\n0 1\n1 2\n2 3\n");

  auto cat = run("build '4;4,3,4'");
  CHECK(cat.status == 0);
  auto t = parse_edge_list(cat.out);
  CHECK(t.order() == 13);
  CHECK(t.size() == 12);
  CHECK(is_isomorphic(t, oracle::caterpillar_4434()));

  auto tdn = run("build --tdn 11 7");
  CHECK(tdn.status == 0);
  CHECK(is_isomorphic(parse_edge_list(tdn.out), oracle::pair_11_7_first()));

  auto t2 = run("build --counterexample 11 7 --pick 2");
  CHECK(t2.status == 0);
  CHECK(is_isomorphic(parse_edge_list(t2.out), oracle::pair_11_7_second()));

  auto both = run("build --counterexample 11 7");
  CHECK(both.status == 0);
  CHECK(body(both.out).size() == body(tdn.out).size() * 2);

  CHECK(run("build '3;2'").status == 1);
  CHECK(run("build --counterexample 7 5").status == 1);
  CHECK(run("build '2;2' --tdn 5 3").status == 2);
  CHECK(run("build").status == 2);
}

TEST_CASE("index") {
  auto p4 = tmp_file("p4.txt", "4\n0 1\n1 2\n2 3\n");
  auto p3 = tmp_file("p3.txt", "3\n0 1\n1 2\n");

  CHECK(run("index " + p4 + " wiener").out == "10\n");
  CHECK(run("index " + p3 + " harary").out == "5/2\n");
  CHECK(run("index " + p4 + " steiner:4").out == "3\n");
  CHECK(run("index " + p4 + " genw:2.5").out == "29.9021657671\n");

  auto all = run("index " + p4 + " steiner --all-k");
  CHECK(all.status == 0);
  CHECK(all.out == "k=1 SW=0\nk=2 SW=10\nk=3 SW=10\nk=4 SW=3\n");

  CHECK(run("index " + p4 + " steiner:5").status == 1);
  CHECK(run("index " + p4 + " wiener --all-k").status == 2);
  CHECK(run("index " + p4 + " bogus").status == 2);

  auto cyclic = tmp_file("cycle.txt", "4\n0 1\n1 2\n0 2\n");
  CHECK(run("index " + cyclic + " wiener").status == 1);
  auto garbage = tmp_file("garbage.txt", "4\n0 one\n");
  CHECK(run("index " + garbage + " wiener").status == 2);
  CHECK(run("index /nonexistent/file wiener").status == 2);
}

TEST_CASE("build output round-trips through index and transform") {
  auto built = run("build '4;4,3,4'");
  auto path = tmp_file("t4434.txt", built.out);
  CHECK(run("index " + path + " wiener").out == "250\n");

  // Re-serializing the parsed tree reproduces the body byte for byte.
  CHECK(to_edge_list(parse_edge_list(built.out)) == body(built.out));

  auto again = run("random --order 15 --seed 9");
  CHECK(again.status == 0);
  CHECK(to_edge_list(parse_edge_list(again.out)) == body(again.out));
  CHECK(run("random --order 15 --seed 9").out == again.out);

  auto mate = run("transform " + path + " mate");
  CHECK(mate.status == 1);
}

TEST_CASE("transform") {
  auto spider = tmp_file("spider222.txt", to_edge_list(oracle::spider(3, 2)));
  auto mate = run("transform " + spider + " mate");
  CHECK(mate.status == 0);
  CHECK(mate.out.rfind("# mate:", 0) == 0);
  auto t = parse_edge_list(mate.out);
  CHECK(is_caterpillar(t));
  CHECK(oracle::sorted_eccentricities(t) == oracle::sorted_eccentricities(oracle::spider(3, 2)));

  auto cat = run("transform " + spider + " caterpillarize");
  CHECK(cat.status == 0);
  CHECK(cat.out.find("steps=1") != std::string::npos);

  auto red = run("transform --seq '4;4,3,4' seq-reduce");
  CHECK(red.status == 0);
  CHECK(body(red.out) == "4;4,5,2\n");

  auto from_file = run("transform " + spider + " seq-reduce");
  CHECK(body(from_file.out) == "2;4,2\n");

  CHECK(run("transform --seq '4;5,2,2' seq-reduce").status == 1);
  CHECK(run("transform " + spider + " twist").status == 2);
}

TEST_CASE("profile") {
  auto cat = tmp_file("t4434_profile.txt", to_edge_list(oracle::caterpillar_4434()));
  auto p = run("profile " + cat);
  CHECK(p.status == 0);
  CHECK(p.out.find("radius 4\n") != std::string::npos);
  CHECK(p.out.find("diameter 7\n") != std::string::npos);
  CHECK(p.out.find("sequence 4;4,3,4\n") != std::string::npos);
  CHECK(p.out.find("caterpillar yes\n") != std::string::npos);
  CHECK(p.out.find("canonical " + canonical_form(oracle::caterpillar_4434()).hex()) != std::string::npos);
}

TEST_CASE("verify") {
  auto json_path = std::string(ECCTREE_TEST_TMP) + "/verify8.json";
  auto w = run("verify --order 8 --index wiener --json " + json_path);
  CHECK(w.status == 0);
  std::ifstream in(json_path);
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["tree_count"] == 23);
  std::size_t total = 0;
  for (const auto& c : doc["classes"]) total += c["size"].get<std::size_t>();
  CHECK(total == 23);

  auto pair = run("verify --order 11 --diameter 7 --index steiner:8 --json -");
  CHECK(pair.status == 0);
  auto d = nlohmann::json::parse(pair.out);
  CHECK(d["diameter"] == 7);
  CHECK(d["classes"][0]["flags"]["unique"] == false);
  CHECK(d["classes"][0]["attainers"].size() >= 2);

  auto flt = run("verify --order 8 --index genw:2.5 --jobs 2");
  CHECK(flt.status == 0);
  CHECK(flt.out.find(" tie=") != std::string::npos);

  CHECK(run("verify --order 20 --index wiener").status == 1);
  CHECK(run("verify --order 8 --index steiner:8").status == 1);
  CHECK(run("verify --index wiener").status == 2);
}
