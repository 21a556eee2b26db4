#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rbmod/cli.hpp"
#include "rbmod/errors.hpp"
#include "rbmod/module_file.hpp"

namespace fs = std::filesystem;
using namespace rbmod;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("rbmod_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kExample33 = R"({
  "n": 3,
  "A": [["0","0","0"],["0","0","1"],["0","0","0"]],
  "B": [["1","0","1"],["0","0","1"],["-1","0","-1"]]
})";

}  // namespace

TEST_CASE("verify") {
  Run r = run({"verify", write("ex33.json", kExample33)});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("valid, nilpotency index 3\n", 0) == 0);

  r = run({"verify", write("bad.json", R"({"n": 2, "A": [[0,0],[0,0]], "B": [["0","1"],["1","0"]]})")});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("invalid at entry (1,1)", 0) == 0);

  r = run({"verify", write("trunc.json", kExample33.substr(0, 40))});
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);

  r = run({"verify", write("badrat.json", R"({"n": 1, "A": [["1/0"]], "B": [["0"]]})")});
  CHECK(r.code == 2);
  CHECK(r.err.find("field A, row 1, column 1") != std::string::npos);

  r = run({"verify", write("both.json", R"({"n": 1, "a": "0", "A": [["0"]], "B": [["0"]]})")});
  CHECK(r.code == 2);

  r = run({"verify", write("shape.json", R"({"n": 2, "A": [["0","0"]], "B": [["0","0"],["0","0"]]})")});
  CHECK(r.code == 2);

  r = run({"verify", (scratch() / "missing.json").string()});
  CHECK(r.code == 2);

  r = run({"verify", write("sb.json", R"({"n": 3, "a": "2", "last_column": ["1", "1"]})")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid, nilpotency index 3\nstrictly upper triangular: yes\ndepth: 1\n");

  r = run({"--format", "json", "verify", (scratch() / "sb.json").string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["depth"] == 1);
}

TEST_CASE("construct") {
  Run r = run({"construct", "--n", "7", "--a", "0", "--last", "1,2,3,4,0,0"});
  REQUIRE(r.code == 0);
  const ModuleFile f = parse_module_file(r.out);
  REQUIRE(f.B.has_value());
  CHECK((*f.B)(0, 5) == Rational(-14));
  CHECK((*f.B)(0, 3) == Rational(4));
  CHECK(r.out.find(R"(["0", "0", "0", "4", "3", "-14", "1"])") != std::string::npos);

  // round trip into verify
  r = run({"verify", write("c7.json", r.out)});
  CHECK(r.code == 0);

  r = run({"construct", "--n", "4", "--last", "0,0,-1/2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("{-1, -1/2}") != std::string::npos);

  r = run({"construct", "--n", "2", "--last", "5"});
  REQUIRE(r.code == 0);
  CHECK(parse_module_file(r.out).B == QMatrix{{0, 5}, {0, 0}});

  CHECK(run({"construct", "--n", "3", "--last", "1,x"}).code == 2);
  CHECK(run({"construct", "--n", "3", "--last", "1"}).code == 2);
  CHECK(run({"construct", "--last", "1"}).code == 2);
  CHECK(run({"construct", "--n", "many"}).code == 2);
}

TEST_CASE("canonical") {
  const std::string d1 = write("d1.json", run({"construct", "--n", "4", "--last", "3,-2,1/2"}).out);
  Run r = run({"canonical", d1});
  CHECK(r.code == 0);
  CHECK(r.out.find("tag: Depth1\n") != std::string::npos);
  CHECK(r.out.find("kept: (1/2)\n") != std::string::npos);

  r = run({"canonical", write("zero.json", R"({"n": 3, "a": "0", "B": [[0,0,0],[0,0,0],[0,0,0]]})")});
  CHECK(r.code == 0);
  CHECK(r.out.find("tag: Zero\n") != std::string::npos);

  const std::string center_text = run({"construct", "--n", "7", "--last", "1,2,3,0,0,0"}).out;
  const std::string center = write("center.json", center_text);
  const std::string out1 = (scratch() / "center_canon.json").string();
  r = run({"canonical", center, "--out", out1});
  CHECK(r.code == 0);
  CHECK(r.out.find("tag: Center\n") != std::string::npos);
  CHECK(slurp(out1) == center_text);

  // idempotent, byte for byte
  const std::string first = (scratch() / "first.json").string();
  const std::string second = (scratch() / "second.json").string();
  REQUIRE(run({"canonical", d1, "--out", first}).code == 0);
  REQUIRE(run({"canonical", first, "--out", second}).code == 0);
  CHECK(slurp(first) == slurp(second));

  r = run({"canonical", write("ex33b.json", kExample33)});
  CHECK(r.code == 2);
  CHECK(r.err.find("decompose") != std::string::npos);

  r = run({"canonical", write("full_jordan.json", R"({"n": 2, "A": [[1,1],[0,1]], "B": [[0,3],[0,0]]})")});
  CHECK(r.code == 0);
  CHECK(r.out.find("tag: Depth1") != std::string::npos);
}

TEST_CASE("isomorphic") {
  const std::string m = write("iso_m.json", run({"construct", "--n", "4", "--last", "1,2,3"}).out);
  // conjugate by S = I + J + 2 J^2 (an element of G_4), written in full form
  const ModuleFile f = read_module_file(m);
  const QMatrix s{{1, 1, 2, 0}, {0, 1, 1, 2}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  ModuleFile g = f;
  g.B = invert(s) * *f.B * s;
  g.last_column = g.B->column(3);
  g.last_column->pop_back();
  const std::string c = write("iso_c.json", write_module_file(g));

  Run r = run({"isomorphic", m, c});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("yes\n", 0) == 0);
  CHECK(r.out.find("witness") != std::string::npos);

  const std::string b1 = write("b1.json", run({"construct", "--n", "3", "--last", "0,1"}).out);
  const std::string b2 = write("b2.json", run({"construct", "--n", "3", "--last", "0,2"}).out);
  r = run({"isomorphic", b1, b2});
  CHECK(r.code == 1);
  CHECK(r.out == "no\n");

  const std::string two = write("two.json", run({"construct", "--n", "2", "--last", "1"}).out);
  CHECK(run({"isomorphic", two, b1}).code == 1);

  // general path, with witness checked
  const std::string e1 = write("ex33c.json", kExample33);
  const QMatrix t{{1, 1, 0}, {0, 1, 0}, {1, 0, 1}};
  const RBModule moved = conjugate(load_module(read_module_file(e1)), t);
  const std::string e2 = write("ex33d.json", write_module_file(to_module_file(moved)));
  r = run({"--format", "json", "isomorphic", e1, e2});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["isomorphic"] == true);
  QMatrix phi(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) phi(i, k) = Rational::parse(j["witness"][i][k].get<std::string>());
  const ModuleFile m1 = read_module_file(e1), m2 = read_module_file(e2);
  CHECK(phi * *m1.A == *m2.A * phi);
  CHECK(phi * *m1.B == *m2.B * phi);
  CHECK_FALSE(determinant(phi).is_zero());
}

TEST_CASE("decompose") {
  const std::string in = write("dec.json", R"({"n": 3, "A": [[0,1,0],[0,0,0],[0,0,1]], "B": [[0,3,0],[0,0,0],[0,0,0]]})");
  const fs::path out = scratch() / "dec_out";
  Run r = run({"decompose", in, "--out-dir", out.string()});
  REQUIRE(r.code == 0);
  CHECK(read_module_file((out / "component_1.json").string()).n == 2);
  CHECK(read_module_file((out / "component_2.json").string()).n == 1);
  auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
  REQUIRE(manifest["components"].size() == 2);
  CHECK(manifest["components"][0]["factor"] == "x");
  CHECK(manifest["components"][0]["multiplicity"] == 2);
  CHECK(manifest["components"][1]["factor"] == "x - 1");

  const fs::path out2 = scratch() / "dec_diag";
  r = run({"decompose", write("diag.json", R"({"n": 3, "A": [[1,0,0],[0,2,0],[0,0,3]], "B": [[0,0,0],[0,0,0],[0,0,0]]})"),
           "--out-dir", out2.string()});
  REQUIRE(r.code == 0);
  for (int k = 1; k <= 3; ++k)
    CHECK(read_module_file((out2 / ("component_" + std::to_string(k) + ".json")).string()).n == 1);

  const fs::path out3 = scratch() / "dec_c4";
  r = run({"decompose",
           write("c4.json", R"({"n": 4, "A": [[0,0,0,-1],[1,0,0,0],[0,1,0,0],[0,0,1,0]], "B": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})"),
           "--out-dir", out3.string()});
  REQUIRE(r.code == 0);
  manifest = nlohmann::json::parse(slurp(out3 / "manifest.json"));
  REQUIRE(manifest["components"].size() == 1);
  CHECK(manifest["components"][0]["irreducibility"] == "irreducibility not certified");
  CHECK(r.out.find("irreducibility not certified") != std::string::npos);
}

TEST_CASE("nf") {
  CHECK(run({"nf", "y*x"}).out == "x*y - y^2\n");
  CHECK(run({"nf", "x^2*y - y*x^2 - 2*y*x*y"}).out == "0\n");
  CHECK(run({"nf", "x + 1"}).out == "x + 1\n");
  const Run r = run({"nf", "x**y"});
  CHECK(r.code == 2);
  CHECK(r.err.find("    ^") != std::string::npos);
}

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(r.out.find("MidDepth depth 2 (0,d,c,0,0), c ≠ 0") != std::string::npos);

  r = run({"enumerate", "--n", "1"});
  CHECK(r.out == "Zero depth 1 (0)\n");

  r = run({"enumerate", "--n", "2"});
  CHECK(r.out == "Depth1 depth 1 (b,0), b ∉ {0}\nZero depth 2 (0,0)\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--format", "xml", "nf", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
