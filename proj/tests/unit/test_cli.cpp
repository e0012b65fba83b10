#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "gcat/cli.hpp"
#include "gcat/corpus.hpp"
#include "gcat/error.hpp"
#include "gcat/io.hpp"

using namespace gcat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

fs::path corpus_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("gcat_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(d);
    cli::write_corpus(d);
    return d;
  }();
  return dir;
}

std::string at(const std::string& name) { return (corpus_dir() / name).string(); }

}  // namespace

TEST_CASE("corpus files reload") {
  io::Workspace ws;
  ws.add_directory(corpus_dir());
  int complexes = 0;
  for (const auto& e : fs::directory_iterator(corpus_dir())) {
    const auto p = e.path();
    if (p.extension() == ".facts") {
      std::ifstream in(p);
      FactStore s;
      CHECK_NOTHROW(io::read_facts(in, s, ws));
      CHECK(!s.facts().empty());
      continue;
    }
    auto j = io::read_json_file(p);
    if (j.contains("maximal_simplices")) {
      auto x = io::complex_from_json(j);
      CHECK(x.name() == p.stem().string());
      ++complexes;
    } else if (j.contains("vertex_map")) {
      CHECK_NOTHROW(io::map_from_json(j, ws));
    } else if (j.contains("pieces")) {
      CHECK_NOTHROW(io::cover_from_json(j, ws));
    } else {
      CHECK_NOTHROW(io::bundle_from_json(j, ws));
    }
  }
  CHECK(complexes == 10);
  auto t = io::complex_from_json(io::read_json_file(at("torus.json")));
  CHECK(euler_characteristic(t) == 0);
  auto g = io::complex_from_json(io::read_json_file(at("genus2.json")));
  auto h = abelianization(edge_path_presentation(g, 0).group);
  CHECK(h.rank == 4);
  CHECK(h.torsion.empty());
}

TEST_CASE("complex io round trip") {
  for (const auto& x : corpus::complexes()) {
    auto y = io::complex_from_json(io::to_json(x));
    CHECK(y == x);
    CHECK(y.name() == x.name());
  }
  io::json strict = {{"name", "s"}, {"vertex_count", 3}, {"simplices", {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}}}};
  CHECK(io::complex_from_json(strict) == corpus::circle());
  io::json miscount = {{"name", "s"}, {"vertex_count", 4}, {"maximal_simplices", {{0, 1}}}};
  CHECK_THROWS_AS(io::complex_from_json(miscount), MalformedInput);
}

TEST_CASE("cli examples") {
  auto r = run({"cat", "upper", at("circle.json"), "--class", "amenable", "--strategy", "greedy"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1\n", 0) == 0);

  r = run({"certify", "--goal", "simvol_zero(torus)", "--facts", at("torus.facts")});
  CHECK(r.code == 0);
  CHECK(r.out.find("R1") != std::string::npos);
  CHECK(r.out.find("R3") != std::string::npos);

  auto broken = corpus_dir() / "broken.json";
  std::ofstream(broken) << R"({"name": "broken", "vertex_count": 3, "simplices": [[0], [1], [2], [0, 1, 2]]})";
  r = run({"validate", broken.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("face closure") != std::string::npos);

  r = run({"frobnicate"});
  CHECK(r.code == 3);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"validate", at("genus2.json")}).code == 0);
  CHECK(run({"chi", at("sphere.json")}).out == "2\n");
  CHECK(run({"cat", "lower", at("figure_eight.json"), "--class", "amenable"}).out.rfind("2\n", 0) == 0);
  CHECK(run({"fca", "check", at("torus_projection.json"), "--class", "subexp<1/2", "--dim", "1"}).code == 0);
  CHECK(run({"fca", "check", at("torus_projection.json"), "--class", "finite", "--dim", "1"}).code == 1);
  CHECK(run({"fca", "check", at("torus_projection.json"), "--class", "amenable", "--dim", "0"}).code == 1);
  CHECK(run({"certify", "--goal", "simvol_zero(M)", "--facts", at("hyperbolic_fibred.facts")}).code == 1);
  CHECK(run({"certify", "--goal", "simvol_zero(torus)", "--facts", at("torus.facts"), "--rounds", "1"}).code == 2);
  CHECK(run({"cat", "upper", at("torus.json"), "--class", "bogus"}).code == 3);
  CHECK(run({"cat", "upper", at("genus2.json"), "--strategy", "exact"}).code == 3);
  CHECK(run({"cover", "check", at("circle_stars.json"), "--class", "trivial"}).code == 0);
  CHECK(run({"nerve", at("circle_stars.json")}).out.rfind("multiplicity 2\n", 0) == 0);
  CHECK(run({"combine", at("klein_bundle.json"), "--class", "amenable"}).out.rfind("2\n", 0) == 0);
  CHECK(run({"mapping-torus", at("hexagon_reflection.json")}).code == 0);
  auto p = run({"pi1", at("klein.json"), "--simplify", "50"});
  CHECK(p.out.find("abelianization Z^1 + Z/2") != std::string::npos);
}

TEST_CASE("cli emits reloadable output") {
  auto r = run({"subdivide", at("circle.json"), "-n", "2"});
  auto x = io::complex_from_json(io::json::parse(r.out));
  CHECK(x.vertex_count() == 12);

  r = run({"cat", "upper", at("torus.json"), "--class", "amenable", "--strategy", "greedy"});
  REQUIRE(r.code == 0);
  const auto start = r.out.find('{');
  const auto end = r.out.find("\n}\n") + 2;
  io::Workspace ws;
  auto c = io::cover_from_json(io::json::parse(r.out.substr(start, end - start)), ws);
  CHECK(validate_cover(c, GroupClass::of(ClassKind::Amenable)).overall.answer == Answer::Yes);

  auto facts = corpus_dir() / "emitted.facts";
  fs::remove(facts);
  CHECK(run({"fca", "check", at("torus_projection.json"), "--class", "subexp<1/2", "--dim", "1", "--emit",
             facts.string()}).code == 0);
  CHECK(run({"certify", "--goal", "ent_zero(torus)", "--facts", facts.string()}).code == 0);
}

TEST_CASE("cli output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"cat", "upper", at("genus2.json"), "--class", "amenable", "--strategy", "greedy"},
           {"pi1", at("genus2.json"), "--simplify", "100"},
           {"certify", "--goal", "cat_upper(M, amenable, _)", "--facts", at("hyperbolic_fibred.facts")}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
