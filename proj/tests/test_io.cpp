#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "intervals/intervals.hpp"

using namespace intervals;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "intervals_io_test";
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& contents) const {
    std::filesystem::path p = path / name;
    std::ofstream out(p);
    out << contents;
    return p.string();
  }
};

}  // namespace

TEST_CASE("poset text round trips") {
  DetRng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = random_poset(rng, rng.in_range(0, 6));
    std::ostringstream os;
    write_poset(os, p);
    std::istringstream is(os.str());
    CHECK(read_poset(is).same_order(p));
  }
}

TEST_CASE("poset parser accepts comments and blank lines") {
  std::istringstream is(
      "# a diamond\n"
      "poset 4\n"
      "\n"
      "cover 0 1  # left leg\n"
      "cover 0 2\n"
      "cover 1 3\n"
      "cover 2 3\n");
  Poset p = read_poset(is);
  CHECK(p.size() == 4);
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.comparable(1, 2));
}

TEST_CASE("poset parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_poset(is);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("cover 0 1\nposet 2\n"), ParseError);
  CHECK_THROWS_AS(parse("poset 2\nposet 2\n"), ParseError);
  CHECK_THROWS_AS(parse("poset 2\ncover 0\n"), ParseError);
  CHECK_THROWS_AS(parse("poset 2\nedge 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("poset -2\n"), ParseError);
  CHECK_THROWS_AS(parse("poset two\n"), ParseError);
  CHECK_THROWS_AS(parse("poset 2\ncover 0 5\n"), ValidationError);
  CHECK_THROWS_AS(parse("poset 2\ncover 0 1\ncover 1 0\n"), CycleError);
}

TEST_CASE("missing files surface the path in the error") {
  CHECK_THROWS_WITH(read_poset_file("/nonexistent/p.poset"),
                    Catch::Matchers::ContainsSubstring("cannot open"));
  CHECK_THROWS_WITH(read_ideal_map_file("/nonexistent/m.idealmap"),
                    Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("dot export lists nodes and cover edges") {
  Poset p = Poset::from_covers(2, {{0, 1}}, {"lo", "hi\"q"});
  std::string dot = poset_to_dot(p);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 [label=\"lo\"]") != std::string::npos);
  CHECK(dot.find("hi\\\"q") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
}

TEST_CASE("ideal map files round trip through the directory") {
  TempDir dir;
  Poset x = Poset::from_covers(3, {{0, 2}, {1, 2}});
  Poset y = Poset::chain(4);
  IdealMap m(x, y, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 1, 1}});

  std::ostringstream xs, ys, ms;
  write_poset(xs, x);
  write_poset(ys, y);
  write_ideal_map(ms, m, "x.poset", "y.poset");
  dir.file("x.poset", xs.str());
  dir.file("y.poset", ys.str());
  std::string map_path = dir.file("m.idealmap", ms.str());

  IdealMap loaded = read_ideal_map_file(map_path);
  CHECK(loaded.x().same_order(x));
  CHECK(loaded.y().same_order(y));
  for (int b = 0; b < y.size(); ++b) CHECK(loaded.at(b) == m.at(b));
}

TEST_CASE("ideal map parser rejects malformed files") {
  TempDir dir;
  dir.file("x.poset", "poset 2\ncover 0 1\n");
  dir.file("y.poset", "poset 2\ncover 0 1\n");
  auto attempt = [&](const std::string& body) {
    return read_ideal_map_file(dir.file("bad.idealmap", body));
  };
  CHECK_THROWS_AS(attempt("X x.poset\n"), ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nF 0\n"), ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nY y.poset\nF 0\n"), ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nY y.poset\nF 0\nF 0\nF 1\n"),
                  ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nY y.poset\nF 0\nF 1\nF 2\n"),
                  ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nY y.poset\nF 0 5\nF 1\n"), ParseError);
  CHECK_THROWS_AS(attempt("idealmap\nX x.poset\nY y.poset\nwhat 0\n"), ParseError);
  CHECK_THROWS_AS(
      attempt("idealmap\nX x.poset\nY y.poset\nF 0 1\nF 1 0 1\n"),
      ValidationError);  // not closed: 1 without 0
  CHECK_THROWS_AS(
      attempt("idealmap\nX x.poset\nY y.poset\nF 0 0 1\nF 1\n"),
      ValidationError);  // not monotone
}

TEST_CASE("rational tokens always carry a denominator") {
  CHECK(rational_token(Rat(3) / 2) == "3/2");
  CHECK(rational_token(Rat(-1)) == "-1/1");
  CHECK(rational_token(Rat(0)) == "0/1");
  CHECK(rational_token(Rat(2) / 4) == "1/2");
}

TEST_CASE("module dump lists dimensions and cover matrices") {
  Poset c2 = Poset::chain(2);
  std::ostringstream os;
  write_module(os, projective_module(c2, 0));
  CHECK(os.str() == "dim 0 1\ndim 1 1\nmap 0 1\n1/1\n");
}
