#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "intervals/intervals.hpp"

using namespace intervals;

namespace {

long long binom_ll(int n, int k) { return static_cast<long long>(binomial(n, k)); }

}  // namespace

TEST_CASE("paths validate their abscissa lists") {
  LatticePath p(2, 3, {0, 2});
  CHECK(p.word() == "NEENE");
  CHECK_THROWS_AS(LatticePath(2, 3, {2, 0}), ValidationError);
  CHECK_THROWS_AS(LatticePath(2, 3, {0, 4}), ValidationError);
  CHECK_THROWS_AS(LatticePath(2, 3, {0}), ValidationError);
  CHECK_THROWS_AS(LatticePath(-1, 3, {}), ValidationError);
}

TEST_CASE("step words round trip") {
  LatticePath left_wall = path_from_word("NNEEE");
  CHECK(left_wall.a == 2);
  CHECK(left_wall.b == 3);
  CHECK(left_wall.vsteps == std::vector<int>{0, 0});
  CHECK_THROWS_AS(path_from_word("NXE"), ParseError);

  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 4}}) {
    PathPoset pp = lattice_paths_poset(a, b);
    for (const LatticePath& q : pp.paths) CHECK(path_from_word(q.word()) == q);
  }
}

TEST_CASE("the order compares abscissas reversed") {
  // Lower paths sit at larger abscissas.
  LatticePath low = path_from_word("EEENN");
  LatticePath high = path_from_word("NNEEE");
  CHECK(path_leq(low, high));
  CHECK_FALSE(path_leq(high, low));
  LatticePath mixed = path_from_word("NEENE");
  CHECK(path_leq(mixed, high));
  CHECK_FALSE(path_leq(mixed, low));
}

TEST_CASE("smallest rectangle gives a two element chain") {
  PathPoset pp = lattice_paths_poset(1, 1);
  REQUIRE(pp.poset.size() == 2);
  CHECK(is_isomorphic(pp.poset, Poset::chain(2)).has_value());
  CHECK(pp.poset.label(0) == "NE");
  CHECK(pp.poset.label(1) == "EN");
}

TEST_CASE("path counts match binomials") {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 4},
                      std::pair{3, 5}, std::pair{4, 5}}) {
    PathPoset lat = lattice_paths_poset(a, b);
    CHECK(lat.poset.size() == binom_ll(a + b, b));
    PathPoset dyck = dyck_paths_poset(a, b);
    CHECK(dyck.poset.size() == binom_ll(a + b, b) / (a + b));
    std::set<std::vector<int>> seen;
    for (const LatticePath& p : lat.paths) seen.insert(p.vsteps);
    CHECK(seen.size() == lat.paths.size());
  }
}

TEST_CASE("diagonal test selects the classical Dyck paths") {
  PathPoset dyck = dyck_paths_poset(2, 3);
  REQUIRE(dyck.poset.size() == 2);
  std::set<std::string> words;
  for (const LatticePath& p : dyck.paths) words.insert(p.word());
  CHECK(words == std::set<std::string>{"NNEEE", "NENEE"});
  CHECK(is_isomorphic(dyck.poset, Poset::chain(2)).has_value());
  CHECK_FALSE(path_from_word("ENNEE").above_diagonal());
  CHECK(path_from_word("NNEEE").above_diagonal());
}

TEST_CASE("coprimality and size guards") {
  CHECK_THROWS_AS(dyck_paths_poset(2, 4), CoprimalityError);
  CHECK_THROWS_AS(cycling_orbits(2, 4), CoprimalityError);
  CHECK_THROWS_AS(conjecture_report(2, 4), CoprimalityError);
  CHECK_THROWS_AS(lattice_paths_poset(5, 5, 10), SizeError);
  CHECK_THROWS_AS(lattice_paths_poset(0, 3), ValidationError);
}

TEST_CASE("cycling orbits partition the paths evenly") {
  CyclingOrbits orbits = cycling_orbits(2, 3);
  REQUIRE(orbits.orbits.size() == 2);
  std::set<int> covered;
  for (const std::vector<int>& orbit : orbits.orbits) {
    CHECK(orbit.size() == 5);
    int dyck_count = 0;
    for (int idx : orbit) {
      covered.insert(idx);
      if (orbits.lattice.paths[idx].above_diagonal()) ++dyck_count;
    }
    CHECK(dyck_count == 1);
  }
  CHECK(covered.size() == 10);

  for (auto [a, b] : {std::pair{3, 4}, std::pair{2, 5}, std::pair{4, 5}}) {
    CyclingOrbits c = cycling_orbits(a, b);
    CHECK(c.orbits.size() == binom_ll(a + b, b) / (a + b));
    for (const std::vector<int>& orbit : c.orbits) {
      CHECK(static_cast<int>(orbit.size()) == a + b);
      int dyck_count = 0;
      for (int idx : orbit)
        if (c.lattice.paths[idx].above_diagonal()) ++dyck_count;
      CHECK(dyck_count == 1);
    }
  }
}

TEST_CASE("orbits follow successive left rotations") {
  CyclingOrbits c = cycling_orbits(2, 3);
  for (const std::vector<int>& orbit : c.orbits)
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      std::string w = c.lattice.paths[orbit[i]].word();
      std::string rotated = w.substr(1) + w[0];
      CHECK(c.lattice.paths[orbit[(i + 1) % orbit.size()]].word() == rotated);
    }
}

TEST_CASE("two row paths encode intervals of a reversed chain") {
  int b = 3;
  PathPoset lat = lattice_paths_poset(2, b);
  for (const LatticePath& p : lat.paths) {
    auto [j, i] = interval_encoding_2xb(p);
    CHECK(j == p.vsteps[1]);
    CHECK(i == p.vsteps[0]);
    CHECK(j >= i);
  }
  for (const LatticePath& p : lat.paths)
    for (const LatticePath& q : lat.paths) {
      auto ep = interval_encoding_2xb(p);
      auto eq = interval_encoding_2xb(q);
      bool encoded_leq = ep.first >= eq.first && ep.second >= eq.second;
      CHECK(path_leq(p, q) == encoded_leq);
    }
  CHECK_THROWS_AS(interval_encoding_2xb(path_from_word("NNNE")), ValidationError);

  // Explicit order isomorphism onto the interval poset of a chain.
  for (int bb : {3, 5}) {
    PathPoset l2 = lattice_paths_poset(2, bb);
    IntervalPoset ip = interval_poset(Poset::chain(bb + 1));
    REQUIRE(l2.poset.size() == ip.poset.size());
    std::vector<int> image(l2.poset.size());
    for (int i = 0; i < l2.poset.size(); ++i) {
      auto [j2, i2] = interval_encoding_2xb(l2.paths[i]);
      image[i] = ip.index_of(bb - j2, bb - i2);
      REQUIRE(image[i] >= 0);
    }
    for (int u = 0; u < l2.poset.size(); ++u)
      for (int v = 0; v < l2.poset.size(); ++v)
        CHECK(l2.poset.leq(u, v) == ip.poset.leq(image[u], image[v]));
  }
}

TEST_CASE("conjecture report on a provable rectangle") {
  ConjectureReport r = conjecture_report(2, 3);
  CHECK(r.lattice_size == 10);
  CHECK(r.dyck_size == 2);
  CHECK(r.invariants.all_equal());
  std::string text = r.text();
  CHECK(text.find("polynomials equal") != std::string::npos);
  CHECK(text.find("evidence only") != std::string::npos);
  CHECK(text.find("rectangle 2 x 3") != std::string::npos);
}

TEST_CASE("conjecture report on the smallest open rectangle") {
  ConjectureReport r = conjecture_report(3, 4);
  CHECK(r.lattice_size == 35);
  CHECK(r.dyck_size == 5);
  CHECK(r.invariants.left_polynomial.degree() == 35);
  CHECK(r.invariants.right_polynomial.degree() == 35);
  std::string text = r.text();
  CHECK(text.find("polynomials") != std::string::npos);
  CHECK_THROWS_AS(conjecture_report(3, 4, 10), SizeError);
}
