#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "intervals/intervals.hpp"

using namespace intervals;

namespace {

// Count valid ideal maps by filtering every membership table.
long long ideal_map_count_brute(const Poset& x, const Poset& y) {
  int cells = x.size() * y.size();
  long long count = 0;
  for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
    std::vector<std::vector<char>> f(y.size(), std::vector<char>(x.size(), 0));
    for (int c = 0; c < cells; ++c)
      if (mask & (1ul << c)) f[c / x.size()][c % x.size()] = 1;
    try {
      IdealMap m(x, y, std::move(f));
      ++count;
    } catch (const ValidationError&) {
    }
  }
  return count;
}

}  // namespace

TEST_CASE("deterministic rng reproduces its draws") {
  DetRng a(12345), b(12345), c(54321);
  std::vector<int> da, db, dc;
  for (int i = 0; i < 50; ++i) {
    da.push_back(a.in_range(-10, 10));
    db.push_back(b.in_range(-10, 10));
    dc.push_back(c.in_range(-10, 10));
  }
  CHECK(da == db);
  CHECK(da != dc);
  for (int v : da) {
    CHECK(v >= -10);
    CHECK(v <= 10);
  }
}

TEST_CASE("poset census matches the known counts") {
  CHECK(posets_up_to_iso(0).size() == 1);
  CHECK(posets_up_to_iso(1).size() == 1);
  CHECK(posets_up_to_iso(2).size() == 2);
  CHECK(posets_up_to_iso(3).size() == 5);
  CHECK(posets_up_to_iso(4).size() == 16);
  CHECK(posets_up_to_iso(5).size() == 63);

  std::vector<Poset> all = posets_up_to_iso(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].size() == 4);
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE(is_isomorphic(all[i], all[j]).has_value());
  }
  CHECK_THROWS_AS(posets_up_to_iso(-1), ValidationError);
}

TEST_CASE("ideal map enumeration agrees with brute force") {
  Poset vee = Poset::from_covers(3, {{0, 2}, {1, 2}});
  std::vector<std::pair<Poset, Poset>> cases = {
      {Poset::chain(2), Poset::chain(2)},
      {Poset::chain(2), Poset::antichain(2)},
      {Poset::antichain(2), Poset::chain(3)},
      {vee, Poset::chain(2)},
      {Poset::chain(2), vee},
      {Poset::chain(3), Poset::chain(2)},
  };
  for (const auto& [x, y] : cases) {
    std::vector<IdealMap> maps = all_ideal_maps(x, y);
    CHECK(static_cast<long long>(maps.size()) == ideal_map_count_brute(x, y));
    std::set<std::vector<std::vector<char>>> seen;
    for (const IdealMap& m : maps) {
      std::vector<std::vector<char>> table;
      for (int b = 0; b < y.size(); ++b) table.push_back(m.at(b));
      seen.insert(table);
    }
    CHECK(seen.size() == maps.size());
  }
  // Monotone maps from a 2-chain into the 3-chain of ideals of a 2-chain.
  CHECK(all_ideal_maps(Poset::chain(2), Poset::chain(2)).size() == 6);
  CHECK(all_ideal_maps(Poset(), Poset::chain(2)).size() == 1);
  CHECK(all_ideal_maps(Poset::chain(2), Poset()).size() == 1);
}

TEST_CASE("random posets and ideal maps are valid and reproducible") {
  DetRng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Poset x = random_poset(rng, rng.in_range(0, 5));  // constructor validates
    Poset y = random_poset(rng, rng.in_range(0, 5));
    IdealMap m = random_ideal_map(rng, x, y);
    GammaData g = build_gamma(m);
    CHECK(g.size() <= x.size() * y.size());
  }

  DetRng r1(99), r2(99);
  for (int trial = 0; trial < 10; ++trial) {
    Poset a = random_poset(r1, 4);
    Poset b = random_poset(r2, 4);
    CHECK(a.same_order(b));
    CHECK(random_ideal_map(r1, a, a).at(0) == random_ideal_map(r2, b, b).at(0));
  }
}

TEST_CASE("random short exact sequences are exact") {
  DetRng rng(13);
  std::vector<Poset> bases = {Poset::chain(3), Poset::antichain(2),
                              Poset::from_covers(3, {{0, 2}, {1, 2}}),
                              Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})};
  for (const Poset& p : bases)
    for (int trial = 0; trial < 5; ++trial) {
      ShortExact ses = random_ses(rng, p);
      CHECK(is_natural(ses.sub, ses.mid, ses.inject));
      CHECK(is_natural(ses.mid, ses.quot, ses.project));
      CHECK(ses_is_exact(ses.sub, ses.mid, ses.quot, ses.inject, ses.project));
    }
}

TEST_CASE("single instance check passes on the interval specialization") {
  SweepOutcome o = check_theorem_instance(interval_ideal_map(Poset::chain(2)));
  CHECK(o.tilting_ok);
  CHECK(o.coxeter_ok);
  CHECK(o.pass());
  CHECK(o.description.find("n=2") != std::string::npos);
}

TEST_CASE("exhaustive sweep over tiny sizes") {
  SweepReport rep = theorem_sweep_exhaustive(2, 2);
  CHECK(rep.total == 63);
  CHECK(rep.failed == 0);
  CHECK(rep.all_pass());
  CHECK(rep.summary().find("checked 63 instances: all pass") != std::string::npos);
}

TEST_CASE("parallel sweeps return the same report") {
  SweepReport serial = theorem_sweep_exhaustive(2, 2, 1);
  SweepReport parallel = theorem_sweep_exhaustive(2, 2, 4);
  CHECK(serial.total == parallel.total);
  CHECK(serial.failed == parallel.failed);
  CHECK(serial.summary() == parallel.summary());
}

TEST_CASE("random sweeps are seeded") {
  SweepReport a = theorem_sweep_random(20, 5, 3, 3);
  SweepReport b = theorem_sweep_random(20, 5, 3, 3);
  CHECK(a.total == 20);
  CHECK(a.all_pass());
  CHECK(a.summary() == b.summary());
}

TEST_CASE("orientation search on a short line") {
  OrientationReport tiny = orientations_int_search(1);
  CHECK(tiny.orientations == std::vector<std::string>{""});
  CHECK_FALSE(tiny.found_difference);
  CHECK(tiny.text().find("all Coxeter polynomials equal") != std::string::npos);

  OrientationReport two = orientations_int_search(2);
  CHECK(two.orientations.size() == 2);
  CHECK_FALSE(two.found_difference);

  OrientationReport three = orientations_int_search(3);
  CHECK(three.orientations.size() == 4);
  CHECK(three.found_difference);
  CHECK(three.text().find("differing pair") != std::string::npos);
  CHECK(three.polynomials[three.witness_a] != three.polynomials[three.witness_b]);
  CHECK_THROWS_AS(orientations_int_search(0), ValidationError);
}

TEST_CASE("descriptions carry the instance data") {
  IdealMap m = interval_ideal_map(Poset::chain(2));
  std::string d = describe_ideal_map(m);
  CHECK(d.find("X(") != std::string::npos);
  CHECK(d.find("Y(") != std::string::npos);
  CHECK(d.find("F=") != std::string::npos);
}
