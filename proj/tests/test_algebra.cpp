#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <string>
#include <vector>

#include "intervals/intervals.hpp"

using namespace intervals;

namespace {

std::size_t idx3(int n, int u, int v, int w) {
  return (static_cast<std::size_t>(u) * n + v) * n + w;
}

// Upper-triangular hom pattern on a chain of n objects with all composites
// nonzero; tests then poke holes into it.
std::pair<std::vector<char>, std::vector<char>> chain_tables(int n) {
  std::vector<char> hom(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> compose(static_cast<std::size_t>(n) * n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) hom[static_cast<std::size_t>(u) * n + v] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      for (int w = v; w < n; ++w) compose[idx3(n, u, v, w)] = 1;
  return {hom, compose};
}

// Cofactor expansion along the first row; ground truth for the charpoly.
IntPolynomial det_recursive(const std::vector<std::vector<IntPolynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) return IntPolynomial(1);
  if (n == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][j] * det_recursive(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

IntPolynomial char_poly_oracle(const Matrix<Int>& a) {
  int n = a.rows();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Int> c = {-a(i, j)};
      if (i == j) c.push_back(1);
      m[i][j] = IntPolynomial(std::move(c));
    }
  return det_recursive(m);
}

IntPolynomial poly(std::vector<int> ascending) {
  std::vector<Int> c(ascending.begin(), ascending.end());
  return IntPolynomial(std::move(c));
}

IdealMap staircase_map() {
  Poset x = Poset::from_covers(3, {{0, 2}, {1, 2}});
  Poset y = Poset::chain(4);
  return IdealMap(x, y, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 1, 1}});
}

}  // namespace

TEST_CASE("thin category constructor validates the category laws") {
  auto [hom, compose] = chain_tables(4);

  CHECK_THROWS_AS(ThinCategory(4, std::vector<char>(4, 1), compose), ValidationError);
  CHECK_THROWS_AS(ThinCategory(4, hom, std::vector<char>(9, 1)), ValidationError);

  {
    auto bad = hom;
    bad[0] = 0;  // no identity at object 0
    CHECK_THROWS_AS(ThinCategory(4, bad, compose), AssociativityError);
  }
  {
    auto bad = compose;
    bad[idx3(4, 0, 0, 1)] = 0;  // identity composite forced to zero
    CHECK_THROWS_AS(ThinCategory(4, hom, bad), AssociativityError);
  }
  {
    auto bad = compose;
    bad[idx3(4, 0, 1, 2)] = 0;  // kills one bracketing of 0 -> 1 -> 2 -> 3 only
    CHECK_THROWS_AS(ThinCategory(4, hom, bad), AssociativityError);
  }
  ThinCategory ok(4, hom, compose);
  CHECK(ok.objects() == 4);
}

TEST_CASE("a composite may not land in a zero hom space") {
  int n = 3;
  std::vector<char> hom = {1, 1, 0, 0, 1, 1, 0, 0, 1};  // 0->1, 1->2, no 0->2
  std::vector<char> compose(27, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (hom[static_cast<std::size_t>(u) * n + v]) {
        compose[idx3(n, u, u, v)] = 1;
        compose[idx3(n, u, v, v)] = 1;
      }
  // With the composite 0 -> 1 -> 2 declared zero this is a valid category.
  ThinCategory with_relation(n, hom, compose);
  CHECK_FALSE(with_relation.composes_nonzero(0, 1, 2));
  // Declaring it nonzero contradicts hom(0,2) = 0.
  auto bad = compose;
  bad[idx3(n, 0, 1, 2)] = 1;
  CHECK_THROWS_AS(ThinCategory(n, hom, bad), AssociativityError);
}

TEST_CASE("incidence categories never kill composites") {
  ThinCategory c = incidence_category(Poset::chain(2));
  CHECK(c.hom_dim(0, 0) == 1);
  CHECK(c.hom_dim(0, 1) == 1);
  CHECK(c.hom_dim(1, 0) == 0);
  CHECK(c.composes_nonzero(0, 0, 1));
  CHECK(c.composes_nonzero(0, 1, 1));

  DetRng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, rng.in_range(0, 5));
    ThinCategory t = incidence_category(p);
    for (int u = 0; u < p.size(); ++u)
      for (int v = 0; v < p.size(); ++v) {
        CHECK(t.hom_dim(u, v) == (p.leq(u, v) ? 1 : 0));
        for (int w = 0; w < p.size(); ++w)
          if (p.leq(u, v) && p.leq(v, w)) CHECK(t.composes_nonzero(u, v, w));
      }
  }
}

TEST_CASE("zero pattern category of the interval specialization") {
  GammaData g = build_gamma(interval_ideal_map(Poset::chain(2)));
  ThinCategory t = gamma_zero_category(g);
  REQUIRE(t.objects() == 3);
  // Objects in pair order (0,0), (0,1), (1,1).
  Matrix<Int> c = cartan_matrix(t, {0, 1, 2});
  Matrix<Int> expected(3, 3);
  expected(0, 0) = 1; expected(0, 1) = 1; expected(0, 2) = 0;
  expected(1, 0) = 0; expected(1, 1) = 1; expected(1, 2) = 1;
  expected(2, 0) = 0; expected(2, 1) = 0; expected(2, 2) = 1;
  CHECK(c == expected);
  // The length-two composite through the middle object dies.
  CHECK_FALSE(t.composes_nonzero(0, 1, 2));
}

TEST_CASE("zero pattern categories validate on arbitrary instances") {
  DetRng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Poset x = random_poset(rng, rng.in_range(0, 4));
    Poset y = random_poset(rng, rng.in_range(0, 4));
    GammaData g = build_gamma(random_ideal_map(rng, x, y));
    ThinCategory t = gamma_zero_category(g);  // constructor checks the laws
    for (int u = 0; u < t.objects(); ++u)
      for (int v = 0; v < t.objects(); ++v) CHECK(t.hom_dim(u, v) == g.zero_hom(u, v));
  }
}

TEST_CASE("op reverses homs and is an involution") {
  GammaData g = build_gamma(staircase_map());
  ThinCategory t = gamma_zero_category(g);
  ThinCategory o = t.op();
  for (int u = 0; u < t.objects(); ++u)
    for (int v = 0; v < t.objects(); ++v) CHECK(o.hom_dim(u, v) == t.hom_dim(v, u));
  CHECK(o.op() == t);
  CHECK(incidence_category(Poset::chain(3)).op() ==
        incidence_category(Poset::chain(3).opposite()));
}

TEST_CASE("category equality compares patterns only on composable triples") {
  auto [hom, compose] = chain_tables(3);
  auto noise = compose;
  noise[idx3(3, 2, 0, 1)] = 1;  // not composable: hom(2,0) = 0
  CHECK(ThinCategory(3, hom, compose) == ThinCategory(3, hom, noise));

  GammaData g = build_gamma(interval_ideal_map(Poset::chain(2)));
  CHECK(gamma_zero_category(g) != incidence_category(g.gamma()));
}

TEST_CASE("linear extension orders objects below their targets") {
  ThinCategory t = incidence_category(Poset::from_covers(3, {{2, 1}, {1, 0}}));
  std::vector<int> ext = t.linear_extension();
  CHECK(ext == std::vector<int>{2, 1, 0});

  // A hom two-cycle has no extension.
  std::vector<char> hom = {1, 1, 1, 1};
  std::vector<char> compose(8, 1);
  ThinCategory cyclic(2, hom, compose);
  CHECK_THROWS_AS(cyclic.linear_extension(), CycleError);
}

TEST_CASE("cartan matrices are unitriangular in extension order") {
  DetRng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Poset x = random_poset(rng, rng.in_range(0, 4));
    Poset y = random_poset(rng, rng.in_range(0, 4));
    GammaData g = build_gamma(random_ideal_map(rng, x, y));
    for (const ThinCategory& t :
         {gamma_zero_category(g), incidence_category(g.gamma())}) {
      std::vector<int> ext = t.linear_extension();
      Matrix<Int> c = cartan_matrix(t, ext);
      for (int i = 0; i < c.rows(); ++i) {
        CHECK(c(i, i) == 1);
        for (int j = 0; j < i; ++j) CHECK(c(i, j) == 0);
      }
      // Unitriangular inverse: C * C^{-1} = I exactly.
      CHECK(c * unitriangular_inverse(c) == Matrix<Int>::identity(c.rows()));
    }
  }
  Matrix<Int> not_uni = Matrix<Int>::identity(2);
  not_uni(0, 0) = 2;
  CHECK_THROWS_AS(unitriangular_inverse(not_uni), SingularError);
}

TEST_CASE("characteristic polynomial golden values") {
  CHECK(char_poly_exact(Matrix<Int>::identity(2)) == poly({1, -2, 1}));
  CHECK(char_poly_exact(Matrix<Int>(3, 3)) == poly({0, 0, 0, 1}));
  Matrix<Int> m(2, 2);
  m(0, 0) = -1; m(0, 1) = -1;
  m(1, 0) = 1;  m(1, 1) = 0;
  CHECK(char_poly_exact(m) == poly({1, 1, 1}));
  CHECK(char_poly_exact(Matrix<Int>(0, 0)) == poly({1}));
}

TEST_CASE("characteristic polynomial matches cofactor expansion") {
  DetRng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.in_range(1, 4);
    Matrix<Int> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.in_range(-3, 3);
    CHECK(char_poly_exact(m) == char_poly_oracle(m));
  }
}

TEST_CASE("coxeter polynomials of small chains") {
  CHECK(coxeter_polynomial(incidence_category(Poset::chain(1))).polynomial ==
        poly({1, 1}));
  CHECK(coxeter_polynomial(incidence_category(Poset::chain(2))).polynomial ==
        poly({1, 1, 1}));
  CHECK(coxeter_polynomial(incidence_category(Poset::chain(3))).polynomial ==
        poly({1, 1, 1, 1}));
  CHECK(coxeter_polynomial(incidence_category(Poset::antichain(2))).polynomial ==
        poly({1, 2, 1}));
  CHECK(coxeter_polynomial(incidence_category(Poset())).polynomial == poly({1}));
}

TEST_CASE("coxeter report records an exact inverse") {
  CoxeterReport r = coxeter_polynomial(incidence_category(Poset::chain(2)));
  Matrix<Int> expected(2, 2);
  expected(0, 0) = -1; expected(0, 1) = -1;
  expected(1, 0) = 1;  expected(1, 1) = 0;
  CHECK(r.coxeter == expected);
  CHECK(r.cartan(0, 1) == 1);
  CHECK(r.order.size() == 2);
}

TEST_CASE("coxeter polynomial is invariant under relabeling") {
  DetRng rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    int n = rng.in_range(1, 6);
    Poset p = random_poset(rng, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        leq[static_cast<std::size_t>(perm[u]) * n + perm[v]] = p.leq(u, v) ? 1 : 0;
    Poset q = Poset::from_relation(n, std::move(leq));
    CHECK(coxeter_polynomial(incidence_category(p)).polynomial ==
          coxeter_polynomial(incidence_category(q)).polynomial);
  }
}

TEST_CASE("hom connectivity counts components") {
  CHECK(hom_connectivity_components(incidence_category(Poset::chain(3))) == 1);
  CHECK(hom_connectivity_components(incidence_category(Poset::antichain(3))) == 3);
  CHECK(hom_connectivity_components(incidence_category(
            disjoint_union(Poset::chain(2), Poset::chain(2)))) == 2);
  CHECK(hom_connectivity_components(incidence_category(Poset())) == 0);
}

TEST_CASE("invariant comparison separates a chain from an antichain") {
  InvariantComparison r =
      derived_invariant_report(incidence_category(Poset::chain(2)),
                               incidence_category(Poset::antichain(2)));
  CHECK(r.objects_equal);
  CHECK_FALSE(r.components_equal);
  CHECK_FALSE(r.polynomials_equal);
  CHECK_FALSE(r.all_equal());
  std::string lines = r.machine_lines();
  CHECK(lines.find("invariant objects 2 2 equal") != std::string::npos);
  CHECK(lines.find("invariant components 1 2 differ") != std::string::npos);
  CHECK(lines.find("invariant coxeter 1,1,1 1,2,1 differ") != std::string::npos);
  CHECK(r.human_text().find("invariants differ") != std::string::npos);

  InvariantComparison same =
      derived_invariant_report(incidence_category(Poset::chain(2)),
                               incidence_category(Poset::chain(2)));
  CHECK(same.all_equal());
  CHECK(same.human_text().find("all invariants equal") != std::string::npos);
}
