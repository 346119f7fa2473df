#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intervals/algebra.hpp"
#include "intervals/errors.hpp"
#include "intervals/exact.hpp"
#include "intervals/poset.hpp"

namespace intervals {

/// Monotone staircase from (0,0) to (b,a), stored as the abscissa of each of
/// the a vertical steps, weakly increasing with entries in [0,b].
struct LatticePath {
  int a = 0;
  int b = 0;
  std::vector<int> vsteps;

  LatticePath(int a_, int b_, std::vector<int> v)
      : a(a_), b(b_), vsteps(std::move(v)) {
    if (a < 0 || b < 0) throw ValidationError("rectangle sides must be nonnegative");
    if (static_cast<int>(vsteps.size()) != a)
      throw ValidationError("need one abscissa per vertical step");
    for (std::size_t i = 0; i < vsteps.size(); ++i) {
      if (vsteps[i] < 0 || vsteps[i] > b)
        throw ValidationError("abscissa outside the rectangle");
      if (i > 0 && vsteps[i - 1] > vsteps[i])
        throw ValidationError("abscissas must be weakly increasing");
    }
  }

  /// Step word read from (0,0), N for vertical and E for horizontal.
  std::string word() const {
    std::string w;
    w.reserve(static_cast<std::size_t>(a + b));
    int x = 0;
    for (int v : vsteps) {
      w.append(static_cast<std::size_t>(v - x), 'E');
      w.push_back('N');
      x = v;
    }
    w.append(static_cast<std::size_t>(b - x), 'E');
    return w;
  }

  /// Weakly above the diagonal of the rectangle. The i-th vertical step
  /// starts at (vsteps[i-1], i-1), so the exact rational test is
  /// a * vsteps[i-1] <= b * (i-1); no interior lattice point meets the
  /// diagonal when gcd(a,b) = 1, so weak and strict agree there.
  bool above_diagonal() const {
    for (int i = 1; i <= a; ++i)
      if (static_cast<long long>(this->a) * vsteps[i - 1] >
          static_cast<long long>(b) * (i - 1))
        return false;
    return true;
  }

  bool operator==(const LatticePath& o) const {
    return a == o.a && b == o.b && vsteps == o.vsteps;
  }
};

/// One path lies below another when its vertical steps sit at componentwise
/// larger abscissas; lower paths are smaller.
inline bool path_leq(const LatticePath& lo, const LatticePath& hi) {
  for (std::size_t i = 0; i < lo.vsteps.size(); ++i)
    if (lo.vsteps[i] < hi.vsteps[i]) return false;
  return true;
}

inline LatticePath path_from_word(const std::string& w) {
  std::vector<int> v;
  int x = 0;
  for (char c : w) {
    if (c == 'N')
      v.push_back(x);
    else if (c == 'E')
      ++x;
    else
      throw ParseError("step word may contain only N and E");
  }
  int a = static_cast<int>(v.size());  // before the move; argument order is unspecified
  return LatticePath(a, x, std::move(v));
}

struct PathPoset {
  Poset poset;
  std::vector<LatticePath> paths;  // index order matches the poset
};

namespace detail {

inline std::vector<LatticePath> enumerate_paths(int a, int b) {
  std::vector<LatticePath> out;
  std::vector<int> v(static_cast<std::size_t>(a), 0);
  while (true) {
    out.push_back(LatticePath(a, b, v));
    int i = a - 1;
    while (i >= 0 && v[i] == b) --i;
    if (i < 0) break;
    int next = v[i] + 1;
    for (int j = i; j < a; ++j) v[j] = next;
  }
  return out;
}

inline PathPoset paths_to_poset(int a, int b, std::vector<LatticePath> paths) {
  int n = static_cast<int>(paths.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i) * n + j] = path_leq(paths[i], paths[j]);
  std::vector<std::string> labels;
  labels.reserve(paths.size());
  for (const LatticePath& p : paths) labels.push_back(p.word());
  (void)a;
  (void)b;
  return PathPoset{Poset::from_relation(n, std::move(leq), std::move(labels)),
                   std::move(paths)};
}

}  // namespace detail

/// All monotone paths in the a-by-b rectangle, in lexicographic abscissa
/// order, with step-word labels. C(a+b, b) elements.
inline PathPoset lattice_paths_poset(int a, int b, long long max_elements = 100000) {
  if (a < 1 || b < 1) throw ValidationError("rectangle sides must be at least 1");
  if (binomial(a + b, b) > max_elements)
    throw SizeError("lattice path poset exceeds the configured bound");
  return detail::paths_to_poset(a, b, detail::enumerate_paths(a, b));
}

/// Paths weakly above the diagonal, as an induced subposet of the full path
/// poset. Requires gcd(a,b) = 1; the count is C(a+b, b)/(a+b).
inline PathPoset dyck_paths_poset(int a, int b, long long max_elements = 100000) {
  if (a < 1 || b < 1) throw ValidationError("rectangle sides must be at least 1");
  if (std::gcd(a, b) != 1) throw CoprimalityError("sides must be coprime");
  if (binomial(a + b, b) > max_elements)
    throw SizeError("lattice path poset exceeds the configured bound");
  std::vector<LatticePath> all = detail::enumerate_paths(a, b);
  std::vector<LatticePath> dyck;
  for (const LatticePath& p : all)
    if (p.above_diagonal()) dyck.push_back(p);
  return detail::paths_to_poset(a, b, std::move(dyck));
}

/// Orbits of the left-rotation action on step words, as index lists into the
/// accompanying lattice path poset. Each orbit starts at its smallest index
/// and follows successive rotations; orbits are listed by smallest index.
struct CyclingOrbits {
  PathPoset lattice;
  std::vector<std::vector<int>> orbits;
};

inline CyclingOrbits cycling_orbits(int a, int b, long long max_elements = 100000) {
  if (std::gcd(a, b) != 1) throw CoprimalityError("sides must be coprime");
  PathPoset lat = lattice_paths_poset(a, b, max_elements);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(lat.paths.size()); ++i)
    index.emplace(lat.paths[i].vsteps, i);
  std::vector<char> visited(lat.paths.size(), 0);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < static_cast<int>(lat.paths.size()); ++s) {
    if (visited[s]) continue;
    std::vector<int> orbit;
    std::string w = lat.paths[s].word();
    int cur = s;
    do {
      visited[cur] = 1;
      orbit.push_back(cur);
      w = w.substr(1) + w[0];
      cur = index.at(path_from_word(w).vsteps);
    } while (cur != s);
    orbits.push_back(std::move(orbit));
  }
  return CyclingOrbits{std::move(lat), std::move(orbits)};
}

/// The pair (j,i) of second and first vertical abscissas of a path in a
/// 2-row rectangle. Reading A_{b+1} with decreasing order makes (j,i) an
/// interval and the assignment an order isomorphism onto those intervals.
inline std::pair<int, int> interval_encoding_2xb(const LatticePath& p) {
  if (p.a != 2) throw ValidationError("encoding needs a rectangle of height 2");
  return {p.vsteps[1], p.vsteps[0]};
}

/// Derived-equivalence invariants of the product of a chain of length a+b
/// with the Dyck poset, against the full lattice path poset. Equal counts are
/// automatic; equal polynomials are evidence for a derived equivalence, while
/// differing polynomials rule one out.
struct ConjectureReport {
  int a = 0;
  int b = 0;
  long long lattice_size = 0;
  long long dyck_size = 0;
  InvariantComparison invariants;  // left product, right lattice paths

  std::string text() const {
    std::ostringstream os;
    os << "rectangle " << a << " x " << b << ": " << lattice_size
       << " lattice paths, " << dyck_size << " Dyck paths\n"
       << "left:  chain(" << (a + b) << ") x Dyck(" << a << "," << b << ")\n"
       << "right: lattice paths(" << a << "," << b << ")\n"
       << invariants.machine_lines()
       << "polynomials " << (invariants.polynomials_equal ? "equal" : "differ") << "\n"
       << (invariants.all_equal()
               ? "equal invariants are evidence only, not a derived equivalence\n"
               : "differing invariants rule out a derived equivalence\n");
    return os.str();
  }
};

inline ConjectureReport conjecture_report(int a, int b, long long max_elements = 200) {
  if (std::gcd(a, b) != 1) throw CoprimalityError("sides must be coprime");
  PathPoset lat = lattice_paths_poset(a, b, max_elements);
  PathPoset dyck = dyck_paths_poset(a, b, max_elements);
  Poset prod = product(Poset::chain(a + b), dyck.poset);
  ConjectureReport r;
  r.a = a;
  r.b = b;
  r.lattice_size = lat.poset.size();
  r.dyck_size = dyck.poset.size();
  r.invariants =
      derived_invariant_report(incidence_category(prod), incidence_category(lat.poset));
  return r;
}

}  // namespace intervals
