#pragma once

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "intervals/algebra.hpp"
#include "intervals/errors.hpp"
#include "intervals/gamma.hpp"
#include "intervals/poset.hpp"
#include "intervals/rep.hpp"

namespace intervals {

/// Deterministic source of randomness; identical seeds give identical runs on
/// any platform because only raw engine draws are used, never distributions.
class DetRng {
 public:
  explicit DetRng(unsigned long long seed) : engine_(seed) {}

  /// True with probability num/den.
  bool chance(int num, int den) {
    return static_cast<int>(engine_() % static_cast<unsigned long long>(den)) < num;
  }

  /// Uniform in [0, n); n must be positive.
  int below(int n) {
    return static_cast<int>(engine_() % static_cast<unsigned long long>(n));
  }

  /// Uniform in [lo, hi].
  int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// All posets on n elements up to isomorphism. Every isomorphism class has a
/// representative whose relation refines the index order, so it suffices to
/// filter the transitively closed subsets of {(i,j) : i < j} and deduplicate.
/// Listing order follows the subset enumeration and is deterministic.
inline std::vector<Poset> posets_up_to_iso(int n) {
  if (n < 0) throw ValidationError("negative size");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<Poset> found;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (1ul << s))
        leq[static_cast<std::size_t>(slots[s].first) * n + slots[s].second] = 1;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j) {
        if (!leq[static_cast<std::size_t>(i) * n + j]) continue;
        for (int k = 0; k < n; ++k)
          if (leq[static_cast<std::size_t>(j) * n + k] &&
              !leq[static_cast<std::size_t>(i) * n + k]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    Poset p = Poset::from_relation(n, std::move(leq));
    bool fresh = true;
    for (const Poset& q : found)
      if (is_isomorphic(p, q)) {
        fresh = false;
        break;
      }
    if (fresh) found.push_back(std::move(p));
  }
  return found;
}

/// Every monotone assignment of an ideal of x to each element of y. Walks a
/// linear extension of y, constraining each value to contain the values at
/// covers from below; listing order is depth-first over the ideal list.
inline std::vector<IdealMap> all_ideal_maps(const Poset& x, const Poset& y) {
  IdealLattice lat = ideals(x);
  std::vector<int> order = y.linear_extension();
  auto covers = y.covers();
  std::vector<IdealMap> out;
  std::vector<int> choice(order.size(), -1);
  std::vector<int> pos_of(y.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos_of[order[i]] = static_cast<int>(i);
  auto contains = [&](const std::vector<char>& big, const std::vector<char>& small) {
    for (std::size_t v = 0; v < big.size(); ++v)
      if (small[v] && !big[v]) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      std::vector<std::vector<char>> assignment(y.size());
      for (int v = 0; v < y.size(); ++v) assignment[v] = lat.ideals[choice[pos_of[v]]];
      out.push_back(IdealMap(x, y, std::move(assignment)));
      return;
    }
    int b = order[pos];
    for (int c = 0; c < static_cast<int>(lat.ideals.size()); ++c) {
      bool ok = true;
      for (auto [a, bb] : covers) {
        if (bb != b) continue;
        if (!contains(lat.ideals[c], lat.ideals[choice[pos_of[a]]])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      choice[pos] = c;
      self(self, pos + 1);
    }
    choice[pos] = -1;
  };
  recurse(recurse, 0);
  return out;
}

/// Random order: each pair i < j becomes a cover candidate with probability
/// 3/10, then the transitive closure is taken. Always acyclic.
inline Poset random_poset(DetRng& rng, int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(3, 10)) covers.push_back({i, j});
  return Poset::from_covers(n, covers);
}

/// Random monotone ideal assignment, built bottom-up over a linear extension
/// of y: the value at y is the union of the values at covers from below and
/// the down-closure of a random subset of x (each element kept with
/// probability 1/2). Valid by construction.
inline IdealMap random_ideal_map(DetRng& rng, const Poset& x, const Poset& y) {
  std::vector<std::vector<char>> f(y.size(), std::vector<char>(x.size(), 0));
  auto covers = y.covers();
  for (int b : y.linear_extension()) {
    for (auto [a, bb] : covers)
      if (bb == b)
        for (int v = 0; v < x.size(); ++v)
          if (f[a][v]) f[b][v] = 1;
    for (int v = 0; v < x.size(); ++v)
      if (rng.chance(1, 2))
        for (int u = 0; u < x.size(); ++u)
          if (x.leq(u, v)) f[b][u] = 1;
  }
  return IdealMap(x, y, std::move(f));
}

/// Random map out of a sum of projectives, one random integer vector at each
/// generator; the component at z pushes those vectors forward along the
/// structure maps of the target.
inline NatTrans random_map_from_projectives(DetRng& rng, const std::vector<int>& gens,
                                            const Module& cover, const Module& target) {
  const Poset& p = target.poset();
  std::vector<Matrix<Rat>> vecs;
  for (int g : gens) {
    Matrix<Rat> v(target.dim(g), 1);
    for (int i = 0; i < v.rows(); ++i) v(i, 0) = rng.in_range(-2, 2);
    vecs.push_back(std::move(v));
  }
  NatTrans t;
  for (int z = 0; z < p.size(); ++z) {
    Matrix<Rat> comp(target.dim(z), cover.dim(z));
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (!p.leq(gens[s], z)) continue;
      int col = detail::slot_offset(p, gens, static_cast<int>(s), z);
      Matrix<Rat> w = target.map(gens[s], z) * vecs[s];
      for (int i = 0; i < w.rows(); ++i) comp(i, col) = w(i, 0);
    }
    t.push_back(std::move(comp));
  }
  return t;
}

struct ShortExact {
  Module sub;
  Module mid;
  Module quot;
  NatTrans inject;   // sub into mid
  NatTrans project;  // mid onto quot
};

/// Short exact sequence around the image of a random map between random sums
/// of projectives; exact by construction.
inline ShortExact random_ses(DetRng& rng, const Poset& p) {
  auto pick = [&]() {
    std::vector<int> gens;
    if (p.size() > 0) {
      int count = rng.in_range(1, 3);
      for (int i = 0; i < count; ++i) gens.push_back(rng.below(p.size()));
      std::sort(gens.begin(), gens.end());
    }
    return gens;
  };
  std::vector<int> mid_gens = pick(), src_gens = pick();
  Module mid = detail::projective_sum(p, mid_gens);
  Module src = detail::projective_sum(p, src_gens);
  NatTrans f = random_map_from_projectives(rng, src_gens, src, mid);
  ImageData im = image_module(src, mid, f);
  CokernelData ck = cokernel_module(src, mid, f);
  return ShortExact{std::move(im.module), std::move(mid), std::move(ck.module),
                    std::move(im.inclusion), std::move(ck.projection)};
}

inline std::string describe_poset(const Poset& p) {
  std::ostringstream os;
  os << "n=" << p.size();
  auto covers = p.covers();
  if (!covers.empty()) {
    os << " covers";
    for (auto [u, v] : covers) os << " " << u << "<" << v;
  }
  return os.str();
}

inline std::string describe_ideal_map(const IdealMap& f) {
  std::ostringstream os;
  os << "X(" << describe_poset(f.x()) << ") Y(" << describe_poset(f.y()) << ") F=";
  for (int b = 0; b < f.y().size(); ++b) {
    os << (b ? ";{" : "{");
    bool first = true;
    for (int v = 0; v < f.x().size(); ++v)
      if (f.contains(b, v)) {
        os << (first ? "" : ",") << v;
        first = false;
      }
    os << "}";
  }
  return os.str();
}

struct SweepOutcome {
  std::string description;
  bool tilting_ok = false;
  bool coxeter_ok = false;
  std::string detail;

  bool pass() const { return tilting_ok && coxeter_ok; }
};

/// One theorem check: the canonical candidate tilts and the Coxeter
/// polynomial of the pair poset matches the zero-pattern category's.
inline SweepOutcome check_theorem_instance(const IdealMap& f) {
  SweepOutcome o;
  o.description = describe_ideal_map(f);
  try {
    GammaData g = build_gamma(f);
    TiltingReport t = verify_tilting(g);
    o.tilting_ok = t.verified();
    if (!o.tilting_ok) o.detail = t.text();
    IntPolynomial a = coxeter_polynomial(incidence_category(g.gamma())).polynomial;
    IntPolynomial b = coxeter_polynomial(gamma_zero_category(g)).polynomial;
    o.coxeter_ok = a == b;
    if (!o.coxeter_ok)
      o.detail += "coxeter " + a.coeff_line() + " vs " + b.coeff_line() + "\n";
  } catch (const Error& e) {
    o.tilting_ok = o.coxeter_ok = false;
    o.detail = std::string("error: ") + e.what() + "\n";
  }
  return o;
}

struct SweepReport {
  long long total = 0;
  long long failed = 0;
  std::vector<SweepOutcome> failures;

  bool all_pass() const { return failed == 0; }

  std::string summary() const {
    std::ostringstream os;
    os << "checked " << total << " instances: ";
    if (failed == 0) {
      os << "all pass\n";
    } else {
      os << failed << " failures\n";
      for (const SweepOutcome& f : failures) {
        os << "FAIL " << f.description << " tilting=" << (f.tilting_ok ? "ok" : "BAD")
           << " coxeter=" << (f.coxeter_ok ? "ok" : "BAD") << "\n";
        if (!f.detail.empty()) os << f.detail;
      }
    }
    return os.str();
  }
};

namespace detail {

/// Runs the per-instance check over a fixed list, optionally on several
/// threads; results land in instance order regardless of scheduling.
inline SweepReport run_sweep(const std::vector<IdealMap>& instances, int jobs) {
  std::vector<SweepOutcome> results(instances.size());
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? static_cast<int>(hw) : 1;
  }
  jobs = std::min<long long>(jobs, std::max<std::size_t>(instances.size(), 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      results[i] = check_theorem_instance(instances[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        results[i] = check_theorem_instance(instances[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  SweepReport rep;
  rep.total = static_cast<long long>(results.size());
  for (SweepOutcome& o : results)
    if (!o.pass()) {
      ++rep.failed;
      rep.failures.push_back(std::move(o));
    }
  return rep;
}

}  // namespace detail

/// Every poset pair up to isomorphism with |X| <= nx, |Y| <= ny (empty posets
/// included) and every monotone ideal map between them.
inline std::vector<IdealMap> exhaustive_instances(int nx, int ny) {
  std::vector<std::vector<Poset>> by_size(static_cast<std::size_t>(std::max(nx, ny)) + 1);
  for (int s = 0; s <= std::max(nx, ny); ++s) by_size[s] = posets_up_to_iso(s);
  std::vector<IdealMap> out;
  for (int sx = 0; sx <= nx; ++sx)
    for (const Poset& x : by_size[sx])
      for (int sy = 0; sy <= ny; ++sy)
        for (const Poset& y : by_size[sy])
          for (IdealMap& f : all_ideal_maps(x, y)) out.push_back(std::move(f));
  return out;
}

inline SweepReport theorem_sweep_exhaustive(int nx, int ny, int jobs = 0) {
  return detail::run_sweep(exhaustive_instances(nx, ny), jobs);
}

/// Seeded random instances with sizes uniform in [1, nx] and [1, ny].
inline SweepReport theorem_sweep_random(int count, unsigned long long seed, int nx = 4,
                                        int ny = 4, int jobs = 0) {
  DetRng rng(seed);
  std::vector<IdealMap> instances;
  instances.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Poset x = random_poset(rng, rng.in_range(1, nx));
    Poset y = random_poset(rng, rng.in_range(1, ny));
    instances.push_back(random_ideal_map(rng, x, y));
  }
  return detail::run_sweep(instances, jobs);
}

/// All orientations of the n-vertex line, their interval-poset Coxeter
/// polynomials, and a first differing pair when one exists. Edge k of the
/// pattern string is '<' when vertex k lies below vertex k+1.
struct OrientationReport {
  int n = 0;
  std::vector<std::string> orientations;
  std::vector<IntPolynomial> polynomials;
  bool found_difference = false;
  int witness_a = -1;
  int witness_b = -1;

  std::string text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < orientations.size(); ++i)
      os << "orientation " << orientations[i] << " : " << polynomials[i].pretty()
         << "\n";
    if (found_difference)
      os << "differing pair: " << orientations[static_cast<std::size_t>(witness_a)]
         << " vs " << orientations[static_cast<std::size_t>(witness_b)] << "\n";
    else
      os << "all Coxeter polynomials equal\n";
    return os.str();
  }
};

inline OrientationReport orientations_int_search(int n) {
  if (n < 1) throw ValidationError("need at least one vertex");
  OrientationReport rep;
  rep.n = n;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<std::pair<int, int>> covers;
    std::string pattern;
    for (int k = 0; k + 1 < n; ++k) {
      if (mask & (1ul << k)) {
        covers.push_back({k, k + 1});
        pattern += '<';
      } else {
        covers.push_back({k + 1, k});
        pattern += '>';
      }
    }
    Poset p = Poset::from_covers(n, covers);
    rep.orientations.push_back(pattern);
    rep.polynomials.push_back(
        coxeter_polynomial(incidence_category(interval_poset(p).poset)).polynomial);
  }
  for (std::size_t a = 0; a < rep.polynomials.size() && !rep.found_difference; ++a)
    for (std::size_t b = a + 1; b < rep.polynomials.size(); ++b)
      if (rep.polynomials[a] != rep.polynomials[b]) {
        rep.found_difference = true;
        rep.witness_a = static_cast<int>(a);
        rep.witness_b = static_cast<int>(b);
        break;
      }
  return rep;
}

}  // namespace intervals
