#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intervals/errors.hpp"
#include "intervals/poset.hpp"

namespace intervals {

/// Monotone assignment y -> F(y) of closed subsets of X: each F(y) is closed
/// in X and F(y) grows along Y. Both conditions are checked on construction.
class IdealMap {
 public:
  IdealMap(Poset x, Poset y, std::vector<std::vector<char>> assignment)
      : x_(std::move(x)), y_(std::move(y)), f_(std::move(assignment)) {
    if (static_cast<int>(f_.size()) != y_.size())
      throw ValidationError("ideal map must assign a subset to every element of Y");
    for (const auto& s : f_)
      if (static_cast<int>(s.size()) != x_.size())
        throw ValidationError("subset size does not match X");
    for (int yy = 0; yy < y_.size(); ++yy)
      for (int v = 0; v < x_.size(); ++v) {
        if (!f_[yy][v]) continue;
        for (int u = 0; u < x_.size(); ++u)
          if (x_.leq(u, v) && !f_[yy][u])
            throw ValidationError("F(y) is not closed in X");
      }
    for (int a = 0; a < y_.size(); ++a)
      for (int b = 0; b < y_.size(); ++b) {
        if (!y_.leq(a, b)) continue;
        for (int v = 0; v < x_.size(); ++v)
          if (f_[a][v] && !f_[b][v])
            throw ValidationError("ideal map is not monotone");
      }
  }

  const Poset& x() const { return x_; }
  const Poset& y() const { return y_; }
  const std::vector<char>& at(int y) const { return f_[y]; }
  bool contains(int y, int x) const { return f_[y][x] != 0; }

 private:
  Poset x_;
  Poset y_;
  std::vector<std::vector<char>> f_;
};

/// X = Y and F(x) = [.,x]; the generalized-interval construction then
/// reproduces the interval poset and its zero-pattern category.
inline IdealMap interval_ideal_map(const Poset& x) {
  std::vector<std::vector<char>> f(x.size(), std::vector<char>(x.size(), 0));
  for (int y = 0; y < x.size(); ++y)
    for (int u = 0; u < x.size(); ++u)
      if (x.leq(u, y)) f[y][u] = 1;
  return IdealMap(x, x, std::move(f));
}

/// F(y) = { x : f(x) <= g(y) in Z }. Closedness and monotonicity come for
/// free from f and g being order-preserving.
inline IdealMap ideal_map_from_triple(const Poset& x, const Poset& y, const Poset& z,
                                      const PosetMorphism& f, const PosetMorphism& g) {
  if (!f.source.same_order(x) || !f.target.same_order(z))
    throw MorphismError("f must map X to Z");
  if (!g.source.same_order(y) || !g.target.same_order(z))
    throw MorphismError("g must map Y to Z");
  std::vector<std::vector<char>> assignment(y.size(), std::vector<char>(x.size(), 0));
  for (int b = 0; b < y.size(); ++b)
    for (int a = 0; a < x.size(); ++a)
      if (z.leq(f(a), g(b))) assignment[b][a] = 1;
  return IdealMap(x, y, std::move(assignment));
}

/// The poset Gamma of pairs (x,y) with x in F(y), ordered componentwise.
/// Elements are listed y-major then x, which fixes every downstream matrix.
class GammaData {
 public:
  explicit GammaData(IdealMap f) : f_(std::move(f)) {
    const Poset& x = f_.x();
    const Poset& y = f_.y();
    pair_index_.assign(static_cast<std::size_t>(x.size()) * y.size(), -1);
    std::vector<std::string> labels;
    for (int b = 0; b < y.size(); ++b)
      for (int a = 0; a < x.size(); ++a)
        if (f_.contains(b, a)) {
          pair_index_[static_cast<std::size_t>(a) * y.size() + b] =
              static_cast<int>(pairs_.size());
          pairs_.emplace_back(a, b);
          labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
        }
    int n = static_cast<int>(pairs_.size());
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x.leq(pairs_[i].first, pairs_[j].first) &&
            y.leq(pairs_[i].second, pairs_[j].second))
          leq[static_cast<std::size_t>(i) * n + j] = 1;
    gamma_ = Poset::from_relation(n, std::move(leq), std::move(labels));
  }

  const IdealMap& map() const { return f_; }
  const Poset& gamma() const { return gamma_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return gamma_.size(); }

  /// Index of (x,y) in gamma, or -1 when x is not in F(y).
  int index_of(int x, int y) const {
    if (x < 0 || x >= f_.x().size() || y < 0 || y >= f_.y().size()) return -1;
    return pair_index_[static_cast<std::size_t>(x) * f_.y().size() + y];
  }

  /// dim Hom in the zero-pattern category, by element index: 1 iff
  /// x <= x', y <= y' and x' in F(y).
  int zero_hom(int u, int v) const {
    auto [xu, yu] = pairs_[u];
    auto [xv, yv] = pairs_[v];
    if (!f_.x().leq(xu, xv) || !f_.y().leq(yu, yv)) return 0;
    return f_.contains(yu, xv) ? 1 : 0;
  }

  /// Same, by pairs; throws ElementError when a pair is not in gamma.
  int zero_hom_pairs(std::pair<int, int> u, std::pair<int, int> v) const {
    int iu = index_of(u.first, u.second);
    int iv = index_of(v.first, v.second);
    if (iu < 0 || iv < 0) throw ElementError("pair is not an element of gamma");
    return zero_hom(iu, iv);
  }

 private:
  IdealMap f_;
  Poset gamma_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
};

inline GammaData build_gamma(IdealMap f) { return GammaData(std::move(f)); }

/// Poset of weakly increasing l-tuples of P, ordered componentwise; `chains`
/// lists the tuples in lexicographic order.
struct MultichainPoset {
  Poset poset;
  std::vector<std::vector<int>> chains;

  int index_of(const std::vector<int>& c) const {
    for (std::size_t i = 0; i < chains.size(); ++i)
      if (chains[i] == c) return static_cast<int>(i);
    return -1;
  }
};

inline MultichainPoset multichain_poset(const Poset& p, int l) {
  if (l < 1) throw ValidationError("multichain length must be at least 1");
  MultichainPoset mc;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == l) {
      mc.chains.push_back(current);
      return;
    }
    for (int v = 0; v < p.size(); ++v) {
      if (!current.empty() && !p.leq(current.back(), v)) continue;
      current.push_back(v);
      self(self, depth + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  int n = static_cast<int>(mc.chains.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l_str;
    for (std::size_t k = 0; k < mc.chains[i].size(); ++k)
      l_str += (k ? "<=" : "") + p.label(mc.chains[i][k]);
    labels[i] = l_str;
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int k = 0; k < l && le; ++k)
        if (!p.leq(mc.chains[i][k], mc.chains[j][k])) le = false;
      if (le) leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  mc.poset = Poset::from_relation(n, std::move(leq), std::move(labels));
  return mc;
}

/// Order-preserving map from l-chains to (l+1)-chains of P that duplicates
/// the entry at `position`.
inline PosetMorphism degeneracy(const Poset& p, int l, int position) {
  if (position < 0 || position >= l)
    throw ValidationError("degeneracy position out of range");
  MultichainPoset src = multichain_poset(p, l);
  MultichainPoset tgt = multichain_poset(p, l + 1);
  std::vector<int> map(src.chains.size());
  for (std::size_t i = 0; i < src.chains.size(); ++i) {
    std::vector<int> c = src.chains[i];
    c.insert(c.begin() + position, c[position]);
    map[i] = tgt.index_of(c);
  }
  return PosetMorphism(src.poset, tgt.poset, std::move(map));
}

}  // namespace intervals
