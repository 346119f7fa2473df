#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intervals/errors.hpp"

namespace intervals {

/// Finite poset on elements 0..size-1 with the full order relation stored as
/// a boolean table, so comparability queries are O(1). Values are immutable
/// after construction and validated against the three order axioms.
class Poset {
 public:
  Poset() = default;  // the empty poset

  /// Builds from an explicit relation table leq[u*n+v]; validates the axioms.
  static Poset from_relation(int n, std::vector<char> leq,
                             std::vector<std::string> labels = {}) {
    Poset p;
    p.n_ = n;
    p.leq_ = std::move(leq);
    p.labels_ = std::move(labels);
    if (static_cast<int>(p.leq_.size()) != n * n)
      throw ValidationError("relation table has wrong size");
    p.validate();
    return p;
  }

  /// Reflexive-transitive closure of a cover relation. Throws CycleError when
  /// the closure would violate antisymmetry.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> labels = {}) {
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (auto [a, b] : covers) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw ValidationError("cover index out of range");
      leq[static_cast<std::size_t>(a) * n + b] = 1;
    }
    // Warshall closure; the input order of covers is irrelevant to the result.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<std::size_t>(k) * n + j])
            leq[static_cast<std::size_t>(i) * n + j] = 1;
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (leq[static_cast<std::size_t>(i) * n + j] &&
            leq[static_cast<std::size_t>(j) * n + i])
          throw CycleError("cover relation contains a directed cycle");
    Poset p;
    p.n_ = n;
    p.leq_ = std::move(leq);
    p.labels_ = std::move(labels);
    return p;
  }

  /// The total order 0 < 1 < ... < n-1.
  static Poset chain(int n) {
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = 1;
    Poset p;
    p.n_ = n;
    p.leq_ = std::move(leq);
    return p;
  }

  static Poset antichain(int n) {
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    Poset p;
    p.n_ = n;
    p.leq_ = std::move(leq);
    return p;
  }

  int size() const { return n_; }

  bool leq(int u, int v) const { return leq_[static_cast<std::size_t>(u) * n_ + v]; }
  bool less(int u, int v) const { return u != v && leq(u, v); }
  bool comparable(int u, int v) const { return leq(u, v) || leq(v, u); }

  std::string label(int u) const {
    if (u < static_cast<int>(labels_.size()) && !labels_[u].empty()) return labels_[u];
    return std::to_string(u);
  }
  bool has_labels() const { return !labels_.empty(); }

  Poset with_labels(std::vector<std::string> labels) const {
    Poset p = *this;
    p.labels_ = std::move(labels);
    return p;
  }

  /// Equality of carrier size and order relation; labels are ignored.
  bool same_order(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

  /// Hasse covers (u,v): u < v with nothing strictly between, in (u,v)
  /// lexicographic order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> cs;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!less(u, v)) continue;
        bool cover = true;
        for (int w = 0; w < n_ && cover; ++w)
          if (less(u, w) && less(w, v)) cover = false;
        if (cover) cs.emplace_back(u, v);
      }
    return cs;
  }

  std::vector<int> down_set(int v) const {
    std::vector<int> d;
    for (int u = 0; u < n_; ++u)
      if (leq(u, v)) d.push_back(u);
    return d;
  }

  std::vector<int> up_set(int v) const {
    std::vector<int> d;
    for (int u = 0; u < n_; ++u)
      if (leq(v, u)) d.push_back(u);
    return d;
  }

  /// Total order refining the partial order; ties broken by smallest index.
  std::vector<int> linear_extension() const {
    std::vector<char> placed(n_, 0);
    std::vector<int> order;
    order.reserve(n_);
    for (int step = 0; step < n_; ++step) {
      int chosen = -1;
      for (int v = 0; v < n_ && chosen < 0; ++v) {
        if (placed[v]) continue;
        bool minimal = true;
        for (int u = 0; u < n_; ++u)
          if (!placed[u] && less(u, v)) {
            minimal = false;
            break;
          }
        if (minimal) chosen = v;
      }
      placed[chosen] = 1;
      order.push_back(chosen);
    }
    return order;
  }

  /// Components of the comparability graph, each sorted, listed by smallest
  /// member.
  std::vector<std::vector<int>> connected_components() const {
    std::vector<int> comp(n_, -1);
    int c = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v)
          if (comp[v] < 0 && comparable(u, v)) {
            comp[v] = c;
            stack.push_back(v);
          }
      }
      ++c;
    }
    std::vector<std::vector<int>> parts(c);
    for (int v = 0; v < n_; ++v) parts[comp[v]].push_back(v);
    return parts;
  }

  Poset opposite() const {
    std::vector<char> leq(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        leq[static_cast<std::size_t>(u) * n_ + v] = this->leq(v, u);
    Poset p;
    p.n_ = n_;
    p.leq_ = std::move(leq);
    p.labels_ = labels_;
    return p;
  }

  /// Longest-chain-below grading; minimal elements have height 0.
  std::vector<int> heights() const {
    std::vector<int> h(n_, 0);
    for (int v : linear_extension())
      for (int u = 0; u < n_; ++u)
        if (less(u, v)) h[v] = std::max(h[v], h[u] + 1);
    return h;
  }

 private:
  void validate() const {
    for (int u = 0; u < n_; ++u)
      if (!leq(u, u)) throw ValidationError("order relation is not reflexive");
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && leq(u, v) && leq(v, u))
          throw ValidationError("order relation is not antisymmetric");
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!leq(u, v)) continue;
        for (int w = 0; w < n_; ++w)
          if (leq(v, w) && !leq(u, w))
            throw ValidationError("order relation is not transitive");
      }
  }

  int n_ = 0;
  std::vector<char> leq_;
  std::vector<std::string> labels_;
};

/// Carrier P x Q ordered componentwise; element (p,q) has index p*|Q| + q.
inline Poset product(const Poset& p, const Poset& q) {
  int n = p.size() * q.size();
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      int u = a * q.size() + b;
      labels[u] = "(" + p.label(a) + "," + q.label(b) + ")";
      for (int c = 0; c < p.size(); ++c)
        for (int d = 0; d < q.size(); ++d)
          if (p.leq(a, c) && q.leq(b, d))
            leq[static_cast<std::size_t>(u) * n + c * q.size() + d] = 1;
    }
  return Poset::from_relation(n, std::move(leq), std::move(labels));
}

/// P elements keep their indices, Q elements are shifted by |P|.
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  int n = p.size() + q.size();
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v)
      leq[static_cast<std::size_t>(u) * n + v] = p.leq(u, v);
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v)
      leq[static_cast<std::size_t>(p.size() + u) * n + p.size() + v] = q.leq(u, v);
  return Poset::from_relation(n, std::move(leq));
}

/// Poset of intervals [a,b] (a <= b), ordered by [a,b] <= [c,d] iff a <= c and
/// b <= d. `pairs` records the (a,b) behind each element, in (a,b)
/// lexicographic order.
struct IntervalPoset {
  Poset poset;
  std::vector<std::pair<int, int>> pairs;

  int index_of(int a, int b) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(a, b)) return static_cast<int>(i);
    return -1;
  }
};

inline IntervalPoset interval_poset(const Poset& x) {
  IntervalPoset ip;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (x.leq(a, b)) ip.pairs.emplace_back(a, b);
  int n = static_cast<int>(ip.pairs.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    auto [a, b] = ip.pairs[i];
    labels[i] = "[" + x.label(a) + "," + x.label(b) + "]";
    for (int j = 0; j < n; ++j) {
      auto [c, d] = ip.pairs[j];
      if (x.leq(a, c) && x.leq(b, d)) leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  ip.poset = Poset::from_relation(n, std::move(leq), std::move(labels));
  return ip;
}

/// Induced subposet on the elements with member[v] != 0. `elements` maps
/// sub-index to parent index; `parent_to_sub` is -1 off the subset.
struct InducedSubposet {
  Poset poset;
  std::vector<int> elements;
  std::vector<int> parent_to_sub;
};

inline InducedSubposet induced_subposet(const Poset& p, const std::vector<char>& member) {
  InducedSubposet s;
  s.parent_to_sub.assign(p.size(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v)
    if (member[v]) {
      s.parent_to_sub[v] = static_cast<int>(s.elements.size());
      s.elements.push_back(v);
      labels.push_back(p.label(v));
    }
  int n = static_cast<int>(s.elements.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i) * n + j] = p.leq(s.elements[i], s.elements[j]);
  s.poset = Poset::from_relation(n, std::move(leq), std::move(labels));
  return s;
}

/// All closed (downward) subsets of P, with the inclusion-ordered poset J(P).
/// ideals[i] is a membership vector over P. Listing is deterministic: sorted
/// by cardinality, then lexicographically on the membership vector.
struct IdealLattice {
  std::vector<std::vector<char>> ideals;
  Poset j;

  int index_of(const std::vector<char>& ideal) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i] == ideal) return static_cast<int>(i);
    return -1;
  }
};

inline IdealLattice ideals(const Poset& p, std::size_t max_count = 1u << 20) {
  // Walk a linear extension; an element may join only when all elements below
  // it are already in. This enumerates exactly the closed subsets.
  std::vector<int> order = p.linear_extension();
  std::vector<std::vector<char>> found;
  std::vector<char> current(p.size(), 0);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      if (found.size() >= max_count)
        throw SizeError("ideal count exceeds the configured bound");
      found.push_back(current);
      return;
    }
    int v = order[pos];
    self(self, pos + 1);  // leave v out
    bool closed = true;
    for (int u = 0; u < p.size() && closed; ++u)
      if (p.less(u, v) && !current[u]) closed = false;
    if (closed) {
      current[v] = 1;
      self(self, pos + 1);
      current[v] = 0;
    }
  };
  recurse(recurse, 0);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int ca = static_cast<int>(std::count(a.begin(), a.end(), 1));
    int cb = static_cast<int>(std::count(b.begin(), b.end(), 1));
    if (ca != cb) return ca < cb;
    return a < b;
  });

  IdealLattice lat;
  lat.ideals = std::move(found);
  int n = static_cast<int>(lat.ideals.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "{";
    for (int v = 0; v < p.size(); ++v)
      if (lat.ideals[i][v]) l += (l.size() > 1 ? "," : "") + p.label(v);
    labels[i] = l + "}";
    for (int j = 0; j < n; ++j) {
      bool subset = true;
      for (int v = 0; v < p.size() && subset; ++v)
        if (lat.ideals[i][v] && !lat.ideals[j][v]) subset = false;
      if (subset) leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  lat.j = Poset::from_relation(n, std::move(leq), std::move(labels));
  return lat;
}

/// Order-isomorphism search by backtracking. Elements are matched in order of
/// (height, down-set size, index) and candidates are tried in the same key
/// order, so a witness is reproducible. A returned witness has been checked
/// bijective and order-preserving both ways.
inline std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  int n = p.size();
  if (n == 0) return std::vector<int>{};

  auto keys = [](const Poset& r) {
    std::vector<int> h = r.heights();
    std::vector<std::array<int, 3>> k(r.size());
    for (int v = 0; v < r.size(); ++v)
      k[v] = {h[v], static_cast<int>(r.down_set(v).size()),
              static_cast<int>(r.up_set(v).size())};
    return k;
  };
  auto pk = keys(p), qk = keys(q);
  {
    auto ps = pk, qs = qk;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return std::nullopt;
  }

  std::vector<int> source_order(n);
  std::iota(source_order.begin(), source_order.end(), 0);
  std::stable_sort(source_order.begin(), source_order.end(),
                   [&](int a, int b) { return pk[a] < pk[b]; });

  std::vector<int> image(n, -1), used(n, 0);
  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int u = source_order[pos];
    for (int w = 0; w < n; ++w) {
      if (used[w] || qk[w] != pk[u]) continue;
      bool ok = true;
      for (int prev = 0; prev < pos && ok; ++prev) {
        int t = source_order[prev];
        if (p.leq(u, t) != q.leq(w, image[t])) ok = false;
        if (ok && p.leq(t, u) != q.leq(image[t], w)) ok = false;
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      image[u] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;

  // Verify the witness before handing it out.
  std::vector<int> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (image[v] < 0 || seen[image[v]]) return std::nullopt;
    seen[image[v]] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p.leq(u, v) != q.leq(image[u], image[v])) return std::nullopt;
  return image;
}

/// Order-preserving map between two fixed posets; validated on construction.
struct PosetMorphism {
  Poset source;
  Poset target;
  std::vector<int> map;

  PosetMorphism(Poset src, Poset tgt, std::vector<int> m)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source.size())
      throw MorphismError("map size does not match source");
    for (int v : map)
      if (v < 0 || v >= target.size()) throw MorphismError("map value out of range");
    for (int u = 0; u < source.size(); ++u)
      for (int v = 0; v < source.size(); ++v)
        if (source.leq(u, v) && !target.leq(map[u], map[v]))
          throw MorphismError("map is not order-preserving");
  }

  int operator()(int u) const { return map[u]; }
};

inline PosetMorphism identity_morphism(const Poset& p) {
  std::vector<int> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  return PosetMorphism(p, p, std::move(id));
}

}  // namespace intervals
