#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "intervals/errors.hpp"
#include "intervals/gamma.hpp"
#include "intervals/matrix.hpp"
#include "intervals/polynomial.hpp"
#include "intervals/poset.hpp"

namespace intervals {

/// Finite k-linear category with all hom spaces of dimension 0 or 1 and a
/// prescribed zero-composition pattern. Composition of two nonzero generators
/// is either zero or the generator of the target hom space, so the whole
/// structure is a hom matrix plus a ternary pattern. Construction checks
/// identities, the unit law, and associativity of the pattern.
class ThinCategory {
 public:
  ThinCategory(int n, std::vector<char> hom, std::vector<char> compose)
      : n_(n), hom_(std::move(hom)), compose_(std::move(compose)) {
    if (static_cast<int>(hom_.size()) != n * n)
      throw ValidationError("hom matrix has wrong size");
    if (static_cast<int>(compose_.size()) != n * n * n)
      throw ValidationError("composition table has wrong size");
    validate();
  }

  int objects() const { return n_; }

  int hom_dim(int u, int v) const { return hom_[static_cast<std::size_t>(u) * n_ + v]; }

  /// Whether the composite of nonzero generators u -> v -> w is nonzero.
  /// Meaningful only when both generators exist.
  bool composes_nonzero(int u, int v, int w) const {
    return compose_[(static_cast<std::size_t>(u) * n_ + v) * n_ + w] != 0;
  }

  bool operator==(const ThinCategory& o) const {
    if (n_ != o.n_ || hom_ != o.hom_) return false;
    // Compare the pattern only on composable triples.
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!hom_dim(u, v)) continue;
        for (int w = 0; w < n_; ++w)
          if (hom_dim(v, w) && composes_nonzero(u, v, w) != o.composes_nonzero(u, v, w))
            return false;
      }
    return true;
  }
  bool operator!=(const ThinCategory& o) const { return !(*this == o); }

  /// Reversed arrows: hom(u,v) becomes hom(v,u) and composition reverses.
  ThinCategory op() const {
    std::vector<char> hom(static_cast<std::size_t>(n_) * n_, 0);
    std::vector<char> compose(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        hom[static_cast<std::size_t>(u) * n_ + v] = hom_[static_cast<std::size_t>(v) * n_ + u];
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        for (int w = 0; w < n_; ++w)
          compose[(static_cast<std::size_t>(u) * n_ + v) * n_ + w] =
              compose_[(static_cast<std::size_t>(w) * n_ + v) * n_ + u];
    return ThinCategory(n_, std::move(hom), std::move(compose));
  }

  /// Linear extension of the transitive closure of the hom relation; throws
  /// CycleError if that closure is not antisymmetric.
  std::vector<int> linear_extension() const {
    std::vector<char> reach = hom_;
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i) {
        if (!reach[static_cast<std::size_t>(i) * n_ + k]) continue;
        for (int j = 0; j < n_; ++j)
          if (reach[static_cast<std::size_t>(k) * n_ + j])
            reach[static_cast<std::size_t>(i) * n_ + j] = 1;
      }
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (reach[static_cast<std::size_t>(i) * n_ + j] &&
            reach[static_cast<std::size_t>(j) * n_ + i])
          throw CycleError("hom relation closes to a cycle");
    return Poset::from_relation(n_, std::move(reach)).linear_extension();
  }

 private:
  void validate() const {
    for (int u = 0; u < n_; ++u)
      if (!hom_dim(u, u)) throw AssociativityError("missing identity morphism");
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!hom_dim(u, v)) continue;
        if (!composes_nonzero(u, u, v) || !composes_nonzero(u, v, v))
          throw AssociativityError("composition with an identity must stay nonzero");
      }
    // Both evaluation orders of u -> v -> w -> t agree.
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!hom_dim(u, v)) continue;
        for (int w = 0; w < n_; ++w) {
          if (!hom_dim(v, w)) continue;
          bool uv_w = composes_nonzero(u, v, w);
          if (uv_w && !hom_dim(u, w))
            throw AssociativityError("nonzero composite into a zero hom space");
          for (int t = 0; t < n_; ++t) {
            if (!hom_dim(w, t)) continue;
            bool left = composes_nonzero(v, w, t) && composes_nonzero(u, v, t);
            bool right = uv_w && composes_nonzero(u, w, t);
            if (left != right)
              throw AssociativityError("composition pattern is not associative");
          }
        }
      }
  }

  int n_;
  std::vector<char> hom_;      // n*n, entries 0/1
  std::vector<char> compose_;  // n*n*n, (u,v,w) -> composite nonzero?
};

/// hom(u,v) = 1 iff u <= v; composites of nonzero generators never vanish.
inline ThinCategory incidence_category(const Poset& p) {
  int n = p.size();
  std::vector<char> hom(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> compose(static_cast<std::size_t>(n) * n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p.leq(u, v)) hom[static_cast<std::size_t>(u) * n + v] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!p.leq(u, v)) continue;
      for (int w = 0; w < n; ++w)
        if (p.leq(v, w)) compose[(static_cast<std::size_t>(u) * n + v) * n + w] = 1;
    }
  return ThinCategory(n, std::move(hom), std::move(compose));
}

/// The zero-pattern category on Gamma: hom from the three-condition predicate,
/// and a composite of generators u -> v -> w is nonzero exactly when the
/// generator u -> w exists.
inline ThinCategory gamma_zero_category(const GammaData& g) {
  int n = g.size();
  std::vector<char> hom(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> compose(static_cast<std::size_t>(n) * n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      hom[static_cast<std::size_t>(u) * n + v] = static_cast<char>(g.zero_hom(u, v));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!hom[static_cast<std::size_t>(u) * n + v]) continue;
      for (int w = 0; w < n; ++w)
        if (hom[static_cast<std::size_t>(v) * n + w])
          compose[(static_cast<std::size_t>(u) * n + v) * n + w] =
              hom[static_cast<std::size_t>(u) * n + w];
    }
  return ThinCategory(n, std::move(hom), std::move(compose));
}

/// Hom-dimension matrix in the given order; upper unitriangular whenever the
/// order is a linear extension of the hom relation.
inline Matrix<Int> cartan_matrix(const ThinCategory& t, const std::vector<int>& order) {
  int n = t.objects();
  Matrix<Int> c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = t.hom_dim(order[i], order[j]);
  return c;
}

/// Characteristic polynomial det(tI - M) over exact integers, by the
/// Faddeev-LeVerrier recurrence. Every division is exact.
inline IntPolynomial char_poly_exact(const Matrix<Int>& m) {
  int n = m.rows();
  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));
  Matrix<Int> mk = m;
  Int ck = -mk.trace();
  coeffs[n - 1] = ck;
  for (int k = 2; k <= n; ++k) {
    Matrix<Int> shifted = mk;
    for (int i = 0; i < n; ++i) shifted(i, i) += ck;
    mk = m * shifted;
    Int tr = mk.trace();
    Int q = -tr / k;
    if (q * k != -tr) throw ValidationError("inexact division in char poly");
    ck = q;
    coeffs[n - k] = ck;
  }
  return IntPolynomial(std::move(coeffs));
}

/// Cartan matrix, Coxeter matrix Phi = -C^{-T} C, and its characteristic
/// polynomial, all exact. The order used for C is recorded so reports are
/// reproducible. The transpose convention only flips Phi to a similar matrix,
/// so the polynomial does not depend on it.
struct CoxeterReport {
  std::vector<int> order;
  Matrix<Int> cartan;
  Matrix<Int> coxeter;
  IntPolynomial polynomial;
};

inline CoxeterReport coxeter_polynomial(const ThinCategory& t) {
  CoxeterReport r;
  r.order = t.linear_extension();
  r.cartan = cartan_matrix(t, r.order);
  Matrix<Int> inv = unitriangular_inverse(r.cartan);
  r.coxeter = -(inv.transposed() * r.cartan);
  r.polynomial = char_poly_exact(r.coxeter);
  return r;
}

/// Number of connected components of the undirected graph with an edge
/// wherever some hom space between two objects is nonzero.
inline int hom_connectivity_components(const ThinCategory& t) {
  int n = t.objects();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && (t.hom_dim(u, v) || t.hom_dim(v, u))) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  return c;
}

/// Side-by-side derived-equivalence invariants of two thin categories. All of
/// these are necessary conditions only; equality proves nothing.
struct InvariantComparison {
  int left_objects = 0, right_objects = 0;
  int left_components = 0, right_components = 0;
  IntPolynomial left_polynomial, right_polynomial;
  bool objects_equal = false;
  bool components_equal = false;
  bool polynomials_equal = false;

  bool all_equal() const { return objects_equal && components_equal && polynomials_equal; }

  std::string machine_lines() const {
    std::ostringstream os;
    auto line = [&](const char* name, const std::string& l, const std::string& r,
                    bool eq) {
      os << "invariant " << name << " " << l << " " << r << " "
         << (eq ? "equal" : "differ") << "\n";
    };
    line("objects", std::to_string(left_objects), std::to_string(right_objects),
         objects_equal);
    line("components", std::to_string(left_components), std::to_string(right_components),
         components_equal);
    line("coxeter", left_polynomial.coeff_token(), right_polynomial.coeff_token(),
         polynomials_equal);
    return os.str();
  }

  std::string human_text() const {
    std::ostringstream os;
    os << "objects:    " << left_objects << " vs " << right_objects << "\n"
       << "components: " << left_components << " vs " << right_components << "\n"
       << "coxeter:    " << left_polynomial.pretty() << "\n"
       << "        vs  " << right_polynomial.pretty() << "\n"
       << "necessary-condition check: "
       << (all_equal() ? "all invariants equal" : "invariants differ") << "\n";
    return os.str();
  }
};

inline InvariantComparison derived_invariant_report(const ThinCategory& a,
                                                    const ThinCategory& b) {
  InvariantComparison r;
  r.left_objects = a.objects();
  r.right_objects = b.objects();
  r.left_components = hom_connectivity_components(a);
  r.right_components = hom_connectivity_components(b);
  r.left_polynomial = coxeter_polynomial(a).polynomial;
  r.right_polynomial = coxeter_polynomial(b).polynomial;
  r.objects_equal = r.left_objects == r.right_objects;
  r.components_equal = r.left_components == r.right_components;
  r.polynomials_equal = r.left_polynomial == r.right_polynomial;
  return r;
}

}  // namespace intervals
