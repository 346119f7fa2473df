#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intervals/errors.hpp"
#include "intervals/exact.hpp"
#include "intervals/gamma.hpp"
#include "intervals/matrix.hpp"
#include "intervals/poset.hpp"

namespace intervals {

/// Functor from a finite poset to finite-dimensional rational vector spaces.
/// Construction takes dimensions per element and matrices on covers (missing
/// covers default to zero), then checks that all cover-path composites agree
/// and stores the full table of structure maps.
class Module {
 public:
  Module(Poset p, std::vector<int> dims,
         const std::map<std::pair<int, int>, Matrix<Rat>>& cover_maps = {})
      : poset_(std::move(p)), dims_(std::move(dims)) {
    int n = poset_.size();
    if (static_cast<int>(dims_.size()) != n)
      throw ValidationError("dimension vector has wrong length");
    for (int d : dims_)
      if (d < 0) throw ValidationError("negative dimension");
    auto covers = poset_.covers();
    std::map<std::pair<int, int>, Matrix<Rat>> given = cover_maps;
    std::map<std::pair<int, int>, Matrix<Rat>> on_cover;
    for (auto [u, v] : covers) {
      auto it = given.find({u, v});
      if (it == given.end()) {
        on_cover.emplace(std::make_pair(u, v), Matrix<Rat>(dims_[v], dims_[u]));
      } else {
        if (it->second.rows() != dims_[v] || it->second.cols() != dims_[u])
          throw ValidationError("cover map has wrong shape");
        on_cover.emplace(it->first, it->second);
        given.erase(it);
      }
    }
    if (!given.empty()) throw ValidationError("map given on a non-cover pair");
    table_.assign(static_cast<std::size_t>(n) * n, Matrix<Rat>(0, 0));
    // Propagate along covers in linear-extension order; every saturated chain
    // from u to w must yield the same composite.
    auto order = poset_.linear_extension();
    for (int u = 0; u < n; ++u) {
      at(u, u) = Matrix<Rat>::identity(dims_[u]);
      for (int w : order) {
        if (w == u || !poset_.less(u, w)) continue;
        bool have = false;
        Matrix<Rat> acc(0, 0);
        for (auto [a, b] : covers) {
          if (b != w || !poset_.leq(u, a)) continue;
          Matrix<Rat> cand = on_cover.at({a, b}) * at(u, a);
          if (!have) {
            acc = cand;
            have = true;
          } else if (acc != cand) {
            throw ValidationError("structure maps do not commute");
          }
        }
        at(u, w) = acc;
      }
    }
  }

  const Poset& poset() const { return poset_; }
  int dim(int z) const { return dims_[z]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }

  const Matrix<Rat>& map(int u, int v) const {
    if (!poset_.leq(u, v)) throw ValidationError("structure map needs u <= v");
    return table_[static_cast<std::size_t>(u) * poset_.size() + v];
  }

  bool operator==(const Module& o) const {
    if (!poset_.same_order(o.poset_) || dims_ != o.dims_) return false;
    for (auto [u, v] : poset_.covers())
      if (map(u, v) != o.map(u, v)) return false;
    return true;
  }
  bool operator!=(const Module& o) const { return !(*this == o); }

 private:
  Matrix<Rat>& at(int u, int v) {
    return table_[static_cast<std::size_t>(u) * poset_.size() + v];
  }

  Poset poset_;
  std::vector<int> dims_;
  std::vector<Matrix<Rat>> table_;  // (u,v) entry meaningful iff u <= v
};

inline bool is_zero_module(const Module& m) { return m.total_dim() == 0; }

/// One-dimensional on {z : a <= z <= b} with identity maps inside.
inline Module interval_module(const Poset& p, int a, int b) {
  if (a < 0 || b < 0 || a >= p.size() || b >= p.size())
    throw ElementError("interval endpoint out of range");
  if (!p.leq(a, b)) throw IntervalError("interval endpoints must satisfy a <= b");
  std::vector<int> dims(p.size(), 0);
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(a, z) && p.leq(z, b)) dims[z] = 1;
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers())
    if (dims[u] && dims[v]) maps.emplace(std::make_pair(u, v), Matrix<Rat>::identity(1));
  return Module(p, std::move(dims), maps);
}

/// Indecomposable projective at y: one-dimensional on the up-set of y.
inline Module projective_module(const Poset& p, int y) {
  if (y < 0 || y >= p.size()) throw ElementError("element out of range");
  std::vector<int> dims(p.size(), 0);
  for (int z : p.up_set(y)) dims[z] = 1;
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers())
    if (dims[u] && dims[v]) maps.emplace(std::make_pair(u, v), Matrix<Rat>::identity(1));
  return Module(p, std::move(dims), maps);
}

/// Indecomposable injective at y: one-dimensional on the down-set of y.
inline Module injective_module(const Poset& p, int y) {
  if (y < 0 || y >= p.size()) throw ElementError("element out of range");
  std::vector<int> dims(p.size(), 0);
  for (int z : p.down_set(y)) dims[z] = 1;
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers())
    if (dims[u] && dims[v]) maps.emplace(std::make_pair(u, v), Matrix<Rat>::identity(1));
  return Module(p, std::move(dims), maps);
}

/// Block sum; at each element the part s occupies coordinates after the parts
/// before it, so offsets are prefix sums of the part dimensions.
inline Module direct_sum(const std::vector<Module>& parts, const Poset& p) {
  int n = p.size();
  for (const Module& m : parts)
    if (!m.poset().same_order(p)) throw BaseError("summand over a different poset");
  std::vector<int> dims(n, 0);
  for (const Module& m : parts)
    for (int z = 0; z < n; ++z) dims[z] += m.dim(z);
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers()) {
    Matrix<Rat> block(dims[v], dims[u]);
    int ro = 0, co = 0;
    for (const Module& m : parts) {
      const Matrix<Rat>& f = m.map(u, v);
      for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) block(ro + i, co + j) = f(i, j);
      ro += m.dim(v);
      co += m.dim(u);
    }
    maps.emplace(std::make_pair(u, v), std::move(block));
  }
  return Module(p, std::move(dims), maps);
}

/// Natural transformation as one matrix per element, indexed like the poset.
using NatTrans = std::vector<Matrix<Rat>>;

inline bool is_natural(const Module& src, const Module& tgt, const NatTrans& t) {
  const Poset& p = src.poset();
  if (!tgt.poset().same_order(p)) throw BaseError("modules over different posets");
  if (static_cast<int>(t.size()) != p.size()) return false;
  for (int z = 0; z < p.size(); ++z)
    if (t[z].rows() != tgt.dim(z) || t[z].cols() != src.dim(z)) return false;
  for (auto [u, v] : p.covers())
    if (tgt.map(u, v) * t[u] != t[v] * src.map(u, v)) return false;
  return true;
}

inline NatTrans zero_transformation(const Module& src, const Module& tgt) {
  NatTrans t;
  for (int z = 0; z < src.poset().size(); ++z)
    t.push_back(Matrix<Rat>(tgt.dim(z), src.dim(z)));
  return t;
}

/// Componentwise composite of f then g.
inline NatTrans compose_transformations(const NatTrans& f, const NatTrans& g) {
  NatTrans h;
  h.reserve(f.size());
  for (std::size_t z = 0; z < f.size(); ++z) h.push_back(g[z] * f[z]);
  return h;
}

inline bool transformation_is_zero(const NatTrans& t) {
  for (const auto& c : t)
    if (!c.is_zero()) return false;
  return true;
}

struct HomSpace {
  int dimension = 0;
  std::vector<NatTrans> basis;
};

/// Solves the naturality equations on covers. Unknowns are the entries of the
/// per-element matrices, element major then row major; the basis comes from
/// the reduced null space, so it is canonical for a fixed input order.
inline HomSpace hom_space(const Module& src, const Module& tgt) {
  const Poset& p = src.poset();
  if (!tgt.poset().same_order(p)) throw BaseError("modules over different posets");
  int n = p.size();
  std::vector<int> offset(n + 1, 0);
  for (int z = 0; z < n; ++z) offset[z + 1] = offset[z] + tgt.dim(z) * src.dim(z);
  int unknowns = offset[n];
  auto covers = p.covers();
  int rows = 0;
  for (auto [u, v] : covers) rows += tgt.dim(v) * src.dim(u);
  Matrix<Rat> system(rows, unknowns);
  int r = 0;
  for (auto [u, v] : covers) {
    const Matrix<Rat>& nm = tgt.map(u, v);
    const Matrix<Rat>& mm = src.map(u, v);
    for (int i = 0; i < tgt.dim(v); ++i)
      for (int j = 0; j < src.dim(u); ++j) {
        for (int k = 0; k < tgt.dim(u); ++k)
          system(r, offset[u] + k * src.dim(u) + j) += nm(i, k);
        for (int l = 0; l < src.dim(v); ++l)
          system(r, offset[v] + i * src.dim(v) + l) -= mm(l, j);
        ++r;
      }
  }
  Matrix<Rat> kernel = null_space(system);
  HomSpace h;
  h.dimension = kernel.cols();
  for (int c = 0; c < kernel.cols(); ++c) {
    NatTrans t;
    for (int z = 0; z < n; ++z) {
      Matrix<Rat> comp(tgt.dim(z), src.dim(z));
      for (int i = 0; i < tgt.dim(z); ++i)
        for (int j = 0; j < src.dim(z); ++j)
          comp(i, j) = kernel(offset[z] + i * src.dim(z) + j, c);
      t.push_back(std::move(comp));
    }
    h.basis.push_back(std::move(t));
  }
  return h;
}

struct KernelData {
  Module module;
  NatTrans inclusion;  // into the source of the map
};

struct ImageData {
  Module module;
  NatTrans projection;  // from the source, surjective
  NatTrans inclusion;   // into the target
};

struct CokernelData {
  Module module;
  NatTrans projection;  // from the target, surjective
};

inline KernelData kernel_module(const Module& src, const Module& tgt, const NatTrans& f) {
  const Poset& p = src.poset();
  int n = p.size();
  std::vector<Matrix<Rat>> basis;
  std::vector<int> dims(n);
  for (int z = 0; z < n; ++z) {
    basis.push_back(null_space(f[z]));
    dims[z] = basis[z].cols();
  }
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers()) {
    auto x = solve(basis[v], src.map(u, v) * basis[u]);
    if (!x) throw MorphismError("kernel is not a submodule; map is not natural");
    maps.emplace(std::make_pair(u, v), std::move(*x));
  }
  return KernelData{Module(p, std::move(dims), maps), std::move(basis)};
}

inline ImageData image_module(const Module& src, const Module& tgt, const NatTrans& f) {
  const Poset& p = tgt.poset();
  int n = p.size();
  std::vector<Matrix<Rat>> basis;
  std::vector<int> dims(n);
  for (int z = 0; z < n; ++z) {
    basis.push_back(column_space_basis(f[z]));
    dims[z] = basis[z].cols();
  }
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers()) {
    auto x = solve(basis[v], tgt.map(u, v) * basis[u]);
    if (!x) throw MorphismError("image is not a submodule; map is not natural");
    maps.emplace(std::make_pair(u, v), std::move(*x));
  }
  NatTrans proj;
  for (int z = 0; z < n; ++z) {
    auto x = solve(basis[z], f[z]);
    if (!x) throw MorphismError("image basis does not span the image");
    proj.push_back(std::move(*x));
  }
  return ImageData{Module(p, std::move(dims), maps), std::move(proj), std::move(basis)};
}

inline CokernelData cokernel_module(const Module& src, const Module& tgt,
                                    const NatTrans& f) {
  const Poset& p = tgt.poset();
  int n = p.size();
  std::vector<Matrix<Rat>> rep_cols(n, Matrix<Rat>(0, 0));
  std::vector<Matrix<Rat>> proj(n, Matrix<Rat>(0, 0));
  std::vector<int> dims(n);
  for (int z = 0; z < n; ++z) {
    Matrix<Rat> im = column_space_basis(f[z]);
    std::vector<int> reps = complement_indices(im);
    dims[z] = static_cast<int>(reps.size());
    Matrix<Rat> cols(tgt.dim(z), dims[z]);
    for (int c = 0; c < dims[z]; ++c) cols(reps[c], c) = 1;
    rep_cols[z] = cols;
    // Bottom rows of the inverse of [image basis | representatives] project
    // onto the representative coordinates.
    Matrix<Rat> full = im.augmented(cols);
    auto inv = solve(full, Matrix<Rat>::identity(tgt.dim(z)));
    if (!inv) throw MorphismError("image and representatives do not span");
    Matrix<Rat> pz(dims[z], tgt.dim(z));
    for (int c = 0; c < dims[z]; ++c)
      for (int j = 0; j < tgt.dim(z); ++j) pz(c, j) = (*inv)(im.cols() + c, j);
    proj[z] = std::move(pz);
  }
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : p.covers())
    maps.emplace(std::make_pair(u, v), proj[v] * (tgt.map(u, v) * rep_cols[u]));
  return CokernelData{Module(p, std::move(dims), maps), std::move(proj)};
}

/// Componentwise test: f injective, g surjective, g f = 0, and dimensions
/// additive. For maps of modules this is exactness at all three spots.
inline bool ses_is_exact(const Module& a, const Module& b, const Module& c,
                         const NatTrans& f, const NatTrans& g) {
  for (int z = 0; z < a.poset().size(); ++z) {
    if (rank(f[z]) != a.dim(z)) return false;
    if (rank(g[z]) != c.dim(z)) return false;
    if (!(g[z] * f[z]).is_zero()) return false;
    if (a.dim(z) + c.dim(z) != b.dim(z)) return false;
  }
  return true;
}

/// Projective resolution tracked by generator slots. terms[i] is a direct sum
/// of indecomposable projectives whose generator elements are summands[i], in
/// slot order; maps[0] is the augmentation onto target and maps[i] goes from
/// terms[i] to terms[i-1].
struct ResolutionComplex {
  Module target;
  std::vector<Module> terms;
  std::vector<std::vector<int>> summands;
  std::vector<NatTrans> maps;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

namespace detail {

/// Slot offset of summand s of a projective sum at element z; slots with
/// generator below z each contribute one coordinate, in slot order.
inline int slot_offset(const Poset& p, const std::vector<int>& gens, int s, int z) {
  int o = 0;
  for (int t = 0; t < s; ++t)
    if (p.leq(gens[t], z)) ++o;
  return o;
}

inline Module projective_sum(const Poset& p, const std::vector<int>& gens) {
  std::vector<Module> parts;
  parts.reserve(gens.size());
  for (int g : gens) parts.push_back(projective_module(p, g));
  return direct_sum(parts, p);
}

/// Projective cover of current: generator multiset and the augmentation.
/// The radical at v is spanned by images from covers below v; standard basis
/// vectors completing it lift the top.
struct CoverData {
  std::vector<int> gens;
  Module cover;
  NatTrans augmentation;
};

inline CoverData projective_cover(const Module& current) {
  const Poset& p = current.poset();
  int n = p.size();
  auto covers = p.covers();
  std::vector<int> gens;
  std::vector<Matrix<Rat>> lift(n, Matrix<Rat>(0, 0));
  for (int v = 0; v < n; ++v) {
    Matrix<Rat> stacked(current.dim(v), 0);
    for (auto [a, b] : covers)
      if (b == v) stacked = stacked.augmented(current.map(a, b));
    Matrix<Rat> rad = column_space_basis(stacked);
    std::vector<int> tops = complement_indices(rad);
    Matrix<Rat> lv(current.dim(v), static_cast<int>(tops.size()));
    for (int c = 0; c < static_cast<int>(tops.size()); ++c) lv(tops[c], c) = 1;
    lift[v] = std::move(lv);
    for (std::size_t c = 0; c < tops.size(); ++c) gens.push_back(v);
  }
  Module cover = projective_sum(p, gens);
  std::vector<int> seen(n, 0);
  std::vector<int> slot_col(gens.size(), 0);
  for (std::size_t s = 0; s < gens.size(); ++s) slot_col[s] = seen[gens[s]]++;
  NatTrans eps;
  for (int z = 0; z < n; ++z) {
    Matrix<Rat> comp(current.dim(z), cover.dim(z));
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int g = gens[s];
      if (!p.leq(g, z)) continue;
      int col = slot_offset(p, gens, static_cast<int>(s), z);
      Matrix<Rat> vec =
          current.map(g, z) * lift[g].columns(slot_col[s], slot_col[s] + 1);
      for (int i = 0; i < current.dim(z); ++i) comp(i, col) = vec(i, 0);
    }
    eps.push_back(std::move(comp));
  }
  return CoverData{std::move(gens), std::move(cover), std::move(eps)};
}

}  // namespace detail

/// Iterated projective covers; stops when a kernel vanishes. The length never
/// exceeds the poset size for incidence algebras, so going past that bound
/// throws LengthError to flag a bug.
inline ResolutionComplex projective_resolution(const Module& m, int max_length = -1) {
  const Poset& p = m.poset();
  if (max_length < 0) max_length = p.size();
  ResolutionComplex res{m, {}, {}, {}};
  Module current = m;
  NatTrans incl;  // inclusion of current into the previous term, empty at step 0
  for (int step = 0;; ++step) {
    if (step > max_length) throw LengthError("projective resolution exceeds bound");
    detail::CoverData c = detail::projective_cover(current);
    res.terms.push_back(c.cover);
    res.summands.push_back(c.gens);
    res.maps.push_back(step == 0 ? c.augmentation
                                 : compose_transformations(c.augmentation, incl));
    KernelData k = kernel_module(c.cover, current, c.augmentation);
    if (is_zero_module(k.module)) return res;
    current = k.module;
    incl = k.inclusion;
  }
}

/// dim Ext^i(res.target, n) from ranks in the complex Hom(terms, n). Slots of
/// a projective sum identify Hom(term, n) with the stacked spaces n(generator)
/// and the differentials become block matrices of structure maps of n.
inline int ext_dim(const ResolutionComplex& res, const Module& n, int i) {
  const Poset& p = n.poset();
  if (!p.same_order(res.target.poset())) throw BaseError("modules over different posets");
  int len = res.length();
  if (i < 0 || i > len) return 0;
  auto hom_dim = [&](const std::vector<int>& gens) {
    int d = 0;
    for (int g : gens) d += n.dim(g);
    return d;
  };
  // Differential Hom(terms[k-1], n) -> Hom(terms[k], n) induced by maps[k].
  auto delta_rank = [&](int k) -> int {
    const std::vector<int>& src_gens = res.summands[k - 1];
    const std::vector<int>& tgt_gens = res.summands[k];
    std::vector<int> so(src_gens.size() + 1, 0), to(tgt_gens.size() + 1, 0);
    for (std::size_t s = 0; s < src_gens.size(); ++s) so[s + 1] = so[s] + n.dim(src_gens[s]);
    for (std::size_t t = 0; t < tgt_gens.size(); ++t) to[t + 1] = to[t] + n.dim(tgt_gens[t]);
    Matrix<Rat> d(to.back(), so.back());
    for (std::size_t t = 0; t < tgt_gens.size(); ++t) {
      int v = tgt_gens[t];
      int col = detail::slot_offset(p, tgt_gens, static_cast<int>(t), v);
      for (std::size_t s = 0; s < src_gens.size(); ++s) {
        int w = src_gens[s];
        if (!p.leq(w, v)) continue;
        int row = detail::slot_offset(p, src_gens, static_cast<int>(s), v);
        Rat c = res.maps[k][v](row, col);
        if (c == 0) continue;
        const Matrix<Rat>& f = n.map(w, v);
        for (int a = 0; a < f.rows(); ++a)
          for (int b = 0; b < f.cols(); ++b) d(to[t] + a, so[s] + b) += c * f(a, b);
      }
    }
    return rank(d);
  };
  int middle = hom_dim(res.summands[i]);
  int in_rank = i >= 1 ? delta_rank(i) : 0;
  int out_rank = i + 1 <= len ? delta_rank(i + 1) : 0;
  return middle - in_rank - out_rank;
}

inline int ext_dim(const Module& m, const Module& n, int i) {
  return ext_dim(projective_resolution(m), n, i);
}

/// Elements of x lying in the ideal at y, as an induced subposet of x.
inline InducedSubposet fiber_poset(const GammaData& g, int y) {
  int nx = g.map().x().size();
  std::vector<char> member(nx, 0);
  for (int x = 0; x < nx; ++x) member[x] = static_cast<char>(g.map().contains(y, x));
  return induced_subposet(g.map().x(), member);
}

/// Extension by zero along the slice at y: value at (a,b) is m at a when
/// b <= y, zero otherwise; structure maps follow the same rule. The input
/// lives over the fiber poset at y.
inline Module pushforward(const GammaData& g, int y, const Module& m) {
  InducedSubposet fib = fiber_poset(g, y);
  if (!m.poset().same_order(fib.poset)) throw BaseError("module is not over the fiber at y");
  const Poset& gp = g.gamma();
  const Poset& yp = g.map().y();
  std::vector<int> dims(gp.size(), 0);
  for (int e = 0; e < gp.size(); ++e) {
    auto [a, b] = g.pairs()[e];
    if (yp.leq(b, y)) dims[e] = m.dim(fib.parent_to_sub[a]);
  }
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : gp.covers()) {
    auto [a, b] = g.pairs()[u];
    auto [c, d] = g.pairs()[v];
    if (!yp.leq(d, y)) continue;
    maps.emplace(std::make_pair(u, v),
                 m.map(fib.parent_to_sub[a], fib.parent_to_sub[c]));
  }
  return Module(gp, std::move(dims), maps);
}

/// Pushforward of a transformation between modules over the fiber at y.
inline NatTrans pushforward(const GammaData& g, int y, const NatTrans& t) {
  InducedSubposet fib = fiber_poset(g, y);
  const Poset& yp = g.map().y();
  NatTrans out;
  for (int e = 0; e < g.gamma().size(); ++e) {
    auto [a, b] = g.pairs()[e];
    if (yp.leq(b, y))
      out.push_back(t[fib.parent_to_sub[a]]);
    else
      out.push_back(Matrix<Rat>(0, 0));
  }
  return out;
}

/// Restriction along the slice at y: the fiber element x picks up the value
/// at the pair (x,y).
inline Module restriction(const GammaData& g, int y, const Module& m) {
  if (!m.poset().same_order(g.gamma())) throw BaseError("module is not over the pair poset");
  InducedSubposet fib = fiber_poset(g, y);
  int n = fib.poset.size();
  std::vector<int> dims(n);
  for (int s = 0; s < n; ++s) dims[s] = m.dim(g.index_of(fib.elements[s], y));
  std::map<std::pair<int, int>, Matrix<Rat>> maps;
  for (auto [u, v] : fib.poset.covers())
    maps.emplace(std::make_pair(u, v),
                 m.map(g.index_of(fib.elements[u], y), g.index_of(fib.elements[v], y)));
  return Module(fib.poset, std::move(dims), maps);
}

/// Direct sum over all pairs (x,y) of the pushforward at y of the fiber
/// projective at x, in pair order.
struct TiltingModule {
  std::vector<std::pair<int, int>> pairs;
  std::vector<Module> summands;
  Module total;
};

inline TiltingModule tilting_module(const GammaData& g) {
  std::vector<Module> summands;
  for (auto [x, y] : g.pairs()) {
    InducedSubposet fib = fiber_poset(g, y);
    summands.push_back(
        pushforward(g, y, projective_module(fib.poset, fib.parent_to_sub[x])));
  }
  Module total = direct_sum(summands, g.gamma());
  return TiltingModule{g.pairs(), std::move(summands), std::move(total)};
}

/// Endomorphism category of a list of modules: objects are the list entries,
/// hom spaces must all be zero or one dimensional (ThicknessError otherwise),
/// and the composition pattern records which composites of basis maps vanish.
inline ThinCategory end_category(const std::vector<Module>& mods) {
  int n = static_cast<int>(mods.size());
  std::vector<char> hom(static_cast<std::size_t>(n) * n, 0);
  std::vector<NatTrans> gen(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HomSpace h = hom_space(mods[i], mods[j]);
      if (h.dimension > 1) throw ThicknessError("hom space of dimension above one");
      hom[static_cast<std::size_t>(i) * n + j] = static_cast<char>(h.dimension);
      if (h.dimension == 1) gen[static_cast<std::size_t>(i) * n + j] = h.basis[0];
    }
  std::vector<char> compose(static_cast<std::size_t>(n) * n * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!hom[static_cast<std::size_t>(u) * n + v]) continue;
      for (int w = 0; w < n; ++w) {
        if (!hom[static_cast<std::size_t>(v) * n + w]) continue;
        NatTrans c = compose_transformations(gen[static_cast<std::size_t>(u) * n + v],
                                             gen[static_cast<std::size_t>(v) * n + w]);
        compose[(static_cast<std::size_t>(u) * n + v) * n + w] =
            static_cast<char>(!transformation_is_zero(c));
      }
    }
  return ThinCategory(n, std::move(hom), std::move(compose));
}

/// Checks that the canonical candidate is a tilting module for the pair poset
/// and that its opposite endomorphism category has the prescribed zero
/// pattern. Summand count equals the number of simples, summands are pairwise
/// distinct with one-dimensional endomorphism spaces, and Ext vanishing in
/// degrees up to the longest resolution is complete because higher Ext
/// against those resolutions is identically zero. Tilting is certified by the
/// count criterion; no coresolution of the regular module is produced.
struct TiltingReport {
  int summand_count = 0;
  int expected_count = 0;
  int ext_checked_up_to = 0;
  bool counts_match = false;
  bool summands_distinct = false;
  bool homs_thin = false;
  bool ext_vanishes = false;
  bool endo_matches = false;

  bool verified() const {
    return counts_match && summands_distinct && homs_thin && ext_vanishes && endo_matches;
  }

  std::string text() const {
    std::ostringstream os;
    os << "summands: " << summand_count << " of " << expected_count
       << (counts_match ? " (count matches simples)" : " (count mismatch)") << "\n"
       << "pairwise distinct summands: " << (summands_distinct ? "yes" : "no") << "\n"
       << "hom spaces at most one dimensional: " << (homs_thin ? "yes" : "no") << "\n"
       << "Ext^i(T,T) = 0 for 1 <= i <= " << ext_checked_up_to << ": "
       << (ext_vanishes ? "yes" : "no")
       << " (resolution length makes higher degrees vanish)\n"
       << "endomorphism category with arrows reversed (op) matches the pair category: "
       << (endo_matches ? "yes" : "no") << "\n"
       << "tilting verdict by the summand-count criterion: "
       << (verified() ? "verified" : "failed")
       << "; no coresolution of the regular module is constructed\n";
    return os.str();
  }
};

inline TiltingReport verify_tilting(const GammaData& g) {
  TiltingReport r;
  TiltingModule t = tilting_module(g);
  int n = static_cast<int>(t.summands.size());
  r.summand_count = n;
  r.expected_count = g.size();
  r.counts_match = r.summand_count == r.expected_count;
  r.summands_distinct = true;
  for (int i = 0; i < n && r.summands_distinct; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.summands[i].dims() == t.summands[j].dims()) {
        r.summands_distinct = false;
        break;
      }
  std::vector<ResolutionComplex> res;
  res.reserve(n);
  int maxlen = 0;
  for (int i = 0; i < n; ++i) {
    res.push_back(projective_resolution(t.summands[i]));
    maxlen = std::max(maxlen, res.back().length());
  }
  r.ext_checked_up_to = maxlen;
  r.ext_vanishes = true;
  for (int i = 0; i < n && r.ext_vanishes; ++i)
    for (int j = 0; j < n && r.ext_vanishes; ++j)
      for (int d = 1; d <= res[i].length(); ++d)
        if (ext_dim(res[i], t.summands[j], d) != 0) {
          r.ext_vanishes = false;
          break;
        }
  try {
    ThinCategory endo = end_category(t.summands);
    r.homs_thin = true;
    r.endo_matches = endo.op() == gamma_zero_category(g);
  } catch (const ThicknessError&) {
    r.homs_thin = false;
    r.endo_matches = false;
  }
  return r;
}

}  // namespace intervals
