#pragma once

// Finitely generated FI_G-modules on a truncation window 0..N, stored by the
// action of the generators of each G_n together with the maps induced by the
// standard inclusions [n] ⊆ [n+1]. Every morphism acts through these via
// canonical_factor.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "fihom/category.hpp"
#include "fihom/degree.hpp"
#include "fihom/linalg.hpp"
#include "fihom/presentation.hpp"

namespace fihom {

template <class F>
struct DegreewiseModule {
  using E = typename F::Elem;

  F field;
  FiniteGroup group;
  int window = 0;
  std::vector<int> dims;
  /// actions[n][k]: generator k of G_n (see generator_morphism) on V_n.
  std::vector<std::vector<SparseOf<F>>> actions;
  /// structmaps[n]: V_n -> V_{n+1} for the standard inclusion, n < window.
  std::vector<SparseOf<F>> structmaps;
  /// Presentation bounds when known; required by certified computations.
  std::optional<PresentationBounds> bounds;

  int dim(int n) const { return dims[n]; }
  const SparseOf<F>& generator(int n, int k) const { return actions[n][k]; }
  const SparseOf<F>& transposition(int n, int i) const { return actions[n][i - 1]; }
  const SparseOf<F>& color(int n, int g) const { return actions[n][n - 1 + g]; }

  bool is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
  }
  /// Largest n with V_n ≠ 0, −∞ for the zero module.
  int top_degree() const {
    for (int n = window; n >= 0; --n)
      if (dims[n]) return n;
    return kNegInf;
  }

  VecOf<F> apply_word(int n, const Word& word, VecOf<F> v) const {
    for (int k : word) v = actions[n][k].apply(field, v);
    return v;
  }
  VecOf<F> apply_invertible(const FiGMorphism& tau, VecOf<F> v) const {
    return apply_word(tau.source, wreath_word(group, tau), std::move(v));
  }
  /// The standard inclusion chain V_m -> V_n.
  VecOf<F> push_forward(int m, int n, VecOf<F> v) const {
    for (int k = m; k < n; ++k) v = structmaps[k].apply(field, v);
    return v;
  }
  VecOf<F> apply_morphism(const FiGMorphism& alpha, const VecOf<F>& v) const {
    if (alpha.target > window) throw WindowError("apply_morphism", alpha.target, window);
    const FiGMorphism tau = canonical_factor(group, alpha);
    return apply_invertible(tau, push_forward(alpha.source, alpha.target, v));
  }
  /// Matrix of a morphism m -> n on the chosen bases.
  MatrixOf<F> morphism_matrix(const FiGMorphism& alpha) const {
    std::vector<VecOf<F>> cols;
    for (int j = 0; j < dims[alpha.source]; ++j) cols.push_back(apply_morphism(alpha, unit(alpha.source, j)));
    return MatrixOf<F>::from_columns(field, dims[alpha.target], cols);
  }
  VecOf<F> unit(int n, int j) const {
    VecOf<F> v(dims[n], field.zero());
    v[j] = field.one();
    return v;
  }
};

/// Degreewise linear maps; the modules are passed alongside when needed.
template <class F>
struct ModuleMap {
  std::vector<MatrixOf<F>> mats;
  int window() const { return static_cast<int>(mats.size()) - 1; }
};

/// A free module ⊕ C(d_i, −); the basis at degree n is the concatenation of
/// hom_set(d_i, n) in generator order.
template <class F>
struct FreeModule {
  DegreewiseModule<F> module;
  std::vector<int> degrees;
  /// offsets[n][i]: first basis index of summand i at degree n.
  std::vector<std::vector<int>> offsets;
};

namespace detail {

template <class F>
SparseOf<F> sparse_multiply(const F& f, const SparseOf<F>& a, const SparseOf<F>& b) {
  using E = typename F::Elem;
  if (a.cols() != b.rows()) throw ContractViolation("sparse_multiply: dimension mismatch");
  std::vector<SparseVec<E>> cols(b.cols());
  Vec<E> acc(a.rows(), f.zero());
  std::vector<char> touched(a.rows(), 0);
  std::vector<int> list;
  for (int j = 0; j < b.cols(); ++j) {
    list.clear();
    b.for_column(j, [&](int k, const E& bv) {
      a.for_column(k, [&](int i, const E& av) {
        if (!touched[i]) {
          touched[i] = 1;
          list.push_back(i);
        }
        f.addmul(acc[i], av, bv);
      });
    });
    for (int i : list) {
      if (!f.is_zero(acc[i])) cols[j].emplace_back(i, acc[i]);
      acc[i] = f.zero();
      touched[i] = 0;
    }
  }
  return SparseOf<F>::from_columns(a.rows(), cols);
}

template <class F>
bool sparse_equal(const F& f, const SparseOf<F>& a, const SparseOf<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  using E = typename F::Elem;
  Vec<E> col(a.rows(), f.zero());
  for (int j = 0; j < a.cols(); ++j) {
    a.for_column(j, [&](int i, const E& v) { col[i] = f.add(col[i], v); });
    b.for_column(j, [&](int i, const E& v) { col[i] = f.sub(col[i], v); });
    bool ok = true;
    for (auto& x : col) {
      if (!f.is_zero(x)) ok = false;
      x = f.zero();
    }
    if (!ok) return false;
  }
  return true;
}

template <class F>
SparseOf<F> word_matrix(const DegreewiseModule<F>& v, int n, const Word& w) {
  SparseOf<F> m = SparseOf<F>::identity(v.field, v.dims[n]);
  for (int k : w) m = sparse_multiply(v.field, v.actions[n][k], m);
  return m;
}

}  // namespace detail

/// Empty module data with the given dimensions; callers fill in matrices.
template <class F>
DegreewiseModule<F> module_shell(const F& f, const FiniteGroup& group, std::vector<int> dims) {
  DegreewiseModule<F> v{f, group, static_cast<int>(dims.size()) - 1, std::move(dims), {}, {}, std::nullopt};
  v.actions.resize(v.window + 1);
  for (int n = 0; n <= v.window; ++n)
    v.actions[n].assign(generator_count(n, group.order()), SparseOf<F>(v.dims[n], v.dims[n]));
  v.structmaps.resize(v.window);
  for (int n = 0; n < v.window; ++n) v.structmaps[n] = SparseOf<F>(v.dims[n + 1], v.dims[n]);
  return v;
}

template <class F>
DegreewiseModule<F> zero_module(const F& f, const FiniteGroup& group, int window) {
  auto v = module_shell(f, group, std::vector<int>(window + 1, 0));
  v.bounds = PresentationBounds{};
  return v;
}

template <class F>
FreeModule<F> free_module(const F& f, const FiniteGroup& group, const std::vector<int>& degrees, int window) {
  using E = typename F::Elem;
  for (int d : degrees)
    if (d > window || d < 0) throw WindowError("free_module: generator degree " + std::to_string(d), d, window);
  const int q = group.order();
  std::vector<std::vector<int>> offsets(window + 1);
  std::vector<int> dims(window + 1, 0);
  for (int n = 0; n <= window; ++n)
    for (int d : degrees) {
      offsets[n].push_back(dims[n]);
      dims[n] += static_cast<int>(hom_set_size(d, n, q));
    }
  FreeModule<F> out{module_shell(f, group, dims), degrees, std::move(offsets)};
  auto& mod = out.module;
  for (int n = 0; n <= window; ++n) {
    const int ngen = generator_count(n, q);
    std::vector<std::vector<SparseVec<E>>> gcols(ngen, std::vector<SparseVec<E>>(dims[n]));
    std::vector<SparseVec<E>> scols(dims[n]);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const int d = degrees[i];
      const std::int64_t size = hom_set_size(d, n, q);
      for (std::int64_t r = 0; r < size; ++r) {
        const FiGMorphism alpha = hom_unrank(r, d, n, q);
        const int col = out.offsets[n][i] + static_cast<int>(r);
        for (int k = 0; k < ngen; ++k) {
          const auto img = compose(group, generator_morphism(n, k, q), alpha);
          gcols[k][col].emplace_back(out.offsets[n][i] + static_cast<int>(hom_rank(img, q)), f.one());
        }
        if (n < window) {
          FiGMorphism up = alpha;
          up.target = n + 1;
          scols[col].emplace_back(out.offsets[n + 1][i] + static_cast<int>(hom_rank(up, q)), f.one());
        }
      }
    }
    for (int k = 0; k < ngen; ++k) mod.actions[n][k] = SparseOf<F>::from_columns(dims[n], gcols[k]);
    if (n < window) mod.structmaps[n] = SparseOf<F>::from_columns(dims[n + 1], scols);
  }
  int g = kNegInf;
  for (int d : degrees) g = std::max(g, d);
  mod.bounds = PresentationBounds{g, kNegInf};
  return out;
}

/// Smallest G_n-stable subspace of V_n containing `start` and `seeds`.
template <class F>
Subspace<F> group_span(const DegreewiseModule<F>& v, int n, Subspace<F> start, const std::vector<VecOf<F>>& seeds) {
  const auto& f = v.field;
  std::deque<VecOf<F>> queue;
  for (const auto& s : seeds)
    if (start.insert(f, s)) queue.push_back(s);
  // vectors already in `start` are assumed to span a stable subspace
  while (!queue.empty()) {
    VecOf<F> w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : v.actions[n]) {
      auto img = g.apply(f, w);
      if (start.insert(f, img)) queue.push_back(std::move(img));
    }
  }
  return start;
}

/// (JV)_n = G_n · φ_{n-1}(V_{n-1}), the part of V_n reached from lower degrees.
template <class F>
Subspace<F> augmentation_part(const DegreewiseModule<F>& v, int n) {
  Subspace<F> s(v.dims[n]);
  if (n == 0) return s;
  std::vector<VecOf<F>> seeds;
  for (int j = 0; j < v.dims[n - 1]; ++j) {
    VecOf<F> col(v.dims[n], v.field.zero());
    v.structmaps[n - 1].for_column(j, [&](int i, const auto& x) { col[i] = x; });
    seeds.push_back(std::move(col));
  }
  return group_span(v, n, std::move(s), seeds);
}

template <class F>
struct SubmoduleResult {
  DegreewiseModule<F> module;
  ModuleMap<F> inclusion;
};

template <class F>
struct QuotientResult {
  DegreewiseModule<F> module;
  ModuleMap<F> projection;
};

/// The submodule with degree-n part subs[n]; subs must be stable under the
/// group actions and carried into each other by the structure maps.
template <class F>
SubmoduleResult<F> submodule(const DegreewiseModule<F>& v, const std::vector<Subspace<F>>& subs) {
  using E = typename F::Elem;
  const auto& f = v.field;
  std::vector<int> dims;
  for (const auto& s : subs) dims.push_back(s.dim());
  SubmoduleResult<F> out{module_shell(f, v.group, dims), {}};
  auto& k = out.module;
  for (int n = 0; n <= v.window; ++n) {
    const auto basis = subs[n].basis(f);
    out.inclusion.mats.push_back(MatrixOf<F>::from_columns(f, v.dims[n], basis));
    auto induced = [&](const SparseOf<F>& a, const Subspace<F>& target) {
      std::vector<SparseVec<E>> cols;
      for (const auto& b : basis) {
        const auto img = a.apply(f, b);
        const auto c = target.coordinates(f, img);
        SparseVec<E> col;
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
          if (!f.is_zero(c[i])) col.emplace_back(i, c[i]);
        cols.push_back(std::move(col));
      }
      return SparseOf<F>::from_columns(target.dim(), cols);
    };
    for (std::size_t g = 0; g < v.actions[n].size(); ++g) k.actions[n][g] = induced(v.actions[n][g], subs[n]);
    if (n < v.window) k.structmaps[n] = induced(v.structmaps[n], subs[n + 1]);
  }
  return out;
}

/// V / S where S is a submodule given degreewise.
template <class F>
QuotientResult<F> quotient_module(const DegreewiseModule<F>& v, const std::vector<Subspace<F>>& subs) {
  using E = typename F::Elem;
  const auto& f = v.field;
  std::vector<int> dims;
  for (int n = 0; n <= v.window; ++n) dims.push_back(v.dims[n] - subs[n].dim());
  QuotientResult<F> out{module_shell(f, v.group, dims), {}};
  auto& q = out.module;
  for (int n = 0; n <= v.window; ++n) {
    const auto comp = subs[n].complement();
    MatrixOf<F> proj(dims[n], v.dims[n], f.zero());
    for (int j = 0; j < v.dims[n]; ++j) proj.set_column(j, subs[n].quotient_coordinates(f, v.unit(n, j)));
    out.projection.mats.push_back(std::move(proj));
    auto induced = [&](const SparseOf<F>& a, const Subspace<F>& target) {
      std::vector<SparseVec<E>> cols;
      for (int c : comp) {
        VecOf<F> img(a.rows(), f.zero());
        a.for_column(c, [&](int i, const E& x) { img[i] = x; });
        const auto qc = target.quotient_coordinates(f, std::move(img));
        SparseVec<E> col;
        for (int i = 0; i < static_cast<int>(qc.size()); ++i)
          if (!f.is_zero(qc[i])) col.emplace_back(i, qc[i]);
        cols.push_back(std::move(col));
      }
      return SparseOf<F>::from_columns(target.ambient() - target.dim(), cols);
    };
    for (std::size_t g = 0; g < v.actions[n].size(); ++g) q.actions[n][g] = induced(v.actions[n][g], subs[n]);
    if (n < v.window) q.structmaps[n] = induced(v.structmaps[n], subs[n + 1]);
  }
  return out;
}

/// Degreewise compatibility of a map with group actions and structure maps.
template <class F>
std::vector<std::string> check_module_map(const DegreewiseModule<F>& src, const DegreewiseModule<F>& tgt,
                                          const ModuleMap<F>& m) {
  const auto& f = src.field;
  std::vector<std::string> issues;
  if (m.window() != src.window || src.window != tgt.window) {
    issues.push_back("window mismatch");
    return issues;
  }
  for (int n = 0; n <= src.window; ++n) {
    const auto& a = m.mats[n];
    if (a.rows() != tgt.dims[n] || a.cols() != src.dims[n]) {
      issues.push_back("shape mismatch at degree " + std::to_string(n));
      continue;
    }
    for (std::size_t g = 0; g < src.actions[n].size(); ++g) {
      const auto lhs = multiply(f, tgt.actions[n][g], a);
      const auto rhs = multiply(f, a, src.actions[n][g].to_dense(f));
      if (!(lhs == rhs)) issues.push_back("not equivariant for generator " + std::to_string(g) + " at degree " + std::to_string(n));
    }
    if (n < src.window) {
      const auto lhs = multiply(f, tgt.structmaps[n], a);
      const auto rhs = multiply(f, m.mats[n + 1], src.structmaps[n].to_dense(f));
      if (!(lhs == rhs)) issues.push_back("does not commute with structure map at degree " + std::to_string(n));
    }
  }
  return issues;
}

template <class F>
SubmoduleResult<F> map_kernel(const DegreewiseModule<F>& src, const ModuleMap<F>& m) {
  if (m.window() != src.window) throw ContractViolation("map_kernel: incompatible windows");
  std::vector<Subspace<F>> subs;
  for (int n = 0; n <= src.window; ++n) subs.push_back(Subspace<F>::column_span(src.field, kernel_basis(src.field, m.mats[n])));
  return submodule(src, subs);
}

template <class F>
QuotientResult<F> map_cokernel(const DegreewiseModule<F>& tgt, const ModuleMap<F>& m) {
  if (m.window() != tgt.window) throw ContractViolation("map_cokernel: incompatible windows");
  std::vector<Subspace<F>> subs;
  for (int n = 0; n <= tgt.window; ++n) subs.push_back(Subspace<F>::column_span(tgt.field, m.mats[n]));
  return quotient_module(tgt, subs);
}

template <class F>
DegreewiseModule<F> direct_sum(const DegreewiseModule<F>& v, const DegreewiseModule<F>& w) {
  using E = typename F::Elem;
  if (v.window != w.window || !(v.group == w.group)) throw ContractViolation("direct_sum: incompatible modules");
  std::vector<int> dims;
  for (int n = 0; n <= v.window; ++n) dims.push_back(v.dims[n] + w.dims[n]);
  auto s = module_shell(v.field, v.group, dims);
  auto block = [&](const SparseOf<F>& a, const SparseOf<F>& b) {
    std::vector<SparseVec<E>> cols;
    for (int j = 0; j < a.cols(); ++j) {
      SparseVec<E> c;
      a.for_column(j, [&](int i, const E& x) { c.emplace_back(i, x); });
      cols.push_back(std::move(c));
    }
    for (int j = 0; j < b.cols(); ++j) {
      SparseVec<E> c;
      b.for_column(j, [&](int i, const E& x) { c.emplace_back(i + a.rows(), x); });
      cols.push_back(std::move(c));
    }
    return SparseOf<F>::from_columns(a.rows() + b.rows(), cols);
  };
  for (int n = 0; n <= v.window; ++n) {
    for (std::size_t g = 0; g < v.actions[n].size(); ++g) s.actions[n][g] = block(v.actions[n][g], w.actions[n][g]);
    if (n < v.window) s.structmaps[n] = block(v.structmaps[n], w.structmaps[n]);
  }
  if (v.bounds && w.bounds) s.bounds = PresentationBounds{dmax(v.bounds->gen, w.bounds->gen), dmax(v.bounds->rel, w.bounds->rel)};
  return s;
}

/// Restriction to degrees 0..window.
template <class F>
DegreewiseModule<F> truncate(const DegreewiseModule<F>& v, int window) {
  if (window > v.window) throw WindowError("truncate", window, v.window);
  DegreewiseModule<F> t = v;
  t.window = window;
  t.dims.resize(window + 1);
  t.actions.resize(window + 1);
  t.structmaps.resize(window);
  return t;
}

template <class F>
ModuleMap<F> truncate(const ModuleMap<F>& m, int window) {
  ModuleMap<F> t = m;
  t.mats.resize(window + 1);
  return t;
}

template <class F>
ModuleMap<F> identity_map(const DegreewiseModule<F>& v) {
  ModuleMap<F> m;
  for (int n = 0; n <= v.window; ++n) m.mats.push_back(MatrixOf<F>::identity(v.field, v.dims[n]));
  return m;
}

template <class F>
ModuleMap<F> compose_maps(const F& f, const ModuleMap<F>& second, const ModuleMap<F>& first) {
  ModuleMap<F> m;
  const int w = std::min(second.window(), first.window());
  for (int n = 0; n <= w; ++n) m.mats.push_back(multiply(f, second.mats[n], first.mats[n]));
  return m;
}

/// Builds the truncation of a presented module to degrees 0..window.
template <class F>
DegreewiseModule<F> compile(const F& f, const Presentation& p, int window) {
  p.check();
  for (int d : p.generators)
    if (d > window) throw WindowError("compile: generator in degree " + std::to_string(d), d, window);
  for (const auto& r : p.relations)
    if (r.degree > window) throw WindowError("compile: relation in degree " + std::to_string(r.degree), r.degree, window);
  const auto free = free_module(f, p.group, p.generators, window);
  const auto& fm = free.module;
  const int q = p.group.order();
  std::vector<Subspace<F>> rels;
  for (int n = 0; n <= window; ++n) {
    std::vector<VecOf<F>> seeds;
    if (n > 0)
      for (const auto& b : rels[n - 1].basis(f)) seeds.push_back(fm.structmaps[n - 1].apply(f, b));
    for (const auto& r : p.relations) {
      if (r.degree != n) continue;
      VecOf<F> v(fm.dims[n], f.zero());
      for (const auto& t : r.terms) {
        const int idx = free.offsets[n][t.gen] + static_cast<int>(hom_rank(t.alpha, q));
        v[idx] = f.add(v[idx], f.parse(t.coeff));
      }
      seeds.push_back(std::move(v));
    }
    rels.push_back(group_span(fm, n, Subspace<F>(fm.dims[n]), seeds));
  }
  auto out = quotient_module(fm, rels).module;
  out.bounds = p.bounds();
  return out;
}

/// Exhaustive check of the functor relations on the window. Each entry
/// names the violated relation and the degree.
template <class F>
std::vector<std::string> validate(const DegreewiseModule<F>& v) {
  using detail::sparse_equal;
  using detail::sparse_multiply;
  const auto& f = v.field;
  const int q = v.group.order();
  std::vector<std::string> issues;
  auto fail = [&](const std::string& what, int n) { issues.push_back(what + " at degree " + std::to_string(n)); };
  if (static_cast<int>(v.dims.size()) != v.window + 1) {
    issues.push_back("dims length differs from window+1");
    return issues;
  }
  for (int n = 0; n <= v.window; ++n) {
    const int dn = v.dims[n];
    const auto id = SparseOf<F>::identity(f, dn);
    if (static_cast<int>(v.actions[n].size()) != generator_count(n, q)) {
      fail("wrong number of generators", n);
      continue;
    }
    for (const auto& a : v.actions[n])
      if (a.rows() != dn || a.cols() != dn) fail("generator matrix has wrong shape", n);
    if (!issues.empty()) return issues;
    auto mul = [&](const SparseOf<F>& a, const SparseOf<F>& b) { return sparse_multiply(f, a, b); };
    for (int i = 1; i < n; ++i) {
      const auto& si = v.transposition(n, i);
      if (!sparse_equal(f, mul(si, si), id)) fail("s_" + std::to_string(i) + "^2 = 1 fails", n);
      if (i + 1 < n) {
        const auto& sj = v.transposition(n, i + 1);
        if (!sparse_equal(f, mul(si, mul(sj, si)), mul(sj, mul(si, sj))))
          fail("braid relation s_" + std::to_string(i) + " s_" + std::to_string(i + 1) + " fails", n);
      }
      for (int j = i + 2; j < n; ++j) {
        const auto& sj = v.transposition(n, j);
        if (!sparse_equal(f, mul(si, sj), mul(sj, si)))
          fail("s_" + std::to_string(i) + " and s_" + std::to_string(j) + " do not commute", n);
      }
    }
    if (n >= 1) {
      if (!sparse_equal(f, v.color(n, v.group.identity()), id)) fail("c_e is not the identity", n);
      for (int g = 0; g < q; ++g) {
        for (int h = 0; h < q; ++h)
          if (!sparse_equal(f, mul(v.color(n, g), v.color(n, h)), v.color(n, v.group.mul(g, h))))
            fail("c_" + std::to_string(g) + " c_" + std::to_string(h) + " = c_gh fails", n);
        for (int i = 2; i < n; ++i)
          if (!sparse_equal(f, mul(v.transposition(n, i), v.color(n, g)), mul(v.color(n, g), v.transposition(n, i))))
            fail("s_" + std::to_string(i) + " does not commute with c_" + std::to_string(g), n);
        if (n >= 2)
          for (int h = 0; h < q; ++h) {
            const auto& s1 = v.transposition(n, 1);
            const auto other = mul(s1, mul(v.color(n, h), s1));
            if (!sparse_equal(f, mul(v.color(n, g), other), mul(other, v.color(n, g))))
              fail("colors on points 1 and 2 do not commute", n);
          }
      }
    }
    if (n == v.window) continue;
    const auto& phi = v.structmaps[n];
    if (phi.rows() != v.dims[n + 1] || phi.cols() != dn) {
      fail("structure map has wrong shape", n);
      continue;
    }
    for (int k = 0; k < generator_count(n, q); ++k) {
      // generator k of G_n viewed in G_{n+1}: transpositions keep their index,
      // colors shift by one slot.
      const int up = k < n - 1 ? k : k + 1;
      if (!sparse_equal(f, mul(v.actions[n + 1][up], phi), mul(phi, v.actions[n][k])))
        fail("structure map not equivariant for generator " + std::to_string(k), n);
    }
    for (int g = 0; g < q; ++g) {
      const auto cw = detail::word_matrix(v, n + 1, color_word(n + 1, n + 1, g));
      if (!sparse_equal(f, mul(cw, phi), phi)) fail("color on the new point acts nontrivially", n);
    }
    if (n + 1 < v.window) {
      const auto two = mul(v.structmaps[n + 1], phi);
      if (!sparse_equal(f, mul(v.transposition(n + 2, n + 1), two), two))
        fail("FI relation (two inclusions [n] -> [n+2] differ)", n);
    }
  }
  return issues;
}

}  // namespace fihom
