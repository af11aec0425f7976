#pragma once

// H_0 and the generating degree, induced modules C ⊗_{kG_d} W, covers and
// truncated resolutions, and Tor_s(C₀, V) computed as the homology of
// C₀ ⊗ (resolution).

#include <optional>

#include "fihom/shift.hpp"

namespace fihom {

/// Top degree with a nonzero entry, −∞ if none.
inline int top_support(const std::vector<int>& dims) {
  for (int n = static_cast<int>(dims.size()) - 1; n >= 0; --n)
    if (dims[n]) return n;
  return kNegInf;
}

/// kG_n is semisimple for every n ≤ window.
inline bool semisimple_through(std::uint32_t characteristic, int group_order, int window) {
  return characteristic == 0 || (static_cast<int>(characteristic) > window && group_order % characteristic != 0);
}

/// H_0(V) = V / JV with zero structure maps.
template <class F>
DegreewiseModule<F> h0(const DegreewiseModule<F>& v) {
  std::vector<Subspace<F>> subs;
  for (int n = 0; n <= v.window; ++n) subs.push_back(augmentation_part(v, n));
  auto q = quotient_module(v, subs).module;
  for (auto& s : q.structmaps) s = SparseOf<F>(s.rows(), s.cols());
  return q;
}

template <class F>
std::vector<int> h0_dims(const DegreewiseModule<F>& v) {
  std::vector<int> d;
  for (int n = 0; n <= v.window; ++n) d.push_back(v.dims[n] - augmentation_part(v, n).dim());
  return d;
}

template <class F>
DegreeValue generating_degree(const DegreewiseModule<F>& v) {
  return {top_support(h0_dims(v)), v.bounds.has_value() && dle(v.bounds->gen, v.window)};
}

/// A representation of G_d by the matrices of its generators.
template <class F>
struct Representation {
  int degree = 0;
  int dim = 0;
  std::vector<SparseOf<F>> actions;
};

template <class F>
Representation<F> trivial_representation(const F& f, int group_order, int d) {
  return {d, 1, std::vector<SparseOf<F>>(generator_count(d, group_order), SparseOf<F>::identity(f, 1))};
}

/// kG_d acting on itself from the left; basis in hom_set order.
template <class F>
Representation<F> regular_representation(const F& f, const FiniteGroup& group, int d) {
  using E = typename F::Elem;
  const int q = group.order();
  const auto elems = hom_set(d, d, group);
  Representation<F> r{d, static_cast<int>(elems.size()), {}};
  for (int k = 0; k < generator_count(d, q); ++k) {
    const auto g = generator_morphism(d, k, q);
    std::vector<SparseVec<E>> cols;
    for (const auto& s : elems) cols.push_back({{static_cast<int>(hom_rank(compose(group, g, s), q)), f.one()}});
    r.actions.push_back(SparseOf<F>::from_columns(r.dim, cols));
  }
  return r;
}

template <class F>
Representation<F> repeat(const Representation<F>& a, int copies) {
  using E = typename F::Elem;
  Representation<F> r{a.degree, a.dim * copies, {}};
  for (const auto& m : a.actions) {
    std::vector<SparseVec<E>> cols;
    for (int c = 0; c < copies; ++c)
      for (int j = 0; j < m.cols(); ++j) {
        SparseVec<E> col;
        m.for_column(j, [&](int i, const E& x) { col.emplace_back(i + c * a.dim, x); });
        cols.push_back(std::move(col));
      }
    r.actions.push_back(SparseOf<F>::from_columns(r.dim, cols));
  }
  return r;
}

/// ⊕_j C ⊗_{kG_{d_j}} W_j. At degree n the summand j has basis (T, w) for
/// d_j-subsets T of [n] in lexicographic order: T stands for the
/// order-preserving injection onto T.
template <class F>
struct InducedModule {
  DegreewiseModule<F> module;
  std::vector<Representation<F>> summands;
  std::vector<std::vector<int>> offsets;

  int index(int n, int j, std::int64_t subset, int w) const {
    return offsets[n][j] + static_cast<int>(subset) * summands[j].dim + w;
  }
  /// Basis indices of the generating blocks at degree n (d_j = n, T = [n]).
  std::vector<int> top(int n) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < summands.size(); ++j)
      if (summands[j].degree == n)
        for (int w = 0; w < summands[j].dim; ++w) out.push_back(index(n, static_cast<int>(j), 0, w));
    return out;
  }
};

template <class F>
InducedModule<F> induced_module(const F& f, const FiniteGroup& group, std::vector<Representation<F>> summands, int window) {
  using E = typename F::Elem;
  const int q = group.order();
  std::vector<std::vector<int>> offsets(window + 1);
  std::vector<int> dims(window + 1, 0);
  int g = kNegInf;
  for (const auto& w : summands) {
    if (w.degree > window) throw WindowError("induced_module", w.degree, window);
    if (static_cast<int>(w.actions.size()) != generator_count(w.degree, q))
      throw ContractViolation("induced_module: representation has wrong number of generators");
    g = std::max(g, w.degree);
  }
  for (int n = 0; n <= window; ++n)
    for (const auto& w : summands) {
      offsets[n].push_back(dims[n]);
      if (w.degree <= n) dims[n] += static_cast<int>(binomial(n, w.degree)) * w.dim;
    }
  InducedModule<F> out{module_shell(f, group, dims), std::move(summands), std::move(offsets)};
  auto& mod = out.module;
  for (int n = 0; n <= window; ++n) {
    const int ngen = generator_count(n, q);
    std::vector<std::vector<SparseVec<E>>> gcols(ngen, std::vector<SparseVec<E>>(dims[n]));
    std::vector<SparseVec<E>> scols(dims[n]);
    for (std::size_t jj = 0; jj < out.summands.size(); ++jj) {
      const int j = static_cast<int>(jj);
      const auto& rep = out.summands[j];
      const int d = rep.degree;
      if (d > n) continue;
      const auto subs = subsets(n, d);
      for (std::size_t r = 0; r < subs.size(); ++r) {
        const auto& t = subs[r];
        auto pos = [&](int point) {
          const auto it = std::find(t.begin(), t.end(), point);
          return it == t.end() ? -1 : static_cast<int>(it - t.begin());
        };
        for (int w = 0; w < rep.dim; ++w) {
          const int col = out.index(n, j, r, w);
          auto via = [&](const SparseOf<F>& m, SparseVec<E>& dst) {
            m.for_column(w, [&](int i, const E& x) { dst.emplace_back(out.index(n, j, r, i), x); });
          };
          for (int i = 1; i < n; ++i) {
            auto& dst = gcols[i - 1][col];
            const int a = pos(i), b = pos(i + 1);
            if (a >= 0 && b >= 0) {
              via(rep.actions[a], dst);  // s_i ∘ α_T = α_T ∘ s_{a+1}
            } else if (a >= 0 || b >= 0) {
              auto moved = t;
              moved[a >= 0 ? a : b] = a >= 0 ? i + 1 : i;
              dst.emplace_back(out.index(n, j, subset_rank(moved, n), w), f.one());
            } else {
              dst.emplace_back(col, f.one());
            }
          }
          for (int c = 0; n >= 1 && c < q; ++c) {
            auto& dst = gcols[n - 1 + c][col];
            if (d >= 1 && t[0] == 1)
              via(rep.actions[d - 1 + c], dst);
            else
              dst.emplace_back(col, f.one());
          }
          if (n < window) scols[col].emplace_back(out.index(n + 1, j, subset_rank(t, n + 1), w), f.one());
        }
      }
    }
    for (int k = 0; k < ngen; ++k) mod.actions[n][k] = SparseOf<F>::from_columns(dims[n], gcols[k]);
    if (n < window) mod.structmaps[n] = SparseOf<F>::from_columns(dims[n + 1], scols);
  }
  // C ⊗ W is projective when W is; otherwise its relations sit in degree g
  mod.bounds = PresentationBounds{g, semisimple_through(f.characteristic(), q, std::max(g, 0)) ? kNegInf : g};
  return out;
}

/// C ⊗_{kG_n} W on the window.
template <class F>
DegreewiseModule<F> basic_filtered(const F& f, const FiniteGroup& group, const Representation<F>& w, int window) {
  return induced_module(f, group, {w}, window).module;
}

namespace detail {

template <class F>
SparseOf<F> word_product(const F& f, const std::vector<SparseOf<F>>& acts, int dim, const Word& w) {
  SparseOf<F> m = SparseOf<F>::identity(f, dim);
  for (int k : w) m = sparse_multiply(f, acts[k], m);
  return m;
}

}  // namespace detail

/// A G_d-stable complement of the stable subspace J of k^x, where `acts`
/// are the generator matrices of G_d. Requires |G_d| invertible: the
/// projection killing J along the greedy complement is averaged over G_d,
/// one coset layer G_{k-1} ⊂ G_k at a time.
template <class F>
std::vector<VecOf<F>> stable_complement(const F& f, const FiniteGroup& group, int d, const std::vector<SparseOf<F>>& acts,
                                        const Subspace<F>& j) {
  const int x = j.ambient();
  const int q = group.order();
  MatrixOf<F> m(x, x, f.zero());
  for (int c = 0; c < x; ++c) {
    VecOf<F> e(x, f.zero());
    e[c] = f.one();
    m.set_column(c, j.reduce(f, std::move(e)));
  }
  for (int k = 1; k <= d; ++k) {
    MatrixOf<F> sum(x, x, f.zero());
    for (int p = 1; p <= k; ++p)
      for (int c = 0; c < q; ++c) {
        // t sends k to p with color c there; it represents the coset t G_{k-1}
        Word t, tinv = color_word(d, p, group.inverse(c));
        for (int i = k - 1; i >= p; --i) t.push_back(i - 1);
        for (int i = p; i <= k - 1; ++i) tinv.push_back(i - 1);
        const auto cw = color_word(d, p, c);
        t.insert(t.end(), cw.begin(), cw.end());
        const auto conj = multiply(f, detail::word_product(f, acts, x, t),
                                   multiply(f, m, detail::word_product(f, acts, x, tinv)));
        for (int r = 0; r < x; ++r)
          for (int s = 0; s < x; ++s) sum(r, s) = f.add(sum(r, s), conj(r, s));
      }
    m = std::move(sum);
  }
  // the averaged projection is injective on any complement of J
  std::vector<VecOf<F>> out;
  for (int c : j.complement()) out.push_back(m.column(c));
  return out;
}

enum class CoverMode { automatic, equivariant, free };

/// An induced module mapping onto a submodule X of `target`.
template <class F>
struct Cover {
  InducedModule<F> source;
  /// map[n]: source_n -> target_n
  std::vector<SparseOf<F>> map;
};

/// Covers the submodule with degree parts x[n]. In equivariant mode each
/// W_d is a G_d-stable complement of (JX)_d in X_d, so W_d ≅ H_0(X)_d; in
/// free mode W_d is a sum of regular representations on greedy lifts.
/// `redundant` adds a second copy of the lowest summand.
template <class F>
Cover<F> cover(const DegreewiseModule<F>& target, const std::vector<Subspace<F>>& x, CoverMode mode, bool redundant = false) {
  using E = typename F::Elem;
  const auto& f = target.field;
  const int q = target.group.order();
  const int window = target.window;
  if (mode == CoverMode::automatic)
    mode = semisimple_through(f.characteristic(), q, window) ? CoverMode::equivariant : CoverMode::free;
  std::vector<Representation<F>> reps;
  std::vector<std::vector<VecOf<F>>> images;  // images of the W basis in target_d
  for (int n = 0; n <= window; ++n) {
    std::vector<VecOf<F>> seeds;
    if (n > 0)
      for (const auto& b : x[n - 1].basis(f)) seeds.push_back(target.structmaps[n - 1].apply(f, b));
    const auto jx = group_span(target, n, Subspace<F>(target.dims[n]), seeds);
    if (jx.dim() == x[n].dim()) continue;
    const auto xb = x[n].basis(f);
    Representation<F> rep{n, 0, {}};
    std::vector<VecOf<F>> img;
    if (mode == CoverMode::equivariant) {
      std::vector<VecOf<F>> comp;
      if (jx.dim() == 0) {
        comp = xb;
      } else {
        std::vector<SparseOf<F>> xacts;
        for (const auto& a : target.actions[n]) {
          std::vector<SparseVec<E>> cols;
          for (const auto& b : xb) {
            const auto c = x[n].coordinates(f, a.apply(f, b));
            SparseVec<E> col;
            for (int i = 0; i < static_cast<int>(c.size()); ++i)
              if (!f.is_zero(c[i])) col.emplace_back(i, c[i]);
            cols.push_back(std::move(col));
          }
          xacts.push_back(SparseOf<F>::from_columns(x[n].dim(), cols));
        }
        Subspace<F> jcoords(x[n].dim());
        for (const auto& b : jx.basis(f)) jcoords.insert(f, x[n].coordinates(f, b));
        for (const auto& c : stable_complement(f, target.group, n, xacts, jcoords)) {
          VecOf<F> v(target.dims[n], f.zero());
          for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (!f.is_zero(c[i]))
              for (int r = 0; r < target.dims[n]; ++r) f.addmul(v[r], c[i], xb[i][r]);
          comp.push_back(std::move(v));
        }
      }
      const auto wsub = Subspace<F>::spanned_by(f, target.dims[n], comp);
      img = wsub.basis(f);
      rep.dim = wsub.dim();
      for (const auto& a : target.actions[n]) {
        std::vector<SparseVec<E>> cols;
        for (const auto& b : img) {
          const auto c = wsub.coordinates(f, a.apply(f, b));
          SparseVec<E> col;
          for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (!f.is_zero(c[i])) col.emplace_back(i, c[i]);
          cols.push_back(std::move(col));
        }
        rep.actions.push_back(SparseOf<F>::from_columns(rep.dim, cols));
      }
    } else {
      auto span = jx;
      std::vector<VecOf<F>> lifts;
      for (const auto& b : xb)
        if (span.insert(f, b)) lifts.push_back(b);
      rep = repeat(regular_representation(f, target.group, n), static_cast<int>(lifts.size()));
      const auto elems = hom_set(n, n, target.group);
      for (const auto& l : lifts)
        for (const auto& s : elems) img.push_back(target.apply_invertible(s, l));
    }
    const bool dup = redundant && reps.empty();
    reps.push_back(rep);
    images.push_back(img);
    if (dup) {
      reps.push_back(rep);
      images.push_back(img);
    }
  }
  Cover<F> out{induced_module(f, target.group, std::move(reps), window), {}};
  const auto& src = out.source;
  for (int n = 0; n <= window; ++n) {
    std::vector<SparseVec<E>> cols(src.module.dims[n]);
    auto store = [&](int col, const VecOf<F>& v) {
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!f.is_zero(v[i])) cols[col].emplace_back(i, v[i]);
    };
    for (std::size_t jj = 0; jj < src.summands.size(); ++jj) {
      const int j = static_cast<int>(jj);
      const int d = src.summands[j].degree;
      if (d > n) continue;
      const auto subs = subsets(n, d);
      for (std::size_t r = 0; r < subs.size(); ++r)
        for (int w = 0; w < src.summands[j].dim; ++w) {
          const int col = src.index(n, j, r, w);
          if (n == d) {
            store(col, images[j][w]);
            continue;
          }
          // α_T = skip_q ∘ α_{T'} with q the largest point outside T, and
          // skip_q = (s_q ∘ ... ∘ s_{n-1}) ∘ ι_{n-1}
          const auto& t = subs[r];
          int qmax = n;
          while (std::binary_search(t.begin(), t.end(), qmax)) --qmax;
          auto prev = t;
          for (auto& e : prev)
            if (e > qmax) --e;
          VecOf<F> v(target.dims[n - 1], f.zero());
          out.map[n - 1].for_column(src.index(n - 1, j, subset_rank(prev, n - 1), w), [&](int i, const E& a) { v[i] = a; });
          v = target.structmaps[n - 1].apply(f, v);
          for (int i = n - 1; i >= qmax; --i) v = target.transposition(n, i).apply(f, v);
          store(col, v);
        }
    }
    out.map.push_back(SparseOf<F>::from_columns(target.dims[n], cols));
  }
  return out;
}

struct ResolutionOptions {
  /// Terms P_0..P_length are built.
  int length = 1;
  CoverMode mode = CoverMode::automatic;
  /// Adds a superfluous summand at every step (used to test independence).
  bool redundant = false;
};

/// P_length -> ... -> P_0 -> V, exact on the window.
template <class F>
struct Resolution {
  int window = 0;
  /// stages[s]: P_s -> P_{s-1}, stages[0]: P_0 -> V.
  std::vector<Cover<F>> stages;

  const InducedModule<F>& term(int s) const { return stages[s].source; }
  int length() const { return static_cast<int>(stages.size()) - 1; }
};

template <class F>
Resolution<F> resolve(const DegreewiseModule<F>& v, const ResolutionOptions& opt) {
  const auto& f = v.field;
  Resolution<F> res{v.window, {}};
  std::vector<Subspace<F>> x;
  for (int n = 0; n <= v.window; ++n) x.push_back(Subspace<F>::whole(f, v.dims[n]));
  for (int s = 0; s <= opt.length; ++s) {
    const auto& target = s == 0 ? v : res.stages[s - 1].source.module;
    res.stages.push_back(cover(target, x, opt.mode, opt.redundant));
    const auto& c = res.stages.back();
    x.clear();
    for (int n = 0; n <= v.window; ++n)
      x.push_back(Subspace<F>::column_span(f, kernel_basis(f, c.map[n].to_dense(f))));
  }
  return res;
}

namespace detail {

template <class F>
MatrixOf<F> submatrix(const F& f, const SparseOf<F>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> where(m.rows(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) where[rows[i]] = static_cast<int>(i);
  MatrixOf<F> out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), f.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    m.for_column(cols[j], [&](int i, const auto& x) {
      if (where[i] >= 0) out(where[i], static_cast<int>(j)) = x;
    });
  return out;
}

}  // namespace detail

/// The differential of C₀ ⊗ P at degree n between positions s and s-1 (s ≥ 1):
/// only the generating blocks survive C₀ ⊗ −.
template <class F>
MatrixOf<F> reduced_differential(const Resolution<F>& res, int s, int n) {
  const auto& f = res.stages[s].source.module.field;
  return detail::submatrix(f, res.stages[s].map[n], res.term(s - 1).top(n), res.term(s).top(n));
}

/// dim H_s(V)_n for s < res.length(), every n in the window.
template <class F>
std::vector<std::vector<int>> tor_dims(const Resolution<F>& res) {
  const int len = res.length();
  const auto& f = res.stages[0].source.module.field;
  std::vector<std::vector<int>> ranks(len + 1, std::vector<int>(res.window + 1, 0));
  for (int s = 1; s <= len; ++s)
    for (int n = 0; n <= res.window; ++n) ranks[s][n] = rank(f, reduced_differential(res, s, n));
  std::vector<std::vector<int>> out;
  for (int s = 0; s < len; ++s) {
    std::vector<int> row;
    for (int n = 0; n <= res.window; ++n)
      row.push_back(static_cast<int>(res.term(s).top(n).size()) - ranks[s][n] - ranks[s + 1][n]);
    out.push_back(std::move(row));
  }
  return out;
}

/// H_s(V) as a module with zero structure maps; G_n acts through the W's.
template <class F>
DegreewiseModule<F> tor_module(const Resolution<F>& res, int s) {
  using E = typename F::Elem;
  if (s < 0 || s >= res.length()) throw ContractViolation("tor_module: resolution too short");
  const auto& f = res.stages[s].source.module.field;
  const auto& group = res.stages[s].source.module.group;
  const int q = group.order();
  std::vector<int> dims;
  std::vector<std::vector<SparseOf<F>>> acts;
  for (int n = 0; n <= res.window; ++n) {
    const auto& term = res.term(s);
    const auto top = term.top(n);
    // generator action restricted to the generating blocks
    std::vector<SparseOf<F>> c0;
    for (int k = 0; k < generator_count(n, q); ++k)
      c0.push_back(SparseOf<F>::from_dense(f, detail::submatrix(f, term.module.actions[n][k], top, top)));
    auto ker = s == 0 ? Subspace<F>::whole(f, static_cast<int>(top.size()))
                      : Subspace<F>::column_span(f, kernel_basis(f, reduced_differential(res, s, n)));
    const auto in = reduced_differential(res, s + 1, n);
    Subspace<F> im(ker.dim());
    for (int j = 0; j < in.cols(); ++j) im.insert(f, ker.coordinates(f, in.column(j)));
    const auto kb = ker.basis(f);
    const auto comp = im.complement();
    std::vector<SparseOf<F>> hacts;
    for (const auto& a : c0) {
      std::vector<SparseVec<E>> cols;
      for (int c : comp) {
        const auto qc = im.quotient_coordinates(f, ker.coordinates(f, a.apply(f, kb[c])));
        SparseVec<E> col;
        for (int i = 0; i < static_cast<int>(qc.size()); ++i)
          if (!f.is_zero(qc[i])) col.emplace_back(i, qc[i]);
        cols.push_back(std::move(col));
      }
      hacts.push_back(SparseOf<F>::from_columns(static_cast<int>(comp.size()), cols));
    }
    dims.push_back(static_cast<int>(comp.size()));
    acts.push_back(std::move(hacts));
  }
  auto out = module_shell(f, group, dims);
  out.actions = std::move(acts);
  return out;
}

/// Smallest s with P_{s+1} = 0 on the window, or nullopt if every built term
/// beyond P_0 is nonzero.
template <class F>
std::optional<int> projective_dimension(const Resolution<F>& res) {
  for (int s = 0; s < res.length(); ++s)
    if (res.term(s + 1).module.is_zero()) return s;
  return std::nullopt;
}

struct InvariantOptions {
  bool allow_uncertified = false;
  CoverMode mode = CoverMode::automatic;
  /// Test hook: report every H_s one degree too high.
  bool tor_fault = false;
};

struct InvariantReport {
  DegreeValue gd;
  DegreeValue td;
  /// hd[s] for s = 0..smax; hd[0] is the generating degree.
  std::vector<DegreeValue> hd;
  int window = 0;
  std::optional<PresentationBounds> bounds;
  std::vector<int> dims;
  /// tor[s][n] = dim H_s(V)_n.
  std::vector<std::vector<int>> tor;
  std::optional<int> projective_dimension;
};

/// Window needed to certify gd, td and hd_1..hd_smax.
inline int required_window(const PresentationBounds& b, int smax) {
  int w = dmax(0, dmax(b.gen, b.torsion_window()));
  for (int s = 1; s <= smax; ++s) w = dmax(w, b.homology_window(s));
  return w;
}

template <class F>
InvariantReport invariant_report(const DegreewiseModule<F>& v, int smax, const InvariantOptions& opt = {}) {
  if (!opt.allow_uncertified) {
    if (!v.bounds) throw ContractViolation("invariant_report: module has no presentation bounds");
    const int need = required_window(*v.bounds, smax);
    if (v.window < need) throw WindowError("invariant_report", need, v.window);
  }
  InvariantReport r;
  r.window = v.window;
  r.bounds = v.bounds;
  r.dims = v.dims;
  r.gd = generating_degree(v);
  r.td = torsion_degree(v);
  const auto res = resolve(v, {smax + 1, opt.mode, false});
  r.tor = tor_dims(res);
  if (opt.tor_fault)
    for (auto& row : r.tor) {
      row.insert(row.begin(), 0);
      row.pop_back();
    }
  r.projective_dimension = projective_dimension(res);
  for (int s = 0; s <= smax; ++s) {
    const bool cert = v.bounds.has_value() && (s == 0 ? dle(v.bounds->gen, v.window) : v.window >= v.bounds->homology_window(s));
    r.hd.push_back({top_support(r.tor[s]), cert});
  }
  return r;
}

}  // namespace fihom
