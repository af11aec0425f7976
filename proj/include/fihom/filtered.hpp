#pragma once

// Structural detection of filtered modules, the finite complex of filtered
// modules 0 -> V -> F^{-1} -> F^{-2} -> ... built from shifted torsionless
// parts, derived regularity, and the Hilbert polynomial past the stable range.

#include <gmpxx.h>

#include "fihom/homology.hpp"

namespace fihom {

/// Outcome of peeling basic filtered layers off a module. On success the
/// layers are listed bottom-up; on failure `layer_degree` is the degree of the
/// layer that did not extend freely and `failing_degree` where it broke.
template <class F>
struct FilteredVerdict {
  bool filtered = false;
  bool certified = false;
  std::vector<Representation<F>> layers;
  int layer_degree = kNegInf;
  int failing_degree = kNegInf;
  int expected = 0;
  int found = 0;
};

/// Greedy peel: with n₀ the least nonzero degree, the submodule generated by
/// V_{n₀} is a quotient of C ⊗_{kG_{n₀}} V_{n₀}, so it is isomorphic to it iff
/// its dimension at every m is binom(m, n₀)·dim V_{n₀}. Quotient and repeat.
template <class F>
FilteredVerdict<F> is_filtered(const DegreewiseModule<F>& v) {
  const auto& f = v.field;
  FilteredVerdict<F> out;
  out.certified = v.bounds.has_value() && v.window >= dmax(0, v.bounds->torsion_window());
  DegreewiseModule<F> cur = v;
  while (true) {
    int n0 = 0;
    while (n0 <= cur.window && cur.dims[n0] == 0) ++n0;
    if (n0 > cur.window) break;
    const int d = cur.dims[n0];
    std::vector<Subspace<F>> subs;
    for (int n = 0; n < n0; ++n) subs.emplace_back(cur.dims[n]);
    subs.push_back(Subspace<F>::whole(f, d));
    for (int n = n0 + 1; n <= cur.window; ++n) {
      std::vector<VecOf<F>> seeds;
      for (const auto& b : subs.back().basis(f)) seeds.push_back(cur.structmaps[n - 1].apply(f, b));
      subs.push_back(group_span(cur, n, Subspace<F>(cur.dims[n]), seeds));
      const auto expected = binomial(n, n0) * d;
      if (subs.back().dim() != expected) {
        out.layer_degree = n0;
        out.failing_degree = n;
        out.expected = static_cast<int>(expected);
        out.found = subs.back().dim();
        return out;
      }
    }
    out.layers.push_back(Representation<F>{n0, d, cur.actions[n0]});
    cur = quotient_module(cur, subs).module;
  }
  out.filtered = true;
  return out;
}

template <class F>
struct ComplexHomology {
  int index = 0;
  DegreewiseModule<F> module;
  DegreeValue td;
};

/// 0 -> V -> F^{-1} -> ... -> F^{-n-1} -> 0 with F^{i-1} = Σ_{N_i} V^i_F and
/// V^{i-1} = coker(V^i -> F^{i-1}). Windows shrink by N_i at each step.
template <class F>
struct FilteredComplex {
  DegreewiseModule<F> V;
  std::vector<DegreewiseModule<F>> terms;
  std::vector<std::vector<Representation<F>>> filtrations;
  /// maps[k]: F^{-k} -> F^{-k-1}, with F^0 = V, on the window of the target.
  std::vector<ModuleMap<F>> maps;
  std::vector<int> shifts;
  /// gd and td of V^0, V^{-1}, ...
  std::vector<DegreeValue> stage_gd;
  std::vector<DegreeValue> stage_td;
  /// H_{-1}, H_{-2}, ...; H_i ≅ V^{i+1}_T.
  std::vector<ComplexHomology<F>> homologies;
  DegreeValue derived_regularity{kNegInf, true};

  /// Number of filtered terms.
  int length() const { return static_cast<int>(terms.size()); }
};

/// The shift used at a stage: max{td, 2gd − 2} + 1, never negative.
inline int stage_shift(int td, int gd) {
  const int t = dmax(td, is_neg_inf(gd) ? kNegInf : 2 * gd - 2);
  return is_neg_inf(t) ? 0 : std::max(0, t + 1);
}

/// A priori window the complex needs, from presentation bounds alone. The
/// construction itself uses measured degrees and usually needs less.
inline int complex_window_demand(const PresentationBounds& b) {
  if (is_neg_inf(b.gen) || b.gen < 0) return 0;
  const int g = b.gen;
  const int t = b.torsion_bound();
  const int n = stage_shift(t, g);
  const PresentationBounds fb{g, dmax(b.rel, t)};
  const PresentationBounds next{g - 1, dmax(fb.rel, g)};
  return std::max(dmax(0, b.torsion_window()), n + std::max({dmax(0, fb.torsion_window()), g, complex_window_demand(next)}));
}

template <class F>
FilteredComplex<F> filtered_complex(const DegreewiseModule<F>& v) {
  if (!v.bounds) throw ContractViolation("filtered_complex: presentation bounds required");
  const auto& f = v.field;
  FilteredComplex<F> out{v, {}, {}, {}, {}, {}, {}, {}};
  DegreewiseModule<F> cur = v;
  ModuleMap<F> into_cur = identity_map(v);
  int consumed = 0;
  for (int index = -1;; --index) {
    const auto& b = *cur.bounds;
    const int tw = dmax(0, b.torsion_window());
    if (cur.window < tw) throw WindowError("filtered_complex stage " + std::to_string(-index - 1), consumed + tw, v.window);
    const auto gd = generating_degree(cur);
    auto split = torsion_split(cur);
    const auto td = torsion_degree(cur);
    out.stage_gd.push_back(gd);
    out.stage_td.push_back(td);
    const DegreeValue htd{split.VT.top_degree(), true};
    out.derived_regularity.value = dmax(out.derived_regularity.value, htd.value);
    out.homologies.push_back({index, split.VT, htd});
    if (split.VF.is_zero()) break;

    const int n = stage_shift(td.value, gd.value);
    const int fw = dmax(0, split.VF.bounds->torsion_window());
    if (cur.window < n + std::max(fw, gd.value))
      throw WindowError("filtered_complex term " + std::to_string(index), consumed + n + std::max(fw, gd.value), v.window);
    auto term = shift(split.VF, n);
    auto verdict = is_filtered(term);
    if (!verdict.filtered)
      throw PropertyViolation("filtered_complex: term F^" + std::to_string(index) + " is not filtered (layer " +
                              degree_string(verdict.layer_degree) + " breaks at degree " +
                              degree_string(verdict.failing_degree) + ")");
    auto delta = compose_maps(f, natural_map(split.VF, n), compose_maps(f, split.projection, into_cur));
    auto coker = map_cokernel(term, truncate(delta, term.window));
    auto next = std::move(coker.module);
    next.bounds = PresentationBounds{gd.value, dmax(term.bounds->rel, gd.value)};
    next.bounds->gen = generating_degree(next).value;

    consumed += n;
    out.shifts.push_back(n);
    out.filtrations.push_back(std::move(verdict.layers));
    out.maps.push_back(std::move(delta));
    out.terms.push_back(std::move(term));
    into_cur = std::move(coker.projection);
    cur = std::move(next);
  }
  return out;
}

/// δ∘δ = 0 and dim ker δ^i − dim im δ^{i+1} = dim H_i at every shared degree.
template <class F>
std::vector<std::string> complex_issues(const FilteredComplex<F>& c) {
  const auto& f = c.V.field;
  std::vector<std::string> issues;
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    const auto dd = compose_maps(f, c.maps[k + 1], c.maps[k]);
    for (int n = 0; n <= dd.window(); ++n)
      if (rank(f, dd.mats[n]) != 0) issues.push_back("d∘d ≠ 0 at term " + std::to_string(k) + ", degree " + std::to_string(n));
  }
  // H_{-k-1} sits at F^{-k} (F^0 = V) between maps[k-1] (incoming) and maps[k] (outgoing)
  for (std::size_t k = 0; k < c.homologies.size(); ++k) {
    const auto& h = c.homologies[k].module;
    const int w = k < c.maps.size() ? c.maps[k].window() : h.window;
    for (int n = 0; n <= std::min(w, h.window); ++n) {
      const int src = k == 0 ? c.V.dims[n] : c.terms[k - 1].dims[n];
      const int out_rank = k < c.maps.size() ? rank(f, c.maps[k].mats[n]) : 0;
      const int in_rank = k == 0 ? 0 : rank(f, c.maps[k - 1].mats[n]);
      if (src - out_rank - in_rank != h.dims[n])
        issues.push_back("homology H_" + std::to_string(c.homologies[k].index) + " has wrong dimension at degree " +
                         std::to_string(n));
    }
  }
  return issues;
}

template <class F>
DegreeValue derived_regularity(const DegreewiseModule<F>& v) {
  return filtered_complex(v).derived_regularity;
}

/// A polynomial with rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<mpq_class> coefficients;

  int degree() const {
    for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
      if (coefficients[k] != 0) return k;
    return kNegInf;
  }
  mpq_class operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * x + *it;
    return r;
  }
  std::string to_string() const;
};

/// The unique polynomial of degree < |xs| through the points.
RationalPolynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

struct GrowthReport {
  int stable_from = 0;
  RationalPolynomial poly;
  int verified_from = 0;
  int verified_to = 0;
  DegreeValue gd;
  DegreeValue td;
  /// Least n from which the polynomial matches through the window.
  int observed_from = 0;
  /// The older bound r + min{r, gd} in terms of the relation degree r.
  int relation_bound = kNegInf;
};

inline int stable_from(int td, int gd) { return stage_shift(td, gd); }

/// Interpolates dim V_n on the first gd+1 degrees past max{td, 2gd − 2}; the
/// remaining window degrees are checked, never fitted.
template <class F>
GrowthReport fit_polynomial(const DegreewiseModule<F>& v) {
  GrowthReport r;
  r.gd = generating_degree(v);
  r.td = torsion_degree(v);
  r.stable_from = stable_from(r.td.value, r.gd.value);
  const int nodes = is_neg_inf(r.gd.value) ? 0 : r.gd.value + 1;
  const int need = std::max(r.stable_from + nodes, v.bounds ? dmax(0, v.bounds->torsion_window()) : 0);
  if (!r.gd.certified || !r.td.certified || v.window < need) throw WindowError("fit_polynomial", need, v.window);
  std::vector<mpq_class> xs, ys;
  for (int j = 0; j < nodes; ++j) {
    xs.emplace_back(r.stable_from + j);
    ys.emplace_back(v.dims[r.stable_from + j]);
  }
  r.poly = interpolate(xs, ys);
  r.verified_from = r.stable_from;
  r.verified_to = v.window;
  for (int n = r.stable_from; n <= v.window; ++n)
    if (r.poly(mpq_class(n)) != v.dims[n])
      throw PropertyViolation("fit_polynomial: " + r.poly.to_string() + " disagrees with dim V_" + std::to_string(n) + " = " +
                              std::to_string(v.dims[n]));
  r.observed_from = r.stable_from;
  while (r.observed_from > 0 && r.poly(mpq_class(r.observed_from - 1)) == v.dims[r.observed_from - 1]) --r.observed_from;
  if (v.bounds && !is_neg_inf(v.bounds->rel))
    r.relation_bound = dadd(v.bounds->rel, std::min(v.bounds->rel, r.gd.value));
  return r;
}

}  // namespace fihom
