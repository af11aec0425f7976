#pragma once

// Shift Σ_a (precomposition with i -> i + a), the natural map V -> ΣV, its
// cokernel D and kernel K (the socle), and the torsion/torsionless split.

#include "fihom/module.hpp"

namespace fihom {

template <class F>
DegreewiseModule<F> shift(const DegreewiseModule<F>& v, int a = 1) {
  if (a < 0) throw ContractViolation("shift: negative amount");
  if (a > v.window) throw WindowError("shift by " + std::to_string(a), a, v.window);
  if (a == 0) return v;
  const int q = v.group.order();
  const int w = v.window - a;
  std::vector<int> dims(v.dims.begin() + a, v.dims.end());
  auto s = module_shell(v.field, v.group, dims);
  for (int n = 0; n <= w; ++n) {
    for (int i = 1; i < n; ++i) s.actions[n][i - 1] = v.transposition(n + a, i + a);
    // a color on point 1 of Σ_a V is a color on point 1 + a of V
    for (int g = 0; n >= 1 && g < q; ++g)
      s.actions[n][n - 1 + g] = detail::word_matrix(v, n + a, color_word(n + a, 1 + a, g));
    if (n < w) s.structmaps[n] = v.structmaps[n + a];
  }
  s.bounds = v.bounds;
  return s;
}

/// Components V_n -> V_{n+a} of the injection i -> i + a; the source is V
/// truncated to the window of Σ_a V.
template <class F>
ModuleMap<F> natural_map(const DegreewiseModule<F>& v, int a = 1) {
  if (a < 0) throw ContractViolation("natural_map: negative amount");
  if (a > v.window) throw WindowError("natural_map", a, v.window);
  ModuleMap<F> m;
  for (int n = 0; n + a <= v.window; ++n) {
    const auto tau = canonical_factor(v.group, FiGMorphism::translation(n, a));
    SparseOf<F> chain = SparseOf<F>::identity(v.field, v.dims[n]);
    for (int k = n; k < n + a; ++k) chain = detail::sparse_multiply(v.field, v.structmaps[k], chain);
    const auto word = detail::word_matrix(v, n + a, wreath_word(v.group, tau));
    m.mats.push_back(detail::sparse_multiply(v.field, word, chain).to_dense(v.field));
  }
  return m;
}

/// DV = coker(V -> ΣV).
template <class F>
DegreewiseModule<F> derivative(const DegreewiseModule<F>& v) {
  auto d = map_cokernel(shift(v, 1), natural_map(v)).module;
  if (v.bounds) {
    const int g = v.bounds->gen;
    d.bounds = dle(g, 0) ? PresentationBounds{} : PresentationBounds{g - 1, dmax(v.bounds->rel, g)};
  }
  return d;
}

/// ker φ_n as a subspace of V_n.
template <class F>
Subspace<F> structmap_kernel(const DegreewiseModule<F>& v, int n) {
  return Subspace<F>::column_span(v.field, kernel_basis(v.field, v.structmaps[n].to_dense(v.field)));
}

/// Bounds for a torsion module whose torsion degree is at most t.
inline PresentationBounds torsion_bounds(int t) {
  return is_neg_inf(t) ? PresentationBounds{} : PresentationBounds{t, t + 1};
}

/// K = ker(V -> ΣV), on the window of ΣV. One morphism [n] -> [n+1] kills v
/// iff all of them do, so ker φ_n is the same subspace.
template <class F>
SubmoduleResult<F> torsion_kernel(const DegreewiseModule<F>& v) {
  if (v.window < 1) throw WindowError("torsion_kernel", 1, v.window);
  const auto t = truncate(v, v.window - 1);
  std::vector<Subspace<F>> subs;
  for (int n = 0; n < v.window; ++n) subs.push_back(structmap_kernel(v, n));
  auto k = submodule(t, subs);
  if (v.bounds) k.module.bounds = torsion_bounds(v.bounds->torsion_bound());
  return k;
}

/// Top degree of the socle. Certified once the window reaches gen + rel.
template <class F>
DegreeValue torsion_degree(const DegreewiseModule<F>& v) {
  DegreeValue out{kNegInf, v.bounds && v.window >= v.bounds->torsion_window()};
  for (int n = v.window - 1; n >= 0; --n)
    if (v.dims[n] && rank(v.field, v.structmaps[n].to_dense(v.field)) < v.dims[n]) {
      out.value = n;
      break;
    }
  return out;
}

template <class F>
struct TorsionSplit {
  DegreewiseModule<F> VT;
  DegreewiseModule<F> VF;
  ModuleMap<F> inclusion;
  ModuleMap<F> projection;
  bool certified = false;
};

/// 0 -> V_T -> V -> V_F -> 0. An element is torsion iff it dies in degree
/// td + 1; nothing above td is torsion.
template <class F>
TorsionSplit<F> torsion_split(const DegreewiseModule<F>& v) {
  const auto& f = v.field;
  const auto td = torsion_degree(v);
  std::vector<Subspace<F>> subs;
  for (int n = 0; n <= v.window; ++n) {
    if (!dle(n, td.value)) {
      subs.emplace_back(v.dims[n]);
      continue;
    }
    SparseOf<F> chain = SparseOf<F>::identity(f, v.dims[n]);
    for (int k = n; k <= td.value; ++k) chain = detail::sparse_multiply(f, v.structmaps[k], chain);
    subs.push_back(Subspace<F>::column_span(f, kernel_basis(f, chain.to_dense(f))));
  }
  auto sub = submodule(v, subs);
  auto quo = quotient_module(v, subs);
  TorsionSplit<F> out{std::move(sub.module), std::move(quo.module), std::move(sub.inclusion), std::move(quo.projection),
                      td.certified};
  if (v.bounds) {
    const int t = td.certified ? td.value : v.bounds->torsion_bound();
    out.VT.bounds = torsion_bounds(t);
    out.VF.bounds = PresentationBounds{v.bounds->gen, dmax(v.bounds->rel, t)};
  }
  return out;
}

}  // namespace fihom
