#pragma once

// Brute-force recomputation of H_0 and the socle by enumerating every
// morphism of the category, for cross-checking the engine on small windows.

#include "fihom/module.hpp"

namespace fihom {

/// dim V_n minus the dimension of the span of all images α·V_m, m < n.
template <class F>
std::vector<int> brute_h0_dims(const DegreewiseModule<F>& v) {
  const auto& f = v.field;
  std::vector<int> out;
  for (int n = 0; n <= v.window; ++n) {
    Subspace<F> img(v.dims[n]);
    for (int m = 0; m < n; ++m)
      for (const auto& a : hom_set(m, n, v.group)) {
        const auto mat = v.morphism_matrix(a);
        for (int j = 0; j < mat.cols(); ++j) img.insert(f, mat.column(j));
      }
    out.push_back(v.dims[n] - img.dim());
  }
  return out;
}

/// dim {x ∈ V_n : α·x = 0 for every α ∈ C(n, n+1)} for n < window.
template <class F>
std::vector<int> brute_socle_dims(const DegreewiseModule<F>& v) {
  const auto& f = v.field;
  std::vector<int> out;
  for (int n = 0; n < v.window; ++n) {
    std::vector<VecOf<F>> rows;
    for (const auto& a : hom_set(n, n + 1, v.group)) {
      const auto mat = v.morphism_matrix(a);
      for (int i = 0; i < mat.rows(); ++i) {
        VecOf<F> r(v.dims[n], f.zero());
        for (int j = 0; j < v.dims[n]; ++j) r[j] = mat(i, j);
        rows.push_back(std::move(r));
      }
    }
    const auto stacked = Subspace<F>::spanned_by(f, v.dims[n], rows);
    out.push_back(v.dims[n] - stacked.dim());
  }
  return out;
}

}  // namespace fihom
