#pragma once

// Dense and sparse exact linear algebra over a field type F (PrimeField or
// RationalField). Everything is deterministic: pivots are chosen by a fixed
// rule so derived bases are reproducible.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fihom/category.hpp"
#include "fihom/field.hpp"

namespace fihom {

template <class E>
using Vec = std::vector<E>;

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const E& fill) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, fill) {}

  static Matrix zero(const auto& f, int rows, int cols) { return Matrix(rows, cols, f.zero()); }
  static Matrix identity(const auto& f, int n) {
    Matrix m(n, n, f.zero());
    for (int i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  /// Builds a matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(const auto& f, int rows, const std::vector<Vec<E>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()), f.zero());
    for (int j = 0; j < m.cols_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  E& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const E& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  Vec<E> column(int c) const {
    Vec<E> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_column(int c, const Vec<E>& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<E> data_;
};

template <class E>
using SparseVec = std::vector<std::pair<int, E>>;

/// Column-compressed sparse matrix. Used for module action data, which is
/// monomial for free and induced modules.
template <class E>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), colptr_(cols + 1, 0) {}

  static SparseMatrix from_columns(int rows, const std::vector<SparseVec<E>>& cols) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      auto sorted = cols[j];
      std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [r, v] : sorted) {
        m.rowidx_.push_back(r);
        m.vals_.push_back(std::move(v));
      }
      m.colptr_[j + 1] = static_cast<int>(m.rowidx_.size());
    }
    return m;
  }
  static SparseMatrix from_dense(const auto& f, const Matrix<E>& d) {
    std::vector<SparseVec<E>> cols(d.cols());
    for (int j = 0; j < d.cols(); ++j)
      for (int i = 0; i < d.rows(); ++i)
        if (!f.is_zero(d(i, j))) cols[j].emplace_back(i, d(i, j));
    return from_columns(d.rows(), cols);
  }
  static SparseMatrix identity(const auto& f, int n) {
    std::vector<SparseVec<E>> cols(n);
    for (int j = 0; j < n; ++j) cols[j].emplace_back(j, f.one());
    return from_columns(n, cols);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return rowidx_.size(); }

  template <class Fn>
  void for_column(int j, Fn&& fn) const {
    for (int k = colptr_[j]; k < colptr_[j + 1]; ++k) fn(rowidx_[k], vals_[k]);
  }

  Matrix<E> to_dense(const auto& f) const {
    Matrix<E> d(rows_, cols_, f.zero());
    for (int j = 0; j < cols_; ++j) for_column(j, [&](int i, const E& v) { d(i, j) = v; });
    return d;
  }

  /// y = A x
  Vec<E> apply(const auto& f, const Vec<E>& x) const {
    Vec<E> y(rows_, f.zero());
    for (int j = 0; j < cols_; ++j) {
      if (f.is_zero(x[j])) continue;
      for_column(j, [&](int i, const E& v) { f.addmul(y[i], v, x[j]); });
    }
    return y;
  }

  bool operator==(const SparseMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> colptr_{0};
  std::vector<int> rowidx_;
  std::vector<E> vals_;
};

template <class F>
using MatrixOf = Matrix<typename F::Elem>;
template <class F>
using SparseOf = SparseMatrix<typename F::Elem>;
template <class F>
using VecOf = Vec<typename F::Elem>;

template <class F>
MatrixOf<F> multiply(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
  if (a.cols() != b.rows()) throw ContractViolation("multiply: dimension mismatch");
  MatrixOf<F> c(a.rows(), b.cols(), f.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) f.addmul(c(i, j), aik, b(k, j));
    }
  return c;
}

template <class F>
MatrixOf<F> multiply(const F& f, const SparseOf<F>& a, const MatrixOf<F>& b) {
  if (a.cols() != b.rows()) throw ContractViolation("multiply: dimension mismatch");
  MatrixOf<F> c(a.rows(), b.cols(), f.zero());
  for (int k = 0; k < a.cols(); ++k)
    a.for_column(k, [&](int i, const auto& v) {
      for (int j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) f.addmul(c(i, j), v, b(k, j));
    });
  return c;
}

template <class F>
MatrixOf<F> multiply(const F& f, const MatrixOf<F>& a, const SparseOf<F>& b) {
  if (a.cols() != b.rows()) throw ContractViolation("multiply: dimension mismatch");
  MatrixOf<F> c(a.rows(), b.cols(), f.zero());
  for (int j = 0; j < b.cols(); ++j)
    b.for_column(j, [&](int k, const auto& v) {
      for (int i = 0; i < a.rows(); ++i)
        if (!f.is_zero(a(i, k))) f.addmul(c(i, j), a(i, k), v);
    });
  return c;
}

template <class F>
VecOf<F> apply(const F& f, const MatrixOf<F>& a, const VecOf<F>& x) {
  VecOf<F> y(a.rows(), f.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!f.is_zero(x[j])) f.addmul(y[i], a(i, j), x[j]);
  return y;
}

template <class F>
bool is_zero_vec(const F& f, const VecOf<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& e) { return f.is_zero(e); });
}

template <class F>
bool is_zero_matrix(const F& f, const MatrixOf<F>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m(i, j))) return false;
  return true;
}

template <class F>
struct RrefResult {
  MatrixOf<F> reduced;
  std::vector<int> pivots;
  int rank = 0;
};

/// Reduced row echelon form; the pivot of each row is its first nonzero column.
template <class F>
RrefResult<F> rref(const F& f, MatrixOf<F> a) {
  RrefResult<F> out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!f.is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    const auto s = f.inv(a(row, col));
    for (int c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), s);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a(r, col))) continue;
      const auto factor = f.neg(a(r, col));
      for (int c = col; c < a.cols(); ++c)
        if (!f.is_zero(a(row, c))) f.addmul(a(r, c), factor, a(row, c));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(a);
  return out;
}

template <class F>
int rank(const F& f, const MatrixOf<F>& a) {
  return rref(f, a).rank;
}

/// Columns span ker(A); the column for free variable j has a 1 in row j and
/// zeros in the other free rows.
template <class F>
MatrixOf<F> kernel_basis(const F& f, const MatrixOf<F>& a) {
  auto r = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<VecOf<F>> cols;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    VecOf<F> x(a.cols(), f.zero());
    x[j] = f.one();
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.reduced(i, j));
    cols.push_back(std::move(x));
  }
  return MatrixOf<F>::from_columns(f, a.cols(), cols);
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<VecOf<F>> solve(const F& f, const MatrixOf<F>& a, const VecOf<F>& b) {
  MatrixOf<F> aug(a.rows(), a.cols() + 1, f.zero());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto r = rref(f, std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  VecOf<F> x(a.cols(), f.zero());
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

/// A subspace of F^ambient kept in fully reduced echelon form where each
/// basis vector's pivot is its *last* nonzero coordinate. With this choice
/// the non-pivot positions are exactly the greedy (increasing) completion of
/// the subspace to the whole space, and for a vector inside the subspace its
/// coordinates are its entries at the pivot positions.
template <class F>
class Subspace {
 public:
  using E = typename F::Elem;

  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), slot_of_pivot_(ambient, -1) {}

  static Subspace spanned_by(const F& f, int ambient, const std::vector<VecOf<F>>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(f, v);
    return s;
  }
  static Subspace column_span(const F& f, const MatrixOf<F>& m) {
    Subspace s(m.rows());
    for (int j = 0; j < m.cols(); ++j) s.insert(f, m.column(j));
    return s;
  }
  static Subspace whole(const F& f, int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
      s.slot_of_pivot_[i] = static_cast<int>(s.basis_.size());
      s.basis_.push_back({{i, f.one()}});
      s.pivot_.push_back(i);
    }
    s.sorted_valid_ = false;
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// Subtracts the subspace component; the result vanishes at every pivot.
  void reduce_in_place(const F& f, VecOf<F>& v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const int p = pivot_[k];
      if (f.is_zero(v[p])) continue;
      const E c = f.neg(v[p]);
      for (const auto& [i, x] : basis_[k]) f.addmul(v[i], c, x);
    }
  }
  VecOf<F> reduce(const F& f, VecOf<F> v) const {
    reduce_in_place(f, v);
    return v;
  }
  bool contains(const F& f, const VecOf<F>& v) const { return is_zero_vec(f, reduce(f, v)); }

  /// Adds v to the spanning set; returns true iff the dimension grew.
  bool insert(const F& f, VecOf<F> v) {
    reduce_in_place(f, v);
    int p = -1;
    for (int i = ambient_ - 1; i >= 0; --i)
      if (!f.is_zero(v[i])) {
        p = i;
        break;
      }
    if (p < 0) return false;
    const E s = f.inv(v[p]);
    SparseVec<E> row;
    for (int i = 0; i <= p; ++i)
      if (!f.is_zero(v[i])) row.emplace_back(i, f.mul(v[i], s));
    for (auto& b : basis_) {
      auto it = std::lower_bound(b.begin(), b.end(), p, [](const auto& e, int key) { return e.first < key; });
      if (it == b.end() || it->first != p) continue;
      const E c = f.neg(it->second);
      b = sparse_axpy(f, b, c, row);
    }
    slot_of_pivot_[p] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(row));
    pivot_.push_back(p);
    sorted_valid_ = false;
    return true;
  }

  /// Pivot positions in increasing order; coordinate i refers to pivots()[i].
  const std::vector<int>& pivots() const {
    if (!sorted_valid_) {
      sorted_pivots_ = pivot_;
      std::sort(sorted_pivots_.begin(), sorted_pivots_.end());
      sorted_valid_ = true;
    }
    return sorted_pivots_;
  }
  /// Greedy completion: standard-basis indices not in pivot position.
  std::vector<int> complement() const {
    std::vector<int> out;
    for (int i = 0; i < ambient_; ++i)
      if (slot_of_pivot_[i] < 0) out.push_back(i);
    return out;
  }

  VecOf<F> basis_vector(const F& f, int i) const {
    VecOf<F> v(ambient_, f.zero());
    for (const auto& [idx, x] : basis_[slot_of_pivot_[pivots()[i]]]) v[idx] = x;
    return v;
  }
  /// Basis vectors as columns, ordered by pivot.
  MatrixOf<F> basis_matrix(const F& f) const {
    MatrixOf<F> m(ambient_, dim(), f.zero());
    const auto& piv = pivots();
    for (int c = 0; c < dim(); ++c)
      for (const auto& [idx, x] : basis_[slot_of_pivot_[piv[c]]]) m(idx, c) = x;
    return m;
  }
  std::vector<VecOf<F>> basis(const F& f) const {
    std::vector<VecOf<F>> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(f, i));
    return out;
  }

  /// Coordinates of a vector lying in the subspace.
  VecOf<F> coordinates(const F&, const VecOf<F>& v) const {
    VecOf<F> c;
    c.reserve(dim());
    for (int p : pivots()) c.push_back(v[p]);
    return c;
  }
  /// Coordinates of v + S in the quotient, w.r.t. the complement basis.
  VecOf<F> quotient_coordinates(const F& f, VecOf<F> v) const {
    reduce_in_place(f, v);
    VecOf<F> c;
    c.reserve(ambient_ - dim());
    for (int i = 0; i < ambient_; ++i)
      if (slot_of_pivot_[i] < 0) c.push_back(std::move(v[i]));
    return c;
  }

 private:
  static SparseVec<E> sparse_axpy(const F& f, const SparseVec<E>& a, const E& c, const SparseVec<E>& b) {
    SparseVec<E> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f.mul(c, b[j].second));
        ++j;
      } else {
        E v = a[i].second;
        f.addmul(v, c, b[j].second);
        if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  int ambient_ = 0;
  std::vector<SparseVec<E>> basis_;
  std::vector<int> pivot_;
  std::vector<int> slot_of_pivot_;
  mutable std::vector<int> sorted_pivots_;
  mutable bool sorted_valid_ = true;
};

/// Greedy completion of the independent columns of S to a basis of
/// F^ambient_dim: standard-basis indices, increasing.
template <class F>
std::vector<int> quotient_basis(const F& f, const MatrixOf<F>& s, int ambient_dim) {
  if (s.rows() != ambient_dim) throw ContractViolation("quotient_basis: column length differs from ambient dimension");
  auto sub = Subspace<F>::column_span(f, s);
  if (sub.dim() != s.cols()) throw ContractViolation("quotient_basis: columns are dependent");
  return sub.complement();
}

}  // namespace fihom
