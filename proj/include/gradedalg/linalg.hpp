// Exact dense linear algebra on Eigen storage: reduced row echelon form,
// rank, kernels, linear solves, and canonical subspaces.
#pragma once

#include "gradedalg/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace gradedalg {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

template <class S>
Matrix<S> zero_matrix(const Field<S>& f, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, f.zero());
}

template <class S>
Vector<S> zero_vector(const Field<S>& f, Index n) {
  return Vector<S>::Constant(n, f.zero());
}

template <class S>
Matrix<S> identity_matrix(const Field<S>& f, Index n) {
  Matrix<S> m = zero_matrix(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class S>
Vector<S> unit_vector(const Field<S>& f, Index n, Index i) {
  Vector<S> v = zero_vector(f, n);
  v(i) = f.one();
  return v;
}

template <class S, class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(S(m(i, j)))) return false;
  return true;
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <class S>
struct EchelonForm {
  Matrix<S> reduced;          ///< reduced row echelon form (pivots equal one)
  std::vector<Index> pivots;  ///< pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination.  Exact, so any nonzero entry is a valid pivot.
template <class S>
EchelonForm<S> row_echelon(Matrix<S> m) {
  EchelonForm<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = m.topRows(row);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return row_echelon(m).rank();
}

/// Columns form a basis of {x : m x = 0}.
template <class S>
Matrix<S> kernel(const Field<S>& f, const Matrix<S>& m) {
  const auto ech = row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector<S>> basis;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> v = zero_vector(f, n);
    v(free) = f.one();
    for (Index r = 0; r < ech.rank(); ++r) v(ech.pivots[static_cast<std::size_t>(r)]) = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  Matrix<S> out = zero_matrix(f, n, static_cast<Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Index>(k)) = basis[k];
  return out;
}

/// Some x with m x = b, if one exists.
template <class S>
std::optional<Vector<S>> solve(const Field<S>& f, const Matrix<S>& m, const Vector<S>& b) {
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto ech = row_echelon(aug);
  Vector<S> x = zero_vector(f, m.cols());
  for (Index r = 0; r < ech.rank(); ++r) {
    const Index p = ech.pivots[static_cast<std::size_t>(r)];
    if (p == m.cols()) return std::nullopt;
    x(p) = ech.reduced(r, m.cols());
  }
  return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Field<S>& f, const Matrix<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix(f, n);
  const auto ech = row_echelon(aug);
  if (ech.rank() < n || ech.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<S>(ech.reduced.rightCols(n));
}

/// Characteristic polynomial det(t I - m), coefficients low to high.
/// Hessenberg reduction followed by the usual recurrence; valid over any field.
template <class S>
std::vector<S> characteristic_coefficients(const Field<S>& f, Matrix<S> h) {
  const Index n = h.rows();
  for (Index m = 1; m + 1 < n; ++m) {
    Index piv = -1;
    for (Index i = m; i < n; ++i)
      if (!is_zero(h(i, m - 1))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      h.row(piv).swap(h.row(m));
      h.col(piv).swap(h.col(m));
    }
    const S inv = f.one() / h(m, m - 1);
    for (Index i = m + 1; i < n; ++i) {
      if (is_zero(h(i, m - 1))) continue;
      const S u = h(i, m - 1) * inv;
      for (Index j = 0; j < n; ++j) h(i, j) = h(i, j) - u * h(m, j);
      for (Index j = 0; j < n; ++j) h(j, m) = h(j, m) + u * h(j, i);
    }
  }
  // p_k = characteristic polynomial of the leading k x k block
  std::vector<std::vector<S>> p(static_cast<std::size_t>(n + 1));
  p[0] = {f.one()};
  for (Index k = 1; k <= n; ++k) {
    std::vector<S> next(static_cast<std::size_t>(k + 1), f.zero());
    const auto& prev = p[static_cast<std::size_t>(k - 1)];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] = next[i + 1] + prev[i];
      next[i] = next[i] - h(k - 1, k - 1) * prev[i];
    }
    S prod = f.one();
    for (Index i = 1; i < k; ++i) {
      prod = prod * h(k - i, k - i - 1);
      if (is_zero(prod)) break;
      const S coeff = prod * h(k - i - 1, k - 1);
      const auto& earlier = p[static_cast<std::size_t>(k - i - 1)];
      for (std::size_t j = 0; j < earlier.size(); ++j) next[j] = next[j] - coeff * earlier[j];
    }
    p[static_cast<std::size_t>(k)] = std::move(next);
  }
  return p[static_cast<std::size_t>(n)];
}

template <class S>
S trace(const Field<S>& f, const Matrix<S>& m) {
  S t = f.zero();
  for (Index i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// A subspace of S^n stored by its reduced row echelon basis, so equal
/// subspaces have identical data.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field<S> field, Index ambient) : field_(std::move(field)), ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `rows`.
  static Subspace from_rows(const Field<S>& field, Index ambient, const Matrix<S>& rows) {
    Subspace s(field, ambient);
    if (rows.rows() == 0) return s;
    auto ech = row_echelon(rows);
    s.basis_ = std::move(ech.reduced);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }
  static Subspace span(const Field<S>& field, Index ambient, const std::vector<Vector<S>>& vectors) {
    Matrix<S> rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    return from_rows(field, ambient, rows);
  }
  static Subspace whole(const Field<S>& field, Index ambient) {
    return from_rows(field, ambient, identity_matrix(field, ambient));
  }

  Index dim() const { return basis_.rows(); }
  Index ambient_dim() const { return ambient_; }
  const Matrix<S>& basis() const { return basis_; }
  Vector<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }
  const Field<S>& field() const { return field_; }

  /// Residue of v after clearing the pivot coordinates; zero iff v lies in the subspace.
  Vector<S> reduce(Vector<S> v) const {
    for (Index r = 0; r < dim(); ++r) {
      const S c = v(pivots_[static_cast<std::size_t>(r)]);
      if (is_zero(c)) continue;
      v -= basis_.row(r).transpose() * c;
    }
    return v;
  }
  bool contains(const Vector<S>& v) const { return is_zero_vector<S>(reduce(v)); }
  bool contains(const Subspace& other) const {
    for (Index r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector<S>& v) {
    if (contains(v)) return false;
    Matrix<S> rows(dim() + 1, ambient_);
    rows.topRows(dim()) = basis_;
    rows.row(dim()) = v.transpose();
    *this = from_rows(field_, ambient_, rows);
    return true;
  }

  Subspace sum(const Subspace& other) const {
    Matrix<S> rows(dim() + other.dim(), ambient_);
    rows.topRows(dim()) = basis_;
    rows.bottomRows(other.dim()) = other.basis_;
    return from_rows(field_, ambient_, rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.basis_ == b.basis_;
  }

 private:
  Field<S> field_{};
  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

}  // namespace gradedalg
