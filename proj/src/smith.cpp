#include "gradedalg/smith.hpp"

#include <utility>

namespace gradedalg {

IntMatrix int_zero(Eigen::Index rows, Eigen::Index cols) { return IntMatrix::Constant(rows, cols, Integer(0)); }

IntMatrix int_identity(Eigen::Index n) {
  IntMatrix m = int_zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Integer(1);
  return m;
}

namespace {

using Eigen::Index;

// Row/column operations applied simultaneously to the working matrix and
// the transforms.
struct Work {
  IntMatrix a, u, v, vinv;

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    vinv.row(i).swap(vinv.row(j));
  }
  // row_i -= q * row_j
  void sub_row(Index i, Index j, const Integer& q) {
    if (q.is_zero()) return;
    for (Index c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (Index c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
  }
  // col_i -= q * col_j  (V <- V E, V^{-1} <- E^{-1} V^{-1})
  void sub_col(Index i, Index j, const Integer& q) {
    if (q.is_zero()) return;
    for (Index r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (Index r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
    for (Index c = 0; c < vinv.cols(); ++c) vinv(j, c) += q * vinv(i, c);
  }
  void negate_row(Index i) {
    for (Index c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (Index c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  Work w{m, int_identity(rows), int_identity(cols), int_identity(cols)};
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block goes to (t, t)
      Index pr = -1, pc = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (w.a(i, j).is_zero()) continue;
          if (pr < 0 || abs(w.a(i, j)) < abs(w.a(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;  // trailing block is zero
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      const Integer p = w.a(t, t);

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (w.a(i, t).is_zero()) continue;
        w.sub_row(i, t, w.a(i, t) / p);
        if (!w.a(i, t).is_zero()) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (w.a(t, j).is_zero()) continue;
        w.sub_col(j, t, w.a(t, j) / p);
        if (!w.a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      Index bad_row = -1;
      for (Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (!(w.a(i, j) % abs(p)).is_zero()) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      w.sub_row(t, bad_row, Integer(-1));  // row_t += row_bad
    }
    if (w.a(t, t).sign() < 0) w.negate_row(t);
  }

  SmithForm out;
  out.invariants.reserve(static_cast<std::size_t>(steps));
  for (Index t = 0; t < steps; ++t) out.invariants.push_back(w.a(t, t));
  out.diagonal = std::move(w.a);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.v_inverse = std::move(w.vinv);
  return out;
}

}  // namespace gradedalg
