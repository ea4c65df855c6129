// Smith normal form of integer matrices.
#pragma once

#include "gradedalg/scalar.hpp"

#include <Eigen/Core>

#include <vector>

namespace gradedalg {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... (all
/// nonnegative; zeros trail).  `v_inverse` is V^{-1}.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  IntMatrix diagonal;
  /// The min(rows, cols) diagonal entries, including trailing zeros.
  std::vector<Integer> invariants;
};

SmithForm smith_normal_form(const IntMatrix& m);

IntMatrix int_identity(Eigen::Index n);
IntMatrix int_zero(Eigen::Index rows, Eigen::Index cols);

}  // namespace gradedalg
