// Named constructions: quaternion and symbol algebras, Laurent rings,
// group rings, matrix algebras with good and non-good gradings, and
// algebras presented as spans of matrices.
#pragma once

#include "gradedalg/shifted_matrix.hpp"
#include "gradedalg/twisted_group_algebra.hpp"

namespace gradedalg {

/// Structure constants of the algebra spanned by `mats` (closed under
/// products, containing the identity).
template <class S>
Algebra<S> algebra_from_matrices(const Field<S>& f, std::vector<std::string> labels, const std::vector<Matrix<S>>& mats,
                                 Validation validation = Validation::full) {
  const auto k = static_cast<Index>(mats.size());
  if (k == 0) throw StructuralError("no matrices given");
  const Index n = mats[0].rows();
  Matrix<S> span(n * n, k);
  for (Index i = 0; i < k; ++i) span.col(i) = Eigen::Map<const Vector<S>>(mats[static_cast<std::size_t>(i)].data(), n * n);
  if (rank(span) != k) throw StructuralError("matrices are linearly dependent");
  auto coords = [&](const Matrix<S>& m) {
    const Matrix<S> copy = m;
    auto c = gradedalg::solve(f, span, Vector<S>(Eigen::Map<const Vector<S>>(copy.data(), n * n)));
    if (!c) throw StructuralError("matrix span is not closed under multiplication");
    return *c;
  };
  std::vector<SparseVector<S>> products;
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      products.push_back(sparsify(coords(Matrix<S>(mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)]))));
  return Algebra<S>(f, std::move(labels), std::move(products), coords(identity_matrix(f, n)), validation);
}

/// Coordinates of a matrix in an algebra_from_matrices basis.
template <class S>
Vector<S> matrix_coordinates(const Field<S>& f, const std::vector<Matrix<S>>& mats, const Matrix<S>& m) {
  const auto k = static_cast<Index>(mats.size());
  const Index n = m.rows();
  Matrix<S> span(n * n, k);
  for (Index i = 0; i < k; ++i) span.col(i) = Eigen::Map<const Vector<S>>(mats[static_cast<std::size_t>(i)].data(), n * n);
  auto c = gradedalg::solve(f, span, Vector<S>(Eigen::Map<const Vector<S>>(m.data(), n * n)));
  if (!c) throw StructuralError("matrix is not in the span");
  return *c;
}

template <class S>
Matrix<S> small_matrix(const Field<S>& f, Index n, std::initializer_list<long long> entries) {
  Matrix<S> m(n, n);
  auto it = entries.begin();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = f.from_int(*it++);
  return m;
}

// ---------------------------------------------------------------------------
// Quaternions

enum class QuaternionGrading { trivial, z2, z2xz2 };

inline QuaternionGrading parse_quaternion_grading(const std::string& s) {
  if (s == "trivial") return QuaternionGrading::trivial;
  if (s == "Z2" || s == "Z/2") return QuaternionGrading::z2;
  if (s == "Z2xZ2" || s == "Z/2xZ/2" || s == "Z/2 x Z/2") return QuaternionGrading::z2xz2;
  throw StructuralError("unknown quaternion grading '" + s + "'");
}

inline std::string to_string(QuaternionGrading g) {
  switch (g) {
    case QuaternionGrading::trivial: return "trivial";
    case QuaternionGrading::z2: return "Z2";
    case QuaternionGrading::z2xz2: return "Z2xZ2";
  }
  return "?";
}

/// (a,b)_K on 1, i, j, k with i^2 = a, j^2 = b, k = ij = -ji.
template <class S>
GradedAlgebra<S> quaternion_algebra(const Field<S>& f, const S& a, const S& b, QuaternionGrading grading) {
  if (f.characteristic() == 2) throw NotApplicable("quaternion algebras need 2 invertible");
  if (is_zero(a) || is_zero(b)) throw StructuralError("quaternion parameters must be nonzero");
  const S one = f.one();
  const S ab = a * b;
  auto t = [](Index i, S c) { return SparseVector<S>{{i, std::move(c)}}; };
  // rows: 1, i, j, k
  std::vector<SparseVector<S>> p = {
      t(0, one), t(1, one), t(2, one), t(3, one),    //
      t(1, one), t(0, a),   t(3, one), t(2, a),      //
      t(2, one), t(3, -one), t(0, b),  t(1, -b),     //
      t(3, one), t(2, -a),  t(1, b),   t(0, -ab),    //
  };
  Algebra<S> alg(f, {"1", "i", "j", "k"}, std::move(p), unit_vector(f, 4, 0));
  GradeGroup g = GradeGroup::trivial();
  std::vector<GroupElement> deg;
  switch (grading) {
    case QuaternionGrading::trivial:
      deg.assign(4, g.identity());
      break;
    case QuaternionGrading::z2:
      g = GradeGroup::abelian(0, {2});
      deg = {g.element({0}), g.element({0}), g.element({1}), g.element({1})};
      break;
    case QuaternionGrading::z2xz2:
      g = GradeGroup::abelian(0, {2, 2});
      deg = {g.element({0, 0}), g.element({1, 0}), g.element({0, 1}), g.element({1, 1})};
      break;
  }
  Witnesses<S> w;
  w.basis_inverses[0] = unit_vector(f, 4, 0);
  w.basis_inverses[1] = Vector<S>(unit_vector(f, 4, 1) * (one / a));
  w.basis_inverses[2] = Vector<S>(unit_vector(f, 4, 2) * (one / b));
  w.basis_inverses[3] = Vector<S>(unit_vector(f, 4, 3) * (-(one / ab)));
  NormCertificate<S> nc;
  nc.conjugation = identity_matrix(f, 4);
  for (Index i = 1; i < 4; ++i) nc.conjugation(i, i) = -one;
  nc.norm = Vector<S>(4);
  nc.norm << one, -a, -b, ab;
  w.norm = std::move(nc);
  return GradedAlgebra<S>(std::move(alg), std::move(g), std::move(deg), std::move(w));
}

/// e = 1/4 (1(x)1 + a^-1 i(x)i + b^-1 j(x)j - (ab)^-1 k(x)k) in A (x) A^op on
/// the basis a_i (x) a_j (index 4 i + j); for a = b = -1 this is
/// 1/4 (1(x)1 - i(x)i - j(x)j - k(x)k).
template <class S>
Vector<S> quaternion_separability_idempotent(const Field<S>& f, const S& a, const S& b) {
  const S q = f.one() / f.from_int(4);
  Vector<S> e = zero_vector(f, 16);
  e(0) = q;
  e(5) = q / a;
  e(10) = q / b;
  e(15) = -(q / (a * b));
  return e;
}

// ---------------------------------------------------------------------------
// Symbol algebras

/// Basis index of x^i y^j.
inline Index symbol_index(Index n, Index i, Index j) { return j * n + i; }

/// (a,b)_{K,xi}: x^n = a, y^n = b, xy = xi yx, on the basis x^i y^j
/// (0 <= i,j < n) graded by Z/n x Z/n with deg(x^i y^j) = (i,j).
/// Products use y^j x^k = xi^{-jk} x^k y^j.  Inverses are attached in
/// closed form: (x^i y^j)^{-1} = a^{-1} b^{-1} xi^{-ij} x^{n-i} y^{n-j}.
template <class S>
GradedAlgebra<S> symbol_algebra(const Field<S>& f, Index n, const S& a, const S& b, const S& xi) {
  if (n < 1) throw StructuralError("symbol algebra degree must be positive");
  if (is_zero(a) || is_zero(b)) throw StructuralError("symbol parameters must be nonzero");
  S power = f.one();
  for (Index k = 1; k <= n; ++k) {
    power = power * xi;
    if (k < n && power == f.one()) throw StructuralError("xi = " + xi.to_string() + " is not a primitive n-th root of unity");
  }
  if (!(power == f.one())) throw StructuralError("xi^n != 1");
  if (n == 1) {
    Algebra<S> k(f, {"1"}, {SparseVector<S>{{0, f.one()}}}, unit_vector(f, 1, 0));
    GradeGroup g = GradeGroup::trivial();
    Witnesses<S> w;
    w.basis_inverses[0] = unit_vector(f, 1, 0);
    return GradedAlgebra<S>(std::move(k), g, {g.identity()}, std::move(w));
  }
  std::vector<S> xi_pow{f.one()};
  for (Index k = 1; k < n; ++k) xi_pow.push_back(xi_pow.back() * xi);
  auto xp = [&](Index e) { return xi_pow[static_cast<std::size_t>(((e % n) + n) % n)]; };
  const Index dim = n * n;
  std::vector<std::string> labels(static_cast<std::size_t>(dim));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      std::string l;
      auto mono = [](const char* v, Index e) { return e == 0 ? std::string() : e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e); };
      const std::string xs = mono("x", i), ys = mono("y", j);
      l = xs.empty() ? (ys.empty() ? "1" : ys) : (ys.empty() ? xs : xs + "*" + ys);
      labels[static_cast<std::size_t>(symbol_index(n, i, j))] = l;
    }
  std::vector<SparseVector<S>> products(static_cast<std::size_t>(dim * dim));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      for (Index l = 0; l < n; ++l)
        for (Index k = 0; k < n; ++k) {
          // (x^i y^j)(x^k y^l) = xi^{-jk} x^{i+k} y^{j+l}
          S c = xp(-j * k);
          Index ii = i + k, jj = j + l;
          if (ii >= n) {
            ii -= n;
            c = c * a;
          }
          if (jj >= n) {
            jj -= n;
            c = c * b;
          }
          products[static_cast<std::size_t>(symbol_index(n, i, j) * dim + symbol_index(n, k, l))] = {{symbol_index(n, ii, jj), c}};
        }
  Algebra<S> alg(f, labels, std::move(products), unit_vector(f, dim, 0));
  GradeGroup g = GradeGroup::abelian(0, {n, n});
  std::vector<GroupElement> deg(static_cast<std::size_t>(dim));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) deg[static_cast<std::size_t>(symbol_index(n, i, j))] = g.element({i, j});
  Witnesses<S> w;
  const S inv_ab = f.one() / (a * b);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      // x^{n-i} y^{n-j} with x^n = a, y^n = b folded into the coefficient
      S c = inv_ab * xp(-i * j);
      if (i == 0) c = c * a;
      if (j == 0) c = c * b;
      w.basis_inverses[symbol_index(n, i, j)] = Vector<S>(unit_vector(f, dim, symbol_index(n, (n - i) % n, (n - j) % n)) * c);
    }
  return GradedAlgebra<S>(std::move(alg), std::move(g), std::move(deg), std::move(w));
}

// ---------------------------------------------------------------------------
// Laurent rings

/// E[x^k, x^-k] graded by Z with support kZ.
template <class S>
std::shared_ptr<TwistedGroupAlgebra<S>> laurent(const Algebra<S>& e, std::int64_t step, const std::string& variable = "x") {
  if (step < 1) throw StructuralError("Laurent step must be positive");
  GradeGroup z = GradeGroup::abelian(1);
  typename TwistedGroupAlgebra<S>::Options o;
  o.variable = variable;
  return std::make_shared<TwistedGroupAlgebra<S>>(e, z, std::vector<GroupElement>{z.element({step})}, o);
}

/// The base field as a one-dimensional algebra.
template <class S>
Algebra<S> field_algebra(const Field<S>& f) {
  return Algebra<S>(f, {"1"}, {SparseVector<S>{{0, f.one()}}}, unit_vector(f, 1, 0), Validation::skip);
}

/// M_n(K[x^k, x^-k])(shift), the stepped Laurent matrix ring.
template <class S>
ShiftedMatrixAlgebra<S> laurent_matrix_ring(const Field<S>& f, std::int64_t step, const std::vector<std::int64_t>& shift) {
  auto r = laurent(field_algebra(f), step);
  std::vector<GroupElement> d;
  for (auto s : shift) d.push_back(r->group().element({s}));
  return ShiftedMatrixAlgebra<S>(r, std::move(d));
}

// ---------------------------------------------------------------------------
// Group rings

/// K[G] on the group elements, deg(g) = g.
template <class S>
GradedAlgebra<S> group_ring(const Field<S>& f, const GradeGroup& g) {
  if (!g.is_finite()) throw NotApplicable("group rings need a finite group");
  const auto elems = g.elements();
  const auto n = static_cast<Index>(elems.size());
  std::vector<std::string> labels;
  for (const auto& x : elems) labels.push_back(x.to_string());
  auto index_of = [&](const GroupElement& x) {
    for (Index i = 0; i < n; ++i)
      if (elems[static_cast<std::size_t>(i)] == x) return i;
    throw std::logic_error("group element not enumerated");
  };
  std::vector<SparseVector<S>> products;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      products.push_back({{index_of(group_combine(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])), f.one()}});
  Witnesses<S> w;
  for (Index i = 0; i < n; ++i) w.basis_inverses[i] = unit_vector(f, n, index_of(group_inverse(elems[static_cast<std::size_t>(i)])));
  Algebra<S> alg(f, std::move(labels), std::move(products), unit_vector(f, n, index_of(g.identity())));
  return GradedAlgebra<S>(std::move(alg), g, elems, std::move(w));
}

/// S_3 = {e, a=(23), b=(13), c=(12), d=(123), f=(132)} acting on {1,2,3}.
inline GradeGroup symmetric_group_s3() {
  return GradeGroup::from_permutations({{0, 1, 2}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "a", "b", "c", "d", "f"});
}

/// D_4 as symmetries of a square with vertices 0..3: rotations r^k and
/// reflections s r^k.
inline GradeGroup dihedral_group_d4() {
  return GradeGroup::from_permutations({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}, {0, 3, 2, 1}, {3, 2, 1, 0}, {2, 1, 0, 3}, {1, 0, 3, 2}},
                                       {"e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"});
}

// ---------------------------------------------------------------------------
// Matrix algebras

/// M_n(K) on the matrix units E_ij (index i n + j), with the designated
/// matrix-unit family attached.  With `gamma` given the grading is the good
/// grading deg(E_ij) = gamma_i^{-1} gamma_j; otherwise it is trivial.
template <class S>
GradedAlgebra<S> matrix_algebra(const Field<S>& f, Index n, const std::optional<std::vector<GroupElement>>& gamma = std::nullopt) {
  if (n < 1) throw StructuralError("matrix size must be positive");
  std::vector<std::string> labels;
  std::vector<SparseVector<S>> products;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (Index a = 0; a < n * n; ++a)
    for (Index b = 0; b < n * n; ++b) {
      if (a % n == b / n)
        products.push_back({{(a / n) * n + b % n, f.one()}});
      else
        products.push_back({});
    }
  Vector<S> one = zero_vector(f, n * n);
  for (Index i = 0; i < n; ++i) one(i * n + i) = f.one();
  Algebra<S> alg(f, std::move(labels), std::move(products), one);
  GradeGroup g = gamma && !gamma->empty() ? (*gamma)[0].group() : GradeGroup::trivial();
  if (gamma && static_cast<Index>(gamma->size()) != n) throw StructuralError("good grading needs one degree per row");
  std::vector<GroupElement> deg;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      deg.push_back(gamma ? group_combine(group_inverse((*gamma)[static_cast<std::size_t>(i)]), (*gamma)[static_cast<std::size_t>(j)])
                          : g.identity());
  Witnesses<S> w;
  w.matrix_units.assign(static_cast<std::size_t>(n), std::vector<Vector<S>>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) w.matrix_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = unit_vector(f, n * n, i * n + j);
  return GradedAlgebra<S>(std::move(alg), std::move(g), std::move(deg), std::move(w));
}

/// M_2(K) with the Z/2-grading diagonal = degree 0, antidiagonal = degree 1.
template <class S>
GradedAlgebra<S> m2_grading_r(const Field<S>& f) {
  GradeGroup z2 = GradeGroup::abelian(0, {2});
  return matrix_algebra(f, 2, std::vector<GroupElement>{z2.element({0}), z2.element({1})});
}

/// Basis matrices of the second Z/2-grading of M_2(K):
/// s1 = [[1,-1],[0,0]], s2 = [[0,1],[0,1]] in degree 0 and
/// s3 = [[0,1],[0,0]], s4 = [[1,0],[1,-1]] in degree 1.
template <class S>
std::vector<Matrix<S>> m2_grading_s_matrices(const Field<S>& f) {
  return {small_matrix(f, 2, {1, -1, 0, 0}), small_matrix(f, 2, {0, 1, 0, 1}), small_matrix(f, 2, {0, 1, 0, 0}),
          small_matrix(f, 2, {1, 0, 1, -1})};
}

/// M_2(K) on s1..s4; E11 is not homogeneous here.
template <class S>
GradedAlgebra<S> m2_grading_s(const Field<S>& f) {
  const auto mats = m2_grading_s_matrices(f);
  Algebra<S> alg = algebra_from_matrices(f, {"s1", "s2", "s3", "s4"}, mats);
  GradeGroup z2 = GradeGroup::abelian(0, {2});
  Witnesses<S> w;
  w.matrix_units.assign(2, std::vector<Vector<S>>(2));
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      Matrix<S> e = zero_matrix(f, 2, 2);
      e(i, j) = f.one();
      w.matrix_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = matrix_coordinates(f, mats, e);
    }
  return GradedAlgebra<S>(std::move(alg), z2, {z2.element({0}), z2.element({0}), z2.element({1}), z2.element({1})}, std::move(w));
}

/// [[a,b],[c,d]] -> [[a+c, b+d-a-c],[c, d-c]] from the first grading to the
/// second, as a 4x4 matrix on the bases E11,E12,E21,E22 and s1..s4.
template <class S>
Matrix<S> m2_r_to_s_map(const Field<S>& f) {
  const auto mats = m2_grading_s_matrices(f);
  Matrix<S> images(4, 4);
  for (Index k = 0; k < 4; ++k) {
    Matrix<S> e = zero_matrix(f, 2, 2);
    e(k / 2, k % 2) = f.one();
    const S a = e(0, 0), b = e(0, 1), c = e(1, 0), d = e(1, 1);
    Matrix<S> img(2, 2);
    img << a + c, b + d - a - c, c, d - c;
    images.col(k) = matrix_coordinates(f, mats, img);
  }
  return images;
}

/// K x K, trivially graded by the given group.
template <class S>
GradedAlgebra<S> split_product(const Field<S>& f, const GradeGroup& g = GradeGroup::trivial()) {
  Algebra<S> alg(f, {"e1", "e2"}, {{{0, f.one()}}, {}, {}, {{1, f.one()}}}, std::nullopt);
  return trivially_graded(alg, g);
}

}  // namespace gradedalg
