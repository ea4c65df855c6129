#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedalg/constructors.hpp"
#include "oracles.hpp"

using namespace gradedalg;

namespace {

const Field<Rational> Q;

Algebra<Rational> hamilton() { return quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::trivial).algebra(); }

template <class S>
Vector<S> vec(const Field<S>& f, std::initializer_list<long long> xs) {
  Vector<S> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = f.from_int(x);
  return v;
}

}  // namespace

TEST_CASE("quaternion products") {
  const auto h = hamilton();
  const Vector<Rational> i = h.basis(1), j = h.basis(2), k = h.basis(3);
  CHECK(h.multiply(i, j) == k);
  CHECK(h.multiply(j, i) == Vector<Rational>(-k));
  CHECK(h.multiply(k, k) == Vector<Rational>(-h.unit()));
  for (Index b = 0; b < 4; ++b) {
    CHECK(h.multiply(h.unit(), h.basis(b)) == h.basis(b));
    CHECK(h.multiply(h.basis(b), h.unit()) == h.basis(b));
  }
  CHECK(format_element(h, Vector<Rational>(vec(Q, {0, 2, 0, 0}) + k * Rational(-1, 2))) == "2*i - 1/2*k");
}

TEST_CASE("symbol algebra relation xy = xi yx") {
  const Field<Fp> f(5);
  const auto d = symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4)).algebra();
  const Vector<Fp> x = d.basis(symbol_index(2, 1, 0)), y = d.basis(symbol_index(2, 0, 1));
  CHECK(d.multiply(x, y) == Vector<Fp>(d.multiply(y, x) * f.from_int(4)));
  CHECK(d.multiply(x, x) == Vector<Fp>(d.unit() * f.from_int(2)));
  CHECK(d.multiply(y, y) == Vector<Fp>(d.unit() * f.from_int(3)));
}

TEST_CASE("left regular matrix") {
  const auto h = hamilton();
  CHECK(left_regular_matrix(h, h.unit()) == identity_matrix(Q, 4));
  CHECK(is_zero_matrix<Rational>(left_regular_matrix(h, h.zero())));
  const Matrix<Rational> li = left_regular_matrix(h, h.basis(1));
  // columns are i*1 = i, i*i = -1, i*j = k, i*k = -j
  CHECK(Vector<Rational>(li.col(0)) == vec(Q, {0, 1, 0, 0}));
  CHECK(Vector<Rational>(li.col(1)) == vec(Q, {-1, 0, 0, 0}));
  CHECK(Vector<Rational>(li.col(2)) == vec(Q, {0, 0, 0, 1}));
  CHECK(Vector<Rational>(li.col(3)) == vec(Q, {0, 0, -1, 0}));
}

TEST_CASE("inverses") {
  const auto h = hamilton();
  CHECK(*try_invert(h, h.basis(1)) == Vector<Rational>(-h.basis(1)));
  const auto m2 = matrix_algebra(Q, 2).algebra();
  CHECK_FALSE(try_invert(m2, m2.basis(0)).has_value());

  // f x^i y^j has inverse f^-1 a^-1 b^-1 xi^-ij x^(n-i) y^(n-j)
  const Field<Fp> f(7);
  const Fp a = f.from_int(3), b = f.from_int(5), xi = f.from_int(2);
  const Index n = 3;
  const auto d = symbol_algebra(f, n, a, b, xi).algebra();
  for (Index i = 1; i < n; ++i)
    for (Index j = 1; j < n; ++j) {
      const Fp c = f.from_int(4);
      const Vector<Fp> x = d.basis(symbol_index(n, i, j)) * c;
      const Fp coeff = f.one() / (c * a * b * power(f, xi, static_cast<std::uint64_t>(i * j)));
      const Vector<Fp> expected = d.basis(symbol_index(n, n - i, n - j)) * coeff;
      CHECK(*try_invert(d, x) == expected);
    }
}

TEST_CASE("centre") {
  const auto h = hamilton();
  const auto z = center(h);
  CHECK(z.dim() == 1);
  CHECK(z.contains(h.unit()));
  const auto k2 = group_ring(Q, GradeGroup::abelian(0, {2})).algebra();
  CHECK(center(k2).dim() == 2);

  // class sums of S3 span the centre of Q[S3]
  const auto s3 = symmetric_group_s3();
  const auto qs3 = group_ring(Q, s3).algebra();
  const auto zs = center(qs3);
  const std::vector<oracle::Perm> perms = {{0, 1, 2}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < 6; ++x) {
    std::set<std::size_t> cls;
    for (const auto& g : perms) {
      const auto c = oracle::compose(oracle::compose(g, perms[x]), oracle::invert(g));
      cls.insert(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  CHECK(classes.size() == 3);
  CHECK(zs.dim() == static_cast<Index>(classes.size()));
  for (const auto& cls : classes) {
    Vector<Rational> v = qs3.zero();
    for (auto idx : cls) v(s3.element_named(std::vector<std::string>{"e", "a", "b", "c", "d", "f"}[idx]).coords()[0]) = Rational(1);
    CHECK(zs.contains(v));
  }
}

TEST_CASE("two-sided ideals") {
  const auto m2 = matrix_algebra(Q, 2).algebra();
  CHECK(two_sided_ideal_closure(m2, {m2.basis(1)}).dim() == 4);
  CHECK(two_sided_ideal_closure(m2, {m2.zero()}).dim() == 0);
  CHECK(two_sided_ideal_closure(m2, {m2.unit()}).dim() == 4);
  const auto kk = split_product(Q).algebra();
  CHECK(two_sided_ideal_closure(kk, {kk.basis(0)}).dim() == 1);
}

TEST_CASE("central simple") {
  CHECK(is_central_simple(hamilton()).holds());
  const auto kk = is_central_simple(split_product(Q).algebra());
  CHECK(kk.fails());

  // M_2(GF(3)): every one of the 80 nonzero elements generates the whole
  // algebra, checked here by spanning e_ab x e_cd directly.
  const Field<Fp> f(3);
  const auto m2 = matrix_algebra(f, 2).algebra();
  CHECK(is_central_simple(m2).holds());
  int generating = 0;
  for (int code = 1; code < 81; ++code) {
    Vector<Fp> x(4);
    int c = code;
    for (Index t = 0; t < 4; ++t, c /= 3) x(t) = f.from_int(c % 3);
    std::vector<Vector<Fp>> span;
    for (Index l = 0; l < 4; ++l)
      for (Index r = 0; r < 4; ++r) span.push_back(m2.multiply(m2.multiply(m2.basis(l), x), m2.basis(r)));
    if (Subspace<Fp>::span(f, 4, span).dim() == 4) ++generating;
  }
  CHECK(generating == 80);
}

TEST_CASE("minimal polynomials") {
  const auto h = hamilton();
  CHECK(minimal_polynomial(h, h.basis(1)).to_string() == Polynomial<Rational>(Q, {Rational(1), Rational(0), Rational(1)}).to_string());
  CHECK(minimal_polynomial(h, h.unit()) == Polynomial<Rational>::linear(Q, Rational(1)));
  const Vector<Rational> x = h.unit() + h.basis(1);
  const auto m = minimal_polynomial(h, x);
  CHECK(m == Polynomial<Rational>(Q, {Rational(2), Rational(-2), Rational(1)}));
  // dependency oracle: x^2 - 2x + 2 = 0 and x is not a scalar
  CHECK(is_zero_vector<Rational>(Vector<Rational>(h.multiply(x, x) - x * Rational(2) + h.unit() * Rational(2))));
  CHECK(Subspace<Rational>::span(Q, 4, {h.unit(), x}).dim() == 2);
}

TEST_CASE("commutator subspace") {
  const auto h = hamilton();
  const auto c = commutator_subspace(h);
  CHECK(c.dim() == 3);
  CHECK(c == Subspace<Rational>::span(Q, 4, {h.basis(1), h.basis(2), h.basis(3)}));
  CHECK(commutator_subspace(split_product(Q).algebra()).dim() == 0);
  const auto m2 = matrix_algebra(Q, 2).algebra();
  const auto cm = commutator_subspace(m2);
  CHECK(cm.dim() == 3);
  // trace-zero matrices: E12, E21, E11 - E22
  CHECK(cm.contains(m2.basis(1)));
  CHECK(cm.contains(m2.basis(2)));
  CHECK(cm.contains(Vector<Rational>(m2.basis(0) - m2.basis(3))));
  CHECK_FALSE(cm.contains(m2.basis(0)));
}

TEST_CASE("construction rejects bad structure constants") {
  CHECK_THROWS_AS(Algebra<Rational>(Q, {"a", "b"}, {{{1, Rational(1)}}, {}, {{0, Rational(1)}}, {}}, std::nullopt), StructuralError);
  CHECK_THROWS_AS(Algebra<Rational>(Q, {"a"}, {}, std::nullopt), StructuralError);
}

TEST_CASE("tensor and opposite") {
  const auto h = hamilton();
  const auto op = opposite(h);
  CHECK(op.multiply(op.basis(1), op.basis(2)) == Vector<Rational>(-op.basis(3)));
  const auto opop = opposite(op);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK(opop.multiply(opop.basis(i), opop.basis(j)) == h.multiply(h.basis(i), h.basis(j)));
  const auto t = tensor(h, matrix_algebra(Q, 2).algebra());
  CHECK(t.dim() == 16);
  CHECK(center(t).dim() == 1);
}

TEST_CASE("semisimplicity") {
  CHECK(semisimplicity(hamilton()).holds());
  // K[t]/(t^2) has a radical
  const Algebra<Rational> dual(Q, {"1", "t"}, {{{0, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}, {}}, std::nullopt);
  CHECK(semisimplicity(dual).fails());
}
