#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedalg/constructors.hpp"
#include "gradedalg/reduced_trace.hpp"
#include "oracles.hpp"

#include <random>

using namespace gradedalg;

namespace {

const Field<Rational> Q;

Algebra<Rational> quaternions(const Rational& a, const Rational& b) {
  return quaternion_algebra(Q, a, b, QuaternionGrading::trivial).algebra();
}

Vector<Rational> quat(Rational w, Rational x, Rational y, Rational z) {
  Vector<Rational> v(4);
  v << w, x, y, z;
  return v;
}

// w^2 - a x^2 - b y^2 + ab z^2
Rational quaternion_norm(const Rational& a, const Rational& b, const Vector<Rational>& v) {
  return v(0) * v(0) - a * v(1) * v(1) - b * v(2) * v(2) + a * b * v(3) * v(3);
}

template <class S>
S regular_trace(const Algebra<S>& a, const Vector<S>& x) {
  S t = a.field().zero();
  for (Index i = 0; i < a.dim(); ++i) t = t + a.multiply(x, a.basis(i))(i);
  return t;
}

// q(x) with powers computed by repeated multiplication.
template <class S>
Vector<S> evaluate_at(const Algebra<S>& a, const Polynomial<S>& q, const Vector<S>& x) {
  Vector<S> acc = a.zero(), pw = a.unit();
  for (int k = 0; k <= q.degree(); ++k) {
    acc = acc + pw * q.coefficient(static_cast<std::size_t>(k));
    pw = a.multiply(pw, x);
  }
  return acc;
}

// residues of the basis commutators e_i e_j - e_j e_i, one row each
std::vector<std::vector<int>> commutator_rows(const Algebra<Fp>& a) {
  std::vector<std::vector<int>> rows;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector<Fp> c = a.multiply(a.basis(i), a.basis(j)) - a.multiply(a.basis(j), a.basis(i));
      std::vector<int> r;
      for (Index k = 0; k < a.dim(); ++k) r.push_back(static_cast<int>(c(k).value()));
      rows.push_back(r);
    }
  return rows;
}

}  // namespace

TEST_CASE("reduced characteristic polynomials") {
  const auto h = quaternions(Rational(-1), Rational(-1));
  const auto ci = reduced_char_poly(h, h.basis(1));
  CHECK(ci.q == Polynomial<Rational>(Q, {Rational(1), Rational(0), Rational(1)}));
  CHECK(ci.trd == Rational(0));
  CHECK(ci.nrd == Rational(1));
  const auto c1 = reduced_char_poly(h, quat(Rational(1), Rational(1), Rational(0), Rational(0)));
  CHECK(c1.q == Polynomial<Rational>(Q, {Rational(2), Rational(-2), Rational(1)}));
  CHECK(c1.trd == Rational(2));
  CHECK(c1.nrd == Rational(2));
  const auto cs = reduced_char_poly(h, Vector<Rational>(h.unit() * Rational(3, 2)));
  CHECK(cs.q == Polynomial<Rational>::linear(Q, Rational(3, 2)).pow(2));
  CHECK(cs.trd == Rational(3));
  CHECK(cs.nrd == Rational(9, 4));

  CHECK_THROWS_AS(reduced_char_poly(split_product(Q).algebra(), split_product(Q).algebra().unit()), NotApplicable);
  // E11 has reducible minimal polynomial t^2 - t: the square root of the
  // regular characteristic polynomial t^2 (t - 1)^2 is used instead
  const auto m2 = matrix_algebra(Q, 2).algebra();
  const auto e11 = reduced_char_poly(m2, m2.basis(0));
  CHECK(e11.route == "regular characteristic polynomial root");
  CHECK(e11.q == Polynomial<Rational>(Q, {Rational(0), Rational(-1), Rational(1)}));
  CHECK(e11.trd == Rational(1));
  CHECK(e11.nrd == Rational(0));
  CHECK(ci.route == "minimal polynomial");
  // in characteristic 2 with n = 2 there is no fallback
  const auto m2f2 = matrix_algebra(Field<Fp>(2), 2).algebra();
  CHECK_THROWS_AS(reduced_char_poly(m2f2, m2f2.basis(0)), NotApplicable);
}

TEST_CASE("reduced trace and norm identities on random quaternions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  auto r = [&] { return Rational(d(rng), 1 + (d(rng) + 6) % 3); };
  for (const auto& ab : std::vector<std::pair<Rational, Rational>>{{Rational(-1), Rational(-1)}, {Rational(-2), Rational(-5)}, {Rational(-1), Rational(-3)}}) {
    const auto h = quaternions(ab.first, ab.second);
    for (int t = 0; t < 15; ++t) {
      const Vector<Rational> x = quat(r(), r(), r(), r()), y = quat(r(), r(), r(), r());
      if (is_zero_vector<Rational>(x) || is_zero_vector<Rational>(y)) continue;
      const Rational s = r();
      CHECK(reduced_trace(h, x) == Rational(2) * x(0));
      CHECK(reduced_norm(h, x) == quaternion_norm(ab.first, ab.second, x));
      CHECK(reduced_norm(h, h.multiply(x, y)) == reduced_norm(h, x) * reduced_norm(h, y));
      CHECK(reduced_trace(h, Vector<Rational>(x + y)) == reduced_trace(h, x) + reduced_trace(h, y));
      CHECK(reduced_trace(h, Vector<Rational>(x * s)) == s * reduced_trace(h, x));
      if (!(s == Rational(0))) CHECK(reduced_norm(h, Vector<Rational>(x * s)) == s * s * reduced_norm(h, x));
      CHECK(reduced_trace(h, h.multiply(x, y)) == reduced_trace(h, h.multiply(y, x)));
      CHECK(regular_trace(h, x) == Rational(2) * reduced_trace(h, x));
      CHECK(is_zero_vector<Rational>(evaluate_at(h, reduced_char_poly(h, x).q, x)));
    }
  }
}

TEST_CASE("kernel of the reduced trace") {
  const auto h = quaternions(Rational(-1), Rational(-1));
  const auto k = trd_kernel_check(h);
  CHECK(k.holds());
  const auto ijk = Subspace<Rational>::span(Q, 4, {h.basis(1), h.basis(2), h.basis(3)});
  CHECK(commutator_subspace(h) == ijk);
  CHECK(commutator_subspace(h).dim() == 3);
  CHECK(trd_kernel_check(field_algebra(Q)).holds());
  CHECK(commutator_subspace(field_algebra(Q)).dim() == 0);

  for (const auto& [p, n, xi] : std::vector<std::tuple<int, Index, int>>{{7, 3, 2}, {5, 2, 4}, {7, 2, 6}, {13, 3, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    const Field<Fp> f(static_cast<std::uint64_t>(p));
    const auto d = symbol_algebra(f, n, f.from_int(3), f.from_int(2), f.from_int(xi)).algebra();
    CHECK(oracle::rank_mod_p(commutator_rows(d), p) == static_cast<int>(n * n - 1));
    CHECK(commutator_subspace(d).dim() == n * n - 1);
    CHECK(trd_kernel_check(d).holds());
    // Tr(L_a) = n Trd(a) on the basis
    for (Index i = 0; i < d.dim(); ++i)
      CHECK(regular_trace(d, d.basis(i)) == f.from_int(static_cast<long long>(n)) * reduced_trace(d, d.basis(i)));
  }
}

TEST_CASE("graded surjectivity of the reduced trace") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  const auto v = trd_graded_surjective_check(h);
  CHECK(v.holds());
  CHECK(v.witness == "image spans F (dim 1); Trd on the basis: 1->2 i->0 j->0 k->0");
  CHECK(trd_graded_surjective_check(trivially_graded(field_algebra(Q), GradeGroup::abelian(0, {3}))).holds());
  const Field<Fp> f(5);
  const auto s = symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4));
  const auto sv = trd_graded_surjective_check(s);
  CHECK(sv.holds());
  CHECK(sv.witness == "image spans F (dim 1); Trd on the basis: 1->2 x->0 y->0 x*y->0");
}

TEST_CASE("Trd(a) - n a is a sum of commutators") {
  const auto h = quaternions(Rational(-1), Rational(-1));
  const auto hi = trd_na_plus_commutator_check(h, h.basis(1));
  CHECK(hi.holds());
  CHECK(hi.witness == "Trd(a) 1 - n a = -2*i lies in [A,A]");
  CHECK(trd_na_plus_commutator_check(h, Vector<Rational>(h.unit() * Rational(5))).holds());
  CHECK(trd_na_plus_commutator_check(h, quat(Rational(1), Rational(2), Rational(-3), Rational(1, 2))).holds());
  const Field<Fp> f(7);
  const auto d = symbol_algebra(f, 3, f.from_int(3), f.from_int(2), f.from_int(2)).algebra();
  const auto dx = trd_na_plus_commutator_check(d, d.basis(symbol_index(3, 1, 0)));
  CHECK(dx.holds());
  CHECK(dx.witness == "Trd(a) 1 - n a = 4*x lies in [A,A]");
  // x = c [y, x y^2] for a scalar c: the commutator lies on the x axis
  const Vector<Fp> y = d.basis(symbol_index(3, 0, 1)), xy2 = d.basis(symbol_index(3, 1, 2));
  const Vector<Fp> c = d.multiply(y, xy2) - d.multiply(xy2, y);
  for (Index k = 0; k < d.dim(); ++k)
    if (k != symbol_index(3, 1, 0)) CHECK(c(k) == f.zero());
  CHECK_FALSE(c(symbol_index(3, 1, 0)) == f.zero());
}

TEST_CASE("support of the commutator span") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  CHECK(is_totally_ramified(h));
  std::vector<std::string> supp;
  for (const auto& g : commutator_support(h)) supp.push_back(g.to_string());
  std::sort(supp.begin(), supp.end());
  CHECK(supp == std::vector<std::string>{"(0,1)", "(1,0)", "(1,1)"});
  const auto hv = supp_commutator_lemma_check(h);
  CHECK(hv.holds());
  CHECK(hv.witness.rfind("totally ramified;", 0) == 0);

  const auto h2 = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2);
  CHECK_FALSE(is_totally_ramified(h2));
  CHECK(commutator_support(h2).size() == 2);
  const auto h2v = supp_commutator_lemma_check(h2);
  CHECK(h2v.holds());
  CHECK(h2v.witness.rfind("not totally ramified", 0) == 0);

  const auto k = supp_commutator_lemma_check(trivially_graded(field_algebra(Q), GradeGroup::abelian(0, {2})));
  CHECK(k.holds());
  CHECK(k.witness == "commutative: [D,D] = 0");

  const Field<Fp> f(5);
  const auto s = symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4));
  const auto& sa = s.algebra();
  const Vector<Fp> x = sa.basis(symbol_index(2, 1, 0)), y = sa.basis(symbol_index(2, 0, 1));
  CHECK(format_element(sa, Vector<Fp>(sa.multiply(x, y) - sa.multiply(y, x))) == "2*x*y");
  CHECK(is_totally_ramified(s));
  supp.clear();
  for (const auto& g : commutator_support(s)) supp.push_back(g.to_string());
  std::sort(supp.begin(), supp.end());
  CHECK(supp == std::vector<std::string>{"(0,1)", "(1,0)", "(1,1)"});
  CHECK(commutator_subspace(sa).dim() == 3);
  CHECK(supp_commutator_lemma_check(s).holds());
}

TEST_CASE("central commutators force commutativity") {
  const auto k = central_commutators_imply_commutative_check(field_algebra(Q));
  CHECK(k.holds());
  CHECK(k.witness == "all commutators central and the algebra is commutative");
  const auto h = central_commutators_imply_commutative_check(quaternions(Rational(-1), Rational(-1)));
  CHECK(h.holds());
  CHECK(h.witness == "hypothesis fails: [i,j] = 2*k is not central");
  const Field<Fp> f(5);
  const auto s = central_commutators_imply_commutative_check(symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4)).algebra());
  CHECK(s.holds());
  CHECK(s.witness == "hypothesis fails: [x,y] = 2*x*y is not central");
}

TEST_CASE("degree-zero part of a Laurent ring over H is not central") {
  const auto r = laurent(quaternions(Rational(-1), Rational(-1)), 1);
  const auto e = r->group().identity();
  REQUIRE(r->component_dim(e) == 4);
  const Vector<Rational> i = unit_vector(Q, 4, 1), j = unit_vector(Q, 4, 2);
  CHECK_FALSE(r->multiply(e, i, e, j) == r->multiply(e, j, e, i));
}
