#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedalg/constructors.hpp"
#include "gradedalg/graded_module.hpp"
#include "gradedalg/graded_predicates.hpp"
#include "gradedalg/shifted_matrix.hpp"

using namespace gradedalg;

namespace {

const Field<Rational> Q;

// Grading closure read off the structure constants directly.
template <class S>
bool closure_oracle(const Algebra<S>& a, const std::vector<GroupElement>& deg) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector<S> p = a.multiply(a.basis(i), a.basis(j));
      for (Index k = 0; k < a.dim(); ++k)
        if (!is_zero(p(k)) && !(deg[static_cast<std::size_t>(k)] == group_combine(deg[static_cast<std::size_t>(i)], deg[static_cast<std::size_t>(j)])))
          return false;
    }
  return true;
}

// Every element of a finite algebra, in base-p counting order.
std::vector<Vector<Fp>> all_elements(const Field<Fp>& f, Index n) {
  std::vector<Vector<Fp>> out;
  const long long p = static_cast<long long>(f.characteristic());
  long long total = 1;
  for (Index i = 0; i < n; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    Vector<Fp> v(n);
    long long c = code;
    for (Index i = 0; i < n; ++i, c /= p) v(i) = f.from_int(c % p);
    out.push_back(v);
  }
  return out;
}

std::shared_ptr<TwistedGroupAlgebra<Rational>> laurent_step2() {
  return laurent(field_algebra(Q), 2);
}

ShiftedMatrixAlgebra<Rational> laurent_matrix() {
  const auto z = GradeGroup::abelian(1);
  return ShiftedMatrixAlgebra<Rational>(laurent_step2(), {z.element({0}), z.element({1}), z.element({1})});
}

}  // namespace

TEST_CASE("grading validation") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  CHECK(validate_grading(h).holds());
  CHECK(closure_oracle(h.algebra(), h.degrees()));

  const auto g = h.group();
  const std::vector<GroupElement> bad = {g.element({0, 0}), g.element({1, 0}), g.element({0, 1}), g.element({0, 0})};
  CHECK_FALSE(closure_oracle(h.algebra(), bad));
  const auto v = validate_grading(h.algebra(), g, bad);
  CHECK(v.fails());
  CHECK(v.witness.find("i") != std::string::npos);
  CHECK(v.witness.find("j") != std::string::npos);
  CHECK_THROWS_AS(GradedAlgebra<Rational>(h.algebra(), g, bad), StructuralError);

  CHECK(validate_grading(trivially_graded(h.algebra(), g)).holds());
  CHECK(validate_grading(symbol_algebra(Field<Fp>(5), 2, Fp(2, 5), Fp(3, 5), Fp(4, 5))).holds());
  CHECK(validate_grading(m2_grading_s(Q)).holds());
}

TEST_CASE("support and components") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  CHECK(h.support_elements().size() == 4);
  const auto c10 = component_basis(h, h.group().element({1, 0}));
  REQUIRE(c10.size() == 1);
  CHECK(h.embed(c10[0].degree, c10[0].coords) == h.algebra().basis(1));

  const auto k = trivially_graded(field_algebra(Q), GradeGroup::abelian(0, {2, 2}));
  CHECK(k.support_elements() == std::vector<GroupElement>{k.group().identity()});
  CHECK(k.component_dim(k.group().element({1, 1})) == 0);

  const auto r = laurent_step2();
  const auto z = r->group();
  CHECK(r->component_dim(z.element({4})) == 1);
  CHECK(r->component_labels(z.element({4})) == std::vector<std::string>{"x^4"});
  CHECK(r->component_dim(z.element({3})) == 0);

  // A[x] graded by Z: support is the cone {0, 1, 2, ...}
  typename TwistedGroupAlgebra<Rational>::Options o;
  o.kind = TwistedGroupAlgebra<Rational>::SupportKind::cone;
  const TwistedGroupAlgebra<Rational> poly(field_algebra(Q), z, {z.element({1})}, o);
  CHECK(poly.component_dim(z.element({7})) == 1);
  CHECK(poly.component_dim(z.element({-1})) == 0);
  CHECK(poly.support().kind == SupportInfo::Kind::cone);
}

TEST_CASE("strongly graded and crossed products") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  CHECK(is_strongly_graded(h).holds());
  CHECK(is_crossed_product(h).holds());

  const auto a = laurent_matrix();
  const auto s = is_strongly_graded(a);
  CHECK(s.holds());
  // the certificate expresses I_3 through products of degree 1 and -1 entries
  const auto z = a.group();
  const auto cert = strong_grading_certificate(a, z.element({1}));
  REQUIRE(cert.has_value());
  Vector<Rational> sum = a.component_zero(z.identity());
  for (const auto& t : *cert) sum += a.multiply(z.element({1}), t.x, z.element({-1}), t.y) * t.coeff;
  CHECK(sum == a.unit());

  const auto c = is_crossed_product(a);
  if (c.holds()) CHECK(s.holds());

  const auto z1 = GradeGroup::abelian(1);
  typename TwistedGroupAlgebra<Rational>::Options o;
  o.kind = TwistedGroupAlgebra<Rational>::SupportKind::cone;
  const TwistedGroupAlgebra<Rational> poly(field_algebra(Q), z1, {z1.element({1})}, o);
  const auto ps = is_strongly_graded(poly);
  CHECK(ps.fails());
  CHECK_FALSE(ps.witness.empty());

  CHECK(is_crossed_product(trivially_graded(field_algebra(Q), GradeGroup::trivial())).holds());
}

TEST_CASE("graded division") {
  const Field<Fp> f(5);
  const auto d = symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4));
  const auto v = is_graded_division(d);
  CHECK(v.holds());
  CHECK(v.strategy == Strategy::exhaustive);

  // every nonzero homogeneous element has a two-sided inverse among all 625 elements
  const auto everything = all_elements(f, 4);
  int invertible = 0, nonzero = 0;
  for (const auto& g : d.support_elements())
    for (const auto& c : all_elements(f, d.component_dim(g))) {
      if (is_zero_vector<Fp>(c)) continue;
      ++nonzero;
      const Vector<Fp> x = d.embed(g, c);
      for (const auto& y : everything)
        if (d.algebra().multiply(x, y) == d.algebra().unit() && d.algebra().multiply(y, x) == d.algebra().unit()) {
          ++invertible;
          break;
        }
    }
  CHECK(nonzero == 16);
  CHECK(invertible == nonzero);

  CHECK(is_graded_division(quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2)).holds());
  const auto m2 = is_graded_division(matrix_algebra(Q, 2));
  CHECK(m2.fails());
  CHECK(m2.witness.find("E11") != std::string::npos);
}

TEST_CASE("graded simple") {
  CHECK(is_graded_simple(laurent_matrix()).holds());
  const auto kk = is_graded_simple(split_product(Q));
  CHECK(kk.fails());
  CHECK(kk.witness.find("idempotent e") != std::string::npos);

  const Field<Fp> f(5);
  const auto d = symbol_algebra(f, 2, f.from_int(2), f.from_int(3), f.from_int(4));
  CHECK(is_graded_simple(d).holds());
  // ideal generated by x is the span of b_l x b_r over basis elements
  bool all_generate = true;
  for (const auto& g : d.support_elements())
    for (const auto& c : all_elements(f, d.component_dim(g))) {
      if (is_zero_vector<Fp>(c)) continue;
      const Vector<Fp> x = d.embed(g, c);
      std::vector<Vector<Fp>> span;
      for (Index l = 0; l < 4; ++l)
        for (Index r = 0; r < 4; ++r) span.push_back(d.algebra().multiply(d.algebra().multiply(d.algebra().basis(l), x), d.algebra().basis(r)));
      all_generate = all_generate && Subspace<Fp>::span(f, 4, span).dim() == 4;
    }
  CHECK(all_generate);
}

TEST_CASE("graded centre") {
  const auto s3 = symmetric_group_s3();
  const auto qs3 = group_ring(Q, s3);
  const auto gc = graded_center(qs3);
  CHECK(gc.center.dim() == 3);
  CHECK_FALSE(gc.is_graded);
  REQUIRE(gc.witness.has_value());
  const auto& alg = qs3.algebra();
  auto central = [&](const Vector<Rational>& z) {
    for (Index b = 0; b < alg.dim(); ++b)
      if (!(alg.multiply(z, alg.basis(b)) == alg.multiply(alg.basis(b), z))) return false;
    return true;
  };
  CHECK(central(*gc.witness));
  CHECK_FALSE(central(qs3.embed(*gc.witness_degree, qs3.project(*gc.witness, *gc.witness_degree))));
  // d + f is central but d is not
  const Vector<Rational> d = alg.basis(s3.element_named("d").coords()[0]);
  const Vector<Rational> fv = alg.basis(s3.element_named("f").coords()[0]);
  CHECK(central(Vector<Rational>(d + fv)));
  CHECK_FALSE(central(d));
  CHECK(format_element(alg, *gc.witness) == "d + f");

  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  const auto hc = graded_center(h);
  CHECK(hc.is_graded);
  CHECK(hc.center.dim() == 1);
  CHECK(hc.center.contains(h.algebra().unit()));
  CHECK(graded_center(group_ring(Q, GradeGroup::abelian(0, {2, 3}))).is_graded);
}

TEST_CASE("graded modules over a graded field") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  const auto g = h.group();
  auto field = std::make_shared<GradedAlgebra<Rational>>(trivially_graded(field_algebra(Q), g));
  const GradedFreeModule<Rational> m(field, h.degrees());
  using E = GradedFreeModule<Rational>::Element;
  auto elem = [&](Index c, long long k) {
    E x = m.basis_element(c);
    x.entries[static_cast<std::size_t>(c)] *= Rational(k);
    return x;
  };
  const auto basis = graded_module_basis(m, {elem(1, 1), elem(1, 2), elem(2, 1)});
  CHECK(basis.dim() == 2);
  CHECK(basis.pivots == std::vector<Index>{1, 2});
  CHECK(graded_module_basis(m, {}).dim() == 0);
  CHECK(graded_module_basis(m, {elem(0, 1), elem(1, 1), elem(2, 1), elem(3, 1)}).dim() == 4);
  CHECK(graded_quotient_dimension(m, {elem(0, 1), elem(1, 1), elem(2, 1), elem(3, 1)}, {elem(1, 3)}) == 3);
}

TEST_CASE("graded tensor and opposite") {
  const auto h = quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2);
  const auto hop = opposite(h);
  CHECK(hop.algebra().multiply(hop.algebra().basis(1), hop.algebra().basis(2)) == Vector<Rational>(-hop.algebra().basis(3)));
  const auto back = opposite(hop);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK(back.algebra().multiply(back.algebra().basis(i), back.algebra().basis(j)) == h.algebra().multiply(h.algebra().basis(i), h.algebra().basis(j)));

  const auto t = graded_tensor(h, hop);
  CHECK(t.dim() == 16);
  CHECK(validate_grading(t).holds());
  CHECK(t.support_elements().size() == 4);

  const auto k = trivially_graded(field_algebra(Q), h.group());
  const auto hk = graded_tensor(h, k);
  CHECK(hk.dim() == 4);
  CHECK(hk.degrees() == h.degrees());

  // the same tensor over GF(3) is graded simple by an exhaustive sweep
  const Field<Fp> f(3);
  const auto h3 = quaternion_algebra(f, f.from_int(-1), f.from_int(-1), QuaternionGrading::z2xz2);
  const auto t3 = graded_tensor(h3, opposite(h3));
  CHECK(is_graded_simple(t3).holds());
  bool all_generate = true;
  for (const auto& g : t3.support_elements())
    for (const auto& c : all_elements(f, t3.component_dim(g))) {
      if (is_zero_vector<Fp>(c)) continue;
      const Vector<Fp> x = t3.embed(g, c);
      std::vector<Vector<Fp>> span;
      for (Index l = 0; l < 16; ++l)
        for (Index r = 0; r < 16; ++r) span.push_back(t3.algebra().multiply(t3.algebra().multiply(t3.algebra().basis(l), x), t3.algebra().basis(r)));
      all_generate = all_generate && Subspace<Fp>::span(f, 16, span).dim() == 16;
    }
  CHECK(all_generate);

  CHECK_THROWS_AS(opposite(group_ring(Q, symmetric_group_s3())), NotApplicable);
}

TEST_CASE("dimension formula") {
  const auto z2 = dimension_formula_check(quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2));
  CHECK(z2.holds());
  CHECK(z2.witness == "[D:F] = 4, [D_0:F_0] = 2, |Gamma_D:Gamma_F| = 2");
  const auto z2z2 = dimension_formula_check(quaternion_algebra(Q, Rational(-1), Rational(-1), QuaternionGrading::z2xz2));
  CHECK(z2z2.holds());
  CHECK(z2z2.witness == "[D:F] = 4, [D_0:F_0] = 1, |Gamma_D:Gamma_F| = 4");
  const auto k = dimension_formula_check(trivially_graded(field_algebra(Q), GradeGroup::abelian(0, {2})));
  CHECK(k.holds());
  CHECK(k.witness == "[D:F] = 1, [D_0:F_0] = 1, |Gamma_D:Gamma_F| = 1");
}
