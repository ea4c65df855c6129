// Azumaya checks: the enveloping algebra and its action, the map
// psi(a (x) b)(x) = a x b, separability idempotents, Braun's criterion, the
// graded central simple route and the group-ring criterion.
#pragma once

#include "gradedalg/graded_module.hpp"

namespace gradedalg {

/// A^e = A (x) A^op on the basis a_i (x) a_j (index i * n + j), with the
/// action (a (x) b) * x = a x b.
template <class S>
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(Algebra<S> a) : base_(std::move(a)), env_(tensor(base_, opposite(base_))) {
    const Index n = base_.dim();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Matrix<S> m(n, n);
        for (Index k = 0; k < n; ++k) m.col(k) = base_.multiply(base_.multiply(base_.basis(i), base_.basis(k)), base_.basis(j));
        star_.push_back(std::move(m));
      }
  }

  const Algebra<S>& base() const { return base_; }
  const Algebra<S>& algebra() const { return env_; }
  Index dim() const { return env_.dim(); }

  Vector<S> pure(const Vector<S>& a, const Vector<S>& b) const {
    const Index n = base_.dim();
    Vector<S> v = env_.zero();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i * n + j) = a(i) * b(j);
    return v;
  }
  Vector<S> left(const Vector<S>& a) const { return pure(a, base_.unit()); }
  Vector<S> right(const Vector<S>& b) const { return pure(base_.unit(), b); }
  /// Matrix of x -> a_i x a_j, indexed by i * n + j.
  const Matrix<S>& star_matrix(Index k) const { return star_[static_cast<std::size_t>(k)]; }
  Vector<S> star(const Vector<S>& e, const Vector<S>& x) const {
    Vector<S> out = base_.zero();
    for (Index k = 0; k < dim(); ++k)
      if (!is_zero(e(k))) out += Vector<S>(star_[static_cast<std::size_t>(k)] * x) * e(k);
    return out;
  }

 private:
  Algebra<S> base_;
  Algebra<S> env_;
  std::vector<Matrix<S>> star_;
};

/// The graded enveloping algebra, deg(a (x) b) = deg a + deg b.
template <class S>
GradedAlgebra<S> graded_enveloping(const GradedAlgebra<S>& a) {
  return graded_tensor(a, opposite(a));
}

/// n^2 x n^2 matrix of psi: column i * n + j is the column-major
/// vectorisation of x -> a_i x a_j.
template <class S>
Matrix<S> psi_matrix(const EnvelopingAlgebra<S>& e) {
  const Index n = e.base().dim();
  Matrix<S> m(n * n, n * n);
  for (Index k = 0; k < n * n; ++k) m.col(k) = Eigen::Map<const Vector<S>>(e.star_matrix(k).data(), n * n);
  return m;
}

/// psi_A bijective over the base field, by exact rank.
template <class S>
VerdictReport psi_bijective(const Algebra<S>& a) {
  const EnvelopingAlgebra<S> env(a);
  const Matrix<S> m = psi_matrix(env);
  const Index r = rank(m);
  const Index n2 = a.dim() * a.dim();
  if (r == n2) return VerdictReport::make("psi_bijective", Truth::yes, Strategy::exhaustive, "psi matrix has full rank " + std::to_string(r));
  const Matrix<S> k = kernel(a.field(), m);
  std::string w = "psi matrix has rank " + std::to_string(r) + " < " + std::to_string(n2);
  if (k.cols() > 0) w += "; kernel contains " + format_element(env.algebra(), Vector<S>(k.col(0)));
  return VerdictReport::make("psi_bijective", Truth::no, Strategy::exhaustive, std::move(w));
}

/// psi over a graded field: the images psi(v_a (x) v_b) as homogeneous
/// elements of End_R(A) = R^{k^2}(alpha_l - alpha_k), reduced by homogeneous
/// elimination.  Full rank k^2 over the graded field means bijective.
template <class S>
VerdictReport psi_bijective(const GradedFreeAlgebra<S>& a) {
  const Index k = a.dim();
  std::vector<GroupElement> row_degrees;
  for (Index l = 0; l < k; ++l)
    for (Index c = 0; c < k; ++c) row_degrees.push_back(group_difference(a.degrees()[static_cast<std::size_t>(l)], a.degrees()[static_cast<std::size_t>(c)]));
  GradedFreeModule<S> end(a.module().ring_ptr(), row_degrees);
  std::vector<typename GradedFreeModule<S>::Element> images;
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      const GroupElement deg = group_combine(a.degrees()[static_cast<std::size_t>(i)], a.degrees()[static_cast<std::size_t>(j)]);
      std::vector<Vector<S>> entries;
      std::vector<typename GradedFreeModule<S>::Element> cols;
      for (Index c = 0; c < k; ++c) cols.push_back(a.multiply(a.multiply(a.basis(i), a.basis(c)), a.basis(j)));
      for (Index l = 0; l < k; ++l)
        for (Index c = 0; c < k; ++c) entries.push_back(cols[static_cast<std::size_t>(c)].entries[static_cast<std::size_t>(l)]);
      images.push_back(end.make(deg, std::move(entries)));
    }
  const auto basis = graded_module_basis(end, images);
  const Index r = basis.dim();
  return VerdictReport::make("psi_bijective", truth_of(r == k * k), Strategy::exhaustive,
                             "homogeneous elimination gives rank " + std::to_string(r) + " of " + std::to_string(k * k) + " over the graded field");
}

/// e * 1 = 1, (a (x) 1) e = (1 (x) a) e for every basis element a, and e^2 = e.
template <class S>
VerdictReport verify_separability_idempotent(const EnvelopingAlgebra<S>& env, const Vector<S>& e) {
  const std::string name = "separability_idempotent";
  const auto& a = env.base();
  const auto& ae = env.algebra();
  if (!(env.star(e, a.unit()) == a.unit()))
    return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "e * 1 = " + format_element(a, env.star(e, a.unit())));
  for (Index i = 0; i < a.dim(); ++i) {
    const Vector<S> l = ae.multiply(env.left(a.basis(i)), e);
    const Vector<S> r = ae.multiply(env.right(a.basis(i)), e);
    if (!(l == r))
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive,
                                 "(" + a.label(i) + "(x)1)e != (1(x)" + a.label(i) + ")e; difference " + format_element(ae, Vector<S>(l - r)));
  }
  if (!(ae.multiply(e, e) == e)) return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "e is not idempotent");
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive,
                             "e*1 = 1, (a(x)1)e = (1(x)a)e on all " + std::to_string(a.dim()) + " basis elements, e^2 = e");
}

/// Some e in A^e with e * 1 = 1 and (a (x) 1) e = (1 (x) a) e for every basis
/// element, by one linear solve; nullopt when none exists (A not separable).
template <class S>
std::optional<Vector<S>> find_separability_idempotent(const EnvelopingAlgebra<S>& env) {
  const auto& a = env.base();
  const auto& f = a.field();
  const Index n = a.dim(), big = env.dim();
  Matrix<S> sys = zero_matrix(f, n * big + n, big);
  Vector<S> rhs = zero_vector(f, n * big + n);
  for (Index i = 0; i < n; ++i)
    sys.block(i * big, 0, big, big) =
        left_regular_matrix(env.algebra(), env.left(a.basis(i))) - left_regular_matrix(env.algebra(), env.right(a.basis(i)));
  for (Index k = 0; k < big; ++k) sys.block(n * big, k, n, 1) = env.star_matrix(k) * a.unit();
  rhs.segment(n * big, n) = a.unit();
  return solve(f, sys, rhs);
}

/// Braun: A central over K is Azumaya iff e * 1 = 1 and e * A lies in K for
/// some e in A^e.  Throws NotApplicable when A is not central.
template <class S>
VerdictReport braun_check(const EnvelopingAlgebra<S>& env, const Vector<S>& e) {
  const std::string name = "braun";
  const auto& a = env.base();
  const auto z = center(a);
  if (z.dim() != 1) {
    for (Index r = 0; r < z.dim(); ++r)
      if (!Subspace<S>::span(a.field(), a.dim(), {a.unit()}).contains(z.basis_vector(r)))
        throw NotApplicable("algebra is not central: " + format_element(a, z.basis_vector(r)) + " is central");
  }
  const auto scalars = Subspace<S>::span(a.field(), a.dim(), {a.unit()});
  if (!(env.star(e, a.unit()) == a.unit()))
    return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "e * 1 = " + format_element(a, env.star(e, a.unit())) + " != 1");
  for (Index i = 0; i < a.dim(); ++i) {
    const Vector<S> v = env.star(e, a.basis(i));
    if (!scalars.contains(v))
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "e * " + a.label(i) + " = " + format_element(a, v) + " is not a scalar");
  }
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive, "e * 1 = 1 and e * a is a scalar for every basis element a");
}

/// Graded simple with graded centre equal to the scalars: a graded central
/// simple algebra, hence graded Azumaya over its centre.
template <class S>
VerdictReport is_graded_azumaya_csa(const GradedRing<S>& a, const SearchOptions& opts = {}) {
  if (!a.group().is_abelian()) throw NotApplicable("the graded central simple route needs an abelian grade group");
  return conjunction("graded_azumaya", {is_graded_simple(a, opts), graded_center_is_scalars(a)});
}

/// Group ring R[G] over a field: Azumaya iff [G:Z(G)] is finite and |G'| is
/// invertible in R.
template <class S>
VerdictReport group_ring_azumaya(const Field<S>& f, const GradeGroup& g) {
  if (!g.is_finite()) throw NotApplicable("group ring check needs a finite group");
  const auto elements = g.elements();
  std::size_t centre = 0;
  for (const auto& x : elements) {
    bool central = true;
    for (const auto& y : elements)
      if (!(group_combine(x, y) == group_combine(y, x))) {
        central = false;
        break;
      }
    if (central) ++centre;
  }
  const auto m = g.is_abelian() ? 1LL : static_cast<long long>(derived_subgroup(g).second);
  const auto c = f.characteristic();
  auto base = VerdictReport::make("base_azumaya", Truth::yes, Strategy::constructive, "a field is Azumaya over itself");
  auto index = VerdictReport::make("finite_centre_index", Truth::yes, Strategy::exhaustive,
                                   "[G:Z(G)] = " + std::to_string(elements.size() / centre));
  const bool invertible = c == 0 || static_cast<std::uint64_t>(m) % c != 0;
  auto derived_ok = VerdictReport::make("derived_order_invertible", truth_of(invertible), Strategy::exhaustive,
                                        "|G'| = " + std::to_string(m) + (invertible ? " is invertible" : " is divisible by the characteristic"));
  return conjunction("group_ring_azumaya", {base, index, derived_ok});
}

}  // namespace gradedalg
