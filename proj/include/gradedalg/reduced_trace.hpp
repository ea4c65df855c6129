// Reduced characteristic polynomials, reduced trace and norm, and the
// commutator-subspace checks built on them.
#pragma once

#include "gradedalg/graded_algebra.hpp"

namespace gradedalg {

template <class S>
struct ReducedCharPoly {
  Polynomial<S> q;
  S trd;
  S nrd;
  /// "minimal polynomial" or "regular characteristic polynomial root".
  std::string route;
};

/// n with dim A = n^2; throws NotApplicable otherwise.
template <class S>
Index reduced_degree(const Algebra<S>& a) {
  Index n = 0;
  while ((n + 1) * (n + 1) <= a.dim()) ++n;
  if (n * n != a.dim()) throw NotApplicable("dimension " + std::to_string(a.dim()) + " is not a square");
  return n;
}

namespace detail {

/// Monic Q of degree n with Q^n = P for monic P of degree n^2, by the power
/// series of the reversed polynomial.  Needs 1..n invertible.
template <class S>
std::optional<Polynomial<S>> nth_root(const Polynomial<S>& p, Index n) {
  const auto& f = p.field();
  const auto big = static_cast<std::size_t>(p.degree());
  std::vector<S> a(big + 1, f.zero());
  for (std::size_t j = 0; j <= big; ++j) a[j] = p.coefficient(big - j);
  const S inv_n = f.one() / f.from_int(static_cast<long long>(n));
  std::vector<S> b{f.one()};
  for (Index k = 1; k <= n; ++k) {
    S acc = f.zero();
    for (Index j = 1; j <= k && static_cast<std::size_t>(j) <= big; ++j) {
      const S w = f.from_int(j) * inv_n - f.from_int(k - j);
      acc = acc + w * a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b.push_back(acc / f.from_int(k));
  }
  std::vector<S> q(static_cast<std::size_t>(n + 1), f.zero());
  for (Index k = 0; k <= n; ++k) q[static_cast<std::size_t>(n - k)] = b[static_cast<std::size_t>(k)];
  Polynomial<S> out(f, std::move(q));
  if (!(out.pow(static_cast<std::uint64_t>(n)) == p)) return std::nullopt;
  return out;
}

template <class S>
bool small_integers_invertible(const Field<S>& f, Index n) {
  const auto c = f.characteristic();
  return c == 0 || static_cast<std::uint64_t>(n) < c;
}

}  // namespace detail

/// q = f_a^{n/m} when the minimal polynomial f_a (degree m) is irreducible
/// and m | n.  Otherwise, when 1..n are invertible in K, q is the n-th root
/// of the characteristic polynomial of left multiplication.  Throws
/// NotApplicable naming the obstruction.
template <class S>
ReducedCharPoly<S> reduced_char_poly(const Algebra<S>& a, const Vector<S>& x) {
  const auto& f = a.field();
  const Index n = reduced_degree(a);
  const auto fa = minimal_polynomial(a, x);
  const Index m = fa.degree();
  const auto irreducible = is_irreducible(fa);
  ReducedCharPoly<S> out;
  if (n % m == 0 && irreducible.value_or(false)) {
    out.q = fa.pow(static_cast<std::uint64_t>(n / m));
    out.route = "minimal polynomial";
  } else if (detail::small_integers_invertible(f, n)) {
    const Polynomial<S> p(f, characteristic_coefficients(f, left_regular_matrix(a, x)));
    auto q = detail::nth_root(p, n);
    if (!q) throw NotApplicable("characteristic polynomial " + p.to_string() + " is not an n-th power");
    out.q = std::move(*q);
    out.route = "regular characteristic polynomial root";
  } else {
    throw NotApplicable(n % m != 0 ? "minimal polynomial degree " + std::to_string(m) + " does not divide " + std::to_string(n)
                                   : "minimal polynomial " + fa.to_string() + " is not known to be irreducible");
  }
  out.trd = -out.q.coefficient(static_cast<std::size_t>(n - 1));
  out.nrd = n % 2 == 0 ? out.q.coefficient(0) : -out.q.coefficient(0);
  return out;
}

template <class S>
S reduced_trace(const Algebra<S>& a, const Vector<S>& x) {
  return reduced_char_poly(a, x).trd;
}

template <class S>
S reduced_norm(const Algebra<S>& a, const Vector<S>& x) {
  return reduced_char_poly(a, x).nrd;
}

/// Trd on the basis; Trd is linear, so this is the whole functional.
template <class S>
Vector<S> reduced_trace_functional(const Algebra<S>& a) {
  Vector<S> t = a.zero();
  for (Index i = 0; i < a.dim(); ++i) t(i) = reduced_trace(a, a.basis(i));
  return t;
}

template <class S>
S apply_functional(const Field<S>& f, const Vector<S>& t, const Vector<S>& x) {
  S acc = f.zero();
  for (Index i = 0; i < t.size(); ++i) acc = acc + t(i) * x(i);
  return acc;
}

/// ker Trd = [A,A] and dim [A,A] + 1 = dim A.
template <class S>
VerdictReport trd_kernel_check(const Algebra<S>& a) {
  const std::string name = "trd_kernel";
  const Vector<S> t = reduced_trace_functional(a);
  Matrix<S> row(1, a.dim());
  row.row(0) = t.transpose();
  const Matrix<S> k = kernel(a.field(), row);
  const auto ker = Subspace<S>::from_rows(a.field(), a.dim(), k.transpose());
  const auto comm = commutator_subspace(a);
  const bool same = ker == comm;
  const bool dims = comm.dim() + 1 == a.dim();
  std::string w = "dim ker Trd = " + std::to_string(ker.dim()) + ", dim [A,A] = " + std::to_string(comm.dim()) +
                  ", dim A = " + std::to_string(a.dim());
  if (!same) w += "; the subspaces differ";
  return VerdictReport::make(name, truth_of(same && dims), Strategy::exhaustive, std::move(w));
}

/// Trd maps each homogeneous basis element into the scalars of its degree
/// and hits a nonzero scalar.
template <class S>
VerdictReport trd_graded_surjective_check(const GradedAlgebra<S>& d) {
  const std::string name = "trd_graded_surjective";
  const auto& a = d.algebra();
  const Vector<S> t = reduced_trace_functional(a);
  bool hit = false;
  for (Index i = 0; i < a.dim(); ++i) {
    if (is_zero(t(i))) continue;
    const auto scalars = d.central_scalars(d.degree(i));
    if (!scalars.contains(d.project(a.scalar(t(i)), d.degree(i))) || !d.degree(i).is_identity())
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive,
                                 "Trd(" + a.label(i) + ") = " + t(i).to_string() + " does not lie in F of degree " + d.degree(i).to_string());
    hit = true;
  }
  if (!hit) return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "Trd vanishes on every basis element");
  std::string w = "image spans F (dim 1); Trd on the basis:";
  for (Index i = 0; i < a.dim(); ++i) w += " " + a.label(i) + "->" + t(i).to_string();
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive, std::move(w));
}

/// Trd(x) 1 - n x lies in [A,A].
template <class S>
VerdictReport trd_na_plus_commutator_check(const Algebra<S>& a, const Vector<S>& x) {
  const Index n = reduced_degree(a);
  const S t = reduced_trace(a, x);
  const Vector<S> diff = a.scalar(t) - x * a.field().from_int(n);
  const bool in = commutator_subspace(a).contains(diff);
  return VerdictReport::make("trd_na_plus_commutator", truth_of(in), Strategy::exhaustive,
                             "Trd(a) 1 - n a = " + format_element(a, diff) + (in ? " lies in [A,A]" : " is not in [A,A]"));
}

/// Degrees in which [D,D] is nonzero: it is spanned by the homogeneous
/// commutators of basis elements.
template <class S>
std::vector<GroupElement> commutator_support(const GradedAlgebra<S>& d) {
  const auto& a = d.algebra();
  std::vector<GroupElement> out;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i + 1; j < a.dim(); ++j) {
      const Vector<S> c = a.multiply(a.basis(i), a.basis(j)) - a.multiply(a.basis(j), a.basis(i));
      if (is_zero_vector<S>(c)) continue;
      const GroupElement g = group_combine(d.degree(i), d.degree(j));
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// D_e = F_e with F the centre of D.
template <class S>
bool is_totally_ramified(const GradedAlgebra<S>& d) {
  const auto z = center(d.algebra());
  const GroupElement e = d.group().identity();
  for (const auto& v : d.component_basis(e))
    if (!z.contains(d.embed(e, v))) return false;
  return true;
}

/// Totally ramified: Supp [D,D] is nonempty, proper in Gamma_D and misses e.
/// Otherwise Supp [D,D] = Supp D.  Commutative D is reported as such.
template <class S>
VerdictReport supp_commutator_lemma_check(const GradedAlgebra<S>& d) {
  const std::string name = "commutator_support";
  const auto supp = d.support_elements();
  const auto cs = commutator_support(d);
  auto text = [](const std::vector<GroupElement>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "}";
  };
  if (is_commutative(d.algebra())) return VerdictReport::make(name, Truth::yes, Strategy::exhaustive, "commutative: [D,D] = 0");
  const bool tr = is_totally_ramified(d);
  bool ok;
  if (tr) {
    const bool has_e = std::find(cs.begin(), cs.end(), d.group().identity()) != cs.end();
    ok = !cs.empty() && cs.size() < supp.size() && !has_e;
  } else {
    ok = cs == supp;
  }
  return VerdictReport::make(name, truth_of(ok), Strategy::exhaustive,
                             std::string(tr ? "totally ramified" : "not totally ramified") + "; Supp [D,D] = " + text(cs) +
                                 ", Supp D = " + text(supp));
}

/// If every commutator of basis elements is central then D is commutative.
/// Reports the first noncentral commutator when the hypothesis fails.
template <class S>
VerdictReport central_commutators_imply_commutative_check(const Algebra<S>& a) {
  const std::string name = "central_commutators_imply_commutative";
  const auto z = center(a);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i + 1; j < a.dim(); ++j) {
      const Vector<S> c = a.multiply(a.basis(i), a.basis(j)) - a.multiply(a.basis(j), a.basis(i));
      if (!z.contains(c))
        return VerdictReport::make(name, Truth::yes, Strategy::exhaustive,
                                   "hypothesis fails: [" + a.label(i) + "," + a.label(j) + "] = " + format_element(a, c) + " is not central");
    }
  const bool comm = is_commutative(a);
  return VerdictReport::make(name, truth_of(comm), Strategy::exhaustive,
                             comm ? "all commutators central and the algebra is commutative" : "all commutators central but not commutative");
}

}  // namespace gradedalg
