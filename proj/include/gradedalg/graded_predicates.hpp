// Structural predicates on graded rings: strongly graded, crossed product,
// graded division, graded simple, and graded centre equal to the scalars.
#pragma once

#include "gradedalg/graded_algebra.hpp"
#include "gradedalg/wedderburn.hpp"

namespace gradedalg {

template <class S>
struct StrongGradingTerm {
  S coeff;
  Vector<S> x;  ///< in R_g
  Vector<S> y;  ///< in R_{g^-1}
};

/// 1 = sum c_k x_k y_k with x_k in R_g, y_k in R_{g^-1}, if possible.
template <class S>
std::optional<std::vector<StrongGradingTerm<S>>> strong_grading_certificate(const GradedRing<S>& r, const GroupElement& g) {
  const GroupElement gi = group_inverse(g);
  const auto bx = r.component_basis(g);
  const auto by = r.component_basis(gi);
  const Vector<S> one = r.unit();
  if (bx.empty() || by.empty()) return std::nullopt;
  Matrix<S> m(one.size(), static_cast<Index>(bx.size() * by.size()));
  Index col = 0;
  for (const auto& x : bx)
    for (const auto& y : by) m.col(col++) = r.multiply(g, x, gi, y);
  const auto c = gradedalg::solve(r.field(), m, one);
  if (!c) return std::nullopt;
  std::vector<StrongGradingTerm<S>> out;
  col = 0;
  for (const auto& x : bx)
    for (const auto& y : by) {
      const S& k = (*c)(col++);
      if (!is_zero(k)) out.push_back({k, x, y});
    }
  return out;
}

/// 1 in R_g R_{g^-1} for every generator g of the grade group and its
/// inverse; this gives R_g R_h = R_{gh} throughout.
template <class S>
VerdictReport is_strongly_graded(const GradedRing<S>& r) {
  const std::string name = "strongly_graded";
  std::string cert;
  for (const auto& g : generators_and_inverses(r.group())) {
    const auto c = strong_grading_certificate(r, g);
    if (!c)
      return VerdictReport::make(name, Truth::no, Strategy::constructive,
                                 "1 is not in R_" + g.to_string() + " R_" + group_inverse(g).to_string() + " (degree " + g.to_string() + ")");
    cert += (cert.empty() ? "" : "; ") + std::string("degree ") + g.to_string() + ": 1 = sum of " + std::to_string(c->size()) + " products";
  }
  if (cert.empty()) cert = "trivial grade group";
  return VerdictReport::make(name, Truth::yes, Strategy::constructive, cert);
}

/// An invertible element in R_g for every generator g and its inverse.
template <class S>
VerdictReport is_crossed_product(const GradedRing<S>& r, const SearchOptions& opts = {}) {
  const std::string name = "crossed_product";
  std::vector<VerdictReport> parts;
  for (const auto& g : generators_and_inverses(r.group())) {
    const auto u = homogeneous_unit_search(r, g, opts);
    std::string w = u.unit ? format_homogeneous(r, g, *u.unit) + " is invertible" : u.reason;
    auto part = VerdictReport::make("unit in degree " + g.to_string(), u.truth, u.strategy, std::move(w));
    if (u.truth == Truth::undecided) part.notes.push_back("undecided(budget)");
    parts.push_back(std::move(part));
  }
  auto v = conjunction(name, std::move(parts));
  if (v.holds()) {
    v.witness = "units:";
    for (const auto& p : v.parts) v.witness += " " + p.witness + ";";
    if (v.parts.empty()) v.witness = "trivial grade group";
  }
  return v;
}

/// Every nonzero homogeneous element is invertible.
template <class S>
VerdictReport is_graded_division(const GradedRing<S>& r, const SearchOptions& opts = {}) {
  const std::string name = "graded_division";
  if (const auto* ga = dynamic_cast<const GradedAlgebra<S>*>(&r))
    if (ga->witnesses().norm && norm_certificate_proves_division(*ga, *ga->witnesses().norm))
      return VerdictReport::make(name, Truth::yes, Strategy::constructive, "norm certificate: x conj(x) = N(x) with N positive definite");
  const auto degrees = checked_degrees(r);
  if (!degrees) return VerdictReport::make(name, Truth::undecided, Strategy::sampled, "no finite list of degrees to check");
  std::vector<VerdictReport> parts;
  for (const auto& g : *degrees) {
    const Index k = r.component_dim(g);
    if (k == 0) continue;
    const std::string pname = "degree " + g.to_string();
    if (auto why = r.non_invertibility_certificate(g)) {
      parts.push_back(VerdictReport::make(pname, Truth::no, Strategy::constructive,
                                          format_homogeneous(r, g, unit_vector(r.field(), k, 0)) + " is not invertible: " + *why));
      continue;
    }
    const auto basis = r.component_basis(g);
    const auto out = for_all_nonzero(r.field(), k, basis, opts, 0xd1u,
                                     [&](const Vector<S>& x) { return homogeneous_inverse(r, g, x).has_value(); });
    std::string w = out.witness ? format_homogeneous(r, g, *out.witness) + " is not invertible"
                                : std::to_string(out.examined) + " elements up to scaling are invertible";
    auto part = VerdictReport::make(pname, out.truth, out.strategy, std::move(w));
    if (out.truth == Truth::undecided) part.notes.push_back("undecided(budget)");
    parts.push_back(std::move(part));
  }
  const auto n = parts.size();
  auto v = conjunction(name, std::move(parts));
  if (v.holds()) v.witness = "every nonzero homogeneous element is invertible, " + std::to_string(n) + " degrees checked";
  return v;
}

/// Span of a x b over a in R_alpha, b in R_{(alpha g)^-1}, alpha over the
/// representatives: the degree-e part of the ideal generated by x in R_g.
template <class S>
Subspace<S> identity_part_of_ideal(const GradedRing<S>& r, const std::vector<GroupElement>& reps, const GroupElement& g, const Vector<S>& x,
                                   bool stop_at_unit = true) {
  const Vector<S> one = r.unit();
  Subspace<S> span(r.field(), one.size());
  for (const auto& alpha : reps) {
    const GroupElement ag = group_combine(alpha, g);
    const GroupElement back = group_inverse(ag);
    for (const auto& a : r.component_basis(alpha)) {
      const Vector<S> ax = r.multiply(alpha, a, g, x);
      if (is_zero_vector<S>(ax)) continue;
      for (const auto& b : r.component_basis(back)) {
        span.insert(r.multiply(ag, ax, back, b));
        if (stop_at_unit && span.contains(one)) return span;
      }
    }
  }
  return span;
}

/// No homogeneous two-sided ideals besides 0 and R.
template <class S>
VerdictReport is_graded_simple(const GradedRing<S>& r, const SearchOptions& opts = {}) {
  const std::string name = "graded_simple";
  const auto division = is_graded_division(r, opts);
  if (division.holds())
    return VerdictReport::make(name, Truth::yes, division.strategy, "graded division, so every nonzero homogeneous element is a unit");
  const auto reps = r.degree_representatives();
  if (!reps) return VerdictReport::make(name, Truth::undecided, Strategy::sampled, "no finite list of degree representatives");
  const GroupElement e = r.group().identity();
  const Vector<S> one = r.unit();

  // Strongly graded with R_e split semisimple: every nonzero graded ideal
  // meets R_e in a sum of blocks, so it suffices that each primitive central
  // idempotent of R_e generates R.
  if (is_strongly_graded(r).holds()) {
    std::optional<WedderburnSplit<S>> split;
    try {
      split = split_semisimple(identity_component(r), opts);
    } catch (const NotApplicable&) {
    }
    if (split && split->semisimple.holds() && split->all_simple()) {
      for (const auto& c : split->central_idempotents)
        if (!identity_part_of_ideal(r, *reps, e, c).contains(one))
          return VerdictReport::make(name, Truth::no, Strategy::constructive,
                                     "central idempotent " + format_homogeneous(r, e, c) + " of R_e generates a proper graded ideal");
      return VerdictReport::make(name, Truth::yes, Strategy::constructive,
                                 "strongly graded, R_e = " + split->to_string() + " and each of its " +
                                     std::to_string(split->central_idempotents.size()) + " central idempotents generates R");
    }
  }

  std::vector<VerdictReport> parts;
  for (const auto& g : *reps) {
    const Index k = r.component_dim(g);
    if (k == 0) continue;
    const auto out = for_all_nonzero(r.field(), k, r.component_basis(g), opts, 0x5eu,
                                     [&](const Vector<S>& x) { return identity_part_of_ideal(r, *reps, g, x).contains(one); });
    std::string w = out.witness ? format_homogeneous(r, g, *out.witness) + " generates a proper graded ideal"
                                : std::to_string(out.examined) + " elements up to scaling generate R";
    auto part = VerdictReport::make("degree " + g.to_string(), out.truth, out.strategy, std::move(w));
    if (out.truth == Truth::undecided) part.notes.push_back("undecided(budget)");
    parts.push_back(std::move(part));
  }
  return conjunction(name, std::move(parts));
}

/// Homogeneous elements of degree g commuting with every homogeneous element.
template <class S>
Subspace<S> graded_center_component(const GradedRing<S>& r, const std::vector<GroupElement>& reps, const GroupElement& g) {
  const Index k = r.component_dim(g);
  std::vector<Vector<S>> rows;  // one block of equations per basis element
  Index total = 0;
  std::vector<std::pair<GroupElement, Vector<S>>> others;
  for (const auto& rho : reps)
    for (auto& x : r.component_basis(rho)) {
      total += r.component_dim(group_combine(g, rho));
      // zx and xz lie in different components when g and rho do not commute
      if (!(group_combine(g, rho) == group_combine(rho, g))) total += r.component_dim(group_combine(rho, g));
      others.emplace_back(rho, std::move(x));
    }
  Matrix<S> sys = zero_matrix(r.field(), total, k);
  for (Index c = 0; c < k; ++c) {
    const Vector<S> z = unit_vector(r.field(), k, c);
    Index row = 0;
    auto put = [&](const Vector<S>& d) {
      sys.block(row, c, d.size(), 1) = d;
      row += d.size();
    };
    for (const auto& [rho, x] : others) {
      if (group_combine(g, rho) == group_combine(rho, g)) {
        put(r.multiply(g, z, rho, x) - r.multiply(rho, x, g, z));
      } else {
        put(r.multiply(g, z, rho, x));
        put(r.multiply(rho, x, g, z));
      }
    }
  }
  const Matrix<S> ker = kernel(r.field(), sys);
  return Subspace<S>::from_rows(r.field(), k, ker.transpose());
}

/// The graded centre is the graded field of scalars: Z(R) cap R_g equals
/// central_scalars(g) for every representative degree g.
template <class S>
VerdictReport graded_center_is_scalars(const GradedRing<S>& r) {
  const std::string name = "graded_central";
  const auto reps = r.degree_representatives();
  if (!reps) return VerdictReport::make(name, Truth::undecided, Strategy::sampled, "no finite list of degree representatives");
  for (const auto& g : *reps) {
    const auto z = graded_center_component(r, *reps, g);
    const auto scalars = r.central_scalars(g);
    if (!(z == scalars)) {
      for (Index i = 0; i < z.dim(); ++i)
        if (!scalars.contains(z.basis_vector(i)))
          return VerdictReport::make(name, Truth::no, Strategy::exhaustive,
                                     format_homogeneous(r, g, z.basis_vector(i)) + " is central but not a scalar");
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "a scalar of degree " + g.to_string() + " is not central");
    }
  }
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive,
                             "centre agrees with the scalars in all " + std::to_string(reps->size()) + " representative degrees");
}

}  // namespace gradedalg
