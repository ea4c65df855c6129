// The interface shared by every graded ring the library works with: finite
// graded algebras, twisted group algebras with infinite support, and shifted
// matrix rings over either.  Components are addressed by degree and their
// elements are coordinate vectors on a fixed homogeneous basis.
#pragma once

#include "gradedalg/algebra.hpp"
#include "gradedalg/grade_group.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gradedalg {

struct SupportInfo {
  enum class Kind { finite, subgroup, cone };
  Kind kind = Kind::finite;
  /// finite: every element of the support; subgroup / cone: its generators.
  std::vector<GroupElement> elements;
  std::string text;
};

template <class S>
class GradedRing {
 public:
  virtual ~GradedRing() = default;

  virtual const Field<S>& field() const = 0;
  virtual const GradeGroup& group() const = 0;
  virtual Index component_dim(const GroupElement& g) const = 0;
  virtual std::vector<std::string> component_labels(const GroupElement& g) const = 0;
  /// x in R_g times y in R_h, as coordinates in R_{gh}.
  virtual Vector<S> multiply(const GroupElement& g, const Vector<S>& x, const GroupElement& h, const Vector<S>& y) const = 0;
  /// Coordinates of 1 in R_e.
  virtual Vector<S> unit() const = 0;
  virtual SupportInfo support() const = 0;
  /// Finitely many degrees such that every nonzero component is a translate
  /// R_{gp} = R_g u_p of one of them by a central homogeneous unit u_p.
  /// nullopt when no such finite list is known.
  virtual std::optional<std::vector<GroupElement>> degree_representatives() const = 0;
  /// The image in R_g of the graded field the ring is considered over.
  virtual Subspace<S> central_scalars(const GroupElement& g) const {
    Subspace<S> s(field(), component_dim(g));
    if (g.is_identity()) s.insert(unit());
    return s;
  }
  /// Homogeneous units of degree g known in closed form.
  virtual std::vector<Vector<S>> known_units(const GroupElement&) const { return {}; }
  /// A reason no element of R_g can be invertible, when one is cheap to see.
  virtual std::optional<std::string> non_invertibility_certificate(const GroupElement&) const { return std::nullopt; }
  virtual bool is_commutative() const = 0;
  virtual std::string description() const = 0;

  Vector<S> component_zero(const GroupElement& g) const { return zero_vector(field(), component_dim(g)); }
  std::vector<Vector<S>> component_basis(const GroupElement& g) const {
    std::vector<Vector<S>> out;
    const Index d = component_dim(g);
    for (Index i = 0; i < d; ++i) out.push_back(unit_vector(field(), d, i));
    return out;
  }
};

template <class S>
using GradedRingPtr = std::shared_ptr<const GradedRing<S>>;

template <class S>
struct HomogeneousElement {
  GroupElement degree;
  Vector<S> coords;  ///< coordinates in the component of that degree
};

template <class S>
std::string format_homogeneous(const GradedRing<S>& r, const GroupElement& g, const Vector<S>& x) {
  return format_element(r.component_labels(g), x);
}

/// Homogeneous basis of R_g.
template <class S>
std::vector<HomogeneousElement<S>> component_basis(const GradedRing<S>& r, const GroupElement& g) {
  std::vector<HomogeneousElement<S>> out;
  for (auto& v : r.component_basis(g)) out.push_back({g, std::move(v)});
  return out;
}

/// The inverse of x in R_g, if x is a unit: x y = 1 is solved for y in
/// R_{g^-1} and y x = 1 is then checked.
template <class S>
std::optional<Vector<S>> homogeneous_inverse(const GradedRing<S>& r, const GroupElement& g, const Vector<S>& x) {
  const GroupElement gi = group_inverse(g);
  const Index d = r.component_dim(gi);
  const Vector<S> one = r.unit();
  if (d == 0) return std::nullopt;
  Matrix<S> m(one.size(), d);
  for (Index k = 0; k < d; ++k) m.col(k) = r.multiply(g, x, gi, unit_vector(r.field(), d, k));
  auto y = gradedalg::solve(r.field(), m, one);
  if (!y) return std::nullopt;
  if (!(r.multiply(gi, *y, g, x) == one)) return std::nullopt;
  return y;
}

/// R_e with the induced multiplication.
template <class S>
Algebra<S> identity_component(const GradedRing<S>& r) {
  const GroupElement e = r.group().identity();
  const Index d = r.component_dim(e);
  if (d == 0) throw StructuralError("identity component is zero");
  std::vector<SparseVector<S>> products;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      products.push_back(sparsify(r.multiply(e, unit_vector(r.field(), d, i), e, unit_vector(r.field(), d, j))));
  return Algebra<S>(r.field(), r.component_labels(e), std::move(products), r.unit(), Validation::skip);
}

/// Degrees worth checking for "for every degree" statements: the support
/// when finite, else the representatives.
template <class S>
std::optional<std::vector<GroupElement>> checked_degrees(const GradedRing<S>& r) {
  const auto sup = r.support();
  if (sup.kind == SupportInfo::Kind::finite) return sup.elements;
  return r.degree_representatives();
}

/// Generators of the grade group together with their inverses, without
/// repeats.
inline std::vector<GroupElement> generators_and_inverses(const GradeGroup& g) {
  std::vector<GroupElement> out;
  std::set<GroupElement> seen;
  for (const auto& x : g.generators())
    for (const auto& y : {x, group_inverse(x)})
      if (seen.insert(y).second) out.push_back(y);
  return out;
}

template <class S>
struct UnitSearch {
  Truth truth = Truth::undecided;
  Strategy strategy = Strategy::sampled;
  std::optional<Vector<S>> unit;
  std::string reason;
};

/// Is there an invertible element of degree g?  Known units, then cheap
/// impossibility arguments, then a search.
template <class S>
UnitSearch<S> homogeneous_unit_search(const GradedRing<S>& r, const GroupElement& g, const SearchOptions& opts = {}) {
  UnitSearch<S> out;
  const Index k = r.component_dim(g);
  if (k == 0) {
    out.truth = Truth::no;
    out.strategy = Strategy::exhaustive;
    out.reason = "component " + g.to_string() + " is zero";
    return out;
  }
  for (const auto& u : r.known_units(g)) {
    out.truth = Truth::yes;
    out.strategy = Strategy::constructive;
    out.unit = u;
    out.reason = "known unit";
    return out;
  }
  if (auto why = r.non_invertibility_certificate(g)) {
    out.truth = Truth::no;
    out.strategy = Strategy::constructive;
    out.reason = *why;
    return out;
  }
  // Multiplication by a unit of degree g maps R_e onto R_g and R_{g^-1} onto R_e.
  const Index de = r.component_dim(r.group().identity());
  const Index dinv = r.component_dim(group_inverse(g));
  if (k != de || dinv != de) {
    out.truth = Truth::no;
    out.strategy = Strategy::constructive;
    out.reason = "dim R_" + g.to_string() + " = " + std::to_string(k) + ", dim R_e = " + std::to_string(de) + ", dim R_" +
                 group_inverse(g).to_string() + " = " + std::to_string(dinv) + " must agree for a unit to exist";
    return out;
  }
  std::vector<Vector<S>> basis;
  for (Index i = 0; i < k; ++i) basis.push_back(unit_vector(r.field(), k, i));
  const auto found = exists_nonzero(r.field(), k, basis, opts, 0x0417u,
                                    [&](const Vector<S>& x) { return homogeneous_inverse(r, g, x).has_value(); });
  out.truth = found.truth;
  out.strategy = found.strategy;
  out.unit = found.witness;
  out.reason = found.truth == Truth::yes ? "found by search" : found.truth == Truth::no ? "no nonzero element is invertible" : "undecided(budget)";
  return out;
}

}  // namespace gradedalg
