// Finite-dimensional graded algebras presented on a homogeneous basis.
#pragma once

#include "gradedalg/graded_ring.hpp"

#include <map>

namespace gradedalg {

/// x C(x) = (sum_i N_i x_i^2) 1 for a linear map C.  Checked on basis pairs
/// by polarisation; over Q with every N_i > 0 it proves that each nonzero
/// element is a unit with inverse C(x) / N(x).
template <class S>
struct NormCertificate {
  Matrix<S> conjugation;
  Vector<S> norm;
};

/// Extra data a constructor can attach: closed-form inverses of basis
/// elements, a norm certificate, and a designated matrix-unit family (for
/// algebras presenting M_n(K)).
template <class S>
struct Witnesses {
  std::map<Index, Vector<S>> basis_inverses;
  std::optional<NormCertificate<S>> norm;
  /// matrix_units[i][j] is e_ij in algebra coordinates.
  std::vector<std::vector<Vector<S>>> matrix_units;
};

template <class S>
class GradedAlgebra : public GradedRing<S> {
 public:
  GradedAlgebra(Algebra<S> algebra, GradeGroup group, std::vector<GroupElement> degrees, Witnesses<S> witnesses = {},
                Validation validation = Validation::full);

  const Algebra<S>& algebra() const { return algebra_; }
  Index dim() const { return algebra_.dim(); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(Index i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const Witnesses<S>& witnesses() const { return witnesses_; }
  GradedAlgebra with_witnesses(Witnesses<S> w) const {
    GradedAlgebra copy = *this;
    copy.witnesses_ = std::move(w);
    return copy;
  }

  /// Basis indices of degree g, in increasing order.
  std::vector<Index> component_indices(const GroupElement& g) const {
    auto it = components_.find(g);
    return it == components_.end() ? std::vector<Index>{} : it->second;
  }
  /// Component coordinates -> algebra coordinates.
  Vector<S> embed(const GroupElement& g, const Vector<S>& x) const {
    Vector<S> v = algebra_.zero();
    const auto idx = component_indices(g);
    for (std::size_t k = 0; k < idx.size(); ++k) v(idx[k]) = x(static_cast<Index>(k));
    return v;
  }
  /// Algebra coordinates -> coordinates of the degree-g part.
  Vector<S> project(const Vector<S>& x, const GroupElement& g) const {
    const auto idx = component_indices(g);
    Vector<S> v(static_cast<Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) v(static_cast<Index>(k)) = x(idx[k]);
    return v;
  }
  /// Degree of x if x is nonzero and homogeneous.
  std::optional<GroupElement> homogeneous_degree(const Vector<S>& x) const {
    std::optional<GroupElement> g;
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      if (g && !(*g == degree(i))) return std::nullopt;
      g = degree(i);
    }
    return g;
  }
  std::vector<GroupElement> support_elements() const {
    std::vector<GroupElement> out;
    for (const auto& [g, idx] : components_) out.push_back(g);
    return out;
  }

  // GradedRing
  const Field<S>& field() const override { return algebra_.field(); }
  const GradeGroup& group() const override { return group_; }
  Index component_dim(const GroupElement& g) const override { return static_cast<Index>(component_indices(g).size()); }
  std::vector<std::string> component_labels(const GroupElement& g) const override {
    std::vector<std::string> out;
    for (Index i : component_indices(g)) out.push_back(algebra_.label(i));
    return out;
  }
  Vector<S> multiply(const GroupElement& g, const Vector<S>& x, const GroupElement& h, const Vector<S>& y) const override {
    return project(algebra_.multiply(embed(g, x), embed(h, y)), group_combine(g, h));
  }
  Vector<S> unit() const override { return project(algebra_.unit(), group_.identity()); }
  SupportInfo support() const override {
    SupportInfo s;
    s.kind = SupportInfo::Kind::finite;
    s.elements = support_elements();
    s.text = "{";
    for (std::size_t i = 0; i < s.elements.size(); ++i) s.text += (i ? ", " : "") + s.elements[i].to_string();
    s.text += "}";
    return s;
  }
  std::optional<std::vector<GroupElement>> degree_representatives() const override { return support_elements(); }
  std::vector<Vector<S>> known_units(const GroupElement& g) const override {
    std::vector<Vector<S>> out;
    for (const auto& [i, inv] : witnesses_.basis_inverses)
      if (degree(i) == g && algebra_.multiply(algebra_.basis(i), inv) == algebra_.unit() &&
          algebra_.multiply(inv, algebra_.basis(i)) == algebra_.unit())
        out.push_back(project(algebra_.basis(i), g));
    return out;
  }
  bool is_commutative() const override { return gradedalg::is_commutative(algebra_); }
  std::string description() const override {
    return "graded algebra of dimension " + std::to_string(dim()) + " over " + field().spec().to_string() + " graded by " +
           group_.to_string();
  }

 private:
  Algebra<S> algebra_;
  GradeGroup group_;
  std::vector<GroupElement> degrees_;
  std::map<GroupElement, std::vector<Index>> components_;
  Witnesses<S> witnesses_;
};

/// Grading closure (c_ij^k != 0 forces deg k = deg i deg j) and the unit
/// lying in degree e.
template <class S>
VerdictReport validate_grading(const Algebra<S>& a, const GradeGroup& g, const std::vector<GroupElement>& degrees) {
  const std::string name = "valid_grading";
  if (static_cast<Index>(degrees.size()) != a.dim())
    return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "degree list has the wrong length");
  for (const auto& d : degrees)
    if (!(d.group() == g)) return VerdictReport::make(name, Truth::no, Strategy::exhaustive, "degree " + d.to_string() + " outside the grade group");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const GroupElement want = group_combine(degrees[static_cast<std::size_t>(i)], degrees[static_cast<std::size_t>(j)]);
      for (const auto& t : a.product(i, j))
        if (!(degrees[static_cast<std::size_t>(t.index)] == want))
          return VerdictReport::make(name, Truth::no, Strategy::exhaustive,
                                     a.label(i) + "*" + a.label(j) + " involves " + a.label(t.index) + " of degree " +
                                         degrees[static_cast<std::size_t>(t.index)].to_string() + ", expected " + want.to_string());
    }
  for (Index i = 0; i < a.dim(); ++i)
    if (!is_zero(a.unit()(i)) && !degrees[static_cast<std::size_t>(i)].is_identity())
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive,
                                 "unit has a component on " + a.label(i) + " of degree " + degrees[static_cast<std::size_t>(i)].to_string());
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive, "all basis products and the unit are homogeneous");
}

template <class S>
VerdictReport validate_grading(const GradedAlgebra<S>& a) {
  return validate_grading(a.algebra(), a.group(), a.degrees());
}

template <class S>
GradedAlgebra<S>::GradedAlgebra(Algebra<S> algebra, GradeGroup group, std::vector<GroupElement> degrees, Witnesses<S> witnesses,
                                Validation validation)
    : algebra_(std::move(algebra)), group_(std::move(group)), degrees_(std::move(degrees)), witnesses_(std::move(witnesses)) {
  if (validation == Validation::full) {
    const auto v = validate_grading(algebra_, group_, degrees_);
    if (!v.holds()) throw StructuralError("invalid grading: " + v.witness);
  } else if (static_cast<Index>(degrees_.size()) != algebra_.dim()) {
    throw StructuralError("degree list has the wrong length");
  }
  for (Index i = 0; i < algebra_.dim(); ++i) components_[degrees_[static_cast<std::size_t>(i)]].push_back(i);
}

/// Every degree e.
template <class S>
GradedAlgebra<S> trivially_graded(const Algebra<S>& a, const GradeGroup& g) {
  return GradedAlgebra<S>(a, g, std::vector<GroupElement>(static_cast<std::size_t>(a.dim()), g.identity()));
}

/// A^op with the same degrees (abelian grade groups only).
template <class S>
GradedAlgebra<S> opposite(const GradedAlgebra<S>& a) {
  if (!a.group().is_abelian()) throw NotApplicable("the opposite graded algebra needs an abelian grade group");
  return GradedAlgebra<S>(opposite(a.algebra()), a.group(), a.degrees(), {}, Validation::skip);
}

/// A (x) B with deg(a (x) b) = deg a + deg b.
template <class S>
GradedAlgebra<S> graded_tensor(const GradedAlgebra<S>& a, const GradedAlgebra<S>& b) {
  if (!(a.group() == b.group())) throw StructuralError("tensor factors have different grade groups");
  if (!a.group().is_abelian()) throw NotApplicable("graded tensor products need an abelian grade group");
  std::vector<GroupElement> degrees;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) degrees.push_back(group_combine(a.degree(i), b.degree(j)));
  return GradedAlgebra<S>(tensor(a.algebra(), b.algebra()), a.group(), std::move(degrees));
}

/// Checks a norm certificate against the structure constants; true when it
/// proves every nonzero element invertible.
template <class S>
bool norm_certificate_proves_division(const GradedAlgebra<S>& a, const NormCertificate<S>& c) {
  const auto& alg = a.algebra();
  const Index n = alg.dim();
  if (c.conjugation.rows() != n || c.conjugation.cols() != n || c.norm.size() != n) return false;
  if (a.field().characteristic() != 0) return false;
  for (Index i = 0; i < n; ++i) {
    if (!is_positive(c.norm(i))) return false;
    const Vector<S> ci = c.conjugation.col(i);
    if (!(alg.multiply(alg.basis(i), ci) == alg.scalar(c.norm(i)))) return false;
    for (Index j = i + 1; j < n; ++j) {
      const Vector<S> cj = c.conjugation.col(j);
      if (!is_zero_vector<S>(Vector<S>(alg.multiply(alg.basis(i), cj) + alg.multiply(alg.basis(j), ci)))) return false;
    }
  }
  return true;
}

template <class S>
struct GradedCenter {
  Subspace<S> center;
  bool is_graded = true;
  /// A central element with a non-central homogeneous component.
  std::optional<Vector<S>> witness;
  std::optional<GroupElement> witness_degree;
};

/// Z(A) and whether it is spanned by its homogeneous elements.
template <class S>
GradedCenter<S> graded_center(const GradedAlgebra<S>& a) {
  GradedCenter<S> out;
  out.center = center(a.algebra());
  // Report the sparsest offending basis vector.
  Index best = -1;
  for (Index r = 0; r < out.center.dim(); ++r) {
    const Vector<S> z = out.center.basis_vector(r);
    for (const auto& g : a.support_elements()) {
      const Vector<S> part = a.embed(g, a.project(z, g));
      if (out.center.contains(part)) continue;
      const auto weight = static_cast<Index>(sparsify(z).size());
      if (best < 0 || weight < best) {
        best = weight;
        out.is_graded = false;
        out.witness = z;
        out.witness_degree = g;
      }
      break;
    }
  }
  return out;
}

/// The linear map with column k the image of basis element k is a graded
/// algebra isomorphism A -> B: bijective, unital, multiplicative on basis
/// pairs and degree preserving.
template <class S>
VerdictReport verify_graded_isomorphism(const GradedAlgebra<S>& a, const GradedAlgebra<S>& b, const Matrix<S>& images) {
  const std::string name = "graded_isomorphism";
  auto fail = [&](std::string why) { return VerdictReport::make(name, Truth::no, Strategy::exhaustive, std::move(why)); };
  if (images.rows() != b.dim() || images.cols() != a.dim()) return fail("map has the wrong shape");
  if (a.dim() != b.dim() || rank(images) != a.dim()) return fail("map is not bijective");
  const auto& aa = a.algebra();
  const auto& bb = b.algebra();
  auto apply = [&](const Vector<S>& x) { return Vector<S>(images * x); };
  if (!(apply(aa.unit()) == bb.unit())) return fail("unit is not preserved");
  for (Index k = 0; k < a.dim(); ++k) {
    const auto g = b.homogeneous_degree(images.col(k));
    if (!g || !(*g == a.degree(k))) return fail("image of " + aa.label(k) + " is not homogeneous of degree " + a.degree(k).to_string());
  }
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      if (!(apply(aa.multiply(aa.basis(i), aa.basis(j))) == bb.multiply(images.col(i), images.col(j))))
        return fail("phi(" + aa.label(i) + "*" + aa.label(j) + ") != phi(" + aa.label(i) + ")*phi(" + aa.label(j) + ")");
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive,
                             "bijective, unital, degree preserving and multiplicative on all " + std::to_string(a.dim() * a.dim()) +
                                 " basis pairs");
}

}  // namespace gradedalg
