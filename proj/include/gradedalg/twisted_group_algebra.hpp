// Graded rings E[Gamma_R]_t: one copy of a coefficient algebra E in each
// degree of a support subgroup (or of the cone N g), with u_g u_h = t(g,h) u_{gh}.
// Covers K[x^2, x^-2], K[x, x^-1], E[x, x^-1] and polynomial rings A[x]
// without materialising infinitely many components.
#pragma once

#include "gradedalg/graded_ring.hpp"

#include <functional>

namespace gradedalg {

template <class S>
class TwistedGroupAlgebra : public GradedRing<S> {
 public:
  using Cocycle = std::function<S(const GroupElement&, const GroupElement&)>;
  enum class SupportKind { subgroup, cone };

  struct Options {
    SupportKind kind = SupportKind::subgroup;
    /// Defaults to the trivial cocycle.
    Cocycle cocycle;
    /// t(g,h) = t(h,g) for all g, h, so every u_g is central.
    bool symmetric = true;
    std::string variable = "x";
  };

  /// `support_generators` generate the support subgroup, or for a cone the
  /// single generator g with support {0, g, 2g, ...}.
  TwistedGroupAlgebra(Algebra<S> coefficients, GradeGroup group, std::vector<GroupElement> support_generators, Options options = {})
      : coeffs_(std::move(coefficients)),
        group_(std::move(group)),
        gens_(std::move(support_generators)),
        opts_(std::move(options)),
        quotient_(make_quotient()) {
    if (!opts_.cocycle) opts_.cocycle = [f = coeffs_.field()](const GroupElement&, const GroupElement&) { return f.one(); };
    if (opts_.kind == SupportKind::cone) {
      if (gens_.size() != 1) throw StructuralError("a cone support needs exactly one generator");
      if (!group_.torsion().empty() || group_.kind() != GradeGroup::Kind::abelian)
        throw NotApplicable("cone supports need a free abelian grade group");
      if (gens_[0].is_identity()) throw StructuralError("cone generator must be nonzero");
    }
    check_cocycle();
  }

  const Algebra<S>& coefficients() const { return coeffs_; }
  const std::vector<GroupElement>& support_generators() const { return gens_; }
  const Options& options() const { return opts_; }
  S cocycle(const GroupElement& g, const GroupElement& h) const { return opts_.cocycle(g, h); }

  bool in_support(const GroupElement& g) const {
    if (!(g.group() == group_)) throw StructuralError("degree from a different group");
    if (opts_.kind == SupportKind::subgroup) return quotient_ ? quotient_->contains(g) : subgroup_contains(g);
    return cone_multiple(g).has_value();
  }

  // GradedRing
  const Field<S>& field() const override { return coeffs_.field(); }
  const GradeGroup& group() const override { return group_; }
  Index component_dim(const GroupElement& g) const override { return in_support(g) ? coeffs_.dim() : 0; }
  std::vector<std::string> component_labels(const GroupElement& g) const override {
    std::vector<std::string> out;
    if (!in_support(g)) return out;
    const std::string mono = monomial(g);
    for (Index i = 0; i < coeffs_.dim(); ++i) {
      const std::string& c = coeffs_.label(i);
      if (coeffs_.dim() == 1)
        out.push_back(mono);
      else
        out.push_back(mono == "1" ? c : c + "*" + mono);
    }
    return out;
  }
  Vector<S> multiply(const GroupElement& g, const Vector<S>& x, const GroupElement& h, const Vector<S>& y) const override {
    const GroupElement gh = group_combine(g, h);
    if (x.size() == 0 || y.size() == 0) return zero_vector(field(), component_dim(gh));
    return coeffs_.multiply(x, y) * cocycle(g, h);
  }
  Vector<S> unit() const override { return coeffs_.unit(); }
  SupportInfo support() const override {
    SupportInfo s;
    if (opts_.kind == SupportKind::cone) {
      s.kind = SupportInfo::Kind::cone;
      s.elements = gens_;
      s.text = "{0, " + gens_[0].to_string() + ", " + group_power(gens_[0], 2).to_string() + ", ...}";
      return s;
    }
    if (group_.is_finite()) {
      s.kind = SupportInfo::Kind::finite;
      s.elements = subgroup_elements(group_, SubgroupSpec{gens_});
      s.text = "{";
      for (std::size_t i = 0; i < s.elements.size(); ++i) s.text += (i ? ", " : "") + s.elements[i].to_string();
      s.text += "}";
      return s;
    }
    s.kind = SupportInfo::Kind::subgroup;
    s.elements = gens_;
    if (group_.coordinate_count() == 1 && gens_.size() == 1) {
      const auto k = std::llabs(gens_[0].coords()[0]);
      s.text = (k == 1 ? std::string() : std::to_string(k)) + "Z";
    } else {
      s.text = "<";
      for (std::size_t i = 0; i < gens_.size(); ++i) s.text += (i ? ", " : "") + gens_[i].to_string();
      s.text += ">";
    }
    if (gens_.empty()) s.text = "{" + group_.identity().to_string() + "}";
    return s;
  }
  std::optional<std::vector<GroupElement>> degree_representatives() const override {
    if (opts_.kind == SupportKind::cone) return std::nullopt;
    if (group_.is_finite()) return subgroup_elements(group_, SubgroupSpec{gens_});
    if (opts_.symmetric) return std::vector<GroupElement>{group_.identity()};
    return std::nullopt;
  }
  Subspace<S> central_scalars(const GroupElement& g) const override {
    Subspace<S> s(field(), component_dim(g));
    if (component_dim(g) == 0) return s;
    if (g.is_identity() || opts_.symmetric) s.insert(coeffs_.unit());
    return s;
  }
  std::vector<Vector<S>> known_units(const GroupElement& g) const override {
    if (!in_support(g)) return {};
    if (opts_.kind == SupportKind::cone && !g.is_identity()) return {};
    return {coeffs_.unit()};
  }
  std::optional<std::string> non_invertibility_certificate(const GroupElement& g) const override {
    if (opts_.kind == SupportKind::cone && in_support(g) && !g.is_identity())
      return "component " + group_inverse(g).to_string() + " is zero, so nothing of degree " + g.to_string() + " has an inverse";
    return std::nullopt;
  }
  bool is_commutative() const override { return opts_.symmetric && gradedalg::is_commutative(coeffs_); }
  std::string description() const override {
    return "twisted group algebra over " + field().spec().to_string() + " with support " + support().text + " in " + group_.to_string();
  }

  /// "x^4" for rank-one groups, "u(1,0)" otherwise.
  std::string monomial(const GroupElement& g) const {
    if (g.is_identity()) return "1";
    if (group_.coordinate_count() == 1 && group_.kind() == GradeGroup::Kind::abelian) {
      const auto k = g.coords()[0];
      return k == 1 ? opts_.variable : opts_.variable + "^" + std::to_string(k);
    }
    return "u" + g.to_string();
  }

 private:
  std::optional<AbelianQuotient> make_quotient() const {
    if (group_.kind() != GradeGroup::Kind::abelian) return std::nullopt;
    return AbelianQuotient(group_, SubgroupSpec{gens_});
  }
  bool subgroup_contains(const GroupElement& g) const {
    for (const auto& x : subgroup_elements(group_, SubgroupSpec{gens_}))
      if (x == g) return true;
    return false;
  }
  /// m >= 0 with g = m * generator.
  std::optional<std::int64_t> cone_multiple(const GroupElement& g) const {
    const auto& c = g.coords();
    const auto& k = gens_[0].coords();
    std::optional<std::int64_t> m;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (k[i] == 0) {
        if (c[i] != 0) return std::nullopt;
        continue;
      }
      if (c[i] % k[i] != 0) return std::nullopt;
      const auto q = c[i] / k[i];
      if (m && *m != q) return std::nullopt;
      m = q;
    }
    if (!m || *m < 0) return std::nullopt;
    return m;
  }
  void check_cocycle() const {
    std::vector<GroupElement> probe{group_.identity()};
    for (const auto& g : gens_) probe.push_back(g);
    if (opts_.kind == SupportKind::subgroup)
      for (const auto& g : gens_) probe.push_back(group_inverse(g));
    for (const auto& a : probe)
      for (const auto& b : probe) {
        if (is_zero(cocycle(a, b))) throw StructuralError("cocycle vanishes at (" + a.to_string() + ", " + b.to_string() + ")");
        if (opts_.symmetric && !(cocycle(a, b) == cocycle(b, a)))
          throw StructuralError("cocycle declared symmetric but t(" + a.to_string() + ", " + b.to_string() + ") differs");
        for (const auto& c : probe) {
          const S lhs = cocycle(a, b) * cocycle(group_combine(a, b), c);
          const S rhs = cocycle(b, c) * cocycle(a, group_combine(b, c));
          if (!(lhs == rhs))
            throw StructuralError("cocycle identity fails at (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")");
        }
      }
    const GroupElement e = group_.identity();
    for (const auto& a : probe)
      if (!(cocycle(e, a) == field().one()) || !(cocycle(a, e) == field().one()))
        throw StructuralError("cocycle is not normalised at " + a.to_string());
  }

  Algebra<S> coeffs_;
  GradeGroup group_;
  std::vector<GroupElement> gens_;
  Options opts_;
  std::optional<AbelianQuotient> quotient_;
};

}  // namespace gradedalg
