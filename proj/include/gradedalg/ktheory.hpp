// K_0-level invariants as isomorphism types: semisimple algebras, graded
// division rings by coset counting, strongly graded rings through their
// identity component, the ZK_0 / CK_0 sequence of a central simple algebra,
// torsion bounds and localisation at Z[1/n].
#pragma once

#include "gradedalg/fg_abelian.hpp"
#include "gradedalg/graded_predicates.hpp"

namespace gradedalg {

struct SemisimpleBlock {
  Index matrix_size = 1;
  /// Dimension of the division algebra over the base field.
  Index division_dim = 1;
  bool resolved = true;
  std::string note;
};

struct SemisimpleDecomposition {
  std::vector<SemisimpleBlock> blocks;
  bool fully_resolved() const {
    for (const auto& b : blocks)
      if (!b.resolved) return false;
    return true;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      s += (i ? " x " : "");
      if (!b.resolved) {
        s += "[unresolved block of dimension " + std::to_string(b.division_dim) + "]";
        continue;
      }
      const std::string d = b.division_dim == 1 ? "K" : "D" + std::to_string(b.division_dim);
      s += b.matrix_size == 1 ? d : "M_" + std::to_string(b.matrix_size) + "(" + d + ")";
    }
    return s;
  }
};

/// Blocks of a semisimple identity component.  Throws StructuralError when
/// the radical is nonzero.
template <class S>
SemisimpleDecomposition split_identity_component(const Algebra<S>& a0, const SearchOptions& opts = {}) {
  WedderburnSplit<S> split;
  try {
    split = split_semisimple(a0, opts);
  } catch (const NotApplicable& e) {
    throw StructuralError(e.what());
  }
  SemisimpleDecomposition out;
  for (const auto& b : split.blocks) {
    SemisimpleBlock s;
    s.resolved = b.simple;
    s.matrix_size = b.simple ? b.matrix_size : 1;
    s.division_dim = b.simple ? b.division_dim : b.dim;
    s.note = b.note;
    out.blocks.push_back(std::move(s));
  }
  return out;
}

/// K_0 of M_n1(D1) x ... x M_nr(Dr) is Z^r.
inline FGAbelianGroup k0_of_semisimple(const SemisimpleDecomposition& d) {
  return FGAbelianGroup::free(static_cast<int>(d.blocks.size()));
}

/// A K-group value that may carry unresolved parts or be free on an
/// infinite basis.
struct K0Value {
  FGAbelianGroup group;
  /// Free of infinite rank on the given basis description.
  std::optional<std::string> infinite_basis;
  /// Blocks whose contribution is unknown.
  std::vector<std::string> unresolved;

  bool exact() const { return !infinite_basis && unresolved.empty(); }
  std::string to_string() const {
    if (infinite_basis) return "free on " + *infinite_basis;
    std::string s = group.to_string();
    for (const auto& u : unresolved) s += " (+) ?[" + u + "]";
    return s;
  }
};

/// K_0^gr of a graded division ring with support Gamma_D in an abelian
/// Gamma: free on the cosets Gamma / Gamma_D.
inline K0Value k0gr_graded_division(const GradeGroup& g, const SubgroupSpec& support) {
  if (!g.is_abelian()) throw NotApplicable("K_0^gr by coset counting needs an abelian grade group");
  const Cardinal idx = coset_index(g, support);
  K0Value v;
  if (!idx.is_finite()) {
    std::string gens;
    for (const auto& h : support.generators) gens += (gens.empty() ? "" : ", ") + h.to_string();
    v.infinite_basis = g.to_string() + " / <" + gens + ">";
    return v;
  }
  v.group = FGAbelianGroup::free(static_cast<int>(idx.finite->to_int64()));
  return v;
}

/// K_0^gr(R) = K_0(R_e) for strongly graded R.  Throws NotApplicable
/// unless strong grading is certified.
template <class S>
K0Value k0gr_strongly_graded(const GradedRing<S>& r, const SearchOptions& opts = {}) {
  const auto strong = is_strongly_graded(r);
  if (!strong.holds()) throw NotApplicable("not certified strongly graded: " + strong.witness);
  const auto dec = split_identity_component(identity_component(r), opts);
  K0Value v;
  int resolved = 0;
  for (const auto& b : dec.blocks) {
    if (b.resolved)
      ++resolved;
    else
      v.unresolved.push_back("block of dimension " + std::to_string(b.division_dim));
  }
  v.group = FGAbelianGroup::free(resolved);
  return v;
}

/// A = M_n(D) with D of the given index.
struct CsaShape {
  Integer matrix_size{1};
  Integer index{1};
};

struct ExactSequenceValues {
  FGAbelianGroup zk0;
  FGAbelianGroup ck0;
  /// Rank of the image of K_0(F) = Z in K_0(A) = Z.
  int image_rank = 0;
  /// |K_0(A) : image|.
  Integer image_index{1};
};

/// 0 -> ZK_0 -> K_0(F) -> K_0(A) -> CK_0 -> 0 where K_0(F) -> K_0(A) is
/// multiplication by n on Z; kernel and cokernel by Smith normal form.
inline ExactSequenceValues ck0_zk0(const CsaShape& shape) {
  if (shape.matrix_size <= Integer(0) || shape.index <= Integer(0)) throw StructuralError("matrix size and index must be positive");
  IntMatrix eta(1, 1);
  eta(0, 0) = shape.matrix_size;
  const auto snf = smith_normal_form(eta);
  ExactSequenceValues out;
  int r = 0;
  Integer idx(1);
  for (const auto& d : snf.invariants)
    if (!d.is_zero()) {
      ++r;
      idx *= d;
    }
  out.image_rank = r;
  out.image_index = r == 1 ? idx : Integer(0);
  out.zk0 = FGAbelianGroup::free(1 - r);
  out.ck0 = FGAbelianGroup::from_presentation(1, eta);
  return out;
}

/// Ranks add up along the sequence and |CK_0| equals the image index.
inline VerdictReport exact_sequence_bookkeeping(const CsaShape& shape) {
  const auto v = ck0_zk0(shape);
  const bool ranks = 1 - v.zk0.rank() == v.image_rank;
  const bool orders = v.ck0.is_finite() && v.ck0.torsion_order() == v.image_index && v.image_index == shape.matrix_size;
  return VerdictReport::make("exact_sequence", truth_of(ranks && orders), Strategy::exhaustive,
                             "rank K_0(F) - rank ZK_0 = " + std::to_string(1 - v.zk0.rank()) + ", image rank " + std::to_string(v.image_rank) +
                                 ", |CK_0| = " + v.ck0.torsion_order().to_string() + ", image index " + v.image_index.to_string());
}

/// The group is killed by n^2: finite and every invariant factor divides n^2.
inline VerdictReport torsion_bound_check(const FGAbelianGroup& g, const Integer& n) {
  const std::string name = "torsion_bound";
  if (n <= Integer(0)) throw NotApplicable("torsion bound needs a positive n");
  if (g.rank() > 0) return VerdictReport::make(name, Truth::no, Strategy::exhaustive, g.to_string() + " has a free summand");
  const Integer n2 = n * n;
  for (const auto& d : g.torsion())
    if (!(n2 % d).is_zero())
      return VerdictReport::make(name, Truth::no, Strategy::exhaustive, d.to_string() + " does not divide " + n2.to_string());
  return VerdictReport::make(name, Truth::yes, Strategy::exhaustive, g.to_string() + " is " + n2.to_string() + "-torsion");
}

/// G (x) Z[1/n] and H (x) Z[1/n] have the same isomorphism type.
inline VerdictReport compare_localized(const FGAbelianGroup& g, const FGAbelianGroup& h, const Integer& n) {
  const auto lg = localize(g, n);
  const auto lh = localize(h, n);
  const bool same = lg == lh;
  return VerdictReport::make("localized_isomorphic", truth_of(same), Strategy::exhaustive,
                             (same ? "isomorphic: " : "NOT isomorphic: ") + lg.to_string() + " vs " + lh.to_string());
}

}  // namespace gradedalg
