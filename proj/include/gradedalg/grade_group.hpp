// Grade groups: finitely generated abelian groups Z^r + Z/n1 + ... + Z/nk
// (written additively) and finite groups given by a multiplication table.
#pragma once

#include "gradedalg/scalar.hpp"
#include "gradedalg/smith.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gradedalg {

class GroupElement;

/// A group order or subgroup index; "infinite" is an ordinary value.
struct Cardinal {
  std::optional<Integer> finite;

  static Cardinal infinite() { return {}; }
  static Cardinal of(Integer n) { return {std::move(n)}; }
  bool is_finite() const { return finite.has_value(); }
  std::string to_string() const { return finite ? finite->to_string() : "infinite"; }
  friend bool operator==(const Cardinal&, const Cardinal&) = default;
};

class GradeGroup {
 public:
  enum class Kind { abelian, table };

  /// Z^free_rank + Z/torsion[0] + ...; torsion orders must be >= 2.
  static GradeGroup abelian(int free_rank, std::vector<std::int64_t> torsion = {});
  static GradeGroup trivial() { return abelian(0); }
  /// Finite group from its Cayley table (table[i][j] = index of g_i g_j).
  /// Associativity, identity and inverses are checked.
  static GradeGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  /// Table of the permutation group generated by composing the given
  /// permutations (images of 0..n-1), with (p*q)(x) = p(q(x)).
  static GradeGroup from_permutations(const std::vector<std::vector<int>>& elements, std::vector<std::string> labels);
  /// Parses "Z", "Z^2 x Z/3", "Z/2 x Z/2", "trivial".
  static GradeGroup parse(const std::string& text);

  Kind kind() const;
  bool is_abelian() const;
  bool is_finite() const;
  Cardinal order() const;
  int free_rank() const;
  const std::vector<std::int64_t>& torsion() const;
  /// Length of a coordinate vector for abelian groups.
  std::size_t coordinate_count() const;
  std::size_t table_size() const;
  const std::vector<std::vector<int>>& table() const;
  const std::vector<std::string>& labels() const;

  GroupElement identity() const;
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement element_at(int table_index) const;
  /// Element with the given table label.
  GroupElement element_named(const std::string& label) const;
  /// Parses "(1,0)", "3" or a table label.
  GroupElement parse_element(const std::string& text) const;

  /// A finite generating set (standard basis vectors, or all non-identity
  /// elements of a table group).
  std::vector<GroupElement> generators() const;
  /// All elements of a finite group, in a fixed order.
  std::vector<GroupElement> elements() const;

  std::string to_string() const;
  friend bool operator==(const GradeGroup& a, const GradeGroup& b);

  struct Impl;
  const std::shared_ptr<const Impl>& impl() const { return impl_; }

 private:
  explicit GradeGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class GroupElement;
};

class GroupElement {
 public:
  GroupElement() = default;

  GradeGroup group() const { return GradeGroup(owner_); }
  /// Normalised coordinates (torsion entries in [0, n)), or {table index}.
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  GroupElement(std::shared_ptr<const GradeGroup::Impl> owner, std::vector<std::int64_t> coords)
      : owner_(std::move(owner)), coords_(std::move(coords)) {}
  std::shared_ptr<const GradeGroup::Impl> owner_;
  std::vector<std::int64_t> coords_;
  friend class GradeGroup;
  friend GroupElement group_combine(const GroupElement&, const GroupElement&);
  friend GroupElement group_inverse(const GroupElement&);
};

/// g h (g + h for abelian groups).  Throws StructuralError on owner mismatch.
GroupElement group_combine(const GroupElement& g, const GroupElement& h);
GroupElement group_inverse(const GroupElement& g);
/// g h^{-1}
GroupElement group_difference(const GroupElement& g, const GroupElement& h);
/// g^k, k may be negative.
GroupElement group_power(const GroupElement& g, std::int64_t k);

struct SubgroupSpec {
  std::vector<GroupElement> generators;
};

/// Subgroup closure of a table group (all elements of <generators>).
std::vector<GroupElement> subgroup_elements(const GradeGroup& g, const SubgroupSpec& h);

/// |G : H| by Smith normal form (abelian) or closure size (tables).
Cardinal coset_index(const GradeGroup& g, const SubgroupSpec& h);

/// [big : small] for subgroups small <= big of an abelian G.
Cardinal relative_index(const GradeGroup& g, const SubgroupSpec& big, const SubgroupSpec& small);

/// Commutator subgroup of a table group and its order.
std::pair<SubgroupSpec, std::size_t> derived_subgroup(const GradeGroup& g);

/// The quotient G/H of an abelian group with canonical coordinates:
/// two elements lie in the same coset exactly when their coordinates agree.
class AbelianQuotient {
 public:
  AbelianQuotient(GradeGroup g, const SubgroupSpec& h);

  /// Canonical coordinates of the coset g + H.
  std::vector<Integer> coset_coords(const GroupElement& x) const;
  bool same_coset(const GroupElement& a, const GroupElement& b) const;
  bool contains(const GroupElement& x) const;  ///< x in H
  Cardinal order() const;
  /// One representative per coset; only for finite quotients.
  std::vector<GroupElement> representatives() const;
  /// Invariant factors of the quotient (1s dropped, 0 = free summand).
  const std::vector<Integer>& invariants() const { return kept_; }

 private:
  GradeGroup group_;
  SmithForm snf_;
  std::vector<Integer> diag_;        // per coordinate, 0 for free directions
  std::vector<std::size_t> kept_index_;
  std::vector<Integer> kept_;
};

}  // namespace gradedalg
