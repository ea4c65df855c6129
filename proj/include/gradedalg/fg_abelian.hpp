// Isomorphism types of finitely generated abelian groups, the value type of
// every K-group computation.
#pragma once

#include "gradedalg/smith.hpp"

#include <string>
#include <vector>

namespace gradedalg {

/// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2.
/// Construction always canonicalises, so == is isomorphism.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  /// Canonicalises arbitrary cyclic orders (0 means a free summand, 1 is
  /// dropped) by Smith normal form of the diagonal.
  FGAbelianGroup(int rank, const std::vector<Integer>& cyclic_orders);

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(int rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& n) { return FGAbelianGroup(0, {n}); }
  /// Z^generators modulo the row span of `relations` (one relation per row).
  static FGAbelianGroup from_presentation(Eigen::Index generators, const IntMatrix& relations);
  /// Parses the to_string form, plus "Z^2 x Z/3" and "trivial".
  static FGAbelianGroup parse(const std::string& text);

  int rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  /// Product of the torsion invariants (the order when finite).
  Integer torsion_order() const;

  /// "Z^2 (+) Z/2 (+) Z/4"; the trivial group is "0".
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  int rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Direct sum.
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// G (x) Z[1/n]: torsion at primes dividing n dies, the free part survives.
/// Throws NotApplicable for n = 0.
FGAbelianGroup localize(const FGAbelianGroup& g, const Integer& n);

}  // namespace gradedalg
