// Shifted graded matrix rings M_n(R)(d), isomorphisms R^n(d) = R^m(a), and
// the classification of shift vectors over graded division rings.
#pragma once

#include "gradedalg/graded_algebra.hpp"
#include "gradedalg/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gradedalg {

/// M_n(R)(d): the lambda-component has (i,j) entry in R of degree
/// d_i lambda d_j^{-1} (d_i + lambda - d_j for abelian groups).
template <class S>
class ShiftedMatrixAlgebra : public GradedRing<S> {
 public:
  ShiftedMatrixAlgebra(GradedRingPtr<S> base, std::vector<GroupElement> shift) : base_(std::move(base)), shift_(std::move(shift)) {
    if (!base_) throw StructuralError("shifted matrix ring needs a base ring");
    if (shift_.empty()) throw StructuralError("shift vector is empty");
    for (const auto& d : shift_)
      if (!(d.group() == base_->group())) throw StructuralError("shift entry " + d.to_string() + " lies in a different group");
  }

  const GradedRing<S>& base() const { return *base_; }
  const GradedRingPtr<S>& base_ptr() const { return base_; }
  const std::vector<GroupElement>& shift() const { return shift_; }
  Index size() const { return static_cast<Index>(shift_.size()); }

  GroupElement entry_degree(Index i, Index j, const GroupElement& lambda) const {
    return group_combine(group_combine(shift_[static_cast<std::size_t>(i)], lambda), group_inverse(shift_[static_cast<std::size_t>(j)]));
  }

  /// Offset and size of each entry block (row-major) in the coordinates of A_lambda.
  struct Layout {
    std::vector<Index> offset, dims;
    Index total = 0;
  };
  Layout layout(const GroupElement& lambda) const {
    Layout l;
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) {
        l.offset.push_back(l.total);
        const Index d = base_->component_dim(entry_degree(i, j, lambda));
        l.dims.push_back(d);
        l.total += d;
      }
    return l;
  }
  Vector<S> entry(const GroupElement& lambda, const Vector<S>& x, Index i, Index j) const {
    const auto l = layout(lambda);
    const auto k = static_cast<std::size_t>(i * size() + j);
    return x.segment(l.offset[k], l.dims[k]);
  }
  /// Inverse of entry(): entries[i][j] are coordinates in R_{entry_degree(i,j,lambda)}.
  Vector<S> from_entries(const GroupElement& lambda, const std::vector<std::vector<Vector<S>>>& entries) const {
    const auto l = layout(lambda);
    Vector<S> x = zero_vector(field(), l.total);
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) {
        const auto k = static_cast<std::size_t>(i * size() + j);
        const auto& e = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e.size() != l.dims[k]) throw StructuralError("entry has the wrong component dimension");
        x.segment(l.offset[k], l.dims[k]) = e;
      }
    return x;
  }
  /// Dimension of R in each entry of A_lambda.
  std::vector<std::vector<Index>> pattern(const GroupElement& lambda) const {
    std::vector<std::vector<Index>> p(shift_.size(), std::vector<Index>(shift_.size()));
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j)
        p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = base_->component_dim(entry_degree(i, j, lambda));
    return p;
  }

  /// The whole ring as a finite graded algebra, when the support is finite.
  std::optional<GradedAlgebra<S>> materialize(Validation validation = Validation::full) const;

  // GradedRing
  const Field<S>& field() const override { return base_->field(); }
  const GradeGroup& group() const override { return base_->group(); }
  Index component_dim(const GroupElement& g) const override { return layout(g).total; }
  std::vector<std::string> component_labels(const GroupElement& g) const override {
    std::vector<std::string> out;
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) {
        const std::string unit = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        for (const auto& lbl : base_->component_labels(entry_degree(i, j, g))) out.push_back(lbl == "1" ? unit : unit + "*" + lbl);
      }
    return out;
  }
  Vector<S> multiply(const GroupElement& g, const Vector<S>& x, const GroupElement& h, const Vector<S>& y) const override {
    const GroupElement gh = group_combine(g, h);
    const auto lg = layout(g), lh = layout(h), out_l = layout(gh);
    Vector<S> out = zero_vector(field(), out_l.total);
    const Index n = size();
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k) {
        const auto ok = static_cast<std::size_t>(i * n + k);
        if (out_l.dims[ok] == 0) continue;
        for (Index j = 0; j < n; ++j) {
          const auto a = static_cast<std::size_t>(i * n + j), b = static_cast<std::size_t>(j * n + k);
          if (lg.dims[a] == 0 || lh.dims[b] == 0) continue;
          out.segment(out_l.offset[ok], out_l.dims[ok]) +=
              base_->multiply(entry_degree(i, j, g), x.segment(lg.offset[a], lg.dims[a]), entry_degree(j, k, h),
                              y.segment(lh.offset[b], lh.dims[b]));
        }
      }
    return out;
  }
  Vector<S> unit() const override {
    const GroupElement e = group().identity();
    std::vector<std::vector<Vector<S>>> entries(shift_.size(), std::vector<Vector<S>>(shift_.size()));
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j)
        entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            i == j ? base_->unit() : base_->component_zero(entry_degree(i, j, e));
    return from_entries(e, entries);
  }
  SupportInfo support() const override {
    const auto b = base_->support();
    SupportInfo s;
    if (b.kind == SupportInfo::Kind::finite) {
      std::set<GroupElement> seen;
      for (const auto& mu : b.elements)
        for (const auto& di : shift_)
          for (const auto& dj : shift_) seen.insert(group_combine(group_combine(group_inverse(di), mu), dj));
      s.kind = SupportInfo::Kind::finite;
      s.elements.assign(seen.begin(), seen.end());
      s.text = "{";
      for (std::size_t i = 0; i < s.elements.size(); ++i) s.text += (i ? ", " : "") + s.elements[i].to_string();
      s.text += "}";
      return s;
    }
    s.kind = b.kind;
    if (auto reps = degree_representatives()) s.elements = *reps;
    s.text = "union of -d_i + " + b.text + " + d_j";
    return s;
  }
  std::optional<std::vector<GroupElement>> degree_representatives() const override {
    const auto reps = base_->degree_representatives();
    if (!reps) return std::nullopt;
    std::set<GroupElement> seen;
    for (const auto& r : *reps)
      for (const auto& di : shift_)
        for (const auto& dj : shift_) seen.insert(group_combine(group_combine(group_inverse(di), r), dj));
    return std::vector<GroupElement>(seen.begin(), seen.end());
  }
  Subspace<S> central_scalars(const GroupElement& g) const override {
    if (!group().is_abelian()) return GradedRing<S>::central_scalars(g);
    const auto l = layout(g);
    const auto base_scalars = base_->central_scalars(g);
    Subspace<S> s(field(), l.total);
    for (Index r = 0; r < base_scalars.dim(); ++r) {
      Vector<S> v = zero_vector(field(), l.total);
      for (Index i = 0; i < size(); ++i) {
        const auto k = static_cast<std::size_t>(i * size() + i);
        v.segment(l.offset[k], l.dims[k]) = base_scalars.basis_vector(r);
      }
      s.insert(v);
    }
    return s;
  }
  /// Monomial matrices whose nonzero entries are known units of R.
  std::vector<Vector<S>> known_units(const GroupElement& g) const override {
    std::vector<Vector<S>> out;
    if (size() > 6) return out;
    std::vector<Index> perm(shift_.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    do {
      std::vector<std::vector<Vector<S>>> entries(shift_.size(), std::vector<Vector<S>>(shift_.size()));
      bool ok = true;
      for (Index i = 0; i < size() && ok; ++i)
        for (Index j = 0; j < size(); ++j) {
          const GroupElement deg = entry_degree(i, j, g);
          auto& slot = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (j == perm[static_cast<std::size_t>(i)]) {
            const auto units = base_->known_units(deg);
            if (units.empty()) {
              ok = false;
              break;
            }
            slot = units.front();
          } else {
            slot = base_->component_zero(deg);
          }
        }
      if (ok) out.push_back(from_entries(g, entries));
    } while (std::next_permutation(perm.begin(), perm.end()) && out.size() < 4);
    return out;
  }
  /// Over a commutative base, a matrix whose nonzero pattern has no perfect
  /// matching has zero determinant.
  std::optional<std::string> non_invertibility_certificate(const GroupElement& g) const override {
    if (!base_->is_commutative()) return std::nullopt;
    const auto p = pattern(g);
    const auto n = p.size();
    std::vector<int> match_col(n, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
      for (std::size_t c = 0; c < n; ++c) {
        if (p[r][c] == 0 || seen[c]) continue;
        seen[c] = true;
        if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]), seen)) {
          match_col[c] = static_cast<int>(r);
          return true;
        }
      }
      return false;
    };
    std::size_t matched = 0;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<bool> seen(n, false);
      if (augment(r, seen)) ++matched;
    }
    if (matched == n) return std::nullopt;
    return "nonzero pattern of degree " + g.to_string() + " has structural rank " + std::to_string(matched) + " < " +
           std::to_string(n) + ", so every determinant vanishes";
  }
  bool is_commutative() const override { return size() == 1 && base_->is_commutative(); }
  std::string description() const override {
    std::string d = "M_" + std::to_string(size()) + "(R)(";
    for (std::size_t i = 0; i < shift_.size(); ++i) d += (i ? "," : "") + shift_[i].to_string();
    return d + ") over " + base_->description();
  }

 private:
  GradedRingPtr<S> base_;
  std::vector<GroupElement> shift_;
};

template <class S>
std::optional<GradedAlgebra<S>> ShiftedMatrixAlgebra<S>::materialize(Validation validation) const {
  const auto sup = support();
  if (sup.kind != SupportInfo::Kind::finite) return std::nullopt;
  const auto& f = field();
  std::vector<GroupElement> degrees;
  std::vector<std::string> labels;
  std::map<GroupElement, Index> start;
  for (const auto& g : sup.elements) {
    start[g] = static_cast<Index>(degrees.size());
    for (auto& l : component_labels(g)) {
      labels.push_back(std::move(l));
      degrees.push_back(g);
    }
  }
  const auto dim = static_cast<Index>(degrees.size());
  auto global = [&](const GroupElement& g, const Vector<S>& x) {
    Vector<S> v = zero_vector(f, dim);
    v.segment(start.at(g), x.size()) = x;
    return v;
  };
  std::vector<SparseVector<S>> products;
  products.reserve(static_cast<std::size_t>(dim * dim));
  for (Index a = 0; a < dim; ++a)
    for (Index b = 0; b < dim; ++b) {
      const auto& ga = degrees[static_cast<std::size_t>(a)];
      const auto& gb = degrees[static_cast<std::size_t>(b)];
      const GroupElement gab = group_combine(ga, gb);
      const Vector<S> p = multiply(ga, unit_vector(f, component_dim(ga), a - start.at(ga)), gb,
                                   unit_vector(f, component_dim(gb), b - start.at(gb)));
      products.push_back(p.size() == 0 ? SparseVector<S>{} : sparsify(global(gab, p)));
    }
  const GroupElement e = group().identity();
  Witnesses<S> w;
  w.matrix_units.assign(shift_.size(), std::vector<Vector<S>>(shift_.size()));
  for (Index i = 0; i < size(); ++i)
    for (Index j = 0; j < size(); ++j) {
      // E_ij (x) 1 has degree d_i^{-1} d_j
      const GroupElement g = group_combine(group_inverse(shift_[static_cast<std::size_t>(i)]), shift_[static_cast<std::size_t>(j)]);
      std::vector<std::vector<Vector<S>>> entries(shift_.size(), std::vector<Vector<S>>(shift_.size()));
      for (Index a = 0; a < size(); ++a)
        for (Index b = 0; b < size(); ++b)
          entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              (a == i && b == j) ? base_->unit() : base_->component_zero(entry_degree(a, b, g));
      w.matrix_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = global(g, from_entries(g, entries));
    }
  Algebra<S> alg(f, std::move(labels), std::move(products), global(e, unit()), validation);
  return GradedAlgebra<S>(std::move(alg), group(), std::move(degrees), std::move(w), validation);
}

template <class S>
struct ShiftMatrixSolution {
  Truth truth = Truth::undecided;
  Strategy strategy = Strategy::sampled;
  /// x[i][j] in R of degree d_i^{-1} a_j, y[j][i] in R of degree a_j^{-1} d_i.
  std::vector<std::vector<Vector<S>>> x, y;
  std::uint64_t examined = 0;
  std::string note;
};

/// An invertible n x m matrix in GL(R)[d][a], so R^n(d) = R^m(a) as graded
/// modules.  X Y = I and Y X = I are solved together for Y given each X.
template <class S>
ShiftMatrixSolution<S> solve_shift_matrix(const GradedRing<S>& r, const std::vector<GroupElement>& d, const std::vector<GroupElement>& a,
                                          const SearchOptions& opts = {}) {
  const auto& f = r.field();
  const std::size_t n = d.size(), m = a.size();
  ShiftMatrixSolution<S> out;
  if (n == 0 || m == 0) throw StructuralError("shift vectors must be nonempty");
  auto xdeg = [&](std::size_t i, std::size_t j) { return group_combine(group_inverse(d[i]), a[j]); };
  auto ydeg = [&](std::size_t j, std::size_t i) { return group_combine(group_inverse(a[j]), d[i]); };

  std::vector<Index> xoff, xdim, yoff, ydim;
  Index nx = 0, ny = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      xoff.push_back(nx);
      xdim.push_back(r.component_dim(xdeg(i, j)));
      nx += xdim.back();
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      yoff.push_back(ny);
      ydim.push_back(r.component_dim(ydeg(j, i)));
      ny += ydim.back();
    }
  auto xblock = [&](const Vector<S>& x, std::size_t i, std::size_t j) { return Vector<S>(x.segment(xoff[i * m + j], xdim[i * m + j])); };
  auto yblock = [&](const Vector<S>& y, std::size_t j, std::size_t i) { return Vector<S>(y.segment(yoff[j * n + i], ydim[j * n + i])); };

  // Flattened XY (n x n blocks) followed by YX (m x m blocks).
  std::vector<Index> toff;
  std::vector<GroupElement> tdeg;
  Index nt = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      tdeg.push_back(group_combine(group_inverse(d[i]), d[k]));
      toff.push_back(nt);
      nt += r.component_dim(tdeg.back());
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      tdeg.push_back(group_combine(group_inverse(a[j]), a[l]));
      toff.push_back(nt);
      nt += r.component_dim(tdeg.back());
    }
  Vector<S> target = zero_vector(f, nt);
  for (std::size_t i = 0; i < n; ++i) target.segment(toff[i * n + i], r.unit().size()) = r.unit();
  for (std::size_t j = 0; j < m; ++j) target.segment(toff[n * n + j * m + j], r.unit().size()) = r.unit();

  auto products = [&](const Vector<S>& x, const Vector<S>& y) {
    Vector<S> t = zero_vector(f, nt);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j) {
          if (xdim[i * m + j] == 0 || ydim[j * n + k] == 0) continue;
          const auto idx = i * n + k;
          t.segment(toff[idx], r.component_dim(tdeg[idx])) += r.multiply(xdeg(i, j), xblock(x, i, j), ydeg(j, k), yblock(y, j, k));
        }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t i = 0; i < n; ++i) {
          if (ydim[j * n + i] == 0 || xdim[i * m + l] == 0) continue;
          const auto idx = n * n + j * m + l;
          t.segment(toff[idx], r.component_dim(tdeg[idx])) += r.multiply(ydeg(j, i), yblock(y, j, i), xdeg(i, l), xblock(x, i, l));
        }
    return t;
  };
  auto inverse_of = [&](const Vector<S>& x) -> std::optional<Vector<S>> {
    if (ny == 0) return std::nullopt;
    Matrix<S> sys(nt, ny);
    for (Index c = 0; c < ny; ++c) sys.col(c) = products(x, unit_vector(f, ny, c));
    return gradedalg::solve(f, sys, target);
  };
  auto finish = [&](const Vector<S>& x, const Vector<S>& y) {
    out.x.assign(n, std::vector<Vector<S>>(m));
    out.y.assign(m, std::vector<Vector<S>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        out.x[i][j] = xblock(x, i, j);
        out.y[j][i] = yblock(y, j, i);
      }
  };

  if (nx == 0) {
    out.truth = Truth::no;
    out.strategy = Strategy::exhaustive;
    out.note = "every entry component is zero";
    return out;
  }
  // A row of X or Y whose components all vanish makes XY or YX singular.
  for (std::size_t i = 0; i < n; ++i) {
    bool empty = true;
    for (std::size_t j = 0; j < m; ++j) empty = empty && xdim[i * m + j] == 0;
    if (empty) {
      out.truth = Truth::no;
      out.strategy = Strategy::exhaustive;
      out.note = "row " + std::to_string(i + 1) + " of every matrix in the pattern is zero";
      return out;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool empty = true;
    for (std::size_t i = 0; i < n; ++i) empty = empty && ydim[j * n + i] == 0;
    if (empty) {
      out.truth = Truth::no;
      out.strategy = Strategy::exhaustive;
      out.note = "row " + std::to_string(j + 1) + " of every candidate inverse is zero";
      return out;
    }
  }
  // Monomial candidates built from known units.
  if (n == m && n <= 6) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      Vector<S> x = zero_vector(f, nx);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const auto units = r.known_units(xdeg(i, perm[i]));
        if (units.empty()) ok = false;
        else x.segment(xoff[i * m + perm[i]], xdim[i * m + perm[i]]) = units.front();
      }
      if (!ok) continue;
      ++out.examined;
      if (auto y = inverse_of(x)) {
        finish(x, *y);
        out.truth = Truth::yes;
        out.strategy = Strategy::constructive;
        out.note = "monomial matrix of known homogeneous units";
        return out;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Vector<S>> basis;
  for (Index k = 0; k < nx; ++k) basis.push_back(unit_vector(f, nx, k));
  const auto found = exists_nonzero(f, nx, basis, opts, 0x5817u, [&](const Vector<S>& x) { return inverse_of(x).has_value(); });
  out.examined += found.examined;
  out.truth = found.truth;
  out.strategy = found.strategy;
  if (found.witness) finish(*found.witness, *inverse_of(*found.witness));
  if (found.truth == Truth::undecided) out.note = "undecided(budget)";
  return out;
}

/// Gamma_D as a subgroup, from the support of a graded division ring.
template <class S>
SubgroupSpec support_subgroup(const GradedRing<S>& r) {
  const auto s = r.support();
  if (s.kind == SupportInfo::Kind::cone) throw NotApplicable("support is a cone, not a subgroup");
  return SubgroupSpec{s.elements};
}

/// Multiset of cosets Gamma_D + lambda_i, translated so that a canonical
/// origin coset becomes zero.
struct ShiftCanonicalForm {
  std::vector<std::pair<std::vector<Integer>, int>> cosets;
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (i) s += ", ";
      const auto& c = cosets[i].first;
      if (c.empty()) {
        s += "0";
      } else if (c.size() == 1) {
        s += c[0].to_string();
      } else {
        s += "(";
        for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + c[k].to_string();
        s += ")";
      }
      s += ":" + std::to_string(cosets[i].second);
    }
    return s + "}";
  }
  friend bool operator==(const ShiftCanonicalForm&, const ShiftCanonicalForm&) = default;
};

namespace detail {

struct CanonicalChoice {
  ShiftCanonicalForm form;
  std::vector<Integer> origin;
};

inline std::vector<Integer> coset_difference(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                             const std::vector<Integer>& moduli) {
  std::vector<Integer> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    d[k] = a[k] - b[k];
    if (moduli[k] != 0) {
      d[k] = d[k] % moduli[k];
      if (d[k] < 0) d[k] += moduli[k];
    }
  }
  return d;
}

/// Origins are restricted to cosets whose free coordinates are least (a
/// translation-invariant choice); among those the smallest translated
/// multiset wins.
inline CanonicalChoice canonical_choice(const AbelianQuotient& q, const std::vector<GroupElement>& lambda) {
  std::vector<std::vector<Integer>> coords;
  for (const auto& l : lambda) coords.push_back(q.coset_coords(l));
  const auto& moduli = q.invariants();
  auto free_part = [&](const std::vector<Integer>& c) {
    std::vector<Integer> f;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (moduli[k] == 0) f.push_back(c[k]);
    return f;
  };
  std::vector<Integer> least_free = free_part(coords.front());
  for (const auto& c : coords) least_free = std::min(least_free, free_part(c));
  std::optional<CanonicalChoice> best;
  for (const auto& origin : coords) {
    if (free_part(origin) != least_free) continue;
    std::map<std::vector<Integer>, int> counts;
    for (const auto& c : coords) ++counts[coset_difference(c, origin, moduli)];
    CanonicalChoice cand;
    cand.form.cosets.assign(counts.begin(), counts.end());
    cand.origin = origin;
    if (!best || cand.form.cosets < best->form.cosets) best = std::move(cand);
  }
  return *best;
}

}  // namespace detail

inline ShiftCanonicalForm canonical_shift(const GradeGroup& g, const SubgroupSpec& gamma_d, const std::vector<GroupElement>& lambda) {
  if (!g.is_abelian()) throw NotApplicable("shift classification needs an abelian grade group");
  if (lambda.empty()) return {};
  return detail::canonical_choice(AbelianQuotient(g, gamma_d), lambda).form;
}

template <class S>
ShiftCanonicalForm canonical_shift(const GradedRing<S>& d, const std::vector<GroupElement>& lambda) {
  return canonical_shift(d.group(), support_subgroup(d), lambda);
}

/// gamma_i = tau_i + lambda_{pi(i)} + sigma with tau_i in Gamma_D.
struct ShiftWitness {
  std::vector<std::size_t> pi;
  std::vector<GroupElement> tau;
  GroupElement sigma;
  std::string to_string() const {
    std::string s = "pi=(";
    for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? "," : "") + std::to_string(pi[i] + 1);
    s += "), tau=(";
    for (std::size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + tau[i].to_string();
    return s + "), sigma=" + sigma.to_string();
  }
};

struct ShiftIsoDecision {
  VerdictReport report;
  std::optional<ShiftWitness> witness;
};

inline ShiftIsoDecision shifted_iso_decision(const GradeGroup& g, const SubgroupSpec& gamma_d, const std::vector<GroupElement>& lambda,
                                             const std::vector<GroupElement>& gamma) {
  const std::string name = "graded_isomorphic";
  if (!g.is_abelian()) throw NotApplicable("shift classification needs an abelian grade group");
  ShiftIsoDecision out;
  if (lambda.size() != gamma.size()) {
    out.report = VerdictReport::make(name, Truth::no, Strategy::constructive,
                                     "matrix sizes differ (" + std::to_string(lambda.size()) + " vs " + std::to_string(gamma.size()) + ")");
    return out;
  }
  if (lambda.empty()) {
    out.report = VerdictReport::make(name, Truth::yes, Strategy::constructive, "both shift vectors are empty");
    return out;
  }
  const AbelianQuotient q(g, gamma_d);
  const auto cl = detail::canonical_choice(q, lambda);
  const auto cg = detail::canonical_choice(q, gamma);
  if (!(cl.form == cg.form)) {
    out.report = VerdictReport::make(name, Truth::no, Strategy::constructive,
                                     "canonical coset multisets differ: " + cl.form.to_string() + " vs " + cg.form.to_string());
    return out;
  }
  std::size_t j0 = 0, i0 = 0;
  while (q.coset_coords(lambda[j0]) != cl.origin) ++j0;
  while (q.coset_coords(gamma[i0]) != cg.origin) ++i0;
  ShiftWitness w;
  w.sigma = group_difference(gamma[i0], lambda[j0]);
  std::vector<bool> used(lambda.size(), false);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const GroupElement target = group_difference(gamma[i], w.sigma);
    std::size_t j = 0;
    while (j < lambda.size() && (used[j] || !q.same_coset(target, lambda[j]))) ++j;
    if (j == lambda.size()) throw std::logic_error("equal canonical forms without a matching permutation");
    used[j] = true;
    w.pi.push_back(j);
    w.tau.push_back(group_difference(target, lambda[j]));
  }
  out.report = VerdictReport::make(name, Truth::yes, Strategy::constructive, w.to_string());
  out.witness = std::move(w);
  return out;
}

template <class S>
ShiftIsoDecision shifted_iso_decision(const GradedRing<S>& d, const std::vector<GroupElement>& lambda, const std::vector<GroupElement>& gamma) {
  return shifted_iso_decision(d.group(), support_subgroup(d), lambda, gamma);
}

/// A homogeneous unit of degree g: a known one, else a search.
template <class S>
std::optional<Vector<S>> find_homogeneous_unit(const GradedRing<S>& r, const GroupElement& g, const SearchOptions& opts = {}) {
  return homogeneous_unit_search(r, g, opts).unit;
}

/// Images of the basis of M_n(D)(lambda) under X -> (w_i X_{pi(i) pi(j)} w_j^{-1})
/// with w_i in D of degree tau_i, as coordinates in the materialised
/// M_n(D)(gamma).  Column k is the image of basis element k.
template <class S>
Matrix<S> induced_isomorphism(const ShiftedMatrixAlgebra<S>& from, const GradedAlgebra<S>& from_alg, const ShiftedMatrixAlgebra<S>& to,
                              const GradedAlgebra<S>& to_alg, const ShiftWitness& w, const SearchOptions& opts = {}) {
  const auto& d = from.base();
  const auto n = static_cast<std::size_t>(from.size());
  std::vector<Vector<S>> units, inverses;
  for (const auto& t : w.tau) {
    auto u = find_homogeneous_unit(d, t, opts);
    if (!u) throw NotApplicable("no homogeneous unit of degree " + t.to_string() + " found in the base ring");
    units.push_back(*u);
    inverses.push_back(*homogeneous_inverse(d, t, *u));
  }
  Matrix<S> images = zero_matrix(from.field(), to_alg.dim(), from_alg.dim());
  for (Index k = 0; k < from_alg.dim(); ++k) {
    const GroupElement mu = from_alg.degree(k);
    const Vector<S> x = from_alg.project(from_alg.algebra().basis(k), mu);
    std::vector<std::vector<Vector<S>>> entries(n, std::vector<Vector<S>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto pi = static_cast<Index>(w.pi[i]), pj = static_cast<Index>(w.pi[j]);
        const GroupElement src = from.entry_degree(pi, pj, mu);
        const Vector<S> left = d.multiply(w.tau[i], units[i], src, from.entry(mu, x, pi, pj));
        entries[i][j] = d.multiply(group_combine(w.tau[i], src), left, group_inverse(w.tau[j]), inverses[j]);
      }
    images.col(k) = to_alg.embed(mu, to.from_entries(mu, entries));
  }
  return images;
}

/// deg(e_ij) = gamma_i^{-1} gamma_j for all matrix units, or nullopt when some
/// matrix unit is not homogeneous.
template <class S>
std::optional<std::vector<GroupElement>> is_good_grading(const GradedAlgebra<S>& a) {
  const auto& mu = a.witnesses().matrix_units;
  if (mu.empty()) throw NotApplicable("no matrix-unit family designated");
  const std::size_t n = mu.size();
  std::vector<std::vector<GroupElement>> deg(n, std::vector<GroupElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto g = a.homogeneous_degree(mu[i][j]);
      if (!g) return std::nullopt;
      deg[i][j] = *g;
    }
  std::vector<GroupElement> gamma{a.group().identity()};
  for (std::size_t j = 1; j < n; ++j) gamma.push_back(deg[0][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(deg[i][j] == group_combine(group_inverse(gamma[i]), gamma[j]))) return std::nullopt;
  return gamma;
}

}  // namespace gradedalg
