// Block decomposition of a semisimple algebra: primitive central idempotents
// from minimal polynomials of central elements, then a matrix size per block
// from a maximal family of orthogonal idempotents in it.
#pragma once

#include "gradedalg/algebra.hpp"
#include "gradedalg/polynomial.hpp"
#include "gradedalg/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gradedalg {

struct WedderburnBlock {
  Index dim = 0;
  /// Dimension of the block's centre over K.
  Index center_dim = 0;
  /// The centre is known to be a field, so the block is simple.
  bool simple = false;
  /// Number of orthogonal idempotents found; the block is M_n(D) with n at
  /// least this.
  Index matrix_size = 1;
  /// dim / matrix_size^2.
  Index division_dim = 0;
  /// matrix_size is exact (D = K, or GF(p) where D is commutative).
  bool size_certified = false;
  std::string note;
};

template <class S>
struct WedderburnSplit {
  VerdictReport semisimple;
  std::vector<Vector<S>> central_idempotents;
  std::vector<WedderburnBlock> blocks;
  bool all_simple() const {
    for (const auto& b : blocks)
      if (!b.simple) return false;
    return true;
  }
  /// "K x M_2(K)" style summary.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      if (i) s += " x ";
      if (!b.simple) {
        s += "[unresolved block of dimension " + std::to_string(b.dim) + "]";
        continue;
      }
      const std::string d = b.center_dim > 1 ? "L" + std::to_string(b.center_dim)
                                             : (b.division_dim == 1 ? "K" : "D" + std::to_string(b.division_dim));
      s += b.matrix_size == 1 ? d : "M_" + std::to_string(b.matrix_size) + "(" + d + ")";
    }
    return s;
  }
};

namespace detail {

/// Minimal polynomial of y inside a corner algebra whose unit is f.
template <class S>
Polynomial<S> corner_minimal_polynomial(const Algebra<S>& a, const Vector<S>& y, const Vector<S>& f) {
  std::vector<Vector<S>> powers{f};
  for (;;) {
    const Vector<S> next = a.multiply(powers.back(), y);
    Matrix<S> m(a.dim(), static_cast<Index>(powers.size()));
    for (std::size_t i = 0; i < powers.size(); ++i) m.col(static_cast<Index>(i)) = powers[i];
    if (auto c = gradedalg::solve(a.field(), m, next)) {
      std::vector<S> coeffs;
      for (Index i = 0; i < c->size(); ++i) coeffs.push_back(-(*c)(i));
      coeffs.push_back(a.field().one());
      return Polynomial<S>(a.field(), std::move(coeffs));
    }
    powers.push_back(next);
  }
}

template <class S>
Vector<S> corner_evaluate(const Algebra<S>& a, const Polynomial<S>& p, const Vector<S>& y, const Vector<S>& f) {
  Vector<S> acc = a.zero();
  for (int k = p.degree(); k >= 0; --k) acc = Vector<S>(a.multiply(acc, y) + f * p.coefficient(static_cast<std::size_t>(k)));
  return acc;
}

/// A nontrivial idempotent of the corner with unit f inside K[y], from a
/// simple root of the minimal polynomial.
template <class S>
std::optional<Vector<S>> split_by(const Algebra<S>& a, const Vector<S>& y, const Vector<S>& f) {
  const auto m = corner_minimal_polynomial(a, y, f);
  if (m.degree() < 2) return std::nullopt;
  for (const S& r : roots_in_field(m)) {
    const auto g = m.divmod(Polynomial<S>::linear(a.field(), r)).first;
    const S gr = g.evaluate(r);
    if (is_zero(gr)) continue;
    return Vector<S>(corner_evaluate(a, g, y, f) * (a.field().one() / gr));
  }
  return std::nullopt;
}

}  // namespace detail

/// Splits a semisimple algebra into blocks.  Blocks whose centre cannot be
/// shown to be a field are reported unresolved.
template <class S>
WedderburnSplit<S> split_semisimple(const Algebra<S>& a, const SearchOptions& opts = {}) {
  const auto& f = a.field();
  WedderburnSplit<S> out;
  out.semisimple = semisimplicity(a);
  if (out.semisimple.fails()) throw NotApplicable("algebra is not semisimple: " + out.semisimple.witness);

  const Subspace<S> z = center(a);
  std::vector<Vector<S>> zc;
  for (Index r = 0; r < z.dim(); ++r) zc.push_back(z.basis_vector(r));
  if (z.dim() <= 8)
    for (Index i = 0; i < z.dim(); ++i)
      for (Index j = i + 1; j < z.dim(); ++j) zc.push_back(Vector<S>(z.basis_vector(i) + z.basis_vector(j)));
  {
    std::mt19937_64 rng(opts.seed ^ 0xced7u);
    for (int s = 0; s < 8 && z.dim() > 1; ++s) {
      Vector<S> v = a.zero();
      for (Index r = 0; r < z.dim(); ++r) v += z.basis_vector(r) * f.random(rng);
      zc.push_back(std::move(v));
    }
  }

  std::vector<Vector<S>> idems{a.unit()};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < idems.size() && !changed; ++k)
      for (const auto& c : zc) {
        const Vector<S> y = a.multiply(idems[k], c);
        if (auto e = detail::split_by(a, y, idems[k])) {
          const Vector<S> rest = idems[k] - *e;
          idems[k] = *e;
          idems.push_back(rest);
          changed = true;
          break;
        }
      }
  }
  out.central_idempotents = idems;

  for (const auto& e : idems) {
    WedderburnBlock b;
    std::vector<Vector<S>> span;
    for (Index i = 0; i < a.dim(); ++i) span.push_back(a.multiply(e, a.basis(i)));
    const Subspace<S> block = Subspace<S>::span(f, a.dim(), span);
    b.dim = block.dim();
    std::vector<Vector<S>> zs;
    for (Index r = 0; r < z.dim(); ++r) zs.push_back(a.multiply(e, z.basis_vector(r)));
    const Subspace<S> bz = Subspace<S>::span(f, a.dim(), zs);
    b.center_dim = bz.dim();
    if (b.center_dim == 1) {
      b.simple = true;
    } else {
      for (const auto& c : zc) {
        const auto m = detail::corner_minimal_polynomial(a, Vector<S>(a.multiply(e, c)), e);
        if (m.degree() == static_cast<int>(b.center_dim) && is_irreducible(m).value_or(false)) {
          b.simple = true;
          b.note = "centre is K[y] with y of irreducible minimal polynomial " + m.to_string();
          break;
        }
      }
      if (!b.simple) b.note = "centre of dimension " + std::to_string(b.center_dim) + " not shown to be a field";
    }

    if (b.simple && b.center_dim == 1) {
      // Refine e into orthogonal idempotents inside corner algebras.
      std::vector<Vector<S>> parts{e};
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < parts.size() && !changed; ++k) {
          const Vector<S>& p = parts[k];
          std::vector<Vector<S>> corner;
          for (Index i = 0; i < a.dim(); ++i) corner.push_back(a.multiply(a.multiply(p, a.basis(i)), p));
          const Subspace<S> cs = Subspace<S>::span(f, a.dim(), corner);
          if (cs.dim() <= 1) continue;
          std::vector<Vector<S>> tries;
          for (Index r = 0; r < cs.dim(); ++r) tries.push_back(cs.basis_vector(r));
          std::mt19937_64 rng(opts.seed ^ (0xa11u + k));
          for (int s = 0; s < opts.samples; ++s) {
            Vector<S> v = a.zero();
            for (Index r = 0; r < cs.dim(); ++r) v += cs.basis_vector(r) * f.random(rng);
            tries.push_back(std::move(v));
          }
          for (const auto& y : tries) {
            if (auto q = detail::split_by(a, y, p)) {
              const Vector<S> rest = p - *q;
              parts[k] = *q;
              parts.push_back(rest);
              changed = true;
              break;
            }
          }
        }
      }
      b.matrix_size = static_cast<Index>(parts.size());
      b.division_dim = b.dim / (b.matrix_size * b.matrix_size);
      // Finite division algebras are commutative, so a central block over
      // GF(p) has D = K.
      b.size_certified = b.division_dim == 1;
      if (!b.size_certified && f.characteristic() != 0)
        b.note = "no further idempotent found in a corner of dimension " + std::to_string(b.division_dim);
    } else {
      b.division_dim = b.dim;
    }
    out.blocks.push_back(std::move(b));
  }
  // Smallest blocks first.
  std::vector<std::size_t> order(out.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return out.blocks[x].dim < out.blocks[y].dim; });
  WedderburnSplit<S> sorted;
  sorted.semisimple = out.semisimple;
  for (auto k : order) {
    sorted.blocks.push_back(out.blocks[k]);
    sorted.central_idempotents.push_back(out.central_idempotents[k]);
  }
  return sorted;
}

}  // namespace gradedalg
