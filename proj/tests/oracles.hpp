// Independent reference computations for the tests.  Nothing here calls the
// library routine it is meant to check.
#pragma once

#include "gradedalg/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

/// (p q)(x) = p(q(x)).
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

/// Order of the subgroup generated by all commutators p q p^-1 q^-1.
inline std::size_t derived_order(const std::vector<Perm>& group) {
  std::set<Perm> h;
  for (const auto& p : group)
    for (const auto& q : group) h.insert(compose(compose(p, q), compose(invert(p), invert(q))));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(h.begin(), h.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (h.insert(compose(a, b)).second) grew = true;
  }
  return h.size();
}

/// Determinant by cofactor expansion over big integers (small matrices).
inline gradedalg::Integer det(const std::vector<std::vector<gradedalg::Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return gradedalg::Integer(1);
  if (n == 1) return m[0][0];
  gradedalg::Integer out(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<gradedalg::Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<gradedalg::Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const auto term = m[0][c] * det(minor);
    out = c % 2 == 0 ? out + term : out - term;
  }
  return out;
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}.  Zeros where D_k vanishes.
inline std::vector<gradedalg::Integer> invariant_factors(const std::vector<std::vector<gradedalg::Integer>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t r = std::min(rows, cols);
  std::vector<gradedalg::Integer> dk{gradedalg::Integer(1)};
  std::vector<gradedalg::Integer> out;
  for (std::size_t k = 1; k <= r; ++k) {
    gradedalg::Integer g(0);
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> pick_rows;
    std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t pos, std::size_t start) {
      if (pos == k) {
        std::vector<std::vector<gradedalg::Integer>> sub(k, std::vector<gradedalg::Integer>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        g = gradedalg::gcd(g, det(sub));
        return;
      }
      for (std::size_t c = start; c < cols; ++c) {
        ci[pos] = c;
        pick_cols(pos + 1, c + 1);
      }
    };
    pick_rows = [&](std::size_t pos, std::size_t start) {
      if (pos == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t rr = start; rr < rows; ++rr) {
        ri[pos] = rr;
        pick_rows(pos + 1, rr + 1);
      }
    };
    pick_rows(0, 0);
    g = gradedalg::abs(g);
    if (g.is_zero() || dk.back().is_zero()) {
      out.emplace_back(0);
      dk.emplace_back(0);
    } else {
      out.push_back(g / dk.back());
      dk.push_back(g);
    }
  }
  return out;
}

/// |Z^r / L| for a full-rank lattice L with the given generators (rows):
/// gcd of the r x r minors.  0 when L has lower rank.
inline gradedalg::Integer lattice_index(const std::vector<std::vector<gradedalg::Integer>>& gens, std::size_t r) {
  if (gens.size() < r) return gradedalg::Integer(0);
  auto f = invariant_factors(gens);
  gradedalg::Integer p(1);
  for (std::size_t i = 0; i < r; ++i) p *= f[i];
  return p;
}

/// Structure constants mod p: c[i][j][k] is the e_k coefficient of e_i e_j.
/// `degree` labels basis elements; equal labels mean equal degrees.
struct SmallAlgebra {
  int p = 2;
  std::vector<std::vector<std::vector<int>>> c;
  std::vector<std::string> degree;
  std::size_t dim() const { return degree.size(); }
};

inline int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    int inv = 1;
    while ((pr[col] * inv) % p != 1) ++inv;
    for (auto& x : pr) x = (x * inv) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][col] % p == 0) continue;
      const int f = m[r][col];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Whether some degree-preserving bijective linear map A -> B is
/// multiplicative on basis pairs.  Each basis vector of A is sent to every
/// combination of the B-basis vectors of the same degree label.
inline bool graded_iso_exists(const SmallAlgebra& a, const SmallAlgebra& b) {
  const std::size_t n = a.dim();
  if (n != b.dim()) return false;
  const int p = a.p;
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> slots;
    for (std::size_t l = 0; l < n; ++l)
      if (b.degree[l] == a.degree[k]) slots.push_back(l);
    std::size_t total = 1;
    for (std::size_t t = 0; t < slots.size(); ++t) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<int> v(n, 0);
      std::size_t c = code;
      for (auto l : slots) {
        v[l] = static_cast<int>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      choices[k].push_back(v);
    }
    if (choices[k].empty()) return false;
  }
  auto bmul = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + x[i] * y[j] * b.c[i][j][k]) % p;
      }
    }
    return out;
  };
  std::vector<std::vector<int>> img(n);
  // products among the assigned images must match as soon as both factors are known
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i)
      for (std::size_t j = 0; j <= upto; ++j) {
        if (i != upto && j != upto) continue;
        bool known = true;
        for (std::size_t k = 0; k < n; ++k)
          if (a.c[i][j][k] % p != 0 && k > upto) known = false;
        if (!known) continue;
        std::vector<int> want(n, 0);
        for (std::size_t k = 0; k <= upto; ++k)
          for (std::size_t l = 0; l < n; ++l) want[l] = (want[l] + a.c[i][j][k] * img[k][l]) % p;
        if (bmul(img[i], img[j]) != want) return false;
      }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<int> want(n, 0);
          for (std::size_t kk = 0; kk < n; ++kk)
            for (std::size_t l = 0; l < n; ++l) want[l] = (want[l] + a.c[i][j][kk] * img[kk][l]) % p;
          if (bmul(img[i], img[j]) != want) return false;
        }
      return rank_mod_p(img, p) == static_cast<int>(n);
    }
    for (const auto& v : choices[k]) {
      img[k] = v;
      if (consistent(k) && go(k + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
