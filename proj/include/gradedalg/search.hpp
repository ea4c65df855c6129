// Element searches over subspaces: exhaustive projective enumeration over
// finite fields, basis directions plus seeded samples otherwise.  Every
// search reports which of the two it did.
#pragma once

#include "gradedalg/linalg.hpp"
#include "gradedalg/verdict.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace gradedalg {

struct SearchOptions {
  /// Largest number of elements an exhaustive scan may visit.
  std::uint64_t budget = std::uint64_t{1} << 20;
  /// Random elements tried when a scan is not exhaustive.
  int samples = 64;
  std::uint64_t seed = 20240601;
  /// Worker threads for exhaustive scans; results do not depend on it.
  unsigned threads = 1;
};

/// Number of points of the projective space P(F^k), or nullopt when it
/// exceeds `cap` (or F is infinite).
template <class S>
std::optional<std::uint64_t> projective_count(const Field<S>& f, Index k, std::uint64_t cap) {
  const auto q = f.size();
  if (!q) return std::nullopt;
  std::uint64_t total = 0, power = 1;  // power = q^(k-1-l)
  for (Index l = 0; l < k; ++l) {
    total += power;
    if (total > cap) return std::nullopt;
    if (l + 1 < k) {
      if (power > cap / *q) return std::nullopt;
      power *= *q;
    }
  }
  return total;
}

/// The idx-th point of P(F^k), normalised so the leading nonzero coordinate
/// is one.  Points are ordered by the position of that coordinate, then by
/// the remaining coordinates read as base-q digits.
template <class S>
Vector<S> projective_point(const Field<S>& f, Index k, std::uint64_t idx) {
  const std::uint64_t q = *f.size();
  Vector<S> v = zero_vector(f, k);
  for (Index l = 0; l < k; ++l) {
    std::uint64_t block = 1;
    for (Index t = l + 1; t < k; ++t) block *= q;
    if (idx < block) {
      v(l) = f.one();
      for (Index t = k - 1; t > l; --t) {
        v(t) = f.element(idx % q);
        idx /= q;
      }
      return v;
    }
    idx -= block;
  }
  throw std::out_of_range("projective point index out of range");
}

/// Smallest i < count with pred(i), scanning in parallel when threads > 1.
/// The answer is the same for every thread count.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t count, unsigned threads, Pred pred) {
  if (threads <= 1 || count < 512) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr std::uint64_t chunk = 128;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next.fetch_add(chunk);
      if (start >= count || start >= best.load()) return;
      const std::uint64_t stop = std::min(count, start + chunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load()) break;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  const auto b = best.load();
  if (b == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b;
}

template <class S>
Vector<S> combine(const Field<S>& f, Index ambient, const std::vector<Vector<S>>& basis, const Vector<S>& coeffs) {
  Vector<S> v = zero_vector(f, ambient);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!is_zero(coeffs(static_cast<Index>(i)))) v += basis[i] * coeffs(static_cast<Index>(i));
  return v;
}

/// Basis directions followed by `samples` seeded random nonzero combinations.
template <class S>
std::vector<Vector<S>> probe_coefficients(const Field<S>& f, Index k, const SearchOptions& opts, std::uint64_t salt) {
  std::vector<Vector<S>> out;
  for (Index i = 0; i < k; ++i) out.push_back(unit_vector(f, k, i));
  if (k <= 1) return out;
  std::mt19937_64 rng(opts.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  for (int s = 0; s < opts.samples; ++s) {
    Vector<S> c(k);
    bool nonzero = false;
    for (Index i = 0; i < k; ++i) {
      c(i) = f.random(rng);
      nonzero = nonzero || !is_zero(c(i));
    }
    if (nonzero) out.push_back(std::move(c));
  }
  return out;
}

template <class S>
struct SearchOutcome {
  Truth truth = Truth::undecided;
  Strategy strategy = Strategy::sampled;
  std::optional<Vector<S>> witness;  ///< counterexample (for_all) or example (exists)
  std::uint64_t examined = 0;
};

/// Does pred hold for every nonzero element of span(basis)?  pred must be
/// invariant under nonzero scalar multiples.
template <class S, class Pred>
SearchOutcome<S> for_all_nonzero(const Field<S>& f, Index ambient, const std::vector<Vector<S>>& basis,
                                 const SearchOptions& opts, std::uint64_t salt, Pred pred) {
  SearchOutcome<S> out;
  const Index k = static_cast<Index>(basis.size());
  if (k == 0) {
    out.truth = Truth::yes;
    out.strategy = Strategy::exhaustive;
    return out;
  }
  if (f.size() || k == 1) {
    const auto count = k == 1 ? std::optional<std::uint64_t>(1) : projective_count(f, k, opts.budget);
    if (count) {
      auto coeff = [&](std::uint64_t i) { return k == 1 ? unit_vector(f, 1, 0) : projective_point(f, k, i); };
      const auto bad = find_first(*count, opts.threads, [&](std::uint64_t i) { return !pred(combine(f, ambient, basis, coeff(i))); });
      out.strategy = Strategy::exhaustive;
      out.examined = bad ? *bad + 1 : *count;
      if (bad) {
        out.truth = Truth::no;
        out.witness = combine(f, ambient, basis, coeff(*bad));
      } else {
        out.truth = Truth::yes;
      }
      return out;
    }
  }
  for (const auto& c : probe_coefficients(f, k, opts, salt)) {
    ++out.examined;
    auto v = combine(f, ambient, basis, c);
    if (!pred(v)) {
      out.truth = Truth::no;
      out.witness = std::move(v);
      return out;
    }
  }
  // A finite field whose scan would exceed the budget stays undecided; over
  // Q the sampled answer is reported as such.
  out.truth = f.size() ? Truth::undecided : Truth::yes;
  return out;
}

/// Is there a nonzero element of span(basis) satisfying pred?  pred must be
/// invariant under nonzero scalar multiples.
template <class S, class Pred>
SearchOutcome<S> exists_nonzero(const Field<S>& f, Index ambient, const std::vector<Vector<S>>& basis,
                                const SearchOptions& opts, std::uint64_t salt, Pred pred) {
  SearchOutcome<S> out;
  const Index k = static_cast<Index>(basis.size());
  if (k == 0) {
    out.truth = Truth::no;
    out.strategy = Strategy::exhaustive;
    return out;
  }
  if (f.size() || k == 1) {
    const auto count = k == 1 ? std::optional<std::uint64_t>(1) : projective_count(f, k, opts.budget);
    if (count) {
      auto coeff = [&](std::uint64_t i) { return k == 1 ? unit_vector(f, 1, 0) : projective_point(f, k, i); };
      const auto good = find_first(*count, opts.threads, [&](std::uint64_t i) { return pred(combine(f, ambient, basis, coeff(i))); });
      out.strategy = Strategy::exhaustive;
      out.examined = good ? *good + 1 : *count;
      if (good) {
        out.truth = Truth::yes;
        out.witness = combine(f, ambient, basis, coeff(*good));
      } else {
        out.truth = Truth::no;
      }
      return out;
    }
  }
  for (const auto& c : probe_coefficients(f, k, opts, salt)) {
    ++out.examined;
    auto v = combine(f, ambient, basis, c);
    if (pred(v)) {
      out.truth = Truth::yes;
      out.strategy = Strategy::constructive;
      out.witness = std::move(v);
      return out;
    }
  }
  out.truth = Truth::undecided;
  return out;
}

}  // namespace gradedalg
