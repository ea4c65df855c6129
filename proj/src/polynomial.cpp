#include "gradedalg/polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gradedalg {

namespace {

/// Positive divisors of |n|, n != 0, by trial division.
std::vector<Integer> divisors(const Integer& n) {
  const Integer m = abs(n);
  if (!(m <= Integer(1000000000000L)))
    throw NotApplicable("rational root search: coefficient " + m.to_string() + " too large to factor");
  const std::int64_t v = m.to_int64();
  std::vector<Integer> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  return out;
}

Integer lcm(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

}  // namespace

std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::set<Rational> roots;
  // clear denominators
  Integer den(1);
  for (const auto& c : p.coefficients()) den = lcm(den, c.denominator());
  std::vector<Integer> z;
  for (const auto& c : p.coefficients()) z.push_back((c * Rational(den)).numerator());
  // strip the factor t^k
  std::size_t shift = 0;
  while (shift < z.size() && z[shift].is_zero()) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  if (z.size() >= 2) {
    const Polynomial<Rational> q(p.field(), [&] {
      std::vector<Rational> v;
      for (const auto& c : z) v.emplace_back(c);
      return v;
    }());
    for (const auto& num : divisors(z.front()))
      for (const auto& d : divisors(z.back()))
        for (int sign : {1, -1}) {
          const Rational cand = Rational(num * Integer(sign)) / Rational(d);
          if (q.evaluate(cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

std::vector<Fp> prime_field_roots(const Polynomial<Fp>& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const auto& f = p.field();
  const std::uint64_t q = f.characteristic();
  std::vector<Fp> roots;
  if (q <= 200000) {
    for (std::uint64_t x = 0; x < q; ++x)
      if (p.evaluate(f.element(x)).is_zero()) roots.push_back(f.element(x));
    return roots;
  }
  // g = gcd(p, t^q - t) is the product of the distinct linear factors; split it
  // by Cantor-Zassenhaus with a fixed seed.
  const auto t = Polynomial<Fp>::monomial(f, 1, f.one());
  auto g = gcd(p, powmod(t, Integer(static_cast<unsigned long>(q)), p) - t);
  std::vector<Polynomial<Fp>> pending{g};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  while (!pending.empty()) {
    auto h = pending.back();
    pending.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      roots.push_back(-h.monic().coefficient(0));
      continue;
    }
    for (;;) {
      const auto shift = Polynomial<Fp>::linear(f, -f.random(rng));
      auto w = powmod(shift, Integer(static_cast<unsigned long>((q - 1) / 2)), h) - Polynomial<Fp>::constant(f, f.one());
      auto d = gcd(h, w);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        pending.push_back(d);
        pending.push_back(h.divmod(d).first);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return roots;
}

std::optional<bool> is_irreducible(const Polynomial<Fp>& p) {
  const int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto& f = p.field();
  const auto m = p.monic();
  const auto t = Polynomial<Fp>::monomial(f, 1, f.one());
  const Integer q(static_cast<unsigned long>(f.characteristic()));
  // frob[k] = t^(q^k) mod m
  std::vector<Polynomial<Fp>> frob{t % m};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, m));
  if (!((frob[static_cast<std::size_t>(n)] - t) % m).is_zero()) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
    const auto g = gcd(m, frob[static_cast<std::size_t>(n / r)] - t);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::optional<bool> is_irreducible(const Polynomial<Rational>& p) {
  const int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (n <= 3) return true;
  return std::nullopt;
}

}  // namespace gradedalg
