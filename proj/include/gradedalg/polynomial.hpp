// Dense univariate polynomials over an exact field.
#pragma once

#include "gradedalg/scalar.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gradedalg {

template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients from the constant term upwards; trailing zeros are dropped.
  Polynomial(Field<S> field, std::vector<S> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Field<S>& f, const S& c) { return Polynomial(f, {c}); }
  static Polynomial monomial(const Field<S>& f, std::size_t degree, const S& c) {
    std::vector<S> v(degree + 1, f.zero());
    v[degree] = c;
    return Polynomial(f, std::move(v));
  }
  /// t - c
  static Polynomial linear(const Field<S>& f, const S& c) { return Polynomial(f, {-c, f.one()}); }

  const Field<S>& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coefficients() const { return c_; }
  S coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  S leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    const S inv = field_.one() / c_.back();
    std::vector<S> v = c_;
    for (auto& x : v) x = x * inv;
    return Polynomial(field_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    std::vector<S> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(field_, std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, {});
    std::vector<S> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator*(const S& s, const Polynomial& a) { return Polynomial::constant(a.field_, s) * a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// (quotient, remainder)
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<S> r = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial(field_, {}), *this};
    std::vector<S> q(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
    const S inv = field_.one() / d.leading();
    for (int k = degree(); k >= dd; --k) {
      const S coef = r[static_cast<std::size_t>(k)] * inv;
      q[static_cast<std::size_t>(k - dd)] = coef;
      if (gradedalg::is_zero(coef)) continue;
      for (int j = 0; j <= dd; ++j)
        r[static_cast<std::size_t>(k - dd + j)] = r[static_cast<std::size_t>(k - dd + j)] - coef * d.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
  }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = constant(field_, field_.one());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      base = base * base;
      k >>= 1U;
    }
    return result;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_, {});
    std::vector<S> v(c_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * field_.from_int(static_cast<long long>(i));
    return Polynomial(field_, std::move(v));
  }

  S evaluate(const S& x) const {
    S acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const S& c = c_[static_cast<std::size_t>(k)];
      if (gradedalg::is_zero(c)) continue;
      std::string cs = c.to_string();
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << cs;
        continue;
      }
      if (cs != "1") os << cs;
      os << var;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && gradedalg::is_zero(c_.back())) c_.pop_back();
  }

  Field<S> field_{};
  std::vector<S> c_;
};

template <class S>
Polynomial<S> gcd(Polynomial<S> a, Polynomial<S> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, u, v) with u a + v b = g = gcd(a, b) monic.
template <class S>
std::tuple<Polynomial<S>, Polynomial<S>, Polynomial<S>> extended_gcd(const Polynomial<S>& a, const Polynomial<S>& b) {
  const auto& f = a.field();
  Polynomial<S> r0 = a, r1 = b;
  Polynomial<S> s0 = Polynomial<S>::constant(f, f.one()), s1(f, {});
  Polynomial<S> t0(f, {}), t1 = Polynomial<S>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const S inv = f.one() / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// base^k mod m.
template <class S>
Polynomial<S> powmod(Polynomial<S> base, Integer k, const Polynomial<S>& m) {
  const auto& f = m.field();
  Polynomial<S> result = Polynomial<S>::constant(f, f.one()) % m;
  base = base % m;
  while (k.sign() > 0) {
    if ((k % Integer(2)).sign() != 0) result = (result * base) % m;
    base = (base * base) % m;
    k = k / Integer(2);
  }
  return result;
}

/// Roots in the base field (with multiplicity ignored).
std::vector<Rational> rational_roots(const Polynomial<Rational>& p);
std::vector<Fp> prime_field_roots(const Polynomial<Fp>& p);

/// Irreducibility over the base field.  Over GF(p) this is Rabin's test and
/// always decides; over Q only degree <= 3 is decided (no rational root),
/// larger degrees return nullopt.
std::optional<bool> is_irreducible(const Polynomial<Fp>& p);
std::optional<bool> is_irreducible(const Polynomial<Rational>& p);

inline std::vector<Rational> roots_in_field(const Polynomial<Rational>& p) { return rational_roots(p); }
inline std::vector<Fp> roots_in_field(const Polynomial<Fp>& p) { return prime_field_roots(p); }

}  // namespace gradedalg
