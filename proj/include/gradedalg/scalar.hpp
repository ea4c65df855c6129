// Exact scalar types: arbitrary-precision integers and rationals (GMP),
// prime-field residues with a runtime modulus, and the field contexts that
// create them.  Everything here is exact; there is no floating point.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace gradedalg {

/// Raised for malformed or inconsistent structural input (bad group tables,
/// non-associative constants, owner mismatches, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked to work outside its stated domain.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Integer

class Integer {
 public:
  Integer() = default;
  Integer(int v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
  Integer(long v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
  Integer(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Integer(unsigned long v) : v_(v) {}            // NOLINT
  explicit Integer(mpz_class v) : v_(std::move(v)) {}
  explicit Integer(const std::string& s) : v_(s, 10) {}

  const mpz_class& get() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  /// Floor division.
  friend Integer operator/(const Integer& a, const Integer& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(q);
  }
  /// Non-negative remainder for positive modulus.
  friend Integer operator%(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(r);
  }
  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend auto operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool fits_int64() const { return v_.fits_slong_p(); }
  std::int64_t to_int64() const {
    if (!v_.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return v_.get_si();
  }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpz_class v_;
};

inline Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.get()))); }
inline Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get().get_mpz_t(), b.get().get_mpz_t());
  return Integer(g);
}
inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const Integer& z) : v_(z.get()) {}

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  const mpq_class& get() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b.v_) == 0) throw std::domain_error("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
/// Strictly positive in the ordering of Q.
inline bool is_positive(const Rational& a) { return a.sign() > 0; }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Fp: residue modulo a prime chosen at run time.
//
// A residue carries its modulus.  Values built from plain integers (as Eigen
// does for Zero()/Identity()) have modulus 0 and are bound to the modulus of
// the other operand on first use.

class Fp {
 public:
  Fp() = default;
  Fp(int v) : v_(v), p_(0) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t v, std::uint64_t p) : v_(v), p_(p) { normalize(); }

  std::uint64_t modulus() const { return p_; }
  /// Canonical representative in [0, p) (or the raw integer when unbound).
  std::int64_t value() const { return v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::uint64_t p = bind(a, b);
    return Fp(a.reduced(p) + b.reduced(p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::uint64_t p = bind(a, b);
    return Fp(a.reduced(p) - b.reduced(p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::uint64_t p = bind(a, b);
    if (p == 0) return Fp(a.v_ * b.v_, 0);
    return Fp(static_cast<std::int64_t>((static_cast<unsigned __int128>(a.reduced(p)) * b.reduced(p)) % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse_with(a.p_); }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    const std::uint64_t p = bind(a, b);
    return a.reduced(p) == b.reduced(p);
  }

  bool is_zero() const { return v_ == 0; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  static std::uint64_t bind(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw StructuralError("mixing residues of different primes");
    return a.p_ != 0 ? a.p_ : b.p_;
  }
  std::int64_t reduced(std::uint64_t p) const {
    if (p == 0 || p_ != 0) return v_;
    const auto m = static_cast<std::int64_t>(p);
    return ((v_ % m) + m) % m;
  }
  void normalize() {
    if (p_ == 0) return;
    const auto m = static_cast<std::int64_t>(p_);
    v_ = ((v_ % m) + m) % m;
  }
  Fp inverse_with(std::uint64_t hint) const {
    const std::uint64_t p = p_ != 0 ? p_ : hint;
    if (p == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("cannot invert an unbound residue");
    }
    const std::int64_t a = reduced(p);
    if (a == 0) throw std::domain_error("division by zero residue");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return Fp(t, p);
  }

  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
/// GF(p) is not ordered.
inline bool is_positive(const Fp&) { return false; }
inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Field contexts

enum class FieldKind { rationals, prime_field };

/// Which field a computation lives in.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  /// "Q" or "GF(p)".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

template <class S>
class Field;

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;
  Field() = default;
  explicit Field(const FieldSpec& spec) {
    if (spec.kind != FieldKind::rationals) throw StructuralError("expected the rational field");
  }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint64_t characteristic() const { return 0; }
  std::optional<std::uint64_t> size() const { return std::nullopt; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(v); }
  Rational from_ratio(long long num, long long den) const { return Rational(static_cast<long>(num), static_cast<long>(den)); }
  Rational parse(const std::string& text) const { return Rational::parse(text); }
  /// The i-th element of a finite field; not available over Q.
  Rational element(std::uint64_t) const { throw NotApplicable("Q is infinite"); }
  /// Small random rationals, numerators in [-4,4] and denominators in [1,3].
  template <class Rng>
  Rational random(Rng& rng) const {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    return Rational(num(rng), den(rng));
  }
  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<Fp> {
 public:
  using Scalar = Fp;
  Field() = default;
  explicit Field(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw StructuralError("GF(p) needs a prime p, got " + std::to_string(p));
    if (p >= (1ULL << 31)) throw StructuralError("prime too large for residue arithmetic");
  }
  explicit Field(const FieldSpec& spec) : Field(spec.characteristic) {
    if (spec.kind != FieldKind::prime_field) throw StructuralError("expected a prime field");
  }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint64_t characteristic() const { return p_; }
  std::optional<std::uint64_t> size() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long v) const { return Fp(v, p_); }
  Fp from_ratio(long long num, long long den) const { return from_int(num) / from_int(den); }
  Fp parse(const std::string& text) const;
  Fp element(std::uint64_t i) const { return Fp(static_cast<std::int64_t>(i % p_), p_); }
  template <class Rng>
  Fp random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
    return Fp(static_cast<std::int64_t>(d(rng)), p_);
  }
  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_ = 2;
};

/// Scalars the library computes with.
template <class S>
concept ExactScalar = requires(S a, S b, const Field<S>& f) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { f.one() } -> std::convertible_to<S>;
};

/// a^k for k >= 0 by repeated squaring.
template <class S>
S power(const Field<S>& field, S base, std::uint64_t k) {
  S result = field.one();
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

}  // namespace gradedalg

namespace Eigen {

template <>
struct NumTraits<gradedalg::Rational> : GenericNumTraits<gradedalg::Rational> {
  using Real = gradedalg::Rational;
  using NonInteger = gradedalg::Rational;
  using Literal = gradedalg::Rational;
  using Nested = gradedalg::Rational;
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

template <>
struct NumTraits<gradedalg::Integer> : GenericNumTraits<gradedalg::Integer> {
  using Real = gradedalg::Integer;
  using NonInteger = gradedalg::Rational;
  using Literal = gradedalg::Integer;
  using Nested = gradedalg::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6
  };
};

template <>
struct NumTraits<gradedalg::Fp> : GenericNumTraits<gradedalg::Fp> {
  using Real = gradedalg::Fp;
  using NonInteger = gradedalg::Fp;
  using Literal = gradedalg::Fp;
  using Nested = gradedalg::Fp;
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen
