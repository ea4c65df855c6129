#include "gradedalg/scalar.hpp"

#include <cctype>
#include <regex>

namespace gradedalg {

namespace {

bool is_integer_literal(const std::string& s) {
  static const std::regex re(R"([+-]?[0-9]+)");
  return std::regex_match(s, re);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) throw StructuralError("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (sgn(d) == 0) throw StructuralError("zero denominator in '" + text + "'");
  return Rational(mpq_class(n, d));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw StructuralError("GF(p) needs a prime p, got " + std::to_string(p));
  return {FieldKind::prime_field, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  static const std::regex re(R"(GF\(\s*([0-9]+)\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, re)) return prime(std::stoull(m[1].str()));
  throw StructuralError("unknown field '" + text + "' (expected Q or GF(p))");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

Fp Field<Fp>::parse(const std::string& text) const {
  const Rational q = Rational::parse(text);
  const auto p = static_cast<long>(p_);
  const auto reduce = [p](const Integer& z) { return (z % Integer(p)).to_int64(); };
  const Fp num(reduce(q.numerator()), p_);
  const Fp den(reduce(q.denominator()), p_);
  if (den.is_zero()) throw StructuralError("denominator of '" + text + "' vanishes in GF(" + std::to_string(p_) + ")");
  return num / den;
}

}  // namespace gradedalg
