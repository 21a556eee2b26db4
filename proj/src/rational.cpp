#include "rbmod/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "rbmod/errors.hpp"

namespace rbmod {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
  if (i == digits_start) throw ParseError(i, "expected digits in rational '" + std::string(text) + "'");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_start = i;
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (i == den_start) throw ParseError(i, "expected denominator digits in rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw ParseError(i, "unexpected character in rational '" + std::string(text) + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError(text.find('/') + 1, "zero denominator in rational '" + std::string(text) + "'");
  return Rational(n, d);
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  try {
    return parse(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace rbmod
