#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rbmod/rational.hpp"

namespace rbmod {

class QMatrix;

/// Dense univariate polynomial over Q. coefficients()[i] is the coefficient
/// of x^i; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// x - root
  static UniPoly linear(const Rational& root);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(unsigned e) const;
  Rational eval(const Rational& x) const;

  std::string to_string(char var = 'x') const;

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

/// Horner evaluation f(m). Throws ShapeError if m is not square.
QMatrix poly_eval_matrix(const UniPoly& f, const QMatrix& m);

}  // namespace rbmod
