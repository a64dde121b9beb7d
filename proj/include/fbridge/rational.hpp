#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fbridge {

using BigInt = mpz_class;

// Exact fraction with canonical form: gcd(|num|, den) = 1 and den >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  // Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const;
  std::string str() const { return value_.get_str(); }

  Rational pow(unsigned exponent) const;
  Rational abs() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

// Dense polynomial over the rationals; coefficients()[k] multiplies x^k.
// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational coefficient(int power) const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  RationalPolynomial derivative() const;
  // Antiderivative with zero constant term.
  RationalPolynomial antiderivative() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace fbridge
