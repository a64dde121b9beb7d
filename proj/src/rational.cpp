#include "fbridge/rational.hpp"

#include <utility>

#include "fbridge/errors.hpp"

namespace fbridge {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0) {
    throw DomainError("Rational: cannot parse '" + std::string(text) + "'");
  }
  return Rational(std::move(v));
}

double Rational::to_double() const { return value_.get_d(); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + it->to_double();
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    out.push_back(coefficients_[k] * Rational(static_cast<long>(k)));
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  std::vector<Rational> out{Rational(0)};
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    out.push_back(coefficients_[k] / Rational(static_cast<long>(k + 1)));
  }
  return RationalPolynomial(std::move(out));
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace fbridge
