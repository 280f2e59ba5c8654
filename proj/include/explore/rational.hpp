#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace explore {

// Exact rational arithmetic for edge weights and tour costs. Expression
// templates are off so that `auto` always holds a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "num/den", "num" (optionally signed). Throws ParseError on bad input
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Always "num/den", reduced, sign on the numerator ("3/1", "-1/2").
std::string to_exact_string(const Rational& value);

/// "num/den" or just "num" when the denominator is 1.
std::string to_compact_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& value, int significant_digits = 6);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

Integer ceil(const Rational& value);

/// A number of the form a + b*sqrt(r) with rational a, b and integer r >= 0.
/// Enough to represent the blocking parameter 1/sqrt(2) - 1 and the bounds
/// derived from it while keeping every comparison exact.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational rational_part);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(int value) : QuadraticNumber(Rational(value)) {}  // NOLINT
  QuadraticNumber(Rational rational_part, Rational surd_coefficient, std::uint32_t radicand);

  static QuadraticNumber sqrt(std::uint32_t radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  std::uint32_t radicand() const { return r_; }

  bool is_rational() const { return b_ == 0 || r_ == 0; }
  /// Throws std::domain_error if the value is irrational.
  Rational as_rational() const;

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  double to_double() const;

  QuadraticNumber operator-() const;
  QuadraticNumber inverse() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() == 0;
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return y <= x; }

  /// Compact text: "-1/2", "-1+1/2*sqrt(2)", "sqrt(2)".
  std::string to_string() const;
  /// Accepts the output of to_string() plus "1/sqrt(2)-1" style inverse roots.
  static QuadraticNumber parse(std::string_view text);

 private:
  void normalize();
  static std::uint32_t common_radicand(const QuadraticNumber& x, const QuadraticNumber& y);

  Rational a_{0};
  Rational b_{0};
  std::uint32_t r_ = 0;
};

/// Rounded decimal rendering of an exact quadratic value.
std::string to_decimal_string(const QuadraticNumber& value, int significant_digits = 6);

}  // namespace explore
