#include "explore/rational.hpp"

#include "explore/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace explore {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("malformed number '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)));
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Integer numerator_of(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

Integer denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

std::string to_exact_string(const Rational& value) {
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

std::string to_compact_string(const Rational& value) {
  if (denominator_of(value) == 1) return numerator_of(value).str();
  return to_exact_string(value);
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value.convert_to<double>());
  return buf;
}

std::string to_decimal_string(const QuadraticNumber& value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value.to_double());
  return buf;
}

Integer ceil(const Rational& value) {
  Integer num = numerator_of(value);
  Integer den = denominator_of(value);
  Integer q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return q;
}

QuadraticNumber::QuadraticNumber(Rational rational_part) : a_(std::move(rational_part)) {}

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational surd_coefficient,
                                 std::uint32_t radicand)
    : a_(std::move(rational_part)), b_(std::move(surd_coefficient)), r_(radicand) {
  normalize();
}

QuadraticNumber QuadraticNumber::sqrt(std::uint32_t radicand) {
  return QuadraticNumber(Rational(0), Rational(1), radicand);
}

void QuadraticNumber::normalize() {
  if (r_ == 0 || b_ == 0) {
    b_ = 0;
    r_ = 0;
    return;
  }
  // Pull square factors out of the radicand so that equal values share it.
  for (std::uint32_t f = 2; f * f <= r_; ++f) {
    while (r_ % (f * f) == 0) {
      r_ /= f * f;
      b_ *= f;
    }
  }
  if (r_ == 1) {
    a_ += b_;
    b_ = 0;
    r_ = 0;
  }
}

std::uint32_t QuadraticNumber::common_radicand(const QuadraticNumber& x,
                                               const QuadraticNumber& y) {
  if (x.is_rational()) return y.r_;
  if (y.is_rational()) return x.r_;
  if (x.r_ != y.r_) {
    throw std::domain_error("quadratic numbers with different radicands");
  }
  return x.r_;
}

Rational QuadraticNumber::as_rational() const {
  if (!is_rational()) throw std::domain_error("value " + to_string() + " is irrational");
  return a_;
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = is_rational() ? 0 : b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 r.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * r_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(r_));
}

QuadraticNumber QuadraticNumber::operator-() const { return {-a_, -b_, r_}; }

QuadraticNumber QuadraticNumber::inverse() const {
  if (sign() == 0) throw std::domain_error("inverse of zero");
  if (is_rational()) return QuadraticNumber(Rational(1) / a_);
  const Rational norm = a_ * a_ - b_ * b_ * r_;
  return {a_ / norm, -b_ / norm, r_};
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  const auto r = QuadraticNumber::common_radicand(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, r};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const auto r = QuadraticNumber::common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x * y.inverse();
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return to_compact_string(a_);
  std::string out;
  if (a_ != 0) out = to_compact_string(a_);
  Rational coef = b_;
  if (coef < 0) {
    out += "-";
    coef = -coef;
  } else if (!out.empty()) {
    out += "+";
  }
  if (coef != 1) out += to_compact_string(coef) + "*";
  out += "sqrt(" + std::to_string(r_) + ")";
  return out;
}

namespace {

// One additive term: "<rat>", "sqrt(r)", "<rat>*sqrt(r)", "<rat>/sqrt(r)".
QuadraticNumber parse_term(std::string_view term, std::string_view whole) {
  const auto root = term.find("sqrt(");
  if (root == std::string_view::npos) return QuadraticNumber(parse_rational(term));
  const auto close = term.find(')', root);
  if (close == std::string_view::npos || close + 1 != term.size()) {
    throw ParseError("malformed surd '" + std::string(whole) + "'");
  }
  const auto radicand_text = term.substr(root + 5, close - root - 5);
  const Integer radicand = parse_integer(radicand_text, whole);
  if (radicand < 0 || radicand > 1000000) {
    throw ParseError("radicand out of range in '" + std::string(whole) + "'");
  }
  const auto r = radicand.convert_to<std::uint32_t>();
  std::string_view prefix = term.substr(0, root);
  if (prefix.empty() || prefix == "+") return QuadraticNumber::sqrt(r);
  if (prefix == "-") return -QuadraticNumber::sqrt(r);
  const char op = prefix.back();
  prefix.remove_suffix(1);
  const Rational coef = parse_rational(prefix);
  if (op == '*') return QuadraticNumber(0, coef, r);
  if (op == '/') {
    // c / sqrt(r) = (c / r) sqrt(r)
    if (r == 0) throw ParseError("division by sqrt(0) in '" + std::string(whole) + "'");
    return QuadraticNumber(0, coef / r, r);
  }
  throw ParseError("malformed surd '" + std::string(whole) + "'");
}

}  // namespace

QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  QuadraticNumber total;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    const bool split = i == text.size() ||
                       ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/' &&
                        text[i - 1] != '*' && text[i - 1] != '(');
    if (!split) continue;
    total = total + parse_term(text.substr(begin, i - begin), text);
    begin = i;
  }
  return total;
}

}  // namespace explore
