#include "foxh/number.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "foxh/error.hpp"

namespace foxh {

namespace {

using boost::multiprecision::cpp_int;

bool integral_double(double v) {
  return std::isfinite(v) && v == std::trunc(v) && std::fabs(v) < 9007199254740992.0;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::SchemaViolation, "not a decimal number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_number(text);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      bad_number(text);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  cpp_int mantissa(digits);
  if (negative) mantissa = -mantissa;
  cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
}

}  // namespace

Number::Number(double v) : value_(v) {
  if (integral_double(v)) exact_ = Rational(static_cast<long long>(v));
}

Number::Number(const Rational& r) : value_(to_double(r)), exact_(r) {}

Number Number::inexact(double v) {
  Number x;
  x.value_ = v;
  x.exact_.reset();
  return x;
}

Number Number::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) bad_number(text);
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) bad_number(text);
    r = num / den;
  } else {
    r = parse_decimal(text);
  }
  Number x(r);
  if (text.find('/') == std::string_view::npos) {
    // strtod rounds the decimal correctly, the rational conversion may not.
    x.value_ = std::strtod(std::string(text).c_str(), nullptr);
  }
  return x;
}

std::string Number::to_string() const {
  if (!exact_) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value_);
    return std::string(buf, res.ptr);
  }
  const Rational& r = *exact_;
  cpp_int num = boost::multiprecision::numerator(r);
  cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  cpp_int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();
  unsigned places = std::max(twos, fives);
  cpp_int scaled = num * boost::multiprecision::pow(cpp_int(10), places) / den;
  bool negative = scaled < 0;
  std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

Number Number::operator-() const {
  Number x = *this;
  x.value_ = -value_;
  if (exact_) x.exact_ = -*exact_;
  return x;
}

Number operator+(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_) return Number(*x.exact_ + *y.exact_);
  return Number::inexact(x.value_ + y.value_);
}

Number operator-(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_) return Number(*x.exact_ - *y.exact_);
  return Number::inexact(x.value_ - y.value_);
}

Number operator*(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_) return Number(*x.exact_ * *y.exact_);
  return Number::inexact(x.value_ * y.value_);
}

Number operator/(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_ && *y.exact_ != 0) return Number(*x.exact_ / *y.exact_);
  return Number::inexact(x.value_ / y.value_);
}

bool operator==(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_) return *x.exact_ == *y.exact_;
  return x.value_ == y.value_;
}

std::partial_ordering operator<=>(const Number& x, const Number& y) {
  if (x.exact_ && y.exact_) {
    if (*x.exact_ < *y.exact_) return std::partial_ordering::less;
    if (*x.exact_ > *y.exact_) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return x.value_ <=> y.value_;
}

int Number::sign() const {
  if (exact_) return exact_->sign();
  return (value_ > 0) - (value_ < 0);
}

Number min(const Number& x, const Number& y) { return y < x ? y : x; }
Number max(const Number& x, const Number& y) { return x < y ? y : x; }

double Extended::value() const {
  switch (kind_) {
    case Kind::NegInf: return -HUGE_VAL;
    case Kind::PosInf: return HUGE_VAL;
    default: return value_.value();
  }
}

std::string Extended::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return value_.to_string();
  }
}

Extended Extended::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return Extended(-value_);
  }
}

bool operator==(const Extended& x, const Extended& y) {
  if (x.kind_ != y.kind_) return false;
  return !x.finite() || x.value_ == y.value_;
}

std::partial_ordering operator<=>(const Extended& x, const Extended& y) {
  if (x.finite() && y.finite()) return x.value_ <=> y.value_;
  return static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_);
}

std::string MellinStrip::to_string() const {
  return "(" + lo.to_string() + ", " + hi.to_string() + ")";
}

}  // namespace foxh
