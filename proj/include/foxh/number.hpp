#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace foxh {

using Rational = boost::multiprecision::cpp_rational;

/// A real parameter that carries its exact rational value whenever one is
/// known. Decimal strings, integers and integral doubles are exact; any other
/// double is not. Arithmetic stays exact only while both operands are.
class Number {
 public:
  Number() : value_(0.0), exact_(Rational(0)) {}
  Number(int v) : value_(v), exact_(Rational(v)) {}
  Number(double v);
  explicit Number(const Rational& r);

  /// Parses "12", "-0.25", "1e-3", "3/7". Throws Error(SchemaViolation).
  static Number parse(std::string_view text);
  static Number inexact(double v);

  double value() const { return value_; }
  bool exact() const { return exact_.has_value(); }
  const std::optional<Rational>& rational() const { return exact_; }

  /// Exact values print as terminating decimals (or "p/q" when they do not
  /// terminate); inexact values print as the shortest round-trip double.
  std::string to_string() const;

  Number operator-() const;
  friend Number operator+(const Number& x, const Number& y);
  friend Number operator-(const Number& x, const Number& y);
  friend Number operator*(const Number& x, const Number& y);
  friend Number operator/(const Number& x, const Number& y);
  Number& operator+=(const Number& y) { return *this = *this + y; }
  Number& operator-=(const Number& y) { return *this = *this - y; }

  friend bool operator==(const Number& x, const Number& y);
  friend std::partial_ordering operator<=>(const Number& x, const Number& y);

  int sign() const;

 private:
  double value_;
  std::optional<Rational> exact_;
};

Number min(const Number& x, const Number& y);
Number max(const Number& x, const Number& y);

/// Point of the extended real line.
class Extended {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Extended(Number v) : kind_(Kind::Finite), value_(std::move(v)) {}
  static Extended neg_inf() { return Extended(Kind::NegInf); }
  static Extended pos_inf() { return Extended(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful when finite().
  const Number& number() const { return value_; }
  double value() const;
  std::string to_string() const;

  Extended operator-() const;
  friend bool operator==(const Extended& x, const Extended& y);
  friend std::partial_ordering operator<=>(const Extended& x, const Extended& y);

 private:
  explicit Extended(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Number value_;
};

/// Open interval lo < Re(s) < hi.
struct MellinStrip {
  Extended lo = Extended::neg_inf();
  Extended hi = Extended::pos_inf();

  bool empty() const { return !(lo < hi); }
  bool contains(double x) const { return lo.value() < x && x < hi.value(); }
  bool operator==(const MellinStrip&) const = default;
  std::string to_string() const;
};

}  // namespace foxh
