#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "polygeo/error.hpp"

namespace polygeo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element (a + b*sqrt(d)) / c of a real quadratic field.
///
/// Values are kept canonical: c > 0, gcd(a, b, c) = 1, d square-free and
/// at least 2.  A rational value has b = 0 and d normalized to 2, so two
/// values are equal exactly when their canonical coefficients agree.
///
/// Arithmetic between two irrational values requires the same radicand;
/// mixing radicands raises ErrorCode::MixedRadicand.  A rational operand
/// adopts the radicand of the other side.
class QuadraticIrrational {
 public:
  QuadraticIrrational() : a_(0), b_(0), c_(1), d_(2) {}
  QuadraticIrrational(Integer a, Integer b, Integer c, std::int64_t d);
  QuadraticIrrational(const Rational& r);  // NOLINT(google-explicit-constructor)
  QuadraticIrrational(long long v) : QuadraticIrrational(Rational(v)) {}  // NOLINT

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  /// a / c
  Rational rational_part() const;
  /// b / c
  Rational radical_coefficient() const;
  /// Only valid when is_rational().
  Rational to_rational() const;

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  QuadraticIrrational frac() const;
  QuadraticIrrational conjugate() const;
  QuadraticIrrational inverse() const;

  /// Nearest-ish double, accurate to about 2^-64 absolute before rounding.
  double to_double() const;
  /// Decimal expansion truncated toward zero; prefixed with '~' when the
  /// truncation dropped a nonzero tail.
  std::string to_decimal(int digits = 40) const;
  /// `quad:a,b,c,d`, or `p/q` / `p` for rationals.
  std::string to_string() const;

  QuadraticIrrational operator-() const;
  QuadraticIrrational& operator+=(const QuadraticIrrational& o);
  QuadraticIrrational& operator-=(const QuadraticIrrational& o);
  QuadraticIrrational& operator*=(const QuadraticIrrational& o);
  QuadraticIrrational& operator/=(const QuadraticIrrational& o);

  friend QuadraticIrrational operator+(QuadraticIrrational x, const QuadraticIrrational& y) { return x += y; }
  friend QuadraticIrrational operator-(QuadraticIrrational x, const QuadraticIrrational& y) { return x -= y; }
  friend QuadraticIrrational operator*(QuadraticIrrational x, const QuadraticIrrational& y) { return x *= y; }
  friend QuadraticIrrational operator/(QuadraticIrrational x, const QuadraticIrrational& y) { return x /= y; }

  friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y);

 private:
  struct Raw {};
  QuadraticIrrational(Raw, Integer a, Integer b, Integer c, std::int64_t d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {}
  void canonicalize();

  Integer a_;
  Integer b_;
  Integer c_;
  std::int64_t d_;
};

using Quad = QuadraticIrrational;

std::strong_ordering compare(const Quad& x, const Quad& y);
inline Integer floor(const Quad& x) { return x.floor(); }
inline Quad frac(const Quad& x) { return x.frac(); }
Quad abs(const Quad& x);

/// Sign of a + b*sqrt(d) using integer arithmetic only.
int surd_sign(const Integer& a, const Integer& b, std::int64_t d);

/// floor(t / c) for c > 0.
Integer floor_div(const Integer& t, const Integer& c);

/// Accepts `p/q`, integers, and finite decimals such as `-0.125`.
Rational parse_rational(std::string_view text);
/// Accepts `phi`, `sqrt2`, `sqrt3`, `quad:a,b,c,d`, or anything
/// parse_rational accepts.
Quad parse_quadratic(std::string_view text);

std::string to_string(const Rational& r);

namespace constants {
Quad phi();
Quad sqrt2();
Quad sqrt3();
}  // namespace constants

}  // namespace polygeo
