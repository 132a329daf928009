#include "polygeo/exact.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace polygeo {

namespace mp = boost::multiprecision;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadArgs: return "BadArgs";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PeriodNotFound: return "PeriodNotFound";
    case ErrorCode::CornerHit: return "CornerHit";
    case ErrorCode::NoThresholdBelowN: return "NoThresholdBelowN";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
  }
  return "Unknown";
}

namespace {

// Splits d = s^2 * r with r square-free.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t d) {
  std::int64_t s = 1;
  std::int64_t r = d;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      s *= p;
    }
  }
  return {s, r};
}

std::int64_t common_radicand(const Quad& x, const Quad& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) {
    throw Error(ErrorCode::MixedRadicand,
                "operands live in different quadratic fields: sqrt(" + std::to_string(x.d()) +
                    ") vs sqrt(" + std::to_string(y.d()) + ")");
  }
  return x.d();
}

Integer pow10(int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Integer floor_div(const Integer& t, const Integer& c) {
  Integer q = t / c;  // truncates toward zero
  if (t % c != 0 && t < 0) q -= 1;
  return q;
}

int surd_sign(const Integer& a, const Integer& b, std::int64_t d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = a * a;
  const Integer rhs = b * b * d;
  if (sa > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

QuadraticIrrational::QuadraticIrrational(Integer a, Integer b, Integer c, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
  if (c_ == 0) throw Error(ErrorCode::DivisionByZero, "quadratic irrational with zero denominator");
  if (d_ <= 0) throw Error(ErrorCode::InvariantViolation, "radicand must be positive");
  auto [s, r] = split_square(d_);
  b_ *= s;
  if (r == 1) {
    a_ += b_;
    b_ = 0;
    r = 2;
  }
  d_ = r;
  canonicalize();
}

QuadraticIrrational::QuadraticIrrational(const Rational& r)
    : a_(mp::numerator(r)), b_(0), c_(mp::denominator(r)), d_(2) {}

void QuadraticIrrational::canonicalize() {
  if (c_ < 0) {
    c_ = -c_;
    a_ = -a_;
    b_ = -b_;
  }
  Integer g = mp::gcd(a_, b_);
  if (g != 1) {
    g = mp::gcd(g, c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }
  if (b_ == 0) d_ = 2;
}

Rational QuadraticIrrational::rational_part() const { return Rational(a_, c_); }
Rational QuadraticIrrational::radical_coefficient() const { return Rational(b_, c_); }

Rational QuadraticIrrational::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvariantViolation, "value is irrational: " + to_string());
  return Rational(a_, c_);
}

int QuadraticIrrational::sign() const { return surd_sign(a_, b_, d_); }

Integer QuadraticIrrational::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  // b*sqrt(d) is irrational, so it lies strictly between f and f + 1.
  Integer f = mp::sqrt(Integer(b_ * b_ * d_));
  if (b_ < 0) f = -f - 1;
  return floor_div(a_ + f, c_);
}

Integer QuadraticIrrational::ceil() const {
  Integer f = floor();
  if (is_rational() && a_ % c_ == 0) return f;
  return f + 1;
}

QuadraticIrrational QuadraticIrrational::frac() const {
  Integer f = floor();
  if (f == 0) return *this;
  return QuadraticIrrational(Raw{}, a_ - f * c_, b_, c_, d_);
}

QuadraticIrrational QuadraticIrrational::conjugate() const {
  return QuadraticIrrational(Raw{}, a_, -b_, c_, d_);
}

QuadraticIrrational QuadraticIrrational::inverse() const {
  if (a_ == 0 && b_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
  QuadraticIrrational r(Raw{}, c_ * a_, -c_ * b_, a_ * a_ - b_ * b_ * d_, d_);
  r.canonicalize();
  return r;
}

double QuadraticIrrational::to_double() const {
  constexpr int kBits = 64;
  const Integer scale = Integer(1) << kBits;
  QuadraticIrrational scaled(Raw{}, a_ * scale, b_ * scale, c_, d_);
  const Integer f = scaled.floor();
  return static_cast<double>(f.convert_to<long double>() / std::ldexp(1.0L, kBits));
}

std::string QuadraticIrrational::to_decimal(int digits) const {
  const bool negative = sign() < 0;
  const QuadraticIrrational mag = negative ? -*this : *this;
  const Integer scale = pow10(digits);
  QuadraticIrrational scaled(Raw{}, mag.a_ * scale, mag.b_ * scale, mag.c_, mag.d_);
  const Integer f = scaled.floor();
  const bool exact = scaled.is_rational() && (scaled.a_ % scaled.c_ == 0);
  const Integer whole = f / scale;
  std::string tail = Integer(f % scale).str();
  if (static_cast<int>(tail.size()) < digits) tail.insert(0, digits - tail.size(), '0');
  std::string out;
  if (!exact) out += '~';
  if (negative) out += '-';
  out += whole.str();
  if (digits > 0) out += "." + tail;
  return out;
}

std::string QuadraticIrrational::to_string() const {
  if (is_rational()) return polygeo::to_string(to_rational());
  std::ostringstream os;
  os << "quad:" << a_ << ',' << b_ << ',' << c_ << ',' << d_;
  return os.str();
}

QuadraticIrrational QuadraticIrrational::operator-() const {
  return QuadraticIrrational(Raw{}, -a_, -b_, c_, d_);
}

QuadraticIrrational& QuadraticIrrational::operator+=(const QuadraticIrrational& o) {
  const std::int64_t d = common_radicand(*this, o);
  if (c_ == o.c_) {
    a_ += o.a_;
    b_ += o.b_;
  } else {
    a_ = a_ * o.c_ + o.a_ * c_;
    b_ = b_ * o.c_ + o.b_ * c_;
    c_ *= o.c_;
  }
  d_ = d;
  canonicalize();
  return *this;
}

QuadraticIrrational& QuadraticIrrational::operator-=(const QuadraticIrrational& o) {
  return *this += -o;
}

QuadraticIrrational& QuadraticIrrational::operator*=(const QuadraticIrrational& o) {
  const std::int64_t d = common_radicand(*this, o);
  Integer a = a_ * o.a_ + b_ * o.b_ * d;
  Integer b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ *= o.c_;
  d_ = d;
  canonicalize();
  return *this;
}

QuadraticIrrational& QuadraticIrrational::operator/=(const QuadraticIrrational& o) {
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  if (x == y) return std::strong_ordering::equal;
  const std::int64_t d = common_radicand(x, y);
  // sign of x - y without building a canonical difference
  const Integer a = x.a() * y.c() - y.a() * x.c();
  const Integer b = x.b() * y.c() - y.b() * x.c();
  const int s = surd_sign(a, b, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Quad& x, const Quad& y) { return x <=> y; }

Quad abs(const Quad& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << mp::numerator(r);
  if (mp::denominator(r) != 1) os << '/' << mp::denominator(r);
  return os.str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::BadArgs, "expected an integer, got '" + std::string(text) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::BadArgs, "expected an integer, got '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as octal
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  Integer v{std::string(digits)};
  return (!text.empty() && text.front() == '-') ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::BadArgs, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::BadArgs, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view tail = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    const Integer w = parse_integer(whole);
    const Integer t = tail.empty() ? Integer(0) : parse_integer(tail);
    if (!tail.empty() && (tail.front() == '-' || tail.front() == '+')) {
      throw Error(ErrorCode::BadArgs, "malformed decimal '" + std::string(text) + "'");
    }
    const Integer scale = pow10(static_cast<int>(tail.size()));
    Integer num = mp::abs(w) * scale + t;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(text));
}

namespace constants {
Quad phi() { return Quad(1, 1, 2, 5); }
Quad sqrt2() { return Quad(0, 1, 1, 2); }
Quad sqrt3() { return Quad(0, 1, 1, 3); }
}  // namespace constants

Quad parse_quadratic(std::string_view text) {
  if (text == "phi") return constants::phi();
  if (text == "sqrt2") return constants::sqrt2();
  if (text == "sqrt3") return constants::sqrt3();
  if (text.starts_with("quad:")) {
    std::string_view rest = text.substr(5);
    Integer parts[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((i < 3) == (comma == std::string_view::npos)) {
        throw Error(ErrorCode::BadArgs, "expected quad:a,b,c,d, got '" + std::string(text) + "'");
      }
      parts[i] = parse_integer(rest.substr(0, comma));
      rest = i < 3 ? rest.substr(comma + 1) : std::string_view{};
    }
    if (parts[3] <= 0 || parts[3] > INT64_MAX) throw Error(ErrorCode::BadArgs, "radicand must be a positive 64-bit integer");
    return Quad(parts[0], parts[1], parts[2], parts[3].convert_to<std::int64_t>());
  }
  return Quad(parse_rational(text));
}

}  // namespace polygeo
