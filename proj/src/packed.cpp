#include "polygeo/packed.hpp"

#include <cmath>

namespace polygeo {

namespace mp = boost::multiprecision;

namespace {

constexpr std::int64_t kInt64Max = INT64_MAX;

bool fits_int64(const Integer& v) { return v <= kInt64Max && v >= -kInt64Max; }

Integer to_integer(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer r = static_cast<std::uint64_t>(mag >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(mag);
  return negative ? Integer(-r) : r;
}

// Magnitudes below 2^62 keep x^2 and y^2 * d inside unsigned 128 bits for
// radicands below 16.
constexpr __int128 kSquareSafe = static_cast<__int128>(1) << 62;

}  // namespace

std::optional<PackedField> PackedField::pack(std::span<const Quad> values) {
  PackedField out;
  Integer den = 1;
  std::int64_t radicand = 2;
  for (const Quad& v : values) {
    if (!v.is_rational()) {
      if (radicand != 2 && v.d() != radicand) throw Error(ErrorCode::MixedRadicand, "packed values span two fields");
      radicand = v.d();
    }
    den = mp::lcm(den, v.c());
    if (!fits_int64(den)) return std::nullopt;
  }
  out.radicand_ = radicand;
  out.denominator_ = den.convert_to<std::int64_t>();
  out.p_.reserve(values.size());
  out.q_.reserve(values.size());
  out.approx_.reserve(values.size());
  for (const Quad& v : values) {
    const Integer scale = den / v.c();
    const Integer p = v.a() * scale;
    const Integer q = v.b() * scale;
    if (!fits_int64(p) || !fits_int64(q)) return std::nullopt;
    out.p_.push_back(p.convert_to<std::int64_t>());
    out.q_.push_back(q.convert_to<std::int64_t>());
    out.approx_.push_back(v.to_double());
  }
  return out;
}

std::optional<PackedField::Shift> PackedField::make_shift(const Rational& r) {
  const Integer& u = mp::numerator(r);
  const Integer& v = mp::denominator(r);
  if (!fits_int64(u) || !fits_int64(v)) return std::nullopt;
  return Shift{u.convert_to<std::int64_t>(), v.convert_to<std::int64_t>(), r.convert_to<double>()};
}

int PackedField::exact_sign(__int128 dp, __int128 dq, const Shift& s) const {
  // sign(v*dp - u*D + v*dq*sqrt(d)); the common factor 1/(v*D) is positive.
  __int128 x = 0;
  __int128 y = 0;
  __int128 ud = 0;
  bool overflow = __builtin_mul_overflow(static_cast<__int128>(s.den), dp, &x);
  overflow |= __builtin_mul_overflow(static_cast<__int128>(s.num), static_cast<__int128>(denominator_), &ud);
  overflow |= __builtin_sub_overflow(x, ud, &x);
  overflow |= __builtin_mul_overflow(static_cast<__int128>(s.den), dq, &y);
  const bool small = !overflow && x < kSquareSafe && x > -kSquareSafe && y < kSquareSafe && y > -kSquareSafe &&
                     radicand_ < 16;
  if (small) {
    const int sx = (x > 0) - (x < 0);
    const int sy = (y > 0) - (y < 0);
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sy;
    const unsigned __int128 ax = static_cast<unsigned __int128>(x < 0 ? -x : x);
    const unsigned __int128 ay = static_cast<unsigned __int128>(y < 0 ? -y : y);
    const unsigned __int128 lhs = ax * ax;
    const unsigned __int128 rhs = ay * ay * static_cast<unsigned __int128>(radicand_);
    if (sx > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
  }
  const Integer big_x = Integer(s.den) * to_integer(dp) - Integer(s.num) * Integer(denominator_);
  const Integer big_y = Integer(s.den) * to_integer(dq);
  return surd_sign(big_x, big_y, radicand_);
}

int PackedField::compare_shifted(std::size_t j, std::size_t i, const Shift& s) const {
  const double diff = approx_[j] - approx_[i] - s.approx;
  const double margin = 1e-9 * (1.0 + std::fabs(approx_[j]) + std::fabs(approx_[i]) + std::fabs(s.approx));
  if (diff > margin) return 1;
  if (diff < -margin) return -1;
  return exact_sign(static_cast<__int128>(p_[j]) - p_[i], static_cast<__int128>(q_[j]) - q_[i], s);
}

int PackedField::compare_constant(std::size_t j, const Shift& s) const {
  const double diff = approx_[j] - s.approx;
  const double margin = 1e-9 * (1.0 + std::fabs(approx_[j]) + std::fabs(s.approx));
  if (diff > margin) return 1;
  if (diff < -margin) return -1;
  return exact_sign(p_[j], q_[j], s);
}

}  // namespace polygeo
