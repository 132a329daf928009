#include "polygeo/family.hpp"

#include <cmath>

namespace polygeo::uniformity {

namespace {

constexpr std::int64_t kScaleGrid = 64;

Rational on_grid(double x) { return Rational(static_cast<std::int64_t>(std::llround(x * kScaleGrid)), kScaleGrid); }

}  // namespace

std::vector<Rational> dyadic_ladder(const Rational& scale, std::int64_t n) {
  std::vector<Rational> out;
  for (Rational len = scale / n; len <= 1; len *= 2) out.push_back(len);
  return out;
}

bool ladder_passes(const EdgeFamily& family, const Rational& scale, const Rational& eps) {
  const Rational b = family.squares();
  for (const Rational& len : dyadic_ladder(scale, family.n)) {
    const Rational expected_times_b = len * family.n;
    const Rational upper = (1 + eps) * expected_times_b;
    const Rational lower = (1 - eps) * expected_times_b;
    for (const EdgePoints& edge : family.edges) {
      const WindowExtremes ex = visiting_extremes(edge, len);
      if (!(ex.max * b < upper) || !(ex.min * b > lower)) return false;
    }
  }
  return true;
}

ThresholdBracket threshold_search(const EdgeFamily& family, const Rational& eps, const Rational& ratio) {
  if (family.n < 2) throw Error(ErrorCode::BadArgs, "threshold search needs n >= 2");
  if (eps <= 0 || eps >= 1) throw Error(ErrorCode::BadArgs, "threshold search needs 0 < eps < 1");
  ThresholdBracket out;
  const auto probe = [&](const Rational& scale) {
    const bool ok = ladder_passes(family, scale, eps);
    out.probes.push_back({scale, ok});
    return ok;
  };

  Rational hi = family.n;
  if (!probe(hi)) {
    throw Error(ErrorCode::NoThresholdBelowN,
                "uniformity check fails even for the full edge (scale n = " + std::to_string(family.n) + ")");
  }
  Rational lo = 1;
  if (probe(lo)) {
    out.lower = out.upper = lo;
    return out;
  }
  while (hi > ratio * lo) {
    Rational mid = on_grid(std::sqrt(lo.convert_to<double>() * hi.convert_to<double>()));
    if (mid <= lo || mid >= hi) mid = on_grid((lo.convert_to<double>() + hi.convert_to<double>()) / 2);
    if (mid <= lo || mid >= hi) break;
    if (probe(mid)) hi = mid; else lo = mid;
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

}  // namespace polygeo::uniformity
