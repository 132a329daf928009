#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polygeo/exact.hpp"

namespace polygeo {

/// A set of values from one quadratic field rewritten over a shared
/// denominator D as (P + Q*sqrt(d)) / D with 64-bit P and Q.
///
/// Comparisons first consult a double approximation and only fall back to
/// integer arithmetic (128-bit, then arbitrary precision) when the double
/// difference is within a certified margin of zero. Results are exact.
class PackedField {
 public:
  /// Rational offset u / v used for comparisons of the form x_j vs x_i + u/v.
  struct Shift {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double approx = 0.0;
  };

  /// nullopt when the shared denominator or any numerator overflows 64 bits.
  static std::optional<PackedField> pack(std::span<const Quad> values);
  static std::optional<Shift> make_shift(const Rational& r);

  std::size_t size() const noexcept { return approx_.size(); }
  double approx(std::size_t i) const { return approx_[i]; }

  /// sign(x_j - x_i - s)
  int compare_shifted(std::size_t j, std::size_t i, const Shift& s) const;
  /// sign(x_j - s)
  int compare_constant(std::size_t j, const Shift& s) const;

 private:
  int exact_sign(__int128 dp, __int128 dq, const Shift& s) const;

  std::int64_t radicand_ = 2;
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> q_;
  std::vector<double> approx_;
};

}  // namespace polygeo
