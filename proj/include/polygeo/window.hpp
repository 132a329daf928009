#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polygeo/exact.hpp"
#include "polygeo/packed.hpp"

namespace polygeo::uniformity {

/// Smallest and largest number of points in a half-open window [a, a + L)
/// as a ranges over [0, 1 - L].
///
/// The count is piecewise constant in a, so the minimum can be attained only
/// on an open stretch just to the right of a breakpoint. min_just_after marks
/// that case: the witness is then the limit of windows [a + t, a + t + L) as
/// t decreases to zero. The maximum is always attained by a closed window.
struct WindowExtremes {
  std::int64_t min = 0;
  std::int64_t max = 0;
  Quad min_position;
  bool min_just_after = false;
  Quad max_position;
};

/// Sorted, distinct points of [0, 1) with a cached packed representation for
/// the fast kernel.
class EdgePoints {
 public:
  EdgePoints() = default;
  /// Sorts the input; throws InvariantViolation on duplicates.
  explicit EdgePoints(std::vector<Quad> points);

  std::span<const Quad> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::optional<PackedField>& packed() const noexcept { return packed_; }

  /// Number of points in [lower, upper).
  std::int64_t count_in(const Quad& lower, const Quad& upper) const;

 private:
  std::vector<Quad> values_;
  std::optional<PackedField> packed_;
};

/// OpenMP kernel. Uses packed comparisons when the points fit, exact
/// comparisons otherwise. Requires 0 < length <= 1.
WindowExtremes visiting_extremes(const EdgePoints& points, const Rational& length);
WindowExtremes visiting_extremes(std::span<const Quad> sorted, const Rational& length);

/// Serial reference: same candidate positions, but every count is a linear
/// scan with exact comparisons. O(m^2); kept for testing and benchmarks.
WindowExtremes visiting_extremes_reference(std::span<const Quad> sorted, const Rational& length);

}  // namespace polygeo::uniformity
