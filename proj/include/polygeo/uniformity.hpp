#pragma once

#include <cstdint>
#include <vector>

#include "polygeo/exact.hpp"
#include "polygeo/family.hpp"
#include "polygeo/flow.hpp"
#include "polygeo/window.hpp"

namespace polygeo::uniformity {

/// Windows of length C/n on the vertical edges; requires 1 < C < n.
struct IntervalFamilySpec {
  std::int64_t n = 0;
  Rational scale;

  IntervalFamilySpec(std::int64_t n, Rational scale);
  Rational length() const { return scale / n; }
};

struct UniformityReport {
  IntervalFamilySpec spec;
  int squares = 1;
  std::int64_t min_visit = 0;
  int min_edge = 0;
  Quad min_position{};
  bool min_just_after = false;
  std::int64_t max_visit = 0;
  int max_edge = 0;
  Quad max_position{};
  Rational expected{};  // n * (C/n) / b = C / b
  bool sandwich = false;  // min <= C/b <= max

  /// min / max; 1 when both are zero.
  Rational ratio() const;
};

enum class Case { A, B };

/// A line segment [lower, upper) of one vertical edge.
struct EdgeInterval {
  int edge = 0;
  Quad lower;
  Quad upper;

  Quad length() const { return upper - lower; }
};

EdgeFamily edge_family(const flow::CrossingSet& crossings);

UniformityReport family_extremes(const EdgeFamily& family, const Rational& scale);
UniformityReport family_extremes(const flow::CrossingSet& crossings, const Rational& scale);

/// A when min/max >= 1 - eps. Requires 0 < eps < 1/2.
Case classify_case(const UniformityReport& report, const Rational& eps);

/// |V - nL/b| < eps nL/b over the dyadic ladder; requires 0 < eps < 1/2.
ThresholdBracket theorem1_threshold(const EdgeFamily& family, const Rational& eps);
ThresholdBracket theorem1_threshold(const flow::CrossingSet& crossings, const Rational& eps);

/// First scale start * 2^k (k >= 0, below n) classified A. Throws
/// PreconditionNotMet when every such scale is in Case B.
Rational first_case_a_scale(const EdgeFamily& family, const Rational& start, const Rational& eps);

std::int64_t visiting_number(const EdgeFamily& family, const EdgeInterval& interval);

struct Lemma3Outcome {
  bool holds = false;
  std::int64_t visits = 0;   // V(J)
  Quad lower_bound;          // (1 - eps)(|J|/|I1| - 3) V(I1)
  Quad upper_bound;          // (|J|/|I1| + 3) V(I1)
};

/// Checks the two-sided bound on V(J) in terms of the largest visiting
/// number at scale C. Needs |J| >= 3C/n; throws PreconditionNotMet when the
/// report is in Case B for eps.
Lemma3Outcome lemma3_check(const EdgeFamily& family, const UniformityReport& report, const Rational& eps,
                           const EdgeInterval& j);

struct DeviationCheck {
  bool holds = false;
  std::int64_t visits = 0;
  Quad expected;   // n|J|/b
  Quad deviation;  // |V - n|J|/b|
  Quad bound;
};

/// |V(J) - n|J|/b| <= factor * n|J|/b; with factor = 3 eps / (1 - eps) this
/// is the Case-A error bound for |J| = 3C/(eps n).
DeviationCheck deviation_check(const EdgeFamily& family, const EdgeInterval& j, const Rational& factor);

/// |I cap X_n| <= A n |I| + 1.
DeviationCheck crossing_bound_check(const EdgeFamily& family, const EdgeInterval& interval, const Integer& digit_bound);

/// `samples` random intervals of exact length `length`, uniform edge, lower
/// endpoint on the 2^-24 grid of [0, 1 - length].
std::vector<EdgeInterval> random_intervals(int edges, const Rational& length, std::int64_t samples,
                                           std::uint64_t seed);
/// Random sub-intervals with both endpoints on the 2^-24 grid.
std::vector<EdgeInterval> random_subintervals(int edges, std::int64_t samples, std::uint64_t seed);

struct SweepRow {
  Rational scale;
  std::int64_t min = 0;
  std::int64_t max = 0;
  Rational ratio;
  Case label = Case::A;
};

/// Family extremes for each scale, classified at eps.
std::vector<SweepRow> scale_sweep(const EdgeFamily& family, const std::vector<Rational>& scales, const Rational& eps);

}  // namespace polygeo::uniformity
