#pragma once

#include <cstdint>
#include <vector>

#include "polygeo/exact.hpp"
#include "polygeo/window.hpp"

namespace polygeo::uniformity {

/// First-n crossing heights split by vertical edge. For an irrational
/// rotation this is a single edge.
struct EdgeFamily {
  std::int64_t n = 0;
  std::vector<EdgePoints> edges;

  int squares() const noexcept { return static_cast<int>(edges.size()); }
};

struct ThresholdProbe {
  Rational scale;
  bool passed = false;
};

/// lower fails the ladder check and upper passes, except when the check
/// already passes at scale 1, where lower = upper = 1.
struct ThresholdBracket {
  Rational lower;
  Rational upper;
  std::vector<ThresholdProbe> probes;
};

/// Lengths 2^j * scale / n for j = 0, 1, ... while they stay <= 1.
std::vector<Rational> dyadic_ladder(const Rational& scale, std::int64_t n);

/// True when every window of every ladder length L on every edge has
///   |V - nL/b| < eps * nL/b.
bool ladder_passes(const EdgeFamily& family, const Rational& scale, const Rational& eps);

/// Geometric bisection of the scale over [1, n] until upper / lower <= ratio
/// or no grid point (multiples of 1/64) separates them. Throws
/// NoThresholdBelowN when the check fails even at scale n.
ThresholdBracket threshold_search(const EdgeFamily& family, const Rational& eps,
                                  const Rational& ratio = Rational(21, 20));

}  // namespace polygeo::uniformity
