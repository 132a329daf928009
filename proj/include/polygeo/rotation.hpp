#pragma once

#include <cstdint>
#include <vector>

#include "polygeo/cfrac.hpp"
#include "polygeo/exact.hpp"
#include "polygeo/family.hpp"

namespace polygeo::rotation {

/// Half-open [lower, upper) inside [0, 1].
struct UnitInterval {
  Quad lower;
  Quad upper;

  UnitInterval(Quad lo, Quad hi);
  Quad length() const { return upper - lower; }
  bool contains(const Quad& x) const { return lower <= x && x < upper; }
};

/// The points {k alpha}, k = 1..n, in generation order.
struct OrbitPrefix {
  Quad alpha;
  std::int64_t n = 0;
  std::vector<Quad> points;
};

OrbitPrefix orbit(const Quad& alpha, std::int64_t n);
/// {offset + k alpha}, k = 1..n.
std::vector<Quad> shifted_orbit(const Quad& alpha, const Quad& offset, std::int64_t n);

std::int64_t visiting_number(const OrbitPrefix& o, const UnitInterval& interval);

struct TrivialErrorWitness {
  UnitInterval interval;
  std::int64_t visits;
  Rational expected;
  Rational deviation;
};

/// Interval of length scale/n whose visiting number misses n|I| = scale by
/// at least 1/2. scale defaults to 1/2; any scale with 2*scale odd works.
TrivialErrorWitness trivial_error_witness(const OrbitPrefix& o, const Rational& scale = Rational(1, 2));

/// Threshold C for |V_n(I) - n|I|| < eps n|I| over the dyadic ladder of
/// lengths 2^j C / n <= 1. Requires 0 < eps < 1 and n >= 2.
uniformity::ThresholdBracket theorem_a_threshold(const Quad& alpha, std::int64_t n, const Rational& eps);
uniformity::ThresholdBracket theorem_a_threshold(const OrbitPrefix& o, const Rational& eps);

/// l(k) = k p_h mod q_h.
Integer residue_index(const cfrac::ContinuedFraction& cf, std::size_t h, const Integer& k);
Integer residue_index(const Quad& alpha, std::size_t h, const Integer& k);

/// True when every {k alpha}, k = 1..q_h, lies in the residue interval of
/// l(k): within 1/q_{h+1} of l(k)/q_h, taken mod 1.
bool residue_intervals_hold(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h);

/// Number of pairs (beta, k) with beta in the closed interval [lower, upper],
/// 1 <= k <= q_h and {beta + k alpha} = 0. The interval may be any real
/// interval, so every lift beta = j - k alpha is counted.
std::int64_t lemma1_count(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h, const Quad& lower,
                          const Quad& upper);
std::int64_t lemma1_count(const Quad& alpha, std::size_t h, const Quad& lower, const Quad& upper);

struct Lemma1Sweep {
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;
  std::int64_t samples = 0;
};

/// lemma1_count over `samples` random closed intervals of the given length
/// whose lower endpoints lie on the 2^-24 grid of [0, 1). Runs in parallel;
/// the result depends only on the seed.
Lemma1Sweep lemma1_sweep(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h, const Rational& length,
                         std::int64_t samples, std::uint64_t seed);

}  // namespace polygeo::rotation
