#include "polygeo/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polygeo::rotation {

UnitInterval::UnitInterval(Quad lo, Quad hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (!(Quad(0) <= lower && lower < upper && upper <= Quad(1))) {
    throw Error(ErrorCode::InvariantViolation,
                "unit interval needs 0 <= lower < upper <= 1, got [" + lower.to_string() + ", " + upper.to_string() + ")");
  }
}

std::vector<Quad> shifted_orbit(const Quad& alpha, const Quad& offset, std::int64_t n) {
  std::vector<Quad> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  const Quad step = alpha.frac();
  Quad x = offset.frac();
  for (std::int64_t k = 1; k <= n; ++k) {
    x += step;
    if (x >= Quad(1)) x -= Quad(1);
    out.push_back(x);
  }
  return out;
}

OrbitPrefix orbit(const Quad& alpha, std::int64_t n) {
  if (alpha.is_rational()) throw Error(ErrorCode::BadArgs, "rotation orbit needs an irrational alpha");
  if (n < 1) throw Error(ErrorCode::BadArgs, "rotation orbit needs n >= 1");
  return {alpha, n, shifted_orbit(alpha, Quad(0), n)};
}

std::int64_t visiting_number(const OrbitPrefix& o, const UnitInterval& interval) {
  const auto count = static_cast<std::int64_t>(o.points.size());
  std::int64_t visits = 0;
#pragma omp parallel for reduction(+ : visits) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    if (interval.contains(o.points[static_cast<std::size_t>(k)])) ++visits;
  }
  return visits;
}

TrivialErrorWitness trivial_error_witness(const OrbitPrefix& o, const Rational& scale) {
  if (o.n < 2) throw Error(ErrorCode::BadArgs, "trivial error witness needs n >= 2");
  if (scale <= 0 || scale > o.n) throw Error(ErrorCode::BadArgs, "trivial error scale must lie in (0, n]");
  const Rational length = scale / o.n;
  const uniformity::EdgePoints edge(o.points);
  const uniformity::WindowExtremes ex = uniformity::visiting_extremes(edge, length);
  // Both extremes are integers; when 2*scale is odd each misses scale by at
  // least 1/2. Report the larger miss.
  const Rational max_miss = boost::multiprecision::abs(Rational(ex.max) - scale);
  const Rational min_miss = boost::multiprecision::abs(Rational(ex.min) - scale);
  if (max_miss >= min_miss || ex.min_just_after) {
    UnitInterval iv(ex.max_position, ex.max_position + Quad(length));
    return {iv, ex.max, scale, max_miss};
  }
  UnitInterval iv(ex.min_position, ex.min_position + Quad(length));
  return {iv, ex.min, scale, min_miss};
}

uniformity::ThresholdBracket theorem_a_threshold(const OrbitPrefix& o, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw Error(ErrorCode::BadArgs, "Theorem A threshold needs 0 < eps < 1");
  if (o.n < 2) throw Error(ErrorCode::BadArgs, "Theorem A threshold needs n >= 2");
  uniformity::EdgeFamily family;
  family.n = o.n;
  family.edges.emplace_back(o.points);
  return uniformity::threshold_search(family, eps);
}

uniformity::ThresholdBracket theorem_a_threshold(const Quad& alpha, std::int64_t n, const Rational& eps) {
  return theorem_a_threshold(orbit(alpha, n), eps);
}

Integer residue_index(const cfrac::ContinuedFraction& cf, std::size_t h, const Integer& k) {
  const cfrac::Convergent c = cfrac::convergent(cf, h);
  if (k < 1 || k > c.q) throw Error(ErrorCode::BadArgs, "residue index needs 1 <= k <= q_h");
  Integer r = (k * c.p) % c.q;
  if (r < 0) r += c.q;
  return r;
}

Integer residue_index(const Quad& alpha, std::size_t h, const Integer& k) {
  return residue_index(cfrac::expand(alpha), h, k);
}

bool residue_intervals_hold(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h) {
  const auto conv = cfrac::convergents(cf, h + 2);
  const Integer& p = conv[h].p;
  const Integer& q = conv[h].q;
  const Quad radius(Rational(1, conv[h + 1].q));
  const Quad half(Rational(1, 2));
  Quad x = Quad(0);
  const Quad step = alpha.frac();
  for (Integer k = 1; k <= q; ++k) {
    x += step;
    if (x >= Quad(1)) x -= Quad(1);
    Integer ell = (k * p) % q;
    if (ell < 0) ell += q;
    Quad diff = x - Quad(Rational(ell, q));
    if (diff > half) diff -= Quad(1);
    if (diff < -half) diff += Quad(1);
    if (!(abs(diff) < radius)) return false;
  }
  return true;
}

namespace {

// k alpha for k = 1..q_h with a split integer/fraction double cache so most
// floor evaluations avoid exact arithmetic.
// Sorted fractional parts f_k = {-k alpha}, k = 1..q. The lifts j - k alpha
// are exactly f_k + t for integers t, so counting them in an interval is
// q * floor + one search per endpoint. No f_k is 0 for irrational alpha.
struct MultipleTable {
  std::vector<Quad> exact;
  std::vector<double> approx;

  MultipleTable(const Quad& alpha, const Integer& q) {
    const auto count = q.convert_to<std::size_t>();
    exact.reserve(count);
    Quad x = Quad(0);
    for (std::size_t k = 1; k <= count; ++k) {
      x += alpha;
      exact.push_back(Quad(1) - frac(x));
    }
    std::vector<double> d(count);
    for (std::size_t i = 0; i < count; ++i) d[i] = exact[i].to_double();
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    bool separated = true;
    for (std::size_t i = 1; i < count; ++i) separated = separated && d[order[i]] - d[order[i - 1]] > kSlack;
    std::vector<Quad> sorted;
    sorted.reserve(count);
    for (std::size_t i : order) sorted.push_back(std::move(exact[i]));
    if (!separated) std::sort(sorted.begin(), sorted.end());
    exact = std::move(sorted);
    approx.reserve(count);
    for (const Quad& f : exact) approx.push_back(f.to_double());
  }

  // #{k : f_k < y} (strict) or #{k : f_k <= y} for y in [0, 1).
  std::int64_t below(const Quad& y, bool inclusive) const {
    const double yd = y.to_double();
    auto first = std::lower_bound(approx.begin(), approx.end(), yd - kSlack);
    auto last = std::upper_bound(first, approx.end(), yd + kSlack);
    auto n = first - approx.begin();
    for (auto it = first; it != last; ++it) {
      const auto c = compare(exact[static_cast<std::size_t>(it - approx.begin())], y);
      if (c < 0 || (inclusive && c == 0)) ++n;
    }
    return n;
  }

  // #{(k, t) : f_k + t <= x} minus the same count at 0, inclusive or not.
  std::int64_t cumulative(const Quad& x, bool inclusive) const {
    const Integer w = x.floor();
    return w.convert_to<std::int64_t>() * static_cast<std::int64_t>(exact.size()) +
           below(x - Quad(Rational(w)), inclusive);
  }

  std::int64_t count(const Quad& lower, const Quad& upper) const {
    return cumulative(upper, true) - cumulative(lower, false);
  }

  static constexpr double kSlack = 1e-12;
};

}  // namespace

std::int64_t lemma1_count(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h, const Quad& lower,
                          const Quad& upper) {
  if (h < 1) throw Error(ErrorCode::BadArgs, "lemma 1 count needs h >= 1");
  if (upper < lower) throw Error(ErrorCode::BadArgs, "lemma 1 count needs lower <= upper");
  return MultipleTable(alpha, cfrac::convergent(cf, h).q).count(lower, upper);
}

std::int64_t lemma1_count(const Quad& alpha, std::size_t h, const Quad& lower, const Quad& upper) {
  return lemma1_count(alpha, cfrac::expand(alpha), h, lower, upper);
}

Lemma1Sweep lemma1_sweep(const Quad& alpha, const cfrac::ContinuedFraction& cf, std::size_t h, const Rational& length,
                         std::int64_t samples, std::uint64_t seed) {
  if (h < 1) throw Error(ErrorCode::BadArgs, "lemma 1 sweep needs h >= 1");
  if (samples < 1) throw Error(ErrorCode::BadArgs, "lemma 1 sweep needs at least one sample");
  const MultipleTable table(alpha, cfrac::convergent(cf, h).q);

  constexpr std::int64_t kGrid = std::int64_t{1} << 24;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, kGrid - 1);
  std::vector<Quad> lowers;
  lowers.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t s = 0; s < samples; ++s) lowers.emplace_back(Rational(pick(rng), kGrid));

  std::vector<std::int64_t> counts(lowers.size());
  const Quad len(length);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t s = 0; s < samples; ++s) {
    const auto i = static_cast<std::size_t>(s);
    counts[i] = table.count(lowers[i], lowers[i] + len);
  }
  Lemma1Sweep out{counts.front(), counts.front(), samples};
  for (std::int64_t c : counts) {
    out.min_count = std::min(out.min_count, c);
    out.max_count = std::max(out.max_count, c);
  }
  return out;
}

}  // namespace polygeo::rotation
