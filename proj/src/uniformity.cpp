#include "polygeo/uniformity.hpp"

#include <random>

namespace polygeo::uniformity {

IntervalFamilySpec::IntervalFamilySpec(std::int64_t n_, Rational scale_) : n(n_), scale(std::move(scale_)) {
  if (!(scale > 1 && scale < n)) {
    throw Error(ErrorCode::BadArgs, "interval family needs 1 < C < n, got C = " + to_string(scale) +
                                        ", n = " + std::to_string(n));
  }
}

Rational UniformityReport::ratio() const {
  if (max_visit == 0) return Rational(1);
  return Rational(min_visit, max_visit);
}

EdgeFamily edge_family(const flow::CrossingSet& crossings) {
  std::vector<std::vector<Quad>> per_edge(static_cast<std::size_t>(crossings.surface.squares));
  for (const flow::Crossing& c : crossings.crossings) per_edge[static_cast<std::size_t>(c.edge)].push_back(c.height);
  EdgeFamily family;
  family.n = static_cast<std::int64_t>(crossings.crossings.size());
  family.edges.resize(per_edge.size());
  const auto count = static_cast<std::int64_t>(per_edge.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t e = 0; e < count; ++e) {
    family.edges[static_cast<std::size_t>(e)] = EdgePoints(std::move(per_edge[static_cast<std::size_t>(e)]));
  }
  return family;
}

UniformityReport family_extremes(const EdgeFamily& family, const Rational& scale) {
  UniformityReport r{.spec = IntervalFamilySpec(family.n, scale)};
  r.squares = family.squares();
  const Rational length = r.spec.length();
  bool first = true;
  for (int e = 0; e < family.squares(); ++e) {
    const WindowExtremes ex = visiting_extremes(family.edges[static_cast<std::size_t>(e)], length);
    if (first || ex.min < r.min_visit) {
      r.min_visit = ex.min;
      r.min_edge = e;
      r.min_position = ex.min_position;
      r.min_just_after = ex.min_just_after;
    }
    if (first || ex.max > r.max_visit) {
      r.max_visit = ex.max;
      r.max_edge = e;
      r.max_position = ex.max_position;
    }
    first = false;
  }
  r.expected = scale / r.squares;
  r.sandwich = r.min_visit <= r.expected && r.expected <= r.max_visit;
  return r;
}

UniformityReport family_extremes(const flow::CrossingSet& crossings, const Rational& scale) {
  return family_extremes(edge_family(crossings), scale);
}

namespace {

void check_small_eps(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) throw Error(ErrorCode::BadArgs, "needs 0 < eps < 1/2, got " + to_string(eps));
}

}  // namespace

Case classify_case(const UniformityReport& report, const Rational& eps) {
  check_small_eps(eps);
  return report.ratio() >= 1 - eps ? Case::A : Case::B;
}

ThresholdBracket theorem1_threshold(const EdgeFamily& family, const Rational& eps) {
  check_small_eps(eps);
  return threshold_search(family, eps);
}

ThresholdBracket theorem1_threshold(const flow::CrossingSet& crossings, const Rational& eps) {
  return theorem1_threshold(edge_family(crossings), eps);
}

Rational first_case_a_scale(const EdgeFamily& family, const Rational& start, const Rational& eps) {
  check_small_eps(eps);
  for (Rational c = start; c < family.n; c *= 2) {
    if (c > 1 && classify_case(family_extremes(family, c), eps) == Case::A) return c;
  }
  throw Error(ErrorCode::PreconditionNotMet, "no Case-A scale in the doubling ladder from " + to_string(start));
}

std::int64_t visiting_number(const EdgeFamily& family, const EdgeInterval& interval) {
  if (interval.edge < 0 || interval.edge >= family.squares()) throw Error(ErrorCode::BadArgs, "edge id out of range");
  return family.edges[static_cast<std::size_t>(interval.edge)].count_in(interval.lower, interval.upper);
}

Lemma3Outcome lemma3_check(const EdgeFamily& family, const UniformityReport& report, const Rational& eps,
                           const EdgeInterval& j) {
  if (classify_case(report, eps) != Case::A) {
    throw Error(ErrorCode::PreconditionNotMet, "scale C = " + to_string(report.spec.scale) + " is in Case B");
  }
  const Quad len = j.length();
  if (len < Quad(3 * report.spec.length())) throw Error(ErrorCode::BadArgs, "lemma 3 needs |J| >= 3C/n");
  const Quad relative = len / Quad(report.spec.length());
  const Quad v1(report.max_visit);
  Lemma3Outcome out;
  out.visits = visiting_number(family, j);
  out.lower_bound = Quad(1 - eps) * (relative - Quad(3)) * v1;
  out.upper_bound = (relative + Quad(3)) * v1;
  const Quad v(out.visits);
  out.holds = out.lower_bound <= v && v <= out.upper_bound;
  return out;
}

DeviationCheck deviation_check(const EdgeFamily& family, const EdgeInterval& j, const Rational& factor) {
  DeviationCheck out;
  out.visits = visiting_number(family, j);
  out.expected = j.length() * Quad(Rational(family.n, family.squares()));
  out.deviation = abs(Quad(out.visits) - out.expected);
  out.bound = Quad(factor) * out.expected;
  out.holds = out.deviation <= out.bound;
  return out;
}

DeviationCheck crossing_bound_check(const EdgeFamily& family, const EdgeInterval& interval, const Integer& digit_bound) {
  DeviationCheck out;
  out.visits = visiting_number(family, interval);
  out.expected = interval.length() * Quad(Rational(family.n, family.squares()));
  out.deviation = abs(Quad(out.visits) - out.expected);
  out.bound = Quad(Rational(digit_bound * family.n)) * interval.length() + Quad(1);
  out.holds = Quad(out.visits) <= out.bound;
  return out;
}

namespace {

constexpr std::int64_t kGrid = std::int64_t{1} << 24;

}  // namespace

std::vector<EdgeInterval> random_intervals(int edges, const Rational& length, std::int64_t samples,
                                           std::uint64_t seed) {
  if (length <= 0 || length > 1) throw Error(ErrorCode::BadArgs, "random interval length must lie in (0, 1]");
  const Rational room = (1 - length) * kGrid;
  const Integer last = boost::multiprecision::numerator(room) / boost::multiprecision::denominator(room);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_edge(0, edges - 1);
  std::uniform_int_distribution<std::int64_t> pick(0, last.convert_to<std::int64_t>());
  std::vector<EdgeInterval> out;
  out.reserve(static_cast<std::size_t>(samples));
  const Quad len(length);
  for (std::int64_t s = 0; s < samples; ++s) {
    const int e = pick_edge(rng);
    Quad lo(Rational(pick(rng), kGrid));
    Quad hi = lo + len;
    out.push_back({e, std::move(lo), std::move(hi)});
  }
  return out;
}

std::vector<EdgeInterval> random_subintervals(int edges, std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_edge(0, edges - 1);
  std::uniform_int_distribution<std::int64_t> pick(0, kGrid);
  std::vector<EdgeInterval> out;
  out.reserve(static_cast<std::size_t>(samples));
  while (static_cast<std::int64_t>(out.size()) < samples) {
    const int e = pick_edge(rng);
    std::int64_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    out.push_back({e, Quad(Rational(a, kGrid)), Quad(Rational(b, kGrid))});
  }
  return out;
}

std::vector<SweepRow> scale_sweep(const EdgeFamily& family, const std::vector<Rational>& scales, const Rational& eps) {
  std::vector<SweepRow> rows;
  rows.reserve(scales.size());
  for (const Rational& c : scales) {
    const UniformityReport r = family_extremes(family, c);
    rows.push_back({c, r.min_visit, r.max_visit, r.ratio(), classify_case(r, eps)});
  }
  return rows;
}

}  // namespace polygeo::uniformity
