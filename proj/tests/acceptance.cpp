// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "polygeo/cfrac.hpp"
#include "polygeo/flow.hpp"
#include "polygeo/rotation.hpp"
#include "polygeo/surface.hpp"
#include "polygeo/uniformity.hpp"

using namespace polygeo;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

const Rational kEps(1, 10);

Outcome fail(std::string note) { return {false, std::move(note)}; }

Outcome convergent_inequality() {
  for (const Quad& alpha : {constants::phi(), constants::sqrt2(), constants::sqrt3()}) {
    const auto cf = cfrac::expand(alpha);
    const auto conv = cfrac::convergents(cf, 22);
    for (std::size_t m = 0; m <= 20; ++m) {
      const Quad gap = abs(alpha - Quad(Rational(conv[m].p, conv[m].q)));
      if (!(gap < Quad(Rational(Integer(1), conv[m].q * conv[m + 1].q)))) {
        return fail(alpha.to_string() + " m=" + std::to_string(m));
      }
    }
  }
  return {true, "3 slopes, m <= 20"};
}

Outcome ostrowski_round_trip() {
  std::int64_t checked = 0;
  for (const Quad& alpha : {constants::phi(), constants::sqrt2()}) {
    const auto cf = cfrac::expand(alpha);
    const auto conv = cfrac::convergents(cf, 14);
    const Integer q12 = conv[12].q;
    std::set<std::vector<Integer>> seen;
    for (Integer n = 1; n < q12; ++n) {
      const auto d = cfrac::ostrowski_decompose(n, cf);
      Integer sum = 0;
      for (std::size_t i = 0; i < d.digits.size(); ++i) sum += d.digits[i] * conv[i].q;
      if (sum != n) return fail("sum mismatch at N=" + n.str());
      if (!cfrac::ostrowski_validate(d, cf)) return fail("constraint violated at N=" + n.str());
      if (!seen.insert(d.digits).second) return fail("digits repeat at N=" + n.str());
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " values"};
}

Outcome lemma1() {
  std::int64_t lo = INT64_MAX, hi = 0;
  for (const Quad& alpha : {constants::phi(), constants::sqrt2(), constants::sqrt3()}) {
    const auto cf = cfrac::expand(alpha);
    for (std::size_t h = 1; h <= 15; ++h) {
      const Integer q = cfrac::convergent(cf, h).q;
      const auto small = rotation::lemma1_sweep(alpha, cf, h, Rational(Integer(1), q), 1000, 100 + h);
      const auto large = rotation::lemma1_sweep(alpha, cf, h, Rational(Integer(3), q), 1000, 200 + h);
      if (small.max_count > 3) return fail(alpha.to_string() + " h=" + std::to_string(h) + " count > 3");
      if (large.min_count < 1) return fail(alpha.to_string() + " h=" + std::to_string(h) + " count < 1");
      hi = std::max(hi, small.max_count);
      lo = std::min(lo, large.min_count);
    }
  }
  return {true, "max at 1/q_h = " + std::to_string(hi) + ", min at 3/q_h = " + std::to_string(lo)};
}

Outcome trivial_error() {
  for (std::int64_t n : {100, 1000, 10000}) {
    const auto o = rotation::orbit(constants::phi(), n);
    const auto w = rotation::trivial_error_witness(o);
    if (w.interval.length() != Quad(Rational(1, 2 * n))) return fail("wrong length at n=" + std::to_string(n));
    std::int64_t v = 0;
    for (const Quad& p : o.points) v += (w.interval.lower <= p && p < w.interval.upper) ? 1 : 0;
    const Rational dev = abs(Rational(v) - Rational(1, 2));
    if (v != w.visits || dev < Rational(1, 2)) return fail("deviation below 1/2 at n=" + std::to_string(n));
  }
  return {true, "n in {1e2, 1e3, 1e4}"};
}

bool certified(const uniformity::ThresholdBracket& b, const uniformity::EdgeFamily& family, const Rational& eps) {
  if (!(b.upper < family.n) || b.lower > b.upper) return false;
  if (!uniformity::ladder_passes(family, b.upper, eps)) return false;
  return b.lower == 1 || !uniformity::ladder_passes(family, b.lower, eps);
}

Outcome theorem_a() {
  std::vector<Rational> uppers;
  std::ostringstream note;
  for (std::int64_t n : {10000, 100000}) {
    const auto o = rotation::orbit(constants::phi(), n);
    const auto b = rotation::theorem_a_threshold(o, kEps);
    uniformity::EdgeFamily family{n, {uniformity::EdgePoints(o.points)}};
    if (!certified(b, family, kEps)) return fail("bracket not certified at n=" + std::to_string(n));
    uppers.push_back(b.upper);
    note << "n=" << n << ": [" << b.lower.convert_to<double>() << ", " << b.upper.convert_to<double>() << "] ";
  }
  const Rational r = uppers[1] / uppers[0];
  note << "ratio " << r.convert_to<double>();
  if (r < Rational(1, 4) || r > 4) return fail(note.str());
  return {true, note.str()};
}

Outcome torus_reduction() {
  const Rational y0(1, 3);
  const std::int64_t n = 10000;
  const auto x = flow::trace_crossings(surface::torus(), constants::phi(), {0, y0}, n);
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto& c = x.crossings[static_cast<std::size_t>(k - 1)];
    if (c.edge != 0 || c.height != frac(Quad(y0) + Quad(k) * constants::phi())) {
      return fail("mismatch at k=" + std::to_string(k));
    }
  }
  return {true, "n = 10^4, y0 = 1/3"};
}

Outcome l3_heights() {
  const std::int64_t n = 10000;
  const Rational y0(1, 2);
  const auto x = flow::trace_crossings(surface::l3(), constants::phi(), {0, y0}, n);
  std::vector<Quad> heights;
  for (const auto& c : x.crossings) heights.push_back(c.height);
  std::vector<Quad> expected;
  for (std::int64_t k = 1; k <= n; ++k) expected.push_back(frac(Quad(y0) + Quad(k) * constants::phi()));
  std::sort(heights.begin(), heights.end());
  std::sort(expected.begin(), expected.end());
  if (heights != expected) return fail("multisets differ");
  return {true, "n = 10^4"};
}

Outcome crossing_bound() {
  const std::int64_t n = 100000;
  std::ostringstream note;
  bool ok = true;
  for (const auto& [name, surf] : {std::pair{"torus", surface::torus()}, std::pair{"L3", surface::l3()}}) {
    for (const Quad& alpha : {constants::phi(), constants::sqrt2()}) {
      const auto cf = cfrac::expand(alpha);
      const auto family = uniformity::edge_family(flow::trace_crossings(surf, alpha, {}, n));
      std::int64_t bad = 0;
      double worst = 0;
      for (int e = 0; e < family.squares(); ++e) {
        for (auto iv : uniformity::random_subintervals(1, 1000, 31 + static_cast<std::uint64_t>(e))) {
          iv.edge = e;
          const auto check = uniformity::crossing_bound_check(family, iv, cf.digit_bound);
          if (!check.holds) {
            ++bad;
            worst = std::max(worst, (Quad(check.visits) - check.bound).to_double());
          }
        }
      }
      note << name << '/' << alpha.to_string() << " A=" << cf.digit_bound << ": " << bad << " over";
      if (bad > 0) note << " (worst excess " << worst << ")";
      note << "; ";
      ok = ok && bad == 0;
    }
  }
  return {ok, note.str()};
}

Outcome theorem1() {
  const auto family =
      uniformity::edge_family(flow::trace_crossings(surface::l3(), constants::phi(), {}, 100000));
  const auto b = uniformity::theorem1_threshold(family, kEps);
  if (!certified(b, family, kEps)) return fail("bracket not certified");
  std::ostringstream note;
  note << "bracket [" << b.lower.convert_to<double>() << ", " << b.upper.convert_to<double>() << "]";
  bool ok = true;
  for (const Rational& c : {b.upper, Rational(2 * b.upper)}) {
    const auto r = uniformity::family_extremes(family, c);
    const bool a = uniformity::classify_case(r, kEps) == uniformity::Case::A;
    note << "; C=" << c.convert_to<double>() << " min/max " << r.min_visit << '/' << r.max_visit << " -> "
         << (a ? 'A' : 'B');
    ok = ok && a;
  }
  return {ok, note.str()};
}

Outcome lemma3() {
  const std::int64_t n = 100000;
  const auto family = uniformity::edge_family(flow::trace_crossings(surface::l3(), constants::phi(), {}, n));
  const auto b = uniformity::theorem1_threshold(family, kEps);
  const Rational c = uniformity::first_case_a_scale(family, b.upper, kEps);
  const auto report = uniformity::family_extremes(family, c);
  const Rational len = 3 * c / (kEps * n);
  const Rational factor = 3 * kEps / (1 - kEps);
  std::int64_t bad = 0, bad_lemma = 0;
  for (const auto& j : uniformity::random_intervals(family.squares(), len, 1000, 7)) {
    if (!uniformity::deviation_check(family, j, factor).holds) ++bad;
    if (!uniformity::lemma3_check(family, report, kEps, j).holds) ++bad_lemma;
  }
  std::ostringstream note;
  note << "C=" << c.convert_to<double>() << ", " << bad << " bound / " << bad_lemma << " two-sided failures";
  return {bad == 0 && bad_lemma == 0, note.str()};
}

// Count in [a, a+L) by scanning.
std::int64_t scan(const std::vector<Quad>& pts, const Quad& a, const Quad& len) {
  std::int64_t v = 0;
  for (const Quad& p : pts) v += (a <= p && p < a + len) ? 1 : 0;
  return v;
}

// Every breakpoint and every midpoint between consecutive breakpoints.
std::pair<std::int64_t, std::int64_t> oracle(const std::vector<Quad>& pts, const Rational& length) {
  const Quad len(length), last(1 - length);
  std::vector<Quad> cand{Quad(0), last};
  for (const Quad& p : pts) {
    for (const Quad& a : {p, p - len}) {
      if (Quad(0) <= a && a <= last) cand.push_back(a);
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  const std::size_t base = cand.size();
  for (std::size_t i = 0; i + 1 < base; ++i) cand.push_back((cand[i] + cand[i + 1]) / Quad(2));
  std::int64_t lo = INT64_MAX, hi = 0;
  for (const Quad& a : cand) {
    const std::int64_t v = scan(pts, a, len);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

Outcome window_oracle() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(0, 20), grid(0, 63), len_grid(1, 64), kind(0, 1);
  for (int t = 0; t < 10000; ++t) {
    std::set<Quad> chosen;
    const int m = count(rng);
    if (kind(rng) == 0) {
      // rational grid: L and points share the 1/64 lattice, so ties are everywhere
      while (static_cast<int>(chosen.size()) < m) chosen.insert(Quad(Rational(grid(rng), 64)));
    } else {
      std::uniform_int_distribution<int> k(1, 200);
      while (static_cast<int>(chosen.size()) < m) chosen.insert(frac(Quad(k(rng)) * constants::phi()));
    }
    const std::vector<Quad> pts(chosen.begin(), chosen.end());
    const Rational length(len_grid(rng), 64);
    const auto [lo, hi] = oracle(pts, length);
    const auto fast = uniformity::visiting_extremes(std::span<const Quad>(pts), length);
    const auto ref = uniformity::visiting_extremes_reference(pts, length);
    if (fast.min != lo || fast.max != hi || ref.min != lo || ref.max != hi) {
      return fail("instance " + std::to_string(t) + " disagrees with the oracle");
    }
  }
  return {true, "10^4 instances"};
}

Outcome superdensity() {
  std::ostringstream note;
  bool ok = true;
  for (const auto& [name, surf] : {std::pair{"torus", surface::torus()}, std::pair{"L3", surface::l3()}}) {
    double lo = 1e300, hi = 0;
    for (int m = 1; m <= 32; m *= 2) {
      const auto e = flow::coverage_radius_estimate(surf, constants::phi(), {}, m);
      lo = std::min(lo, e.arc_length / m);
      hi = std::max(hi, e.arc_length / m);
    }
    note << name << " spread " << hi / lo << "; ";
    ok = ok && hi / lo < 10;
  }
  return {ok, note.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "convergent inequality", 1, convergent_inequality},
      {2, "ostrowski round trip", 5, ostrowski_round_trip},
      {3, "lemma 1 counts", 30, lemma1},
      {4, "trivial error witness", 10, trivial_error},
      {5, "rotation threshold stability", 300, theorem_a},
      {6, "torus reduction", 30, torus_reduction},
      {7, "L3 height multiset", 60, l3_heights},
      {8, "crossing count bound", 120, crossing_bound},
      {9, "L3 threshold and case A", 600, theorem1},
      {10, "case A error bound", 120, lemma3},
      {11, "window extremes oracle", 60, window_oracle},
      {12, "superdensity boundedness", 600, superdensity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.pass && secs > c.limit_seconds) out = fail("over time limit; " + out.note);
    failures += out.pass ? 0 : 1;
    std::printf("%s [%2d] %-30s %8.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
