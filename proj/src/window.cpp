#include "polygeo/window.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polygeo::uniformity {

namespace {

// Candidate window positions, each evaluated closed ([a, a+L)) and, where
// a < 1 - L, just after a ((a, a+L]). Keys order ties deterministically:
//   0/1   a = 0
//   2     a = 1 - L
//   4+4i  a = x_i       (5+4i just after)
//   6+4i  a = x_i - L   (7+4i just after)
struct Best {
  std::int64_t value;
  std::uint64_t key;
};

constexpr Best kNoMin{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::uint64_t>::max()};
constexpr Best kNoMax{-1, std::numeric_limits<std::uint64_t>::max()};

bool better_min(const Best& a, const Best& b) { return a.value < b.value || (a.value == b.value && a.key < b.key); }
bool better_max(const Best& a, const Best& b) { return a.value > b.value || (a.value == b.value && a.key < b.key); }

struct Tracker {
  Best min = kNoMin;
  Best max = kNoMax;

  void closed(std::int64_t v, std::uint64_t key) {
    const Best b{v, key};
    if (better_min(b, min)) min = b;
    if (better_max(b, max)) max = b;
  }
  void just_after(std::int64_t v, std::uint64_t key) {
    const Best b{v, key};
    if (better_min(b, min)) min = b;
  }
  void merge(const Tracker& o) {
    if (better_min(o.min, min)) min = o.min;
    if (better_max(o.max, max)) max = o.max;
  }
};

Quad position_of(std::uint64_t key, std::span<const Quad> pts, const Rational& length) {
  if (key < 2) return Quad(0);
  if (key < 4) return Quad(Rational(1) - length);
  const std::size_t i = (key - 4) / 4;
  if ((key - 4) % 4 < 2) return pts[i];
  return pts[i] - Quad(length);
}

WindowExtremes finish(const Tracker& t, std::span<const Quad> pts, const Rational& length) {
  WindowExtremes out;
  out.min = t.min.value;
  out.max = t.max.value;
  out.min_position = position_of(t.min.key, pts, length);
  out.min_just_after = t.min.key % 2 == 1;
  out.max_position = position_of(t.max.key, pts, length);
  return out;
}

enum class Const { Zero, Length, One, OneMinusLength };
enum class Offset { PlusLength, MinusLength };

// Comparisons through the packed representation.
class PackedOracle {
 public:
  PackedOracle(const PackedField& field, const Rational& length) : field_(field) {
    auto make = [](const Rational& r) {
      auto s = PackedField::make_shift(r);
      if (!s) throw Error(ErrorCode::InvariantViolation, "window length does not fit the packed path");
      return *s;
    };
    consts_[0] = make(Rational(0));
    consts_[1] = make(length);
    consts_[2] = make(Rational(1));
    consts_[3] = make(Rational(1) - length);
    plus_ = make(length);
    minus_ = make(-length);
  }
  std::size_t size() const { return field_.size(); }
  int constant(std::size_t j, Const c) const { return field_.compare_constant(j, consts_[static_cast<int>(c)]); }
  int shifted(std::size_t j, std::size_t i, Offset o) const {
    return field_.compare_shifted(j, i, o == Offset::PlusLength ? plus_ : minus_);
  }

 private:
  const PackedField& field_;
  PackedField::Shift consts_[4];
  PackedField::Shift plus_;
  PackedField::Shift minus_;
};

// Same interface on top of plain exact arithmetic.
class ExactOracle {
 public:
  ExactOracle(std::span<const Quad> pts, const Rational& length)
      : pts_(pts),
        consts_{Quad(0), Quad(length), Quad(1), Quad(Rational(1) - length)},
        plus_(length),
        minus_(-length) {}
  std::size_t size() const { return pts_.size(); }
  int constant(std::size_t j, Const c) const { return sign_of(pts_[j] <=> consts_[static_cast<int>(c)]); }
  int shifted(std::size_t j, std::size_t i, Offset o) const {
    return sign_of(pts_[j] - pts_[i] <=> (o == Offset::PlusLength ? plus_ : minus_));
  }

 private:
  static int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }
  std::span<const Quad> pts_;
  Quad consts_[4];
  Quad plus_;
  Quad minus_;
};

template <class Pred>
std::size_t first_true(std::size_t m, Pred pred) {
  std::size_t lo = 0, hi = m;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

template <class Oracle>
Tracker sweep(const Oracle& o, const Rational& length) {
  const std::size_t m = o.size();
  const auto lb_const = [&](Const c) { return first_true(m, [&](std::size_t j) { return o.constant(j, c) >= 0; }); };
  const auto ub_const = [&](Const c) { return first_true(m, [&](std::size_t j) { return o.constant(j, c) > 0; }); };
  const bool full = length == 1;

  Tracker total;
  total.closed(static_cast<std::int64_t>(lb_const(Const::Length) - lb_const(Const::Zero)), 0);
  if (!full) total.just_after(static_cast<std::int64_t>(ub_const(Const::Length) - ub_const(Const::Zero)), 1);
  total.closed(static_cast<std::int64_t>(lb_const(Const::One) - lb_const(Const::OneMinusLength)), 2);

  const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel
  {
    Tracker local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < count; ++s) {
      const auto i = static_cast<std::size_t>(s);
      const std::uint64_t base = 4 + 4 * static_cast<std::uint64_t>(i);
      const int vs_top = o.constant(i, Const::OneMinusLength);
      if (vs_top <= 0 && o.constant(i, Const::Zero) >= 0) {
        const std::size_t hi = first_true(m, [&](std::size_t j) { return o.shifted(j, i, Offset::PlusLength) >= 0; });
        local.closed(static_cast<std::int64_t>(hi - i), base);
        if (vs_top < 0) {
          const std::size_t hi2 = first_true(m, [&](std::size_t j) { return o.shifted(j, i, Offset::PlusLength) > 0; });
          local.just_after(static_cast<std::int64_t>(hi2 - i - 1), base + 1);
        }
      }
      const int vs_one = o.constant(i, Const::One);
      if (o.constant(i, Const::Length) >= 0 && vs_one <= 0) {
        const std::size_t lo = first_true(m, [&](std::size_t j) { return o.shifted(j, i, Offset::MinusLength) >= 0; });
        local.closed(static_cast<std::int64_t>(i - lo), base + 2);
        if (vs_one < 0) {
          const std::size_t lo2 = first_true(m, [&](std::size_t j) { return o.shifted(j, i, Offset::MinusLength) > 0; });
          local.just_after(static_cast<std::int64_t>(i + 1 - lo2), base + 3);
        }
      }
    }
#pragma omp critical(polygeo_window_merge)
    total.merge(local);
  }
  return total;
}

void check_length(const Rational& length) {
  if (length <= 0 || length > 1) {
    throw Error(ErrorCode::BadArgs, "window length must lie in (0, 1], got " + to_string(length));
  }
}

}  // namespace

EdgePoints::EdgePoints(std::vector<Quad> points) : values_(std::move(points)) {
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
    throw Error(ErrorCode::InvariantViolation, "edge points must be distinct");
  }
  packed_ = PackedField::pack(values_);
}

std::int64_t EdgePoints::count_in(const Quad& lower, const Quad& upper) const {
  const auto lo = std::lower_bound(values_.begin(), values_.end(), lower);
  const auto hi = std::lower_bound(values_.begin(), values_.end(), upper);
  return hi > lo ? hi - lo : 0;
}

WindowExtremes visiting_extremes(const EdgePoints& points, const Rational& length) {
  check_length(length);
  const auto pts = points.values();
  if (points.packed() && PackedField::make_shift(length) && PackedField::make_shift(Rational(1) - length)) {
    return finish(sweep(PackedOracle(*points.packed(), length), length), pts, length);
  }
  return finish(sweep(ExactOracle(pts, length), length), pts, length);
}

WindowExtremes visiting_extremes(std::span<const Quad> sorted, const Rational& length) {
  return visiting_extremes(EdgePoints(std::vector<Quad>(sorted.begin(), sorted.end())), length);
}

WindowExtremes visiting_extremes_reference(std::span<const Quad> sorted, const Rational& length) {
  check_length(length);
  const Quad len(length);
  const Quad top = Quad(1) - len;
  const auto closed_count = [&](const Quad& a) {
    const Quad b = a + len;
    std::int64_t c = 0;
    for (const Quad& x : sorted) c += (a <= x && x < b) ? 1 : 0;
    return c;
  };
  const auto after_count = [&](const Quad& a) {
    const Quad b = a + len;
    std::int64_t c = 0;
    for (const Quad& x : sorted) c += (a < x && x <= b) ? 1 : 0;
    return c;
  };

  Tracker t;
  t.closed(closed_count(Quad(0)), 0);
  if (length != 1) t.just_after(after_count(Quad(0)), 1);
  t.closed(closed_count(top), 2);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint64_t base = 4 + 4 * static_cast<std::uint64_t>(i);
    const Quad& x = sorted[i];
    if (x <= top && x >= Quad(0)) {
      t.closed(closed_count(x), base);
      if (x < top) t.just_after(after_count(x), base + 1);
    }
    const Quad shifted = x - len;
    if (shifted >= Quad(0) && shifted <= top) {
      t.closed(closed_count(shifted), base + 2);
      if (shifted < top) t.just_after(after_count(shifted), base + 3);
    }
  }
  return finish(t, sorted, length);
}

}  // namespace polygeo::uniformity
