#include "polygeo/flow.hpp"

#include <algorithm>
#include <cmath>

namespace polygeo::flow {

namespace {

const Quad kZero{0};
const Quad kOne{1};

void check_geodesic(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start) {
  if (auto problems = surface::validate(s); !problems.empty()) {
    throw Error(ErrorCode::InvariantViolation, "invalid surface: " + problems.front());
  }
  if (alpha.is_rational() || alpha.sign() <= 0) throw Error(ErrorCode::BadArgs, "flow needs an irrational slope alpha > 0");
  if (start.y0 <= 0 || start.y0 >= 1) throw Error(ErrorCode::BadArgs, "flow needs a starting height 0 < y0 < 1");
  if (start.square < 0 || start.square >= s.squares) throw Error(ErrorCode::BadArgs, "starting square out of range");
}

// The step proper, with 1/slope supplied by the caller.
StepResult advance(const FlowState& st, const Quad& inv_slope, const surface::PolysquareSurface& s) {
  if (st.x.sign() == 0 && st.y.sign() == 0) throw Error(ErrorCode::CornerHit, "geodesic starts at a corner");
  const Quad run = kOne - st.x;
  Quad reach = st.y + st.slope * run;
  const auto order = reach <=> kOne;
  if (order == 0) throw Error(ErrorCode::CornerHit, "geodesic passes through a corner");
  const auto sq = static_cast<std::size_t>(st.square);
  if (order < 0) {
    return {FlowState{s.right[sq], kZero, std::move(reach), st.slope, st.horizontal + run}, FlowEvent::RightCross};
  }
  const Quad dx = (kOne - st.y) * inv_slope;
  return {FlowState{s.top[sq], st.x + dx, kZero, st.slope, st.horizontal + dx}, FlowEvent::TopCross};
}

FlowState initial_state(const Quad& alpha, const Start& start) {
  return FlowState{start.square, kZero, Quad(start.y0), alpha, kZero};
}

}  // namespace

StepResult step(const FlowState& st, const surface::PolysquareSurface& s) {
  return advance(st, st.slope.inverse(), s);
}

CrossingSet trace_crossings(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start, std::int64_t n) {
  check_geodesic(s, alpha, start);
  if (n < 0) throw Error(ErrorCode::BadArgs, "crossing count must be nonnegative");
  CrossingSet out{alpha, s, start, n, {}};
  out.crossings.reserve(static_cast<std::size_t>(n));
  const Quad inv = alpha.inverse();
  FlowState st = initial_state(alpha, start);
  for (std::int64_t k = 1; k <= n;) {
    StepResult r = advance(st, inv, s);
    st = std::move(r.state);
    if (r.event == FlowEvent::RightCross) {
      out.crossings.push_back({st.square, st.y, k, st.horizontal});
      ++k;
    }
  }
  return out;
}

std::vector<SegmentPiece> trace_segment(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start,
                                        const Rational& horizontal) {
  check_geodesic(s, alpha, start);
  if (horizontal < 0) throw Error(ErrorCode::BadArgs, "segment length must be nonnegative");
  std::vector<SegmentPiece> pieces;
  const Quad total(horizontal);
  const Quad inv = alpha.inverse();
  FlowState st = initial_state(alpha, start);
  while (st.horizontal < total) {
    StepResult r = advance(st, inv, s);
    if (r.state.horizontal >= total) {
      const Quad dx = total - st.horizontal;
      pieces.push_back({st.square, st.x, st.y, st.x + dx, st.y + alpha * dx});
      break;
    }
    const Quad x1 = r.event == FlowEvent::RightCross ? kOne : r.state.x;
    const Quad y1 = r.event == FlowEvent::RightCross ? r.state.y : kOne;
    pieces.push_back({st.square, st.x, st.y, x1, y1});
    st = std::move(r.state);
  }
  return pieces;
}

double arc_factor(const Quad& alpha) {
  const double a = alpha.to_double();
  return std::sqrt(1.0 + a * a);
}

bool covers_grid(const std::vector<SegmentPiece>& pieces, int squares, int m) {
  const int side = 2 * m;
  const double radius = 1.0 / m;
  const double r2 = radius * radius;
  std::vector<char> hit(static_cast<std::size_t>(squares) * side * side, 0);
  const auto center = [side](int i) { return (i + 0.5) / side; };
  for (const SegmentPiece& p : pieces) {
    const double ax = p.x0.to_double(), ay = p.y0.to_double();
    const double bx = p.x1.to_double(), by = p.y1.to_double();
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    const int i_lo = std::max(0, static_cast<int>(std::floor((std::min(ax, bx) - radius) * side)));
    const int i_hi = std::min(side - 1, static_cast<int>(std::ceil((std::max(ax, bx) + radius) * side)));
    const int j_lo = std::max(0, static_cast<int>(std::floor((std::min(ay, by) - radius) * side)));
    const int j_hi = std::min(side - 1, static_cast<int>(std::ceil((std::max(ay, by) + radius) * side)));
    char* cell = hit.data() + static_cast<std::size_t>(p.square) * side * side;
    for (int i = i_lo; i <= i_hi; ++i) {
      for (int j = j_lo; j <= j_hi; ++j) {
        const double cx = center(i), cy = center(j);
        double t = len2 > 0 ? ((cx - ax) * dx + (cy - ay) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double ex = ax + t * dx - cx, ey = ay + t * dy - cy;
        if (ex * ex + ey * ey <= r2) cell[i * side + j] = 1;
      }
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

CoverageEstimate coverage_radius_estimate(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start,
                                          int m) {
  if (m < 1) throw Error(ErrorCode::BadArgs, "coverage estimate needs m >= 1");
  CoverageEstimate out;
  out.m = m;
  const auto covered = [&](const Rational& t) {
    ++out.probes;
    return covers_grid(trace_segment(s, alpha, start, t), s.squares, m);
  };
  Rational hi = 1;
  Rational lo = 0;
  while (!covered(hi)) {
    if (hi > (1 << 24)) throw Error(ErrorCode::PreconditionNotMet, "segment never covers the grid");
    lo = hi;
    hi *= 2;
  }
  if (lo > 0) {
    const Rational resolution(1, 64);
    while (hi - lo > resolution) {
      const Rational mid = (lo + hi) / 2;
      if (covered(mid)) hi = mid; else lo = mid;
    }
  }
  out.horizontal = hi;
  out.arc_length = hi.convert_to<double>() * arc_factor(alpha);
  return out;
}

}  // namespace polygeo::flow
