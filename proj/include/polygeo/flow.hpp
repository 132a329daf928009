#pragma once

#include <cstdint>
#include <vector>

#include "polygeo/exact.hpp"
#include "polygeo/surface.hpp"

namespace polygeo::flow {

/// Position of a geodesic of slope `slope` inside one square. `horizontal`
/// is the accumulated horizontal extent travelled; arc length is
/// horizontal * sqrt(1 + slope^2), applied only when reporting.
struct FlowState {
  int square = 0;
  Quad x;
  Quad y;
  Quad slope;
  Quad horizontal;
};

enum class FlowEvent { RightCross, TopCross };

struct StepResult {
  FlowState state;
  FlowEvent event;
};

/// Starting point on the left edge of `square` at rational height y0.
struct Start {
  int square = 0;
  Rational y0{1, 2};
};

struct Crossing {
  int edge = 0;          // vertical edge id = square entered
  Quad height;           // in [0, 1)
  std::int64_t k = 0;    // 1-based ordinal
  Quad horizontal;       // extent travelled when the crossing happens
};

struct CrossingSet {
  Quad alpha;
  surface::PolysquareSurface surface;
  Start start;
  std::int64_t n = 0;
  std::vector<Crossing> crossings;
};

/// One segment of a traced geodesic inside a single square.
struct SegmentPiece {
  int square = 0;
  Quad x0, y0, x1, y1;
};

/// Advances to the next edge crossing. Throws CornerHit when the state sits
/// on a corner or the next event would pass exactly through one.
StepResult step(const FlowState& st, const surface::PolysquareSurface& s);

/// First n crossings with vertical edges. Needs alpha > 0 irrational and
/// 0 < y0 < 1; under those conditions no corner can be hit.
CrossingSet trace_crossings(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start, std::int64_t n);

/// Pieces covering the first `horizontal` units of horizontal extent.
std::vector<SegmentPiece> trace_segment(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start,
                                        const Rational& horizontal);

/// sqrt(1 + alpha^2) in double precision.
double arc_factor(const Quad& alpha);

struct CoverageEstimate {
  int m = 0;
  Rational horizontal;   // upper end of the final bisection bracket
  double arc_length = 0;
  int probes = 0;
};

/// True when the pieces pass within 1/m of every center of the 2m x 2m grid
/// in every square. Distances are measured inside each square's own chart.
bool covers_grid(const std::vector<SegmentPiece>& pieces, int squares, int m);

/// Smallest traced length (doubling from one horizontal unit, then
/// bisection to 1/64 of a unit) whose segment satisfies covers_grid.
/// Ignoring shortcuts through gluings makes this an upper estimate.
CoverageEstimate coverage_radius_estimate(const surface::PolysquareSurface& s, const Quad& alpha, const Start& start,
                                          int m);

}  // namespace polygeo::flow
