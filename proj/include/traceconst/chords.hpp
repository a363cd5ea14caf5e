#pragma once

#include "traceconst/geom.hpp"

namespace traceconst {

/// A boundary cut: the straight segment between x(s) and x(s + a).
struct Chord {
    double s = 0.0;       // arc-length anchor in [0, L)
    double a = 0.0;       // arc split in (0, L/2]
    double length = 0.0;  // |x(s + a) - x(s)|
    Point2 p0;
    Point2 p1;
};

/// Minimum of the chord functional over the anchor s for a fixed arc split.
struct MinChordResult {
    double a = 0.0;
    double min_length = 0.0;
    double argmin_s = 0.0;
    double residual = 0.0;       // stationarity defect at the argmin, NaN at a vertex
    double bracket_width = 0.0;  // uncertainty of argmin_s after refinement
};

/// Euclidean distance between the boundary points at s and s + a.
/// Requires 0 < a <= L/2.
double chord_length(const ConvexBody& body, double s, double a);

Chord make_chord(const ConvexBody& body, double s, double a);

/// Global minimum of s -> |x(s+a) - x(s)| over one period. Scans a uniform
/// grid of `s_grid` points augmented with every junction position c, c - a,
/// and c - a/2 (so chords hugging a corner are sampled exactly), then refines
/// the best local brackets by golden section to width 1e-10 * L.
MinChordResult min_chord(const ConvexBody& body, double a, int s_grid = 4096);

/// Left-hand side of the chord stationarity condition,
///   (x(s+a) - x(s)) . (x'(s+a) - x'(s)),
/// normalized by the chord length so the value is scale-invariant. Equals
/// d/ds |x(s+a) - x(s)|; vanishes exactly at stationary anchors. Throws
/// AtVertex when s or s + a sits on a non-smooth junction.
double stationarity_residual(const ConvexBody& body, double s, double a);

/// Exact limit of a / min_s chord(s, a) as the arc split a tends to zero:
/// 1 / sin(theta_min / 2) with theta_min the smallest interior angle over the
/// non-smooth junctions, or 1 for a C^1 boundary.
double corner_limit_factor(const ConvexBody& body);

}  // namespace traceconst
