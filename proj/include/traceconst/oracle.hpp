#pragma once

#include "traceconst/geom.hpp"

namespace traceconst {

/// One straight (or two-segment) cut through the domain, with the two
/// boundary arcs it separates and the resulting trace-constant ratios.
struct CutCandidate {
    double s1 = 0.0;
    double s2 = 0.0;
    double cut_length = 0.0;
    double arc_a = 0.0;  // shorter boundary arc
    double arc_b = 0.0;  // complementary arc, arc_a + arc_b = L
    double ratio_med = 0.0;
    double ratio_mv = 0.0;
};

struct OracleReport {
    double best_med = 0.0;
    double best_mv = 0.0;
    CutCandidate best_cut_med;
    CutCandidate best_cut_mv;
    int resolution = 0;
};

/// Brute-force lower bounds for both trace constants: evaluates every pair
/// of boundary sample points (uniform grid of `resolution` positions plus
/// all junctions) as a straight cut,
///   ratio_med = min(a, L-a) / cut,  ratio_mv = (2/L) a (L-a) / cut.
/// The maxima converge to the constants from below as the resolution grows.
OracleReport enumerate_segment_cuts(const ConvexBody& body, int resolution);

/// Extends the search on a convex polygon to two-segment polyline cuts
/// (middle vertex also on the boundary; the enclosed arc passes through it).
/// Exists to falsify the straight-cut reduction if it were wrong: the best
/// polyline cut must not beat the best single segment. max_segments is 1 or
/// 2; resolution is capped at 128 against combinatorial blowup.
OracleReport enumerate_polyline_cuts(const Polygon& polygon, int resolution, int max_segments);

}  // namespace traceconst
