#pragma once

#include <array>
#include <vector>

#include "traceconst/geom.hpp"

namespace traceconst {

/// Unit direction on the circle together with its orthogonal complement.
struct Direction {
    double theta = 0.0;
    Point2 nu{1.0, 0.0};
    Point2 nu_perp{0.0, 1.0};

    static Direction from_angle(double theta);
};

struct ProjectionResult {
    Direction direction;
    double essential_extent = 0.0;    // 1-d measure of the sliced shadow on nu_perp
    double crossing_integral = 0.0;   // integral of the boundary crossing count
};

using Triangle = std::array<Point2, 3>;

/// Ear-clipping triangulation of a simple polygon. Throws
/// TriangulationFailure when no ear can be found (non-simple input).
std::vector<Triangle> triangulate(const Polygon& polygon);

/// Total length covered by a set of 1-d intervals, merging overlaps and gaps
/// below merge_tol.
double interval_union_length(std::vector<std::pair<double, double>> intervals, double merge_tol);

/// Integral over z of the number of boundary crossings of the line
/// z * nu_perp + R * nu. Exact finite sum: each edge contributes its length
/// times |cross(tau_e, nu)|, the projection of the edge normal on nu.
/// Vertex-incident lines form a null set and do not contribute.
double crossing_integral(const Polygon& polygon, const Direction& dir);

/// Measure of the z for which the line along nu through z meets the polygon
/// interior in positive length: triangulate, project every triangle on the
/// nu_perp axis, and merge the intervals.
double essential_projection_extent(const Polygon& polygon, const Direction& dir);

ProjectionResult project(const Polygon& polygon, const Direction& dir);

/// Perimeter through the crossing-count identity,
///   (1 / (2 omega_1)) * integral over S^1 of crossing_integral,
/// by midpoint quadrature on a uniform angle grid. Holds with equality for
/// every simple polygon, convex or not. Requires quadrature_points >= 16.
double perimeter_by_crossings(const Polygon& polygon, int quadrature_points = 4096);

/// Perimeter through projections (classical route),
///   (1 / omega_1) * integral over S^1 of essential_projection_extent.
/// Equals the perimeter exactly when the polygon is convex and falls
/// strictly short otherwise.
double perimeter_by_projections(const Polygon& polygon, int quadrature_points = 4096);

/// perimeter_by_crossings - perimeter_by_projections on a shared angle grid;
/// nonnegative, and zero (within tolerance) exactly for convex polygons.
double convexity_gap(const Polygon& polygon, int quadrature_points = 4096);

}  // namespace traceconst
