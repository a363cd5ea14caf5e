#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "traceconst/errors.hpp"

namespace traceconst {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 p);
double distance(Point2 a, Point2 b);
/// Counterclockwise rotation by a quarter turn.
Point2 perp(Point2 p);
Point2 rotate(Point2 p, double angle);

/// Straight boundary edge from a to b.
struct Segment {
    Point2 a;
    Point2 b;
};

/// Circular boundary arc. Positive sweep turns counterclockwise.
struct Arc {
    Point2 center;
    double radius = 0.0;
    double start_angle = 0.0;
    double sweep = 0.0;
};

/// One piece of a piecewise segment/arc boundary chain. Evaluation is
/// closed-form in the local arc-length parameter t in [0, length()].
struct BoundaryPiece {
    std::variant<Segment, Arc> shape;

    double length() const;
    Point2 point_at(double t) const;
    Point2 tangent_at(double t) const;
    Point2 start_point() const;
    Point2 end_point() const;
    Point2 start_tangent() const;
    Point2 end_tangent() const;
    bool is_arc() const { return std::holds_alternative<Arc>(shape); }
};

/// Planar convex body given by a closed counterclockwise chain of segments
/// and arcs, parametrized by arc length. The boundary point x(s) and unit
/// tangent x'(s) are exact (no quadrature); s is taken modulo the perimeter.
///
/// Construction validates closure (end of each piece meets the start of the
/// next within 1e-12 * perimeter), monotone counterclockwise turning with
/// total turning 2*pi within 1e-9, and strictly positive piece lengths.
class ConvexBody {
public:
    explicit ConvexBody(std::vector<BoundaryPiece> pieces);

    double perimeter() const { return perimeter_; }
    const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
    /// Cumulative arc length at the end of each piece; last entry equals perimeter().
    const std::vector<double>& cumulative_lengths() const { return cumulative_; }
    /// Arc-length positions of the piece starts (the junctions), ascending from 0.
    const std::vector<double>& junctions() const { return junctions_; }

    /// Boundary point x(s); s is reduced modulo the perimeter.
    Point2 point(double s) const;

    /// Unit tangent x'(s). Throws AtVertex when s lies on a junction whose
    /// one-sided tangents disagree; smooth junctions are fine.
    Point2 tangent(double s) const;

    /// One-sided unit tangent: the limit from above (forward) or below.
    Point2 one_sided_tangent(double s, bool forward) const;

    /// True when the one-sided tangents at s agree within tolerance
    /// (always true away from junctions).
    bool smooth_at(double s) const;

    /// Smallest interior angle over all non-smooth junctions, pi if none.
    double min_interior_angle() const { return min_interior_angle_; }
    bool has_corner() const { return has_corner_; }

    double reduce(double s) const;  // s mod perimeter, in [0, perimeter)

private:
    std::pair<std::size_t, double> locate(double s) const;
    void validate();

    std::vector<BoundaryPiece> pieces_;
    std::vector<double> cumulative_;
    std::vector<double> junctions_;
    double perimeter_ = 0.0;
    double min_interior_angle_ = 0.0;
    bool has_corner_ = false;
};

/// Simple closed polygon, counterclockwise, with positive area.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double perimeter() const { return perimeter_; }
    double signed_area() const { return signed_area_; }
    double diameter() const { return diameter_; }
    bool is_convex() const;

    /// Arc-length positions of the vertices, ascending from 0.
    const std::vector<double>& vertex_positions() const { return vertex_s_; }
    /// Boundary point at arc length s (modulo perimeter).
    Point2 point(double s) const;

private:
    std::vector<Point2> vertices_;
    std::vector<double> vertex_s_;
    double perimeter_ = 0.0;
    double signed_area_ = 0.0;
    double diameter_ = 0.0;
};

struct StadiumParams {
    double radius = 1.0;    // R > 0
    double distance = 0.0;  // d >= 0, center distance of the two disks
    double semi_perimeter() const;
};

/// Convex hull of two disks of equal radius; d = 0 degenerates to a disk.
/// Axis-aligned: flat parts parallel to the x axis, s = 0 at the left end of
/// the bottom flat (at the bottom of the circle when d = 0).
ConvexBody make_stadium(const StadiumParams& params);

ConvexBody make_disk(double radius, Point2 center = {0.0, 0.0});

/// Regular k-gon with the bottom edge horizontal; first vertex bottom-right.
ConvexBody make_regular_polygon(int k, double circumradius);

/// Segment-only body from a convex polygon; throws NotConvex otherwise.
/// Preserves the polygon's perimeter exactly.
ConvexBody polygon_to_body(const Polygon& polygon);

/// Inscribed polygonization: boundary samples at n uniform arc-length
/// positions plus all junctions.
Polygon body_to_polygon(const ConvexBody& body, int n_samples);

/// Convex hull of n pseudo-random points in the unit disk, deterministic in
/// the seed. smoothing in [0, 1] rounds every corner with a tangent arc
/// (0 = polygon, 1 = largest radius that fits, giving a C^1 boundary).
ConvexBody random_convex_body(std::uint64_t seed, int n_points, double smoothing);

/// Star-shaped simple polygon with random radii; irregularity in [0, 1)
/// controls the radial spread (0 gives a regular n-gon).
Polygon random_simple_polygon(std::uint64_t seed, int n_vertices, double irregularity);

/// Reflect vertex `index` toward the interior across its neighbor chord by
/// `depth` (1 = full mirror image). The depth is reduced automatically if the
/// result would self-intersect.
Polygon dent_vertex(const Polygon& polygon, std::size_t index, double depth = 1.0);

ConvexBody scaled(const ConvexBody& body, double factor);
ConvexBody rotated(const ConvexBody& body, double angle);
ConvexBody translated(const ConvexBody& body, Point2 offset);
Polygon scaled(const Polygon& polygon, double factor);
Polygon rotated(const Polygon& polygon, double angle);
Polygon translated(const Polygon& polygon, Point2 offset);

/// Parse a polygon from "x y" lines ('#' comments, blank lines ignored) or a
/// JSON array of [x, y] pairs. Vertices must be counterclockwise.
Polygon read_polygon(std::istream& in);
Polygon read_polygon_file(const std::string& path);

}  // namespace traceconst
