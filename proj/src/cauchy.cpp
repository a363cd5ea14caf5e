#include "traceconst/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "traceconst/parallel.hpp"

namespace traceconst {

namespace {

constexpr double kPi = 3.14159265358979323846;

double pairwise_sum(const std::vector<double>& values, std::size_t begin, std::size_t end) {
    const std::size_t count = end - begin;
    if (count <= 8) {
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += values[i];
        return acc;
    }
    const std::size_t mid = begin + count / 2;
    return pairwise_sum(values, begin, mid) + pairwise_sum(values, mid, end);
}

/// Quadrature grid anchored to the first edge direction, so a rigid motion
/// of the polygon reproduces the same integrand samples.
double grid_anchor(const Polygon& polygon) {
    const Point2 e = polygon.vertices()[1] - polygon.vertices()[0];
    return std::atan2(e.y, e.x);
}

template <typename F>
double angular_integral(const Polygon& polygon, int quadrature_points, F&& integrand) {
    if (quadrature_points < 16) {
        throw OutOfRange("angular quadrature needs at least 16 points");
    }
    const double h = 2.0 * kPi / quadrature_points;
    const double anchor = grid_anchor(polygon);
    std::vector<double> samples(static_cast<std::size_t>(quadrature_points));
    parallel_for(samples.size(), [&](std::size_t i) {
        const double theta = anchor + (static_cast<double>(i) + 0.5) * h;
        samples[i] = integrand(Direction::from_angle(theta));
    });
    return pairwise_sum(samples, 0, samples.size()) * h;
}

// Containment test for ear candidates. Points exactly on the ear boundary
// must block the clip (inclusive = true): a reflex vertex sitting on the ear
// chord would otherwise pinch the remaining ring into an overlapping chain.
bool inside_triangle(Point2 p, Point2 a, Point2 b, Point2 c, double eps, bool inclusive) {
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    if (inclusive) {
        return d1 >= -eps && d2 >= -eps && d3 >= -eps;
    }
    return d1 > eps && d2 > eps && d3 > eps;
}

}  // namespace

Direction Direction::from_angle(double theta) {
    Direction d;
    d.theta = theta;
    d.nu = {std::cos(theta), std::sin(theta)};
    d.nu_perp = {-d.nu.y, d.nu.x};
    return d;
}

std::vector<Triangle> triangulate(const Polygon& polygon) {
    const auto& vs = polygon.vertices();
    const double area_eps = 1e-14 * polygon.diameter() * polygon.diameter();
    std::vector<std::size_t> ring(vs.size());
    std::iota(ring.begin(), ring.end(), 0);

    std::vector<Triangle> triangles;
    triangles.reserve(vs.size() - 2);
    auto find_ear = [&](bool inclusive) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point2 a = vs[ring[(i + ring.size() - 1) % ring.size()]];
            const Point2 b = vs[ring[i]];
            const Point2 c = vs[ring[(i + 1) % ring.size()]];
            if (cross(b - a, c - b) < -area_eps) continue;  // reflex corner
            bool blocked = false;
            for (std::size_t j = 0; j < ring.size() && !blocked; ++j) {
                if (j == i || j == (i + ring.size() - 1) % ring.size() ||
                    j == (i + 1) % ring.size()) {
                    continue;
                }
                blocked = inside_triangle(vs[ring[j]], a, b, c, area_eps, inclusive);
            }
            if (!blocked) return static_cast<std::ptrdiff_t>(i);
        }
        return -1;
    };
    while (ring.size() > 3) {
        std::ptrdiff_t ear = find_ear(true);
        if (ear < 0) ear = find_ear(false);
        if (ear < 0) {
            throw TriangulationFailure("no ear found; polygon appears non-simple");
        }
        const std::size_t i = static_cast<std::size_t>(ear);
        triangles.push_back({vs[ring[(i + ring.size() - 1) % ring.size()]], vs[ring[i]],
                             vs[ring[(i + 1) % ring.size()]]});
        ring.erase(ring.begin() + ear);
    }
    triangles.push_back({vs[ring[0]], vs[ring[1]], vs[ring[2]]});
    return triangles;
}

double interval_union_length(std::vector<std::pair<double, double>> intervals, double merge_tol) {
    if (intervals.empty()) return 0.0;
    std::sort(intervals.begin(), intervals.end());
    double total = 0.0;
    double lo = intervals.front().first;
    double hi = intervals.front().second;
    for (const auto& [next_lo, next_hi] : intervals) {
        if (next_lo <= hi + merge_tol) {
            hi = std::max(hi, next_hi);
        } else {
            total += hi - lo;
            lo = next_lo;
            hi = next_hi;
        }
    }
    return total + (hi - lo);
}

double crossing_integral(const Polygon& polygon, const Direction& dir) {
    const auto& vs = polygon.vertices();
    double total = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2 e = vs[(i + 1) % vs.size()] - vs[i];
        // |cross(e, nu)| = edge length * |n_e . nu|
        total += std::abs(e.x * dir.nu.y - e.y * dir.nu.x);
    }
    return total;
}

namespace {

double extent_of_triangles(const std::vector<Triangle>& triangles, const Polygon& polygon,
                           const Direction& dir) {
    const double diameter = polygon.diameter();
    const double area_eps = 1e-14 * diameter * diameter;
    std::vector<std::pair<double, double>> intervals;
    intervals.reserve(triangles.size());
    for (const auto& tri : triangles) {
        if (0.5 * std::abs(cross(tri[1] - tri[0], tri[2] - tri[0])) < area_eps) {
            continue;  // needle triangle, measure-zero slice set
        }
        const double z0 = dot(tri[0], dir.nu_perp);
        const double z1 = dot(tri[1], dir.nu_perp);
        const double z2 = dot(tri[2], dir.nu_perp);
        intervals.emplace_back(std::min({z0, z1, z2}), std::max({z0, z1, z2}));
    }
    return interval_union_length(std::move(intervals), 1e-12 * diameter);
}

}  // namespace

double essential_projection_extent(const Polygon& polygon, const Direction& dir) {
    return extent_of_triangles(triangulate(polygon), polygon, dir);
}

ProjectionResult project(const Polygon& polygon, const Direction& dir) {
    ProjectionResult result;
    result.direction = dir;
    result.crossing_integral = crossing_integral(polygon, dir);
    result.essential_extent = essential_projection_extent(polygon, dir);
    return result;
}

double perimeter_by_crossings(const Polygon& polygon, int quadrature_points) {
    // omega_1 = 2, so the prefactor is 1/4.
    const double integral = angular_integral(polygon, quadrature_points,
        [&polygon](const Direction& dir) { return crossing_integral(polygon, dir); });
    return integral / 4.0;
}

double perimeter_by_projections(const Polygon& polygon, int quadrature_points) {
    const auto triangles = triangulate(polygon);
    const double integral = angular_integral(polygon, quadrature_points,
        [&](const Direction& dir) { return extent_of_triangles(triangles, polygon, dir); });
    return integral / 2.0;
}

double convexity_gap(const Polygon& polygon, int quadrature_points) {
    const auto triangles = triangulate(polygon);
    const double integral = angular_integral(polygon, quadrature_points,
        [&](const Direction& dir) {
            return crossing_integral(polygon, dir) / 4.0 -
                   extent_of_triangles(triangles, polygon, dir) / 2.0;
        });
    return integral;
}

}  // namespace traceconst
