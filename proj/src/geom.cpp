#include "traceconst/geom.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <random>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace traceconst {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSmoothAngleTol = 1e-9;   // junction counts as smooth below this turn
constexpr double kTurnTol = 1e-9;          // allowed negative turn / total-turning slack
constexpr double kJunctionRelTol = 1e-12;  // relative arc-length window around junctions

/// Signed turn from direction u to direction v, in (-pi, pi].
double turn_angle(Point2 u, Point2 v) {
    return std::atan2(cross(u, v), dot(u, v));
}

}  // namespace

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
Point2 perp(Point2 p) { return {-p.y, p.x}; }

Point2 rotate(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// ---------------------------------------------------------------------------
// BoundaryPiece

double BoundaryPiece::length() const {
    if (const auto* seg = std::get_if<Segment>(&shape)) {
        return distance(seg->a, seg->b);
    }
    const auto& arc = std::get<Arc>(shape);
    return arc.radius * std::abs(arc.sweep);
}

Point2 BoundaryPiece::point_at(double t) const {
    if (const auto* seg = std::get_if<Segment>(&shape)) {
        const double len = distance(seg->a, seg->b);
        const double u = len > 0.0 ? t / len : 0.0;
        return {seg->a.x + u * (seg->b.x - seg->a.x), seg->a.y + u * (seg->b.y - seg->a.y)};
    }
    const auto& arc = std::get<Arc>(shape);
    const double dir = arc.sweep >= 0.0 ? 1.0 : -1.0;
    const double ang = arc.start_angle + dir * t / arc.radius;
    return {arc.center.x + arc.radius * std::cos(ang), arc.center.y + arc.radius * std::sin(ang)};
}

Point2 BoundaryPiece::tangent_at(double t) const {
    if (const auto* seg = std::get_if<Segment>(&shape)) {
        const double len = distance(seg->a, seg->b);
        return {(seg->b.x - seg->a.x) / len, (seg->b.y - seg->a.y) / len};
    }
    const auto& arc = std::get<Arc>(shape);
    const double dir = arc.sweep >= 0.0 ? 1.0 : -1.0;
    const double ang = arc.start_angle + dir * t / arc.radius;
    return {-dir * std::sin(ang), dir * std::cos(ang)};
}

Point2 BoundaryPiece::start_point() const { return point_at(0.0); }
Point2 BoundaryPiece::end_point() const { return point_at(length()); }
Point2 BoundaryPiece::start_tangent() const { return tangent_at(0.0); }
Point2 BoundaryPiece::end_tangent() const { return tangent_at(length()); }

// ---------------------------------------------------------------------------
// ConvexBody

ConvexBody::ConvexBody(std::vector<BoundaryPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        throw InvalidParams("boundary chain needs at least one piece");
    }
    cumulative_.reserve(pieces_.size());
    junctions_.reserve(pieces_.size());
    double acc = 0.0;
    for (const auto& piece : pieces_) {
        junctions_.push_back(acc);
        const double len = piece.length();
        if (!(len > 0.0)) {
            throw InvalidParams("boundary piece with nonpositive length");
        }
        acc += len;
        cumulative_.push_back(acc);
    }
    perimeter_ = acc;
    validate();
}

void ConvexBody::validate() {
    const double close_tol = kJunctionRelTol * perimeter_;
    const std::size_t n = pieces_.size();
    double total_turn = 0.0;
    double max_turn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& cur = pieces_[i];
        const auto& nxt = pieces_[(i + 1) % n];
        const Point2 end = cur.end_point();
        if (!std::isfinite(end.x) || !std::isfinite(end.y)) {
            throw InvalidParams("boundary piece with non-finite coordinates");
        }
        if (!(distance(end, nxt.start_point()) <= close_tol)) {
            throw InvalidParams("boundary chain is not closed");
        }
        const double turn = turn_angle(cur.end_tangent(), nxt.start_tangent());
        if (turn < -kTurnTol) {
            throw NotConvex("negative exterior turn at a junction");
        }
        total_turn += std::max(turn, 0.0);
        max_turn = std::max(max_turn, turn);
        if (const auto* arc = std::get_if<Arc>(&cur.shape)) {
            if (!(arc->radius > 0.0)) throw InvalidParams("arc with nonpositive radius");
            if (arc->sweep <= 0.0) throw NotConvex("arc bulging inward");
            total_turn += arc->sweep;
        }
    }
    if (std::abs(total_turn - 2.0 * kPi) > kTurnTol) {
        throw NotConvex("total turning differs from 2*pi");
    }
    has_corner_ = max_turn > kSmoothAngleTol;
    min_interior_angle_ = kPi - max_turn;
}

double ConvexBody::reduce(double s) const {
    double r = std::fmod(s, perimeter_);
    if (r < 0.0) r += perimeter_;
    if (r >= perimeter_) r = 0.0;
    return r;
}

std::pair<std::size_t, double> ConvexBody::locate(double s) const {
    const double r = reduce(s);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
    if (idx >= pieces_.size()) idx = pieces_.size() - 1;
    const double base = idx == 0 ? 0.0 : cumulative_[idx - 1];
    double t = r - base;
    const double len = cumulative_[idx] - base;
    t = std::clamp(t, 0.0, len);
    return {idx, t};
}

Point2 ConvexBody::point(double s) const {
    const auto [idx, t] = locate(s);
    return pieces_[idx].point_at(t);
}

Point2 ConvexBody::one_sided_tangent(double s, bool forward) const {
    auto [idx, t] = locate(s);
    const double base = idx == 0 ? 0.0 : cumulative_[idx - 1];
    const double len = cumulative_[idx] - base;
    const double eps = kJunctionRelTol * perimeter_;
    if (forward && t >= len - eps) {
        return pieces_[(idx + 1) % pieces_.size()].start_tangent();
    }
    if (!forward && t <= eps) {
        const std::size_t prev = (idx + pieces_.size() - 1) % pieces_.size();
        return pieces_[prev].end_tangent();
    }
    return pieces_[idx].tangent_at(t);
}

bool ConvexBody::smooth_at(double s) const {
    const Point2 fwd = one_sided_tangent(s, true);
    const Point2 bwd = one_sided_tangent(s, false);
    return std::abs(turn_angle(bwd, fwd)) <= kSmoothAngleTol;
}

Point2 ConvexBody::tangent(double s) const {
    const auto [idx, t] = locate(s);
    const double base = idx == 0 ? 0.0 : cumulative_[idx - 1];
    const double len = cumulative_[idx] - base;
    const double eps = kJunctionRelTol * perimeter_;
    if (t > eps && t < len - eps) {
        return pieces_[idx].tangent_at(t);
    }
    if (!smooth_at(s)) {
        throw AtVertex("no tangent at a non-smooth junction");
    }
    return one_sided_tangent(s, true);
}

// ---------------------------------------------------------------------------
// Polygon

namespace {

int orientation_sign(Point2 a, Point2 b, Point2 c, double eps) {
    const double v = cross(b - a, c - a);
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool on_segment(Point2 a, Point2 b, Point2 p, double eps) {
    return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
           std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, double eps) {
    const int o1 = orientation_sign(a, b, c, eps);
    const int o2 = orientation_sign(a, b, d, eps);
    const int o3 = orientation_sign(c, d, a, eps);
    const int o4 = orientation_sign(c, d, b, eps);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    if (o1 == 0 && on_segment(a, b, c, eps)) return true;
    if (o2 == 0 && on_segment(a, b, d, eps)) return true;
    if (o3 == 0 && on_segment(c, d, a, eps)) return true;
    if (o4 == 0 && on_segment(c, d, b, eps)) return true;
    return false;
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) {
        throw InvalidParams("polygon needs at least three vertices");
    }
    for (const auto& v : vertices_) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            throw InvalidParams("polygon vertex with non-finite coordinate");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            diameter_ = std::max(diameter_, distance(vertices_[i], vertices_[j]));
        }
    }
    if (!(diameter_ > 0.0)) {
        throw InvalidParams("degenerate polygon");
    }

    vertex_s_.reserve(n);
    double acc = 0.0;
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        vertex_s_.push_back(acc);
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const double len = distance(a, b);
        if (len <= 1e-14 * diameter_) {
            throw InvalidParams("repeated polygon vertex");
        }
        acc += len;
        area2 += cross(a, b);
    }
    perimeter_ = acc;
    signed_area_ = 0.5 * area2;
    if (!(signed_area_ > 0.0)) {
        throw InvalidParams("polygon must be counterclockwise with positive area");
    }

    // Simplicity: no two non-adjacent edges may meet.
    const double eps = 1e-14 * diameter_ * diameter_;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Point2 c = vertices_[j];
            const Point2 d = vertices_[(j + 1) % n];
            if (segments_intersect(a, b, c, d, eps)) {
                throw InvalidParams("polygon is not simple");
            }
        }
    }
}

bool Polygon::is_convex() const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const Point2 c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) < -1e-12 * diameter_ * diameter_) return false;
    }
    return true;
}

Point2 Polygon::point(double s) const {
    double r = std::fmod(s, perimeter_);
    if (r < 0.0) r += perimeter_;
    const auto it = std::upper_bound(vertex_s_.begin(), vertex_s_.end(), r);
    const std::size_t idx = static_cast<std::size_t>(it - vertex_s_.begin()) - 1;
    const Point2 a = vertices_[idx];
    const Point2 b = vertices_[(idx + 1) % vertices_.size()];
    const double len = distance(a, b);
    const double u = std::clamp((r - vertex_s_[idx]) / len, 0.0, 1.0);
    return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

// ---------------------------------------------------------------------------
// Constructors

double StadiumParams::semi_perimeter() const { return distance + kPi * radius; }

ConvexBody make_stadium(const StadiumParams& params) {
    const double R = params.radius;
    const double d = params.distance;
    if (!(R > 0.0) || !std::isfinite(R) || d < 0.0 || !std::isfinite(d)) {
        throw InvalidParams("stadium needs R > 0 and d >= 0");
    }
    std::vector<BoundaryPiece> pieces;
    const Point2 right_center{d / 2.0, 0.0};
    const Point2 left_center{-d / 2.0, 0.0};
    if (d > 0.0) {
        pieces.push_back({Segment{{-d / 2.0, -R}, {d / 2.0, -R}}});
        pieces.push_back({Arc{right_center, R, -kPi / 2.0, kPi}});
        pieces.push_back({Segment{{d / 2.0, R}, {-d / 2.0, R}}});
        pieces.push_back({Arc{left_center, R, kPi / 2.0, kPi}});
    } else {
        pieces.push_back({Arc{right_center, R, -kPi / 2.0, kPi}});
        pieces.push_back({Arc{left_center, R, kPi / 2.0, kPi}});
    }
    return ConvexBody(std::move(pieces));
}

ConvexBody make_disk(double radius, Point2 center) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidParams("disk needs a positive radius");
    }
    std::vector<BoundaryPiece> pieces;
    pieces.push_back({Arc{center, radius, 0.0, 2.0 * kPi}});
    return ConvexBody(std::move(pieces));
}

ConvexBody make_regular_polygon(int k, double circumradius) {
    if (k < 3) {
        throw InvalidParams("regular polygon needs k >= 3");
    }
    if (!(circumradius > 0.0)) {
        throw InvalidParams("regular polygon needs a positive circumradius");
    }
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(k));
    const double offset = -kPi / 2.0 + kPi / k;
    for (int j = 0; j < k; ++j) {
        const double ang = offset + 2.0 * kPi * j / k;
        vertices.push_back({circumradius * std::cos(ang), circumradius * std::sin(ang)});
    }
    return polygon_to_body(Polygon(std::move(vertices)));
}

ConvexBody polygon_to_body(const Polygon& polygon) {
    if (!polygon.is_convex()) {
        throw NotConvex("polygon fails the monotone-turning check");
    }
    const auto& vs = polygon.vertices();
    std::vector<BoundaryPiece> pieces;
    pieces.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        pieces.push_back({Segment{vs[i], vs[(i + 1) % vs.size()]}});
    }
    return ConvexBody(std::move(pieces));
}

Polygon body_to_polygon(const ConvexBody& body, int n_samples) {
    if (n_samples < 3) {
        throw InvalidParams("polygonization needs at least three samples");
    }
    const double L = body.perimeter();
    std::vector<double> params = body.junctions();
    for (int i = 0; i < n_samples; ++i) {
        params.push_back(L * i / n_samples);
    }
    std::sort(params.begin(), params.end());
    std::vector<Point2> vertices;
    vertices.reserve(params.size());
    double last = -1.0;
    for (double s : params) {
        if (s - last < 1e-9 * L) continue;
        last = s;
        vertices.push_back(body.point(s));
    }
    return Polygon(std::move(vertices));
}

// ---------------------------------------------------------------------------
// Random bodies

namespace {

/// Deterministic uniform doubles from mt19937_64 raw output; avoids the
/// implementation-defined std::uniform_real_distribution.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return {};
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Drop hull vertices with a nearly flat exterior turn; keeps corner
/// roundings away from huge radii.
std::vector<Point2> drop_flat_corners(std::vector<Point2> hull) {
    bool changed = true;
    while (changed && hull.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Point2 a = hull[(i + hull.size() - 1) % hull.size()];
            const Point2 b = hull[i];
            const Point2 c = hull[(i + 1) % hull.size()];
            const Point2 u = b - a;
            const Point2 v = c - b;
            const double turn = turn_angle({u.x / norm(u), u.y / norm(u)},
                                           {v.x / norm(v), v.y / norm(v)});
            if (turn < 1e-6) {
                hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return hull;
}

ConvexBody round_corners(const std::vector<Point2>& hull, double smoothing) {
    const std::size_t n = hull.size();
    std::vector<double> edge_len(n);
    std::vector<Point2> edge_dir(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e = hull[(i + 1) % n] - hull[i];
        edge_len[i] = norm(e);
        edge_dir[i] = {e.x / edge_len[i], e.y / edge_len[i]};
    }
    std::vector<double> offset(n);   // tangency distance from each vertex
    std::vector<double> turn(n);     // exterior turn at each vertex
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        turn[i] = turn_angle(edge_dir[prev], edge_dir[i]);
        offset[i] = 0.499 * smoothing * std::min(edge_len[prev], edge_len[i]);
    }
    std::vector<BoundaryPiece> pieces;
    pieces.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        const double rho = offset[i] / std::tan(turn[i] / 2.0);
        const Point2 q_in = hull[i] - offset[i] * edge_dir[prev];
        const Point2 n_prev = perp(edge_dir[prev]);
        const Point2 center = q_in + rho * n_prev;
        const double start_angle = std::atan2(q_in.y - center.y, q_in.x - center.x);
        pieces.push_back({Arc{center, rho, start_angle, turn[i]}});
        const Point2 q_out = hull[i] + offset[i] * edge_dir[i];
        const Point2 q_next_in = hull[(i + 1) % n] - offset[(i + 1) % n] * edge_dir[i];
        pieces.push_back({Segment{q_out, q_next_in}});
    }
    return ConvexBody(std::move(pieces));
}

}  // namespace

ConvexBody random_convex_body(std::uint64_t seed, int n_points, double smoothing) {
    if (n_points < 3) {
        throw InvalidParams("random body needs at least three points");
    }
    if (smoothing < 0.0 || smoothing > 1.0) {
        throw InvalidParams("smoothing must lie in [0, 1]");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(n_points));
        for (int i = 0; i < n_points; ++i) {
            const double r = std::sqrt(rng.uniform());
            const double ang = 2.0 * kPi * rng.uniform();
            pts.push_back({r * std::cos(ang), r * std::sin(ang)});
        }
        auto hull = drop_flat_corners(convex_hull(std::move(pts)));
        if (hull.size() < 3) continue;
        if (smoothing == 0.0) {
            return polygon_to_body(Polygon(std::move(hull)));
        }
        return round_corners(hull, smoothing);
    }
    throw DegenerateHull("random point set kept collapsing to a degenerate hull");
}

Polygon random_simple_polygon(std::uint64_t seed, int n_vertices, double irregularity) {
    if (n_vertices < 3) {
        throw InvalidParams("polygon needs at least three vertices");
    }
    if (irregularity < 0.0 || irregularity >= 1.0) {
        throw InvalidParams("irregularity must lie in [0, 1)");
    }
    Rng rng(seed);
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i) {
        const double jitter = (rng.uniform() - 0.5) * 0.9 * irregularity;
        const double ang = 2.0 * kPi * (i + 0.5 + jitter) / n_vertices;
        const double r = 1.0 + 0.75 * irregularity * (2.0 * rng.uniform() - 1.0);
        vertices.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return Polygon(std::move(vertices));
}

Polygon dent_vertex(const Polygon& polygon, std::size_t index, double depth) {
    const auto& vs = polygon.vertices();
    const std::size_t n = vs.size();
    if (index >= n) {
        throw InvalidParams("dent index out of range");
    }
    const Point2 prev = vs[(index + n - 1) % n];
    const Point2 next = vs[(index + 1) % n];
    const Point2 v = vs[index];
    const Point2 u = next - prev;
    const double uu = dot(u, u);
    const Point2 foot = prev + (dot(v - prev, u) / uu) * u;
    const Point2 dir = {2.0 * (foot.x - v.x), 2.0 * (foot.y - v.y)};

    // Cap the depth where the ray v + t*dir exits through a non-adjacent
    // edge, so deep dents on thin polygons cannot poke through the far side.
    double t_exit = 1e300;
    for (std::size_t e = 0; e < n; ++e) {
        if (e == index || (e + 1) % n == index) continue;
        const Point2 a = vs[e];
        const Point2 edge = vs[(e + 1) % n] - a;
        const double denom = cross(dir, edge);
        if (std::abs(denom) < 1e-300) continue;
        const double t = cross(a - v, edge) / denom;
        const double w = cross(a - v, dir) / denom;
        if (t > 1e-12 && w >= -1e-9 && w <= 1.0 + 1e-9) {
            t_exit = std::min(t_exit, t);
        }
    }
    double t = std::min(depth, 0.95 * t_exit);
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<Point2> dented = vs;
        dented[index] = {v.x + t * dir.x, v.y + t * dir.y};
        try {
            return Polygon(std::move(dented));
        } catch (const InvalidParams&) {
            t *= 0.5;
        }
    }
    throw InvalidParams("could not dent vertex without self-intersection");
}

// ---------------------------------------------------------------------------
// Rigid motions and dilations

namespace {

ConvexBody map_body(const ConvexBody& body, const std::function<Point2(Point2)>& f,
                    double scale, double angle_shift) {
    std::vector<BoundaryPiece> pieces;
    pieces.reserve(body.pieces().size());
    for (const auto& piece : body.pieces()) {
        if (const auto* seg = std::get_if<Segment>(&piece.shape)) {
            pieces.push_back({Segment{f(seg->a), f(seg->b)}});
        } else {
            const auto& arc = std::get<Arc>(piece.shape);
            pieces.push_back({Arc{f(arc.center), arc.radius * scale,
                                  arc.start_angle + angle_shift, arc.sweep}});
        }
    }
    return ConvexBody(std::move(pieces));
}

}  // namespace

ConvexBody scaled(const ConvexBody& body, double factor) {
    if (!(factor > 0.0)) throw InvalidParams("scale factor must be positive");
    return map_body(body, [factor](Point2 p) { return factor * p; }, factor, 0.0);
}

ConvexBody rotated(const ConvexBody& body, double angle) {
    return map_body(body, [angle](Point2 p) { return rotate(p, angle); }, 1.0, angle);
}

ConvexBody translated(const ConvexBody& body, Point2 offset) {
    return map_body(body, [offset](Point2 p) { return p + offset; }, 1.0, 0.0);
}

Polygon scaled(const Polygon& polygon, double factor) {
    if (!(factor > 0.0)) throw InvalidParams("scale factor must be positive");
    std::vector<Point2> vs;
    vs.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) vs.push_back(factor * v);
    return Polygon(std::move(vs));
}

Polygon rotated(const Polygon& polygon, double angle) {
    std::vector<Point2> vs;
    vs.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) vs.push_back(rotate(v, angle));
    return Polygon(std::move(vs));
}

Polygon translated(const Polygon& polygon, Point2 offset) {
    std::vector<Point2> vs;
    vs.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) vs.push_back(v + offset);
    return Polygon(std::move(vs));
}

// ---------------------------------------------------------------------------
// Input formats

namespace {

double parse_number(std::string_view token, int line_no) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected a number, got '" << std::string(token) << "'";
        throw ParseError(msg.str());
    }
    return value;
}

Polygon polygon_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON polygon: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("JSON polygon must be an array of [x, y] pairs");
    }
    std::vector<Point2> vertices;
    vertices.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw ParseError("JSON polygon entries must be [x, y] number pairs");
        }
        vertices.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    try {
        return Polygon(std::move(vertices));
    } catch (const InvalidParams& e) {
        throw ParseError(std::string("invalid polygon: ") + e.what());
    }
}

}  // namespace

Polygon read_polygon(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw ParseError("empty polygon input");
    }
    if (text[first] == '[') {
        return polygon_from_json(text);
    }
    std::vector<Point2> vertices;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string tx, ty, extra;
        if (!(fields >> tx)) continue;  // blank or comment-only line
        if (!(fields >> ty) || (fields >> extra)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'x y'";
            throw ParseError(msg.str());
        }
        vertices.push_back({parse_number(tx, line_no), parse_number(ty, line_no)});
    }
    // closure is implicit; tolerate files that repeat the first vertex
    if (vertices.size() > 3 && distance(vertices.front(), vertices.back()) == 0.0) {
        vertices.pop_back();
    }
    try {
        return Polygon(std::move(vertices));
    } catch (const InvalidParams& e) {
        throw ParseError(std::string("invalid polygon: ") + e.what());
    }
}

Polygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open polygon file: " + path);
    }
    return read_polygon(in);
}

}  // namespace traceconst
