#pragma once

#include <optional>

#include "traceconst/chords.hpp"
#include "traceconst/geom.hpp"

namespace traceconst {

enum class ConstantKind { med, mv };

/// Result of the chord-reduction optimizer for one trace constant.
/// Either the supremum is attained by an interior chord (maximizer and
/// a_star set) or it is approached only in the limit of vanishing arc split
/// (attained_in_limit, with the analytic limit value).
struct TraceConstantReport {
    double value = 0.0;
    ConstantKind kind = ConstantKind::med;
    bool attained_in_limit = false;
    std::optional<Chord> maximizer;
    std::optional<double> a_star;
    double lower_bound_check = 0.0;  // ball constant the value must dominate
    int a_grid = 0;
    int s_grid = 0;
};

struct TraceConstantPair {
    TraceConstantReport med;
    TraceConstantReport mv;
};

/// Sharp boundary-trace constant of the n-ball,
///   sqrt(pi) * (n/2) * Gamma((n+1)/2) / Gamma((n+2)/2),
/// evaluated through log-Gamma differences and cross-checked against the
/// unit-ball volume ratio n*omega_n / (2*omega_{n-1}); the two routes must
/// agree to 1e-12 relative. Throws InvalidDim for n < 2.
double ball_constant(int n);
double ball_constant_gamma(int n);
double ball_constant_omega(int n);

/// Median-centered and mean-centered trace constants of a convex body,
/// computed together from one scan of the arc-split grid:
///   med: sup over a in (0, L/2] of a / m(a)
///   mv:  (2/L) * sup over a in (0, L/2] of a * (L - a) / m(a)
/// with m(a) = min_s |x(s+a) - x(s)|. The a-grid mixes uniform and geometric
/// spacing (down to 1e-6 * L, endpoint L/2 included), the best bracket is
/// refined by golden section, and the analytic a -> 0 limits
/// (corner_limit_factor and twice it) compete as first-class values.
TraceConstantPair trace_constants(const ConvexBody& body, int a_grid = 2048, int s_grid = 4096);

TraceConstantReport c_med_convex(const ConvexBody& body, int a_grid = 2048, int s_grid = 4096);
TraceConstantReport c_mv_convex(const ConvexBody& body, int a_grid = 2048, int s_grid = 4096);

/// Mean-centered constant of the stadium family:
///   2 for d <= (4 - pi) R, (d + pi R) / (2 R) above; continuous at the
///   threshold.
double stadium_c_mv_closed_form(const StadiumParams& params);

/// Minimum chord of the stadium at arc split a in (0, d + pi R]:
///   2 R for a >= pi R, 2 R sin(a / 2R) below.
double stadium_min_chord_closed_form(const StadiumParams& params, double a);

}  // namespace traceconst
