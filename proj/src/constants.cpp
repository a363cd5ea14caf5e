#include "traceconst/constants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "traceconst/golden.hpp"
#include "traceconst/parallel.hpp"

namespace traceconst {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double ball_constant_gamma(int n) {
    if (n < 2) throw InvalidDim("ball constant needs dimension n >= 2");
    const double log_value = 0.5 * std::log(kPi) + std::log(n / 2.0) +
                             std::lgamma((n + 1) / 2.0) - std::lgamma((n + 2) / 2.0);
    return std::exp(log_value);
}

double ball_constant_omega(int n) {
    if (n < 2) throw InvalidDim("ball constant needs dimension n >= 2");
    // omega_k = volume of the unit k-ball, by the two-step recursion.
    std::vector<double> omega(static_cast<std::size_t>(n) + 1);
    omega[0] = 1.0;
    omega[1] = 2.0;
    for (int k = 2; k <= n; ++k) {
        omega[k] = omega[k - 2] * 2.0 * kPi / k;
    }
    return n * omega[n] / (2.0 * omega[n - 1]);
}

double ball_constant(int n) {
    const double by_gamma = ball_constant_gamma(n);
    const double by_omega = ball_constant_omega(n);
    if (std::abs(by_gamma - by_omega) > 1e-12 * by_omega) {
        throw Error("ball constant closed forms disagree");
    }
    return by_gamma;
}

double stadium_c_mv_closed_form(const StadiumParams& params) {
    if (!(params.radius > 0.0) || params.distance < 0.0) {
        throw InvalidParams("stadium needs R > 0 and d >= 0");
    }
    if (params.distance <= (4.0 - kPi) * params.radius) {
        return 2.0;
    }
    return (params.distance + kPi * params.radius) / (2.0 * params.radius);
}

double stadium_min_chord_closed_form(const StadiumParams& params, double a) {
    if (!(params.radius > 0.0) || params.distance < 0.0) {
        throw InvalidParams("stadium needs R > 0 and d >= 0");
    }
    const double p = params.semi_perimeter();
    if (!(a > 0.0) || a > p * (1.0 + 1e-14)) {
        throw OutOfRange("arc split must lie in (0, d + pi R]");
    }
    const double R = params.radius;
    if (a >= kPi * R) {
        return 2.0 * R;
    }
    return 2.0 * R * std::sin(a / (2.0 * R));
}

namespace {

std::vector<double> build_split_grid(double L, int a_grid) {
    const double half = L / 2.0;
    const int n_uniform = a_grid / 2;
    const int n_geometric = a_grid - n_uniform;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(a_grid));
    for (int j = 1; j <= n_uniform; ++j) {
        grid.push_back(half * j / n_uniform);
    }
    // Geometric tail toward a = 0, reaching 1e-6 * L.
    const double ratio = std::pow(2e-6, 1.0 / n_geometric);
    double a = half;
    for (int j = 1; j <= n_geometric; ++j) {
        a *= ratio;
        grid.push_back(a);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

struct GridBest {
    double value = -1.0;
    std::size_t index = 0;
};

TraceConstantReport finish_report(const ConvexBody& body, ConstantKind kind,
                                  const std::vector<double>& grid, GridBest best,
                                  double limit_value, int a_grid, int s_grid) {
    const double L = body.perimeter();
    auto objective = [&body, kind, L, s_grid](double a) {
        const double m = min_chord(body, a, s_grid).min_length;
        return kind == ConstantKind::med ? a / m : 2.0 / L * a * (L - a) / m;
    };

    double lo = best.index > 0 ? grid[best.index - 1] : std::max(grid[best.index] * 0.5, 1e-9 * L);
    double hi = best.index + 1 < grid.size() ? grid[best.index + 1] : L / 2.0;
    const GoldenResult refined = golden_section_max(objective, lo, hi, 1e-9 * L);

    TraceConstantReport report;
    report.kind = kind;
    report.a_grid = a_grid;
    report.s_grid = s_grid;
    report.lower_bound_check = kind == ConstantKind::med ? ball_constant(2) : 2.0;
    if (limit_value >= refined.value) {
        report.value = limit_value;
        report.attained_in_limit = true;
    } else {
        report.value = refined.value;
        report.attained_in_limit = false;
        report.a_star = refined.x;
        report.maximizer = make_chord(body, min_chord(body, refined.x, s_grid).argmin_s, refined.x);
    }
    return report;
}

}  // namespace

TraceConstantPair trace_constants(const ConvexBody& body, int a_grid, int s_grid) {
    if (a_grid < 16 || s_grid < 64) {
        throw OutOfRange("trace constants need a_grid >= 16 and s_grid >= 64");
    }
    const double L = body.perimeter();
    const std::vector<double> grid = build_split_grid(L, a_grid);
    const std::size_t n = grid.size();

    std::vector<double> med_values(n);
    std::vector<double> mv_values(n);
    parallel_for(n, [&](std::size_t i) {
        const double a = grid[i];
        const double m = min_chord(body, a, s_grid).min_length;
        med_values[i] = a / m;
        mv_values[i] = 2.0 / L * a * (L - a) / m;
    });

    GridBest med_best;
    GridBest mv_best;
    for (std::size_t i = 0; i < n; ++i) {
        if (med_values[i] > med_best.value) med_best = {med_values[i], i};
        if (mv_values[i] > mv_best.value) mv_best = {mv_values[i], i};
    }

    const double limit_factor = corner_limit_factor(body);
    TraceConstantPair pair;
    pair.med = finish_report(body, ConstantKind::med, grid, med_best, limit_factor,
                             a_grid, s_grid);
    pair.mv = finish_report(body, ConstantKind::mv, grid, mv_best, 2.0 * limit_factor,
                            a_grid, s_grid);
    return pair;
}

TraceConstantReport c_med_convex(const ConvexBody& body, int a_grid, int s_grid) {
    return trace_constants(body, a_grid, s_grid).med;
}

TraceConstantReport c_mv_convex(const ConvexBody& body, int a_grid, int s_grid) {
    return trace_constants(body, a_grid, s_grid).mv;
}

}  // namespace traceconst
