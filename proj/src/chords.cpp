#include "traceconst/chords.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "traceconst/golden.hpp"

namespace traceconst {

namespace {

void check_split(const ConvexBody& body, double a) {
    if (!(a > 0.0) || a > body.perimeter() / 2.0 * (1.0 + 1e-14)) {
        throw OutOfRange("arc split must lie in (0, L/2]");
    }
}

}  // namespace

double chord_length(const ConvexBody& body, double s, double a) {
    check_split(body, a);
    return distance(body.point(s), body.point(s + a));
}

Chord make_chord(const ConvexBody& body, double s, double a) {
    check_split(body, a);
    Chord chord;
    chord.s = body.reduce(s);
    chord.a = a;
    chord.p0 = body.point(s);
    chord.p1 = body.point(s + a);
    chord.length = distance(chord.p0, chord.p1);
    return chord;
}

double stationarity_residual(const ConvexBody& body, double s, double a) {
    if (!(a > 0.0) || a >= body.perimeter()) {
        throw OutOfRange("arc split must lie in (0, L)");
    }
    const Point2 chord = body.point(s + a) - body.point(s);
    const Point2 dtan = body.tangent(s + a) - body.tangent(s);
    const double len = norm(chord);
    return dot(chord, dtan) / len;
}

double corner_limit_factor(const ConvexBody& body) {
    if (!body.has_corner()) return 1.0;
    return 1.0 / std::sin(body.min_interior_angle() / 2.0);
}

MinChordResult min_chord(const ConvexBody& body, double a, int s_grid) {
    check_split(body, a);
    if (s_grid < 64) {
        throw OutOfRange("min_chord needs a grid of at least 64 points");
    }
    const double L = body.perimeter();

    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(s_grid) + 3 * body.junctions().size());
    for (int i = 0; i < s_grid; ++i) {
        samples.push_back(L * i / s_grid);
    }
    for (double c : body.junctions()) {
        samples.push_back(body.reduce(c));
        samples.push_back(body.reduce(c - a));
        samples.push_back(body.reduce(c - a / 2.0));
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end(),
                              [L](double x, double y) { return y - x < 1e-14 * L; }),
                  samples.end());

    const std::size_t n = samples.size();
    std::vector<double> values(n);
    auto eval = [&body, a](double s) { return distance(body.point(s), body.point(s + a)); };
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = eval(samples[i]);
    }

    std::size_t grid_best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (values[i] < values[grid_best]) grid_best = i;
    }

    // Local minima of the cyclic sample sequence, plateau members included.
    const double tie_tol = 1e-12 * L;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = values[(i + n - 1) % n];
        const double next = values[(i + 1) % n];
        if (values[i] <= prev + tie_tol && values[i] <= next + tie_tol) {
            candidates.push_back(i);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&values](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    constexpr std::size_t kMaxRefinements = 24;
    if (candidates.size() > kMaxRefinements) candidates.resize(kMaxRefinements);

    MinChordResult result;
    result.a = a;
    result.min_length = values[grid_best];
    result.argmin_s = samples[grid_best];
    result.bracket_width = L / s_grid;

    const double tol = 1e-10 * L;
    auto in_bracket = [L](double lo, double hi, double s) {
        double rel = std::fmod(s - lo, L);
        if (rel < 0.0) rel += L;
        return lo + rel <= hi;
    };
    for (std::size_t idx : candidates) {
        // Unwrapped bracket around the candidate; the cyclic neighbors may
        // straddle s = 0.
        double lo = samples[(idx + n - 1) % n];
        double hi = samples[(idx + 1) % n];
        const double mid = samples[idx];
        if (lo > mid) lo -= L;
        if (hi < mid) hi += L;
        const GoldenResult refined = golden_section_min(eval, lo, hi, tol);
        const double s_refined = body.reduce(refined.x);
        if (refined.value < result.min_length) {
            result.min_length = refined.value;
            result.argmin_s = s_refined;
            result.bracket_width = refined.width;
        } else if (in_bracket(lo, hi, result.argmin_s)) {
            // Same basin as the incumbent: the refinement tightens the
            // bracket even when the sampled grid already hit the minimizer.
            result.bracket_width = std::min(result.bracket_width, refined.width);
            if (refined.value == result.min_length && s_refined < result.argmin_s) {
                result.argmin_s = s_refined;
            }
        } else if (refined.value == result.min_length && s_refined < result.argmin_s) {
            result.argmin_s = s_refined;
            result.bracket_width = refined.width;
        }
    }

    try {
        result.residual = stationarity_residual(body, result.argmin_s, a);
    } catch (const AtVertex&) {
        result.residual = std::numeric_limits<double>::quiet_NaN();
    }
    return result;
}

}  // namespace traceconst
