#pragma once

#include <cmath>
#include <utility>

namespace traceconst {

/// Result of a 1-d golden-section refinement. `x` carries the best argument
/// seen (including the original bracket endpoints), `value` its objective,
/// and `width` the final bracket width.
struct GoldenResult {
    double x = 0.0;
    double value = 0.0;
    double width = 0.0;
};

/// Golden-section minimization on [lo, hi] down to bracket width <= tol.
/// Assumes a unimodal objective inside the bracket; on plateaus it settles
/// anywhere on the plateau, which leaves the value correct.
template <typename F>
GoldenResult golden_section_min(F&& f, double lo, double hi, double tol) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenResult best{lo, f(lo), hi - lo};
    const double f_hi = f(hi);
    if (f_hi < best.value) {
        best.x = hi;
        best.value = f_hi;
    }
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    const double f_mid = f(mid);
    if (f_mid < best.value) {
        best.x = mid;
        best.value = f_mid;
    }
    if (fc < best.value) {
        best.x = c;
        best.value = fc;
    }
    if (fd < best.value) {
        best.x = d;
        best.value = fd;
    }
    best.width = b - a;
    return best;
}

/// Golden-section maximization; same contract as golden_section_min.
template <typename F>
GoldenResult golden_section_max(F&& f, double lo, double hi, double tol) {
    auto neg = [&f](double x) { return -f(x); };
    GoldenResult r = golden_section_min(neg, lo, hi, tol);
    r.value = -r.value;
    return r;
}

}  // namespace traceconst
