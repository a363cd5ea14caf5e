#include "traceconst/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "traceconst/parallel.hpp"

namespace traceconst {

namespace {

struct SampledBoundary {
    std::vector<double> s;
    std::vector<Point2> p;
    double perimeter = 0.0;
};

SampledBoundary sample_uniform_plus(const std::vector<double>& junctions, double L,
                                    int resolution) {
    std::vector<double> params = junctions;
    params.reserve(params.size() + static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        params.push_back(L * i / resolution);
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end(),
                             [L](double x, double y) { return y - x < 1e-13 * L; }),
                 params.end());
    SampledBoundary sampled;
    sampled.s = std::move(params);
    sampled.perimeter = L;
    return sampled;
}

CutCandidate evaluate_cut(const SampledBoundary& b, std::size_t i, std::size_t j,
                          double cut_length) {
    const double L = b.perimeter;
    CutCandidate cut;
    cut.s1 = b.s[i];
    cut.s2 = b.s[j];
    cut.cut_length = cut_length;
    const double a = b.s[j] - b.s[i];
    cut.arc_a = std::min(a, L - a);
    cut.arc_b = L - cut.arc_a;
    cut.ratio_med = cut.arc_a / cut_length;
    cut.ratio_mv = 2.0 / L * cut.arc_a * cut.arc_b / cut_length;
    return cut;
}

struct RunningBest {
    CutCandidate med;
    CutCandidate mv;
    void offer(const CutCandidate& cut) {
        if (cut.ratio_med > med.ratio_med) med = cut;
        if (cut.ratio_mv > mv.ratio_mv) mv = cut;
    }
};

OracleReport to_report(const RunningBest& best, int resolution) {
    OracleReport report;
    report.best_med = best.med.ratio_med;
    report.best_mv = best.mv.ratio_mv;
    report.best_cut_med = best.med;
    report.best_cut_mv = best.mv;
    report.resolution = resolution;
    return report;
}

}  // namespace

OracleReport enumerate_segment_cuts(const ConvexBody& body, int resolution) {
    if (resolution < 32) {
        throw OutOfRange("segment cut enumeration needs resolution >= 32");
    }
    const double L = body.perimeter();
    SampledBoundary b = sample_uniform_plus(body.junctions(), L, resolution);
    b.p.reserve(b.s.size());
    for (double s : b.s) b.p.push_back(body.point(s));

    const std::size_t n = b.s.size();
    std::vector<RunningBest> per_row(n);
    parallel_for(n, [&](std::size_t i) {
        RunningBest best;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cut = distance(b.p[i], b.p[j]);
            if (cut <= 0.0) continue;
            best.offer(evaluate_cut(b, i, j, cut));
        }
        per_row[i] = best;
    });
    RunningBest best;
    for (const auto& row : per_row) {
        best.offer(row.med);
        best.offer(row.mv);
    }
    return to_report(best, resolution);
}

OracleReport enumerate_polyline_cuts(const Polygon& polygon, int resolution, int max_segments) {
    if (!polygon.is_convex()) {
        throw NotConvex("polyline cut enumeration needs a convex polygon");
    }
    if (resolution < 16) {
        throw OutOfRange("polyline cut enumeration needs resolution >= 16");
    }
    if (resolution > 128) {
        throw ResolutionTooHigh("polyline cut enumeration is capped at resolution 128");
    }
    if (max_segments < 1 || max_segments > 2) {
        throw InvalidParams("max_segments must be 1 or 2");
    }
    const double L = polygon.perimeter();
    SampledBoundary b = sample_uniform_plus(polygon.vertex_positions(), L, resolution);
    b.p.reserve(b.s.size());
    for (double s : b.s) b.p.push_back(polygon.point(s));

    const std::size_t n = b.s.size();
    std::vector<RunningBest> per_row(n);
    parallel_for(n, [&](std::size_t i) {
        RunningBest best;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cut = distance(b.p[i], b.p[j]);
            if (cut > 0.0) {
                best.offer(evaluate_cut(b, i, j, cut));
            }
            if (max_segments < 2) continue;
            // Two-segment cuts i -> j -> k; the enclosed boundary arc runs
            // from s_i to s_k through the middle vertex. Ordered triples on a
            // convex boundary cannot self-cross.
            for (std::size_t k = j + 1; k < n; ++k) {
                const double len = distance(b.p[i], b.p[j]) + distance(b.p[j], b.p[k]);
                if (len <= 0.0) continue;
                best.offer(evaluate_cut(b, i, k, len));
            }
        }
        per_row[i] = best;
    });
    RunningBest best;
    for (const auto& row : per_row) {
        best.offer(row.med);
        best.offer(row.mv);
    }
    return to_report(best, resolution);
}

}  // namespace traceconst
