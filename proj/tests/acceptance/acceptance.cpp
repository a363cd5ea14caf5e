// Acceptance suite: one check per shipped guarantee, fixed grids and
// tolerances, one PASS/FAIL line each. Returns the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "traceconst/cauchy.hpp"
#include "traceconst/constants.hpp"
#include "traceconst/geom.hpp"
#include "traceconst/oracle.hpp"

using namespace traceconst;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome outcome;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            outcome.pass = false;
            if (!outcome.detail.empty()) outcome.detail += "; ";
            outcome.detail += what;
        }
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

ConvexBody unit_square_body() {
    return polygon_to_body(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

ConvexBody seeded_body(int i, std::uint64_t seed0, double* smoothing_out) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    const int n_points = 6 + static_cast<int>((seed * 2654435761ull) % 19);  // 6..24
    const double smoothing = (i % 2 == 0) ? 0.0 : 0.1 + 0.9 * ((i / 2) % 10) / 10.0;
    if (smoothing_out) *smoothing_out = smoothing;
    return random_convex_body(seed, n_points, smoothing);
}

Polygon random_convex_polygon(std::uint64_t seed) {
    return body_to_polygon(random_convex_body(seed, 12, 0.0), 3);
}

Polygon dent_deepest_vertex(const Polygon& poly, double depth) {
    const auto& vs = poly.vertices();
    std::size_t best = 0;
    double best_offset = -1.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2 prev = vs[(i + vs.size() - 1) % vs.size()];
        const Point2 next = vs[(i + 1) % vs.size()];
        const Point2 u = next - prev;
        const double off = std::abs(cross(u, vs[i] - prev)) / norm(u);
        if (off > best_offset) {
            best_offset = off;
            best = i;
        }
    }
    return dent_vertex(poly, best, depth);
}

// Running record for the ordering criterion: every body any suite touches.
struct OrderingLedger {
    bool pass = true;
    int bodies = 0;
    double worst_slack = -1e300;
    void record(const TraceConstantPair& pair) {
        ++bodies;
        const double slack = pair.med.value - pair.mv.value;
        worst_slack = std::max(worst_slack, slack);
        if (slack > 1e-9) pass = false;
    }
};

OrderingLedger g_ordering;

// --------------------------------------------------------------------------

Outcome criterion1_ball_constants() {
    Check c;
    c.require(std::abs(ball_constant(2) - kPi / 2.0) < 1e-12, "ball_constant(2) != pi/2");
    c.require(std::abs(ball_constant(3) - 2.0) < 1e-12, "ball_constant(3) != 2");
    for (int n = 2; n <= 50; ++n) {
        const double g = ball_constant_gamma(n);
        const double w = ball_constant_omega(n);
        if (std::abs(g - w) > 1e-12 * w) {
            c.require(false, "closed forms disagree at n=" + std::to_string(n));
        }
    }
    c.outcome.detail = "C(2)=" + fmt(ball_constant(2)) + ", C(3)=" + fmt(ball_constant(3));
    return c.outcome;
}

Outcome criterion2_disk_constants() {
    Check c;
    const ConvexBody disk = make_disk(1.0);
    const TraceConstantPair pair = trace_constants(disk, 2048, 4096);
    g_ordering.record(pair);
    c.require(std::abs(pair.mv.value - 2.0) < 1e-8, "c_mv(disk) != 2");
    c.require(pair.mv.attained_in_limit, "c_mv(disk) maximizer is not the a->0 limit");
    c.require(std::abs(pair.med.value - kPi / 2.0) < 1e-6, "c_med(disk) != pi/2");
    c.require(!pair.med.attained_in_limit && pair.med.a_star.has_value(),
              "c_med(disk) has no interior maximizer");
    if (pair.med.a_star) {
        c.require(std::abs(*pair.med.a_star - kPi) < 1e-6 * disk.perimeter(),
                  "c_med(disk) maximizer is not at a = L/2");
    }
    c.outcome.detail = "c_med=" + fmt(pair.med.value) + ", c_mv=" + fmt(pair.mv.value);
    return c.outcome;
}

Outcome criterion3_stadium_optimizer() {
    Check c;
    double worst = 0.0;
    for (double d : {0.2, 0.5, 4.0 - kPi, 1.0, 1.5, 2.0}) {
        const StadiumParams params{1.0, d};
        const double closed = stadium_c_mv_closed_form(params);
        const TraceConstantPair pair = trace_constants(make_stadium(params), 2048, 4096);
        g_ordering.record(pair);
        const double diff = std::abs(pair.mv.value - closed);
        worst = std::max(worst, diff);
        c.require(diff < 1e-6, "optimizer vs closed form at d=" + fmt(d));
        if (d <= 4.0 - kPi) {
            c.require(closed == 2.0, "low branch must be exactly 2 at d=" + fmt(d));
        } else {
            c.require(closed == (d + kPi) / 2.0, "high branch formula at d=" + fmt(d));
        }
    }
    c.outcome.detail = "max |optimizer - closed| = " + fmt(worst);
    return c.outcome;
}

Outcome criterion4_stadium_min_chord() {
    Check c;
    const StadiumParams params{1.0, 2.0};
    const ConvexBody stadium = make_stadium(params);
    const double p = params.semi_perimeter();
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double a = p * i / 50.0;
        const double numeric = min_chord(stadium, a, 4096).min_length;
        const double closed = stadium_min_chord_closed_form(params, a);
        const double diff = std::abs(numeric - closed);
        worst = std::max(worst, diff);
        c.require(diff < 1e-8, "min chord law at a=" + fmt(a));
    }
    c.outcome.detail = "max deviation " + fmt(worst) + " over 50 splits";
    return c.outcome;
}

Outcome criterion5_crossing_formula() {
    Check c;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Polygon poly = (i % 2 == 0)
                                 ? random_convex_polygon(500 + i)
                                 : random_simple_polygon(700 + i, 8 + i % 9, 0.55);
        const double computed = perimeter_by_crossings(poly, 4096);
        const double rel = std::abs(computed - poly.perimeter()) / poly.perimeter();
        worst = std::max(worst, rel);
        c.require(rel < 1e-5, "crossing formula off by " + fmt(rel) + " on polygon " +
                                  std::to_string(i));
    }
    c.outcome.detail = "worst relative error " + fmt(worst) + " over 20 polygons";
    return c.outcome;
}

Outcome criterion6_projection_dichotomy() {
    Check c;
    double worst_convex = 0.0;
    double smallest_deficit = 1e300;
    int correct = 0;
    std::vector<Polygon> dented;
    for (int i = 0; i < 20; ++i) {
        const Polygon poly = random_convex_polygon(900 + i);
        const double projections = perimeter_by_projections(poly, 4096);
        const double rel = std::abs(projections - poly.perimeter()) / poly.perimeter();
        worst_convex = std::max(worst_convex, rel);
        c.require(rel < 1e-5, "projection formula on convex polygon " + std::to_string(i));
        if (convexity_gap(poly, 4096) < 1e-4) ++correct;
        if (i < 10) dented.push_back(dent_deepest_vertex(poly, 0.8));
    }
    for (std::size_t i = 0; i < dented.size(); ++i) {
        const Polygon& poly = dented[i];
        c.require(!poly.is_convex(), "dent failed to create a reflex vertex");
        const double deficit = poly.perimeter() - perimeter_by_projections(poly, 4096);
        smallest_deficit = std::min(smallest_deficit, deficit);
        c.require(deficit > 1e-3, "projection deficit too small on dent " + std::to_string(i));
        if (convexity_gap(poly, 4096) >= 1e-4) ++correct;
    }
    c.require(correct == 30, "convexity gap misclassified " + std::to_string(30 - correct) +
                                 " of 30 polygons");
    c.outcome.detail = "worst convex error " + fmt(worst_convex) + ", smallest deficit " +
                       fmt(smallest_deficit);
    return c.outcome;
}

Outcome criterion7_ball_minimality() {
    Check c;
    double min_med = 1e300;
    double min_mv = 1e300;
    double min_strict = 1e300;
    for (int i = 0; i < 200; ++i) {
        double smoothing = 0.0;
        const ConvexBody body = seeded_body(i, 4200, &smoothing);
        const TraceConstantPair pair = trace_constants(body, 2048, 4096);
        g_ordering.record(pair);
        min_med = std::min(min_med, pair.med.value);
        min_mv = std::min(min_mv, pair.mv.value);
        if (pair.med.value < kPi / 2.0 - 1e-6) {
            c.require(false, "c_med below the disk bound on body " + std::to_string(i));
        }
        if (pair.mv.value < 2.0 - 1e-6) {
            c.require(false, "c_mv below 2 on body " + std::to_string(i));
        }
        if (smoothing == 0.0) {
            min_strict = std::min(min_strict, pair.med.value);
            if (pair.med.value <= kPi / 2.0 + 1e-3) {
                c.require(false, "polygonal body not strictly above pi/2: body " +
                                     std::to_string(i));
            }
        }
    }
    c.outcome.detail = "min c_med=" + fmt(min_med) + ", min c_mv=" + fmt(min_mv) +
                       ", min polygonal c_med=" + fmt(min_strict) + " over 200 bodies";
    return c.outcome;
}

Outcome criterion8_oracle_consistency() {
    Check c;
    struct Case {
        std::string name;
        ConvexBody body;
    };
    const std::vector<Case> cases = {
        {"disk", make_disk(1.0)},
        {"square", unit_square_body()},
        {"triangle", make_regular_polygon(3, 1.0)},
        {"stadium(1,0.5)", make_stadium({1.0, 0.5})},
        {"stadium(1,2)", make_stadium({1.0, 2.0})},
    };
    double worst_gap = 0.0;
    for (const auto& item : cases) {
        const TraceConstantPair pair = trace_constants(item.body, 2048, 4096);
        g_ordering.record(pair);
        const OracleReport oracle = enumerate_segment_cuts(item.body, 512);
        c.require(oracle.best_med <= pair.med.value + 1e-6,
                  item.name + ": oracle exceeds the med optimizer");
        c.require(oracle.best_mv <= pair.mv.value + 1e-6,
                  item.name + ": oracle exceeds the mv optimizer");
        c.require(oracle.best_med >= pair.med.value - 2e-2,
                  item.name + ": oracle med too far below the optimizer");
        c.require(oracle.best_mv >= pair.mv.value - 2e-2,
                  item.name + ": oracle mv too far below the optimizer");
        worst_gap = std::max({worst_gap, pair.med.value - oracle.best_med,
                              pair.mv.value - oracle.best_mv});

        const Polygon poly = body_to_polygon(item.body, 96);
        const OracleReport single = enumerate_polyline_cuts(poly, 64, 1);
        const OracleReport doubled = enumerate_polyline_cuts(poly, 64, 2);
        c.require(doubled.best_med <= single.best_med + 1e-6,
                  item.name + ": two-segment cut improved the med ratio");
        c.require(doubled.best_mv <= single.best_mv + 1e-6,
                  item.name + ": two-segment cut improved the mv ratio");
    }
    c.outcome.detail = "largest optimizer-oracle gap " + fmt(worst_gap);
    return c.outcome;
}

Outcome criterion9_invariance() {
    Check c;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const ConvexBody body = random_convex_body(7000 + i, 8 + i % 5, (i % 2) * 0.5);
        const TraceConstantPair base = trace_constants(body, 2048, 4096);
        g_ordering.record(base);
        auto compare = [&](const ConvexBody& other, const std::string& what) {
            const TraceConstantPair pair = trace_constants(other, 2048, 4096);
            g_ordering.record(pair);
            const double rel_med = std::abs(pair.med.value - base.med.value) / base.med.value;
            const double rel_mv = std::abs(pair.mv.value - base.mv.value) / base.mv.value;
            worst = std::max({worst, rel_med, rel_mv});
            c.require(rel_med < 1e-8 && rel_mv < 1e-8,
                      what + " changed a constant on body " + std::to_string(i));
        };
        for (double lambda : {0.5, 2.0, 10.0}) {
            compare(scaled(body, lambda), "dilation by " + fmt(lambda));
        }
        compare(rotated(body, 0.61), "rotation");
        compare(translated(body, {13.0, -4.5}), "translation");
    }
    c.outcome.detail = "worst relative change " + fmt(worst) + " over 10 bodies x 5 motions";
    return c.outcome;
}

Outcome criterion10_ordering() {
    Check c;
    c.require(g_ordering.pass, "c_med exceeded c_mv + 1e-9 somewhere");
    c.outcome.detail = "worst c_med - c_mv = " + fmt(g_ordering.worst_slack) + " over " +
                       std::to_string(g_ordering.bodies) + " optimizer runs";
    return c.outcome;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "ball constants (closed forms)", 0.001, criterion1_ball_constants},
        {2, "disk constants via the chord optimizer", 5.0, criterion2_disk_constants},
        {3, "stadium closed form vs optimizer", 30.0, criterion3_stadium_optimizer},
        {4, "stadium minimum chord law", 5.0, criterion4_stadium_min_chord},
        {5, "crossing formula equality on simple polygons", 10.0, criterion5_crossing_formula},
        {6, "projection formula dichotomy", 10.0, criterion6_projection_dichotomy},
        {7, "ball minimality over 200 random bodies", 600.0, criterion7_ball_minimality},
        {8, "oracle consistency and cut reduction", 300.0, criterion8_oracle_consistency},
        {9, "dilation/rotation/translation invariance", 120.0, criterion9_invariance},
        {10, "ordering c_med <= c_mv", 1.0, criterion10_ordering},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > entry.budget_seconds) {
            outcome.pass = false;
            outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("runtime ") +
                              fmt(seconds) + " s over the " + fmt(entry.budget_seconds) +
                              " s budget";
        }
        std::printf("[%s] criterion %2d: %s - %s (%.3f s)\n",
                    outcome.pass ? "PASS" : "FAIL", entry.id, entry.name,
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", entries.size());
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
