#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "traceconst/cauchy.hpp"
#include "traceconst/constants.hpp"
#include "traceconst/geom.hpp"
#include "traceconst/oracle.hpp"
#include "traceconst/report.hpp"

namespace tc = traceconst;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    std::string shape;
    std::string output_dir = ".";
    std::vector<std::string> inputs;
    int a_grid = 2048;
    int s_grid = 4096;
    int quadrature = 4096;
    std::uint64_t seed = 42;
    int count = 200;
    int dim = 10;
    std::string format = "csv";
};

void check_grids(const RunConfig& cfg) {
    auto in_range = [](int v) { return v >= 64 && v <= 10'000'000; };
    if (!in_range(cfg.a_grid) || !in_range(cfg.s_grid) || !in_range(cfg.quadrature)) {
        throw tc::InvalidParams("grid sizes must lie in [64, 1e7]");
    }
}

fs::path output_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.output_dir);
    return fs::path(cfg.output_dir) / name;
}

double parse_real(const std::string& token) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw tc::ParseError("expected a number, got '" + token + "'");
    }
    return v;
}

/// Built-in shape mini-language:
///   disk | square | triangle | stadium:R:d | regular:k
tc::ConvexBody make_shape(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    const std::string& kind = parts[0];
    if (kind == "disk" && parts.size() == 1) {
        return tc::make_disk(1.0);
    }
    if (kind == "square" && parts.size() == 1) {
        return tc::polygon_to_body(tc::Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    }
    if (kind == "triangle" && parts.size() == 1) {
        return tc::make_regular_polygon(3, 1.0);
    }
    if (kind == "stadium" && parts.size() == 3) {
        return tc::make_stadium({parse_real(parts[1]), parse_real(parts[2])});
    }
    if (kind == "regular" && parts.size() == 2) {
        const double k = parse_real(parts[1]);
        if (k != std::floor(k) || k < 3 || k > 1e6) {
            throw tc::ParseError("regular:k needs an integer k >= 3");
        }
        return tc::make_regular_polygon(static_cast<int>(k), 1.0);
    }
    throw tc::ParseError("unknown shape '" + spec +
                         "' (expected disk, square, triangle, stadium:R:d, regular:k)");
}

std::string maximizer_text(const tc::TraceConstantReport& report) {
    if (report.attained_in_limit) {
        return "limit a->0";
    }
    return "chord at s=" + tc::format_double(report.maximizer->s) + " a=" +
           tc::format_double(report.maximizer->a);
}

// ---------------------------------------------------------------------------

int cmd_constants(const RunConfig& cfg) {
    check_grids(cfg);
    std::string name;
    tc::ConvexBody body = [&]() {
        if (!cfg.shape.empty()) {
            name = cfg.shape;
            return make_shape(cfg.shape);
        }
        if (cfg.inputs.size() == 1) {
            name = cfg.inputs.front();
            return tc::polygon_to_body(tc::read_polygon_file(cfg.inputs.front()));
        }
        throw tc::ParseError("constants needs --shape or exactly one --input file");
    }();

    const tc::TraceConstantPair pair = tc::trace_constants(body, cfg.a_grid, cfg.s_grid);
    std::cout << "body: " << name << " (perimeter " << tc::format_double(body.perimeter())
              << ")\n";
    std::cout << "c_med = " << tc::format_double(pair.med.value)
              << "  (ball lower bound " << tc::format_double(pair.med.lower_bound_check)
              << ", maximizer: " << maximizer_text(pair.med) << ")\n";
    std::cout << "c_mv  = " << tc::format_double(pair.mv.value)
              << "  (ball lower bound " << tc::format_double(pair.mv.lower_bound_check)
              << ", maximizer: " << maximizer_text(pair.mv) << ")\n";

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["body"] = name;
        doc["perimeter"] = body.perimeter();
        for (const auto* report : {&pair.med, &pair.mv}) {
            nlohmann::json entry;
            entry["value"] = report->value;
            entry["lower_bound"] = report->lower_bound_check;
            entry["maximizer"] = maximizer_text(*report);
            if (report->a_star) entry["a_star"] = *report->a_star;
            doc[report->kind == tc::ConstantKind::med ? "c_med" : "c_mv"] = entry;
        }
        const auto path = output_path(cfg, "constants.json");
        std::ofstream out(path);
        out << doc.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    } else {
        tc::CsvWriter csv({"body", "perimeter", "c_med", "c_med_maximizer", "c_med_a_star",
                           "c_mv", "c_mv_maximizer", "c_mv_a_star", "a_grid", "s_grid"});
        csv.add_row({name, tc::format_double(body.perimeter()),
                     tc::format_double(pair.med.value), maximizer_text(pair.med),
                     pair.med.a_star ? tc::format_double(*pair.med.a_star) : "",
                     tc::format_double(pair.mv.value), maximizer_text(pair.mv),
                     pair.mv.a_star ? tc::format_double(*pair.mv.a_star) : "",
                     std::to_string(cfg.a_grid), std::to_string(cfg.s_grid)});
        const auto path = output_path(cfg, "constants.csv");
        csv.write_file(path.string());
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_stadium_sweep(const RunConfig& cfg) {
    check_grids(cfg);
    const int samples = 129;
    std::vector<double> d_over_r(samples), closed(samples), optimized(samples), diff(samples);
    tc::CsvWriter csv({"d_over_R", "closed_form", "chord_optimizer", "abs_difference"});
    bool all_close = true;
    for (int i = 0; i < samples; ++i) {
        const double ratio = 2.0 * i / (samples - 1);
        const tc::StadiumParams params{1.0, ratio};
        const double exact = tc::stadium_c_mv_closed_form(params);
        const double numeric =
            tc::c_mv_convex(tc::make_stadium(params), cfg.a_grid, cfg.s_grid).value;
        d_over_r[i] = ratio;
        closed[i] = exact;
        optimized[i] = numeric;
        diff[i] = std::abs(numeric - exact);
        all_close = all_close && diff[i] < 1e-6;
        csv.add_row({tc::format_double(ratio), tc::format_double(exact),
                     tc::format_double(numeric), tc::format_double(diff[i])});
    }
    const auto csv_path = output_path(cfg, "stadium_sweep.csv");
    csv.write_file(csv_path.string());

    // Locate the kink as the largest second difference of the computed curve.
    int kink_index = 1;
    double best_curvature = 0.0;
    for (int i = 1; i + 1 < samples; ++i) {
        const double second = std::abs(optimized[i + 1] - 2.0 * optimized[i] + optimized[i - 1]);
        if (second > best_curvature) {
            best_curvature = second;
            kink_index = i;
        }
    }
    const double grid_step = d_over_r[1] - d_over_r[0];
    all_close = all_close && std::abs(d_over_r[kink_index] - (4.0 - kPi)) <= grid_step;
    std::cout << "kink located at d/R = " << tc::format_double(d_over_r[kink_index])
              << " (threshold 4 - pi = " << tc::format_double(4.0 - kPi) << ")\n";
    std::cout << "max |optimizer - closed form| = "
              << tc::format_double(*std::max_element(diff.begin(), diff.end())) << "\n";

    tc::SvgPlot plot("Stadium mean-value constant", "d / R", "C_mv");
    plot.add_series(d_over_r, closed, "#1f77b4", "closed form");
    plot.add_points(d_over_r, optimized, "#d62728", "chord optimizer");
    plot.add_vline(4.0 - kPi, "#2ca02c", "d/R = 4 - pi");
    const auto svg_path = output_path(cfg, "stadium_sweep.svg");
    plot.write_file(svg_path.string());
    std::cout << "wrote " << csv_path.string() << " and " << svg_path.string() << "\n";
    return all_close ? kExitOk : kExitAssertion;
}

int cmd_cauchy_check(const RunConfig& cfg) {
    check_grids(cfg);
    std::vector<std::pair<std::string, tc::Polygon>> polygons;
    if (cfg.inputs.empty()) {
        polygons.emplace_back("square", tc::Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
        polygons.emplace_back("l-shape", tc::Polygon({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5},
                                                      {0.5, 1}, {0, 1}}));
        polygons.emplace_back("star", [] {
            std::vector<tc::Point2> vs;
            for (int i = 0; i < 10; ++i) {
                const double r = (i % 2 == 0) ? 1.0 : 0.4;
                const double ang = kPi / 2.0 + 2.0 * kPi * i / 10.0;
                vs.push_back({r * std::cos(ang), r * std::sin(ang)});
            }
            return tc::Polygon(vs);
        }());
    } else {
        for (const auto& path : cfg.inputs) {
            polygons.emplace_back(path, tc::read_polygon_file(path));
        }
    }

    tc::CsvWriter csv({"polygon", "exact_perimeter", "by_crossings", "by_projections",
                       "convexity_gap", "convex"});
    std::vector<double> index, gaps;
    bool all_ok = true;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const auto& [name, poly] = polygons[i];
        const double exact = poly.perimeter();
        const double crossings = tc::perimeter_by_crossings(poly, cfg.quadrature);
        const double projections = tc::perimeter_by_projections(poly, cfg.quadrature);
        const double gap = tc::convexity_gap(poly, cfg.quadrature);
        const bool convex = poly.is_convex();

        const double quad_tol = 10.0 / cfg.quadrature;
        bool ok = std::abs(crossings - exact) <= quad_tol * exact;
        ok = ok && projections <= crossings + 1e-9;
        ok = ok && gap >= -1e-9;
        ok = ok && (convex ? gap < 1e-6 * exact : gap > 1e-6 * exact);
        all_ok = all_ok && ok;

        std::cout << name << ": perimeter " << tc::format_double(exact) << ", crossings "
                  << tc::format_double(crossings) << ", projections "
                  << tc::format_double(projections) << ", gap " << tc::format_double(gap)
                  << (convex ? " (convex)" : " (nonconvex)") << (ok ? "" : "  [VIOLATION]")
                  << "\n";
        csv.add_row({name, tc::format_double(exact), tc::format_double(crossings),
                     tc::format_double(projections), tc::format_double(gap),
                     convex ? "1" : "0"});
        index.push_back(static_cast<double>(i));
        gaps.push_back(gap);
    }
    const auto csv_path = output_path(cfg, "cauchy_check.csv");
    csv.write_file(csv_path.string());
    tc::SvgPlot plot("Projection deficit per polygon", "polygon index", "convexity gap");
    plot.add_points(index, gaps, "#d62728", "gap");
    plot.add_hline(0.0, "#1f77b4", "convex level");
    const auto svg_path = output_path(cfg, "cauchy_gap.svg");
    plot.write_file(svg_path.string());
    std::cout << "wrote " << csv_path.string() << " and " << svg_path.string() << "\n";
    return all_ok ? kExitOk : kExitAssertion;
}

int cmd_random_bodies(const RunConfig& cfg) {
    check_grids(cfg);
    const double med_bound = kPi / 2.0;
    tc::CsvWriter csv({"index", "seed", "n_points", "smoothing", "c_med", "c_mv",
                       "med_ok", "mv_ok", "ordering_ok", "strict_ok"});
    std::vector<double> med_values, mv_values;
    int violations = 0;
    for (int i = 0; i < cfg.count; ++i) {
        const std::uint64_t body_seed = cfg.seed + static_cast<std::uint64_t>(i);
        const int n_points = 6 + static_cast<int>(body_seed * 2654435761u % 19);  // 6..24
        const double smoothing = (i % 2 == 0) ? 0.0 : 0.1 + 0.9 * ((i / 2) % 10) / 10.0;
        const tc::ConvexBody body = tc::random_convex_body(body_seed, n_points, smoothing);
        const tc::TraceConstantPair pair = tc::trace_constants(body, cfg.a_grid, cfg.s_grid);

        const bool med_ok = pair.med.value >= med_bound - 1e-6;
        const bool mv_ok = pair.mv.value >= 2.0 - 1e-6;
        const bool ordering_ok = pair.med.value <= pair.mv.value + 1e-9;
        const bool strict_ok = smoothing > 0.0 || pair.med.value > med_bound + 1e-3;
        if (!(med_ok && mv_ok && ordering_ok && strict_ok)) ++violations;

        csv.add_row({std::to_string(i), std::to_string(body_seed), std::to_string(n_points),
                     tc::format_double(smoothing), tc::format_double(pair.med.value),
                     tc::format_double(pair.mv.value), med_ok ? "1" : "0", mv_ok ? "1" : "0",
                     ordering_ok ? "1" : "0", strict_ok ? "1" : "0"});
        med_values.push_back(pair.med.value);
        mv_values.push_back(pair.mv.value);

        // Oracle cross-check on a subsample: brute-force cuts may never beat
        // the chord optimizer.
        if (i % 25 == 0) {
            const tc::OracleReport oracle = tc::enumerate_segment_cuts(body, 256);
            if (oracle.best_med > pair.med.value + 1e-6 ||
                oracle.best_mv > pair.mv.value + 1e-6) {
                ++violations;
                std::cout << "oracle exceedance on body " << i << "\n";
            }
        }
    }
    const auto csv_path = output_path(cfg, "random_bodies.csv");
    csv.write_file(csv_path.string());

    tc::SvgPlot plot("Trace constants of random convex bodies", "c_med", "c_mv");
    plot.add_points(med_values, mv_values, "#1f77b4", "bodies");
    plot.add_vline(med_bound, "#d62728", "pi/2");
    plot.add_hline(2.0, "#2ca02c", "2");
    const auto svg_path = output_path(cfg, "random_bodies.svg");
    plot.write_file(svg_path.string());

    std::cout << cfg.count << " bodies, " << violations << " violations\n";
    std::cout << "min c_med = "
              << tc::format_double(*std::min_element(med_values.begin(), med_values.end()))
              << " (bound " << tc::format_double(med_bound) << "), min c_mv = "
              << tc::format_double(*std::min_element(mv_values.begin(), mv_values.end()))
              << " (bound 2)\n";
    std::cout << "wrote " << csv_path.string() << " and " << svg_path.string() << "\n";
    return violations == 0 ? kExitOk : kExitAssertion;
}

int cmd_ball_constant(const RunConfig& cfg) {
    if (cfg.dim < 2) {
        throw tc::InvalidDim("dimension must be at least 2");
    }
    tc::CsvWriter csv({"n", "gamma_form", "omega_form", "relative_difference"});
    double worst = 0.0;
    for (int n = 2; n <= cfg.dim; ++n) {
        const double by_gamma = tc::ball_constant_gamma(n);
        const double by_omega = tc::ball_constant_omega(n);
        const double rel = std::abs(by_gamma - by_omega) / by_omega;
        worst = std::max(worst, rel);
        std::cout << "n=" << n << ": " << tc::format_double(by_gamma)
                  << " (omega form " << tc::format_double(by_omega) << ", rel diff "
                  << tc::format_double(rel) << ")\n";
        csv.add_row({std::to_string(n), tc::format_double(by_gamma),
                     tc::format_double(by_omega), tc::format_double(rel)});
    }
    const auto csv_path = output_path(cfg, "ball_constants.csv");
    csv.write_file(csv_path.string());
    std::cout << "wrote " << csv_path.string() << "\n";
    return worst <= 1e-12 ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Trace-constant and Cauchy-formula experiments on planar bodies"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--out", cfg.output_dir, "output directory for CSV/SVG files");
        cmd->add_option("--a-grid", cfg.a_grid, "arc-split grid size");
        cmd->add_option("--s-grid", cfg.s_grid, "anchor grid size for the chord scan");
        cmd->add_option("--quad", cfg.quadrature, "angular quadrature points");
        cmd->add_option("--seed", cfg.seed, "random seed");
        cmd->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* constants = app.add_subcommand("constants", "trace constants of one body");
    constants->add_option("--shape", cfg.shape,
                          "disk | square | triangle | stadium:R:d | regular:k");
    constants->add_option("--input", cfg.inputs, "polygon file (text or JSON)");
    add_common(constants);

    CLI::App* sweep = app.add_subcommand("stadium-sweep",
                                         "closed form vs optimizer over d/R in [0, 2]");
    add_common(sweep);

    CLI::App* cauchy = app.add_subcommand("cauchy-check",
                                          "perimeter formulas and convexity gap");
    cauchy->add_option("--input", cfg.inputs, "polygon files (text or JSON)");
    add_common(cauchy);

    CLI::App* random = app.add_subcommand("random-bodies",
                                          "ball-minimality sweep over random convex bodies");
    random->add_option("--count", cfg.count, "number of bodies");
    add_common(random);

    CLI::App* ball = app.add_subcommand("ball-constant", "closed-form ball constants");
    ball->add_option("--dim", cfg.dim, "maximum dimension");
    add_common(ball);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (app.got_subcommand(constants)) return cmd_constants(cfg);
        if (app.got_subcommand(sweep)) return cmd_stadium_sweep(cfg);
        if (app.got_subcommand(cauchy)) return cmd_cauchy_check(cfg);
        if (app.got_subcommand(random)) return cmd_random_bodies(cfg);
        if (app.got_subcommand(ball)) return cmd_ball_constant(cfg);
    } catch (const tc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
