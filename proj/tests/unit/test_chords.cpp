#include "doctest.h"

#include <cmath>
#include <vector>

#include "traceconst/chords.hpp"

using namespace traceconst;

namespace {

constexpr double kPi = 3.14159265358979323846;

ConvexBody unit_square_body() {
    return polygon_to_body(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

/// Brute-force oracle for the corner chord limit: shortest chord across a
/// single corner of interior angle theta at arc split a, by scanning the
/// split t of the two leg lengths.
double corner_chord_oracle(double theta, double a) {
    double best = a;
    const int steps = 20000;
    for (int i = 0; i <= steps; ++i) {
        const double t = a * i / steps;
        const double len2 = t * t + (a - t) * (a - t) - 2.0 * t * (a - t) * std::cos(theta);
        best = std::min(best, std::sqrt(std::max(len2, 0.0)));
    }
    return best;
}

}  // namespace

TEST_CASE("chord lengths on the disk follow the circle law") {
    const ConvexBody disk = make_disk(1.0);
    CHECK(chord_length(disk, 0.0, kPi) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chord_length(disk, 1.234, kPi) == doctest::Approx(2.0).epsilon(1e-12));
    for (double theta : {0.3, 1.0, 2.0, 3.0}) {
        for (double s : {0.0, 0.7, 4.2}) {
            CHECK(chord_length(disk, s, theta) ==
                  doctest::Approx(2.0 * std::sin(theta / 2.0)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(chord_length(disk, 0.0, 0.0), OutOfRange);
    CHECK_THROWS_AS(chord_length(disk, 0.0, kPi + 0.1), OutOfRange);
}

TEST_CASE("stadium chord orthogonal to the flats") {
    const ConvexBody stadium = make_stadium({1.0, 2.0});
    // s = 2 starts the right cap; the chord to s = 2 + pi spans the cap vertically
    CHECK(chord_length(stadium, 2.0, kPi) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("min chord matches the stadium case analysis") {
    const ConvexBody stadium = make_stadium({1.0, 2.0});
    const MinChordResult below = min_chord(stadium, 2.0);
    CHECK(below.min_length == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-10));
    const MinChordResult above = min_chord(stadium, 4.0);
    CHECK(above.min_length == doctest::Approx(2.0).epsilon(1e-10));

    const ConvexBody disk = make_disk(1.0);
    const MinChordResult quarter = min_chord(disk, kPi / 2.0);
    CHECK(quarter.min_length == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    CHECK_THROWS_AS(min_chord(disk, 0.0, 4096), OutOfRange);
    CHECK_THROWS_AS(min_chord(disk, 1.0, 16), OutOfRange);
}

TEST_CASE("disk minimum chord law over the full split range") {
    const ConvexBody disk = make_disk(1.0);
    for (int i = 1; i <= 24; ++i) {
        const double a = kPi * i / 24.0;
        CHECK(std::abs(min_chord(disk, a, 512).min_length - 2.0 * std::sin(a / 2.0)) < 1e-9);
    }
}

TEST_CASE("minimum chord is 1-Lipschitz in the split") {
    const ConvexBody body = random_convex_body(19, 11, 0.3);
    const double L = body.perimeter();
    std::vector<double> splits = {0.05 * L, 0.11 * L, 0.18 * L, 0.27 * L, 0.39 * L, 0.5 * L};
    std::vector<double> values;
    values.reserve(splits.size());
    for (double a : splits) values.push_back(min_chord(body, a, 1024).min_length);
    for (std::size_t i = 0; i < splits.size(); ++i) {
        for (std::size_t j = i + 1; j < splits.size(); ++j) {
            CHECK(std::abs(values[i] - values[j]) <=
                  std::abs(splits[i] - splits[j]) * (1.0 + 1e-9));
        }
    }
    // chord never exceeds its arc
    for (std::size_t i = 0; i < splits.size(); ++i) {
        CHECK(values[i] <= splits[i] * (1.0 + 1e-12));
    }
}

TEST_CASE("stationarity residual") {
    const ConvexBody disk = make_disk(1.0);
    for (double s : {0.0, 1.1, 2.9}) {
        for (double a : {0.5, 1.5, kPi}) {
            CHECK(std::abs(stationarity_residual(disk, s, a)) < 1e-10);
        }
    }

    const ConvexBody stadium = make_stadium({1.0, 2.0});
    // vertical chord on the right cap, split a < pi R
    const double a = 2.0;
    const double s_sym = 2.0 + (kPi - a) / 2.0;
    CHECK(std::abs(stationarity_residual(stadium, s_sym, a)) < 1e-8);

    // horizontal chord between the two caps: stationary anchor with a sign
    // change of the residual across it
    const double a_par = 2.0 + kPi / 2.0;
    const double s0 = 2.0 + 3.0 * kPi / 4.0;
    CHECK(std::abs(stationarity_residual(stadium, s0, a_par)) < 1e-9);
    const double before = stationarity_residual(stadium, s0 - 0.1, a_par);
    const double after = stationarity_residual(stadium, s0 + 0.1, a_par);
    CHECK(before * after < 0.0);

    const ConvexBody square = unit_square_body();
    CHECK_THROWS_AS((void)stationarity_residual(square, 1.0, 0.5), AtVertex);
}

TEST_CASE("residual vanishes at the argmin on smooth bodies") {
    const ConvexBody bodies[] = {make_disk(1.0), make_stadium({1.0, 2.0}),
                                 random_convex_body(23, 9, 1.0)};
    for (const auto& body : bodies) {
        const double L = body.perimeter();
        for (double frac : {0.12, 0.3, 0.5}) {
            const MinChordResult r = min_chord(body, frac * L, 2048);
            if (std::isnan(r.residual)) continue;
            CHECK(std::abs(r.residual) < 1e-6);
        }
    }
}

TEST_CASE("corner limit factor") {
    const ConvexBody square = unit_square_body();
    CHECK(corner_limit_factor(square) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const ConvexBody triangle = make_regular_polygon(3, 1.0);
    CHECK(corner_limit_factor(triangle) == doctest::Approx(2.0).epsilon(1e-12));

    const ConvexBody rounded = random_convex_body(8, 10, 1.0);
    CHECK(corner_limit_factor(rounded) == doctest::Approx(1.0));

    // cross-check against the brute-force corner oracle
    for (double theta : {kPi / 2.0, kPi / 3.0, 2.0 * kPi / 3.0}) {
        const double a = 1e-3;
        const double oracle = a / corner_chord_oracle(theta, a);
        CHECK(oracle == doctest::Approx(1.0 / std::sin(theta / 2.0)).epsilon(1e-6));
    }
}

TEST_CASE("small splits approach the corner limit") {
    const ConvexBody square = unit_square_body();
    const ConvexBody triangle = make_regular_polygon(3, 1.0);
    for (const auto& body : {square, triangle}) {
        const double L = body.perimeter();
        const double a = 1e-4 * L;
        const double ratio = a / min_chord(body, a, 4096).min_length;
        CHECK(ratio == doctest::Approx(corner_limit_factor(body)).epsilon(1e-3));
    }
}

TEST_CASE("chords carry their endpoints and length") {
    const ConvexBody stadium = make_stadium({1.0, 2.0});
    const double L = stadium.perimeter();
    for (double frac : {0.07, 0.21, 0.5}) {
        const Chord chord = make_chord(stadium, 1.9, frac * L);
        CHECK(std::abs(chord.length - distance(chord.p0, chord.p1)) <= 1e-12 * L);
        CHECK(chord.length > 0.0);
        CHECK(chord.length <= chord.a * (1.0 + 1e-12));
        CHECK(distance(chord.p0, stadium.point(chord.s)) <= 1e-12 * L);
        CHECK(distance(chord.p1, stadium.point(chord.s + chord.a)) <= 1e-12 * L);
    }
}

TEST_CASE("min chord refinement reports a tight bracket") {
    const ConvexBody stadium = make_stadium({1.0, 2.0});
    const MinChordResult r = min_chord(stadium, 2.0);
    CHECK(r.bracket_width <= 1e-10 * stadium.perimeter() * (1.0 + 1e-9));
    CHECK(r.min_length <= chord_length(stadium, r.argmin_s, 2.0) + 1e-12);
}
