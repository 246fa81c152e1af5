#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hexcover/coverage.hpp"
#include "hexcover/dubins.hpp"

using namespace hexcover;

namespace {
const Rect kBounds{-5.0, -5.0, 5.0, 5.0};

std::vector<Pose> circle_trace(double r_t, double step) {
    std::vector<Pose> trace;
    const int n = static_cast<int>(std::ceil(kTwoPi * r_t / step));
    for (int k = 0; k <= n; ++k) {
        const double a = kTwoPi * k / n;
        trace.push_back({0.0, r_t * std::cos(a), r_t * std::sin(a), 0.0, 'O'});
    }
    return trace;
}
}  // namespace

TEST_CASE("a stationary footprint covers one disc") {
    CoverageRaster raster = make_raster(kBounds, 0.05);
    const std::vector<Pose> trace = {{0.0, 0.0, 0.0, 0.0, 'O'}};
    sweep_coverage(raster, trace, 0.5);
    CHECK(covered_area(raster) == doctest::Approx(kPi * 0.25).epsilon(0.02));

    // marking again changes nothing
    const double before = covered_area(raster);
    sweep_coverage(raster, trace, 0.5);
    CHECK(covered_area(raster) == before);
}

TEST_CASE("a full loop with matched radii covers the circumscribed disc") {
    // footprint radius equal to the loop radius sweeps a filled disc of
    // twice that radius, with no hole in the middle
    const double r_t = 0.5;
    const double l_r = 0.5;
    CoverageRaster raster = make_raster(kBounds, 0.05);
    sweep_coverage(raster, circle_trace(r_t, 0.02), l_r);

    CHECK(covered_area(raster) == doctest::Approx(kPi * 1.0).epsilon(0.02));
    for (int iy = 0; iy < raster.ny; ++iy) {
        for (int ix = 0; ix < raster.nx; ++ix) {
            const WorldPoint c{kBounds.xmin + (ix + 0.5) * raster.cell_size,
                               kBounds.ymin + (iy + 0.5) * raster.cell_size};
            if (norm(c) <= 1.0 - 0.04) REQUIRE(raster.at(ix, iy));  // inside: covered
            if (norm(c) > 1.0 + 0.04) REQUIRE(!raster.at(ix, iy));  // outside: untouched
        }
    }
}

TEST_CASE("a swept straight segment covers a stadium") {
    const double l_r = 0.5;
    const double len = 4.0;
    std::vector<Pose> trace;
    for (double s = 0.0; s <= len + 1e-9; s += 0.02) {
        trace.push_back({0.0, -2.0 + s, 0.0, 0.0, 'T'});
    }
    CoverageRaster raster = make_raster(kBounds, 0.05);
    sweep_coverage(raster, trace, l_r);
    const double want = 2.0 * l_r * len + kPi * l_r * l_r;
    CHECK(covered_area(raster) == doctest::Approx(want).epsilon(0.02));
}

TEST_CASE("coverage_stats excludes obstacle cells from both sides") {
    Environment env;
    env.bounds = kBounds;
    env.obstacles.push_back({{0.0, 0.0}, 0.5});

    CoverageRaster raster = make_raster(kBounds, 0.05);
    const std::vector<Pose> trace = {{0.0, 0.0, 0.0, 0.0, 'O'}};
    sweep_coverage(raster, trace, 0.5);  // footprint sits exactly on the obstacle

    const AreaStats stats = coverage_stats(raster, env);
    CHECK(stats.free_area ==
          doctest::Approx(kBounds.area() - kPi * 0.25).epsilon(0.01));
    CHECK(stats.covered_free_area < covered_area(raster));  // overlap discounted
    CHECK(stats.coverage_pct ==
          doctest::Approx(100.0 * stats.covered_free_area / stats.free_area).epsilon(1e-12));

    // an empty environment credits the same sweep in full
    Environment open;
    open.bounds = kBounds;
    const AreaStats unblocked = coverage_stats(raster, open);
    CHECK(unblocked.free_area == doctest::Approx(kBounds.area()).epsilon(1e-12));
    CHECK(unblocked.covered_free_area == doctest::Approx(covered_area(raster)).epsilon(1e-12));
}

TEST_CASE("raster dimensions cover the bounds completely") {
    const CoverageRaster raster = make_raster(Rect{0.0, 0.0, 1.03, 2.0}, 0.05);
    CHECK(raster.nx == 21);  // ceil(1.03 / 0.05)
    CHECK(raster.ny == 40);
    CHECK(raster.covered.size() == 21u * 40u);
    CHECK(covered_area(raster) == 0.0);
}

TEST_CASE("the raster dumps as a binary pgm") {
    CoverageRaster raster = make_raster(Rect{0.0, 0.0, 0.5, 0.25}, 0.05);
    const std::vector<Pose> trace = {{0.0, 0.25, 0.12, 0.0, 'O'}};
    sweep_coverage(raster, trace, 0.1);

    std::ostringstream out;
    write_raster_pgm(raster, out);
    const std::string pgm = out.str();
    const std::string header = "P5\n10 5\n255\n";
    REQUIRE(pgm.substr(0, header.size()) == header);
    CHECK(pgm.size() == header.size() + 50);
}
