#include "doctest.h"

#include "czframe/error.hpp"
#include "czframe/grid.hpp"

#include <cmath>
#include <numbers>

using namespace czframe;

TEST_SUITE("grid") {

TEST_CASE("spatial grid uses midpoint nodes") {
    const SpatialGrid g(4.0, 64);
    CHECK(g.spacing() == doctest::Approx(0.125));
    CHECK(g.node(0) == doctest::Approx(-4.0 + 0.0625));
    CHECK(g.node(63) == doctest::Approx(4.0 - 0.0625));
    const auto [lo, hi] = g.index_range(-1.0, 1.0);
    CHECK(g.node(lo) >= -1.0);
    CHECK(g.node(lo - 1) < -1.0);
    CHECK(g.node(hi - 1) <= 1.0);
    CHECK(g.node(hi) > 1.0);
    CHECK_THROWS_AS(SpatialGrid(0.0, 64), ConfigError);
    CHECK_THROWS_AS(SpatialGrid(1.0, 8), ConfigError);
}

TEST_CASE("inner product and error on the grid") {
    const SpatialGrid g(8.0, 512);
    const SampledFunction f = SampledFunction::sample(g, [](double x) { return std::exp(-x * x / 2.0); });
    // int exp(-x^2) = sqrt(pi)
    CHECK(inner_product(f, f).real() == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
    CHECK(relative_l2_error(f, f, 8.0) == 0.0);
    const SampledFunction other = SampledFunction::sample(SpatialGrid(8.0, 256), [](double) { return 1.0; });
    CHECK_THROWS_AS((void)inner_product(f, other), GridMismatch);
}

TEST_CASE("frame lattice geometry") {
    const SpatialGrid g(8.0, 256);
    FrameGridConfig c;
    c.a_min = 0.125;
    c.a_max = 64.0;
    c.half_width_b = 8.0;
    const auto fg = make_frame_grid(c, g);
    const double w = std::log(2.0) / c.scales_per_octave * c.spacing;
    for (const FrameNode& n : fg->nodes()) {
        CHECK(n.weight == doctest::Approx(w));
        CHECK(std::abs(n.b) <= c.half_width_b + n.a + 1e-12);
        // b is a multiple of s a
        const double k = n.b / (c.spacing * n.a);
        CHECK(std::abs(k - std::round(k)) < 1e-9);
    }
    CHECK(fg->scales().front() == doctest::Approx(0.125));
    CHECK(fg->scales().back() == doctest::Approx(64.0));
    CHECK(fg->find(1.0, 0.0) != FrameGrid::npos);
    CHECK(fg->find(1.0, 0.0625) == FrameGrid::npos);

    // weighted count of the unit disk about (1,0) approximates its Haar area
    double disk = 0.0;
    const std::vector<double> d = identity_distances(*fg);
    for (std::size_t n = 0; n < fg->size(); ++n)
        if (d[n] < 1.0) disk += (*fg)[n].weight;
    CHECK(disk == doctest::Approx(2.0 * std::numbers::pi * (std::cosh(1.0) - 1.0)).epsilon(0.05));

    std::size_t previous = fg->size() + 1;
    for (double R = 0.0; R < 10.0; R += 1.0) {
        const std::size_t count = tail_nodes(*fg, R).size();
        CHECK(count <= previous);
        previous = count;
    }
}

TEST_CASE("lattice validation") {
    const SpatialGrid g(8.0, 256);
    FrameGridConfig c;
    c.a_min = 0.01; // below 2h
    CHECK_THROWS_AS(make_frame_grid(c, g), ResolutionError);
    c = FrameGridConfig{};
    c.spacing = 1.5;
    CHECK_THROWS_AS(make_frame_grid(c, g), ConfigError);
    c = FrameGridConfig{};
    c.scales_per_octave = 0;
    CHECK_THROWS_AS(make_frame_grid(c, g), ConfigError);
}

TEST_CASE("refined lattice doubles densities") {
    const FrameGridConfig c;
    const FrameGridConfig r = c.refined();
    CHECK(r.scales_per_octave == 2 * c.scales_per_octave);
    CHECK(r.spacing == doctest::Approx(c.spacing / 2.0));
}

}
