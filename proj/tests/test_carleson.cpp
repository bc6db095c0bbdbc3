#include "doctest.h"

#include "czframe/carleson.hpp"

#include <cmath>
#include <limits>

using namespace czframe;

namespace {

std::shared_ptr<const FrameGrid> lattice() {
    FrameGridConfig c;
    c.a_min = 0.125;
    c.a_max = 64.0;
    c.half_width_b = 8.0;
    return make_frame_grid(c, SpatialGrid(8.0, 256));
}

} // namespace

TEST_SUITE("carleson") {

TEST_CASE("tent mass by brute force") {
    const auto fg = lattice();
    std::vector<double> m(fg->size());
    for (std::size_t n = 0; n < m.size(); ++n) m[n] = std::exp(-std::abs((*fg)[n].b)) / (1.0 + (*fg)[n].a);
    const CoefficientMeasure mu(fg, m);
    for (auto [c, r] : {std::pair{0.0, 2.0}, std::pair{1.5, 4.0}, std::pair{-3.0, 0.5}}) {
        double ref = 0.0;
        for (std::size_t n = 0; n < m.size(); ++n)
            if (std::abs(c - (*fg)[n].b) < r - (*fg)[n].a) ref += m[n];
        CHECK(mu.tent_mass(c, r) == doctest::Approx(ref));
    }
}

TEST_CASE("unit mass at (1,0)") {
    const auto fg = lattice();
    const CoefficientMeasure mu = CoefficientMeasure::point_mass(fg, fg->find(1.0, 0.0), 1.0);
    CHECK(mu.total() == 1.0);
    // The smallest cone node over x = 0 whose tent contains (1,0) is (2^{1/4}, 0).
    double best = 0.0;
    for (const FrameNode& n : fg->nodes())
        if (std::abs(n.b) < n.a && std::abs(n.b) < n.a - 1.0) best = std::max(best, 1.0 / (2.0 * n.a));
    CHECK(carleson_function(mu, 0.0) == doctest::Approx(best));
    CHECK(best == doctest::Approx(1.0 / (2.0 * std::exp2(0.25))));
    CHECK(carleson_function(mu, 0.0) <= 0.5);
}

TEST_CASE("Carleson function is monotone in the measure") {
    const auto fg = lattice();
    std::vector<double> m(fg->size(), 0.0);
    m[fg->find(2.0, 1.0)] = 1.0;
    const TentTable a(CoefficientMeasure(fg, m));
    m[fg->find(0.5, -1.0)] = 0.3;
    const TentTable b(CoefficientMeasure(fg, m));
    for (double x = -4.0; x <= 4.0; x += 0.25) CHECK(b.carleson(x) >= a.carleson(x));
}

TEST_CASE("mean oscillation") {
    const ClosedForm id{"x", [](double x) { return x; }};
    CHECK(mean_oscillation(id, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
    const ClosedForm c{"1", [](double) { return 1.0; }};
    CHECK(mean_oscillation(c, 3.0, 2.0) == 0.0);
    // log|x| has mean oscillation 2/e on [-r, r] for every r
    const ClosedForm lg{"log", [](double x) { return std::log(std::abs(x)); }};
    CHECK(mean_oscillation(lg, 0.0, 1.0, 100000) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-3));
    CHECK(mean_oscillation(lg, 0.0, 100.0, 100000) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-3));
}

TEST_CASE("examples carry their expected classes") {
    const std::vector<BMOExample> ex = bmo_examples(1.0 / 32.0);
    REQUIRE(ex.size() == 4);
    int cmo = 0, bmo = 0;
    for (const BMOExample& e : ex) {
        cmo += e.expected == BMOClass::CMO;
        bmo += e.expected == BMOClass::BMONotCMO;
    }
    CHECK(cmo == 3);
    CHECK(bmo == 1);
}

TEST_CASE("vanishing profile of a point mass drops to zero past its distance") {
    const auto fg = lattice();
    const CoefficientMeasure mu = CoefficientMeasure::point_mass(fg, fg->find(1.0, 0.0), 1.0);
    const VanishingProfile p = vanishing_profile(mu, {0.0, 1.0, 2.0, 3.0, 4.0});
    for (std::size_t i = 1; i < p.values.size(); ++i) CHECK(p.values[i] <= p.values[i - 1]);
    CHECK(p.values.front() > 0.0);
}

TEST_CASE("Stein audit with zero measure and with a point mass") {
    const auto fg = lattice();
    const AtomDictionary phi(fg, Profile{[](double x) { return smooth_bump(x); }, 1.0, "bump"}, AtomNormalization::L2);
    const SampledFunction f = SampledFunction::sample(fg->spatial(), [](double x) { return std::exp(-x * x); });
    const CoefficientField c = phi.analyze(f);
    const SteinCheck z = stein_inequality_check(c, CoefficientMeasure(fg, std::vector<double>(fg->size(), 0.0)), 2.0, 10.0);
    CHECK(z.lhs == 0.0);
    CHECK(z.passed);
    const SteinCheck s = stein_inequality_check(c, CoefficientMeasure::point_mass(fg, fg->find(1.0, 0.0), 1.0), 1.0, 10.0);
    CHECK(s.lhs > 0.0);
    CHECK(s.ratio <= 10.0);
    // nontangential maximal function dominates the coefficient at its own cone
    CHECK(nontangential_max(c, 0.0) >= std::abs(c[fg->find(1.0, 0.0)]));
}

}
