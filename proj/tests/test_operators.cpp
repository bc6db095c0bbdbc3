#include "doctest.h"

#include "czframe/error.hpp"
#include "czframe/operators.hpp"
#include "czframe/wavelet.hpp"

#include <cmath>
#include <numbers>

using namespace czframe;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("operators") {

TEST_CASE("zoo lookup") {
    CHECK(model_zoo().size() == 5);
    CHECK(find_model("Hilbert").kernel.invariant);
    CHECK(find_model("Hilbert").compact == false);
    CHECK(find_model("FiniteRank").compact == true);
    CHECK_THROWS_AS((void)find_model("Riesz"), UnsupportedKernel);
}

TEST_CASE("kernel values") {
    const CZKernel& h = find_model("Hilbert").kernel;
    CHECK(h(1.0, 0.0) == doctest::Approx(1.0 / kPi));
    CHECK(h(0.0, 2.0) == doctest::Approx(-0.5 / kPi));
    const CZKernel& d = find_model("DampedHilbert_1").kernel;
    CHECK(d(1.0, 0.0) == doctest::Approx(1.0 / (kPi * std::sqrt(2.0))));
    const CZKernel c = conjugate(d, GroupPoint(2.0, 0.0));
    CHECK(c(1.0, 0.0) == doctest::Approx(1.0 / (kPi * std::sqrt(5.0))));
    const CZKernel& f = find_model("FiniteRank").kernel;
    CHECK(f(0.3, -0.2) == doctest::Approx(finite_rank_u(0.3) * finite_rank_v(-0.2)));
    CHECK(transpose(f)(0.3, -0.2) == doctest::Approx(f(-0.2, 0.3)));
    const CZKernel hc = conjugate(h, GroupPoint(3.0, -1.0));
    CHECK(hc(0.7, 0.1) == doctest::Approx(h(0.7, 0.1)));
}

TEST_CASE("size and smoothness conditions hold with the stated constants") {
    for (const ModelOperator& m : model_zoo()) {
        CAPTURE(m.kernel.label);
        const CZScanReport r = scan_cz_conditions(m.kernel, 11, 4000);
        CHECK(r.passed());
    }
    // the damped kernels already satisfy the size bound with the Hilbert constant
    const CZScanReport r = scan_cz_conditions(find_model("DampedHilbert_1").kernel, 12, 4000, 1.0 / kPi);
    CHECK(r.size_ratio <= 1.0 + 1e-12);
}

TEST_CASE("principal value of 1/(1+y^2)") {
    const SpatialGrid g(32.0, 2048);
    const DiscreteOperator H(find_model("Hilbert").kernel, g);
    const SampledFunction f = SampledFunction::sample(g, [](double y) { return 1.0 / (1.0 + y * y); });
    const SampledFunction ref = SampledFunction::sample(g, [](double x) { return x / (1.0 + x * x); });
    CHECK(relative_l2_error(H.apply(f), ref, 16.0) < 0.02);
}

TEST_CASE("Hilbert maps even functions to odd ones") {
    const SpatialGrid g(4.0, 256);
    const DiscreteOperator H(find_model("Hilbert").kernel, g);
    const SampledFunction even = SampledFunction::sample(g, [](double x) { return std::exp(-x * x); });
    const SampledFunction he = H.apply(even);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(he[i] + he[g.size() - 1 - i]) < 1e-12);
}

TEST_CASE("adjoint is the transpose kernel") {
    const SpatialGrid g(4.0, 128);
    const DiscreteOperator T(find_model("DampedHilbert_0.5").kernel, g);
    const SampledFunction f = SampledFunction::sample(g, [](double x) { return std::exp(-(x - 1) * (x - 1)); });
    const SampledFunction u = SampledFunction::sample(g, [](double x) { return std::sin(x) * std::exp(-x * x / 4); });
    CHECK(std::abs(inner_product(T.apply(f), u) - inner_product(f, T.adjoint(u))) < 1e-12);
    const SampledFunction viaT = apply(transpose(T.kernel()), u);
    CHECK(relative_l2_error(viaT, T.adjoint(u), 4.0) < 1e-12);
}

TEST_CASE("T1 and its tail control") {
    const SpatialGrid g(8.0, 512);
    const T1Result h = compute_T1(find_model("Hilbert").kernel, g, 16.0, 0.1);
    CHECK(h.tail_bound == 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(h.values[i]) < 1e-9);

    const T1Result f = compute_T1(find_model("FiniteRank").kernel, g, 16.0, 0.1);
    CHECK(f.tail_bound == 0.0);
    double iv = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) iv += finite_rank_v(g.node(i)) * g.spacing();
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(f.values[i].real() == doctest::Approx(iv * finite_rank_u(g.node(i))).epsilon(1e-6));

    const CZKernel& d = find_model("DampedHilbert_1").kernel;
    CHECK_THROWS_AS((void)compute_T1(d, g, 2.0, 0.1), TruncationError);
    const T1Result t = compute_T1(d, g, 1024.0, 0.1);
    CHECK(t.tail_bound <= 0.1);
    // odd kernel part: T1(-x) = -T1(x)
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(t.values[i] + t.values[g.size() - 1 - i]) < 1e-9);
}

}
