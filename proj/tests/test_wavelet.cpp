#include "doctest.h"

#include "czframe/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace czframe;

namespace {

// Imaginary part of the Fourier transform of the (odd) mother wavelet:
// psihat(xi) = int psi(x) e^{-i x xi} dx = -i S(xi), S(xi) = int psi(x) sin(x xi) dx.
double sine_transform(double xi) {
    const MotherWavelet& psi = make_mother_wavelet();
    const int m = 4000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        const double x = -1.0 + (k + 0.5) * 2.0 / m;
        s += psi(x) * std::sin(x * xi);
    }
    return s * (2.0 / m);
}

} // namespace

TEST_SUITE("wavelet") {

TEST_CASE("mother wavelet is odd, compactly supported, with zero mean") {
    const MotherWavelet& psi = make_mother_wavelet();
    for (double x : {0.1, 0.4, 0.77, 0.95}) CHECK(psi(-x) == doctest::Approx(-psi(x)));
    CHECK(psi(1.0) == 0.0);
    CHECK(psi(-1.5) == 0.0);
    CHECK(psi(0.0) == 0.0);
    // derivative against central differences
    for (double x : {-0.6, 0.2, 0.5}) {
        const double e = 1e-6;
        CHECK(psi.derivative(x) == doctest::Approx((psi(x + e) - psi(x - e)) / (2 * e)).epsilon(1e-6));
    }
}

TEST_CASE("admissibility normalization from an independent Fourier integral") {
    // int_0^inf |psihat(t)|^2 dt / t on a log grid
    double total = 0.0;
    const double lo = std::log(1e-4), hi = std::log(400.0);
    const int m = 3000;
    for (int k = 0; k < m; ++k) {
        const double u = lo + (k + 0.5) * (hi - lo) / m;
        const double s = sine_transform(std::exp(u));
        total += s * s * (hi - lo) / m;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("frame elements and dilation") {
    const SpatialGrid g(8.0, 512);
    const MotherWavelet& psi = make_mother_wavelet();
    const FrameElement e = frame_element(psi, GroupPoint(2.0, 1.0), g);
    CHECK_FALSE(e.under_resolved);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.node(i);
        CHECK(e.samples[i].real() == doctest::Approx(psi((x - 1.0) / 2.0) / std::sqrt(2.0)));
    }
    CHECK(frame_element(psi, GroupPoint(0.01, 0.0), g).under_resolved);
    CHECK_THROWS_AS((void)frame_element(psi, GroupPoint(1.0, 20.0), g), std::invalid_argument);
    const SampledFunction d = dilate(psi.profile(), GroupPoint(2.0, 1.0), 1.0, g);
    CHECK(d[300].real() == doctest::Approx(psi((g.node(300) - 1.0) / 2.0) / 2.0));
}

TEST_CASE("analysis and synthesis are adjoint") {
    const SpatialGrid g(8.0, 256);
    FrameGridConfig c;
    c.a_min = 0.125;
    c.a_max = 16.0;
    c.half_width_b = 8.0;
    c.scales_per_octave = 2;
    c.spacing = 0.25;
    const auto fg = make_frame_grid(c, g);
    const AtomDictionary dict = wavelet_dictionary(fg);
    const SampledFunction f = SampledFunction::sample(g, [](double x) { return std::exp(-x * x) * (1 + x); });
    CoefficientField w(fg);
    for (std::size_t n = 0; n < w.size(); ++n) w[n] = std::sin(0.37 * double(n));
    // <S w, f> = sum w_n conj(<f, psi_n>) dλ_n
    const CoefficientField a = dict.analyze(f);
    Complex rhs{};
    for (std::size_t n = 0; n < w.size(); ++n) rhs += w[n] * std::conj(a[n]) * (*fg)[n].weight;
    CHECK(std::abs(inner_product(dict.synthesize(w), f) - rhs) < 1e-12 * std::abs(rhs) + 1e-14);
}

TEST_CASE("Parseval and reconstruction on the default lattice") {
    const SpatialGrid g(32.0, 2048);
    const auto fg = make_frame_grid(FrameGridConfig{}, g);
    const AtomDictionary dict = wavelet_dictionary(fg);
    const SampledFunction f = SampledFunction::sample(g, [](double x) { return std::exp(-x * x / 2.0); });
    const CoefficientField c = dict.analyze(f);
    CHECK(c.energy() == doctest::Approx(f.norm() * f.norm()).epsilon(0.02));
    CHECK(relative_l2_error(dict.synthesize(c), f, 32.0) < 0.05);
}

}
