#include "doctest.h"

#include "czframe/localization.hpp"

#include <cmath>
#include <numbers>

using namespace czframe;

namespace {

double sine_transform(double xi) {
    const MotherWavelet& psi = make_mother_wavelet();
    const int m = 2000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        const double x = -1.0 + (k + 0.5) * 2.0 / m;
        s += psi(x) * std::sin(x * xi);
    }
    return s * (2.0 / m) / std::sqrt(2.0 * std::numbers::pi);
}

// <H psi, psi_(a,b)> from the multiplier -i sgn(xi):
//   2 a^{1/2} int_0^inf S(xi) S(a xi) sin(b xi) dxi
double hilbert_coefficient(double a, double b) {
    const double top = 120.0 / std::min(a, 1.0);
    const int m = 24000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        const double xi = (k + 0.5) * top / m;
        s += sine_transform(xi) * sine_transform(a * xi) * std::sin(b * xi);
    }
    return 2.0 * std::sqrt(a) * s * top / m;
}

} // namespace

TEST_SUITE("localization") {

TEST_CASE("decay majorant regimes") {
    const DecayBound d{1, 1.0, 1.0};
    CHECK(lemma_bound(d, 2.0, 0.0) == doctest::Approx(0.35355).epsilon(1e-4));
    CHECK(lemma_bound(d, 2.0, 4.0) == doctest::Approx(0.08839).epsilon(1e-4));
    CHECK(lemma_bound(d, 0.25, 0.5) == doctest::Approx(0.125).epsilon(1e-4));
    CHECK(lemma_bound(d, 0.25, 2.0) == doctest::Approx(0.125 / 4.0));
    CHECK(lemma_bound(DecayBound{1, 1.0, 3.0}, 2.0, 0.0) == doctest::Approx(3.0 * std::pow(2.0, -1.5)));
}

TEST_CASE("Hilbert matrix coefficients against the Fourier multiplier") {
    const SpatialGrid g(8.0, 1024);
    const DiscreteOperator H(find_model("Hilbert").kernel, g);
    for (const GroupPoint& t : {GroupPoint(1.0, 3.0), GroupPoint(2.0, 0.5), GroupPoint(0.5, -2.0), GroupPoint(1.0, 0.0)}) {
        CAPTURE(t.to_string());
        const MatrixCoefficient c = matrix_coefficient(H, GroupPoint(1.0, 0.0), t);
        const double ref = hilbert_coefficient(t.a(), t.b());
        CHECK(c.value.real() == doctest::Approx(ref).epsilon(2e-3).scale(1e-3));
    }
}

TEST_CASE("direct and applied coefficient paths agree for separated atoms") {
    const SpatialGrid g(8.0, 1024);
    const DiscreteOperator T(find_model("DampedHilbert_1").kernel, g);
    const Complex d = matrix_coefficient_direct(T, GroupPoint(1, 0), GroupPoint(1, 4));
    const Complex a = matrix_coefficient_apply(T, GroupPoint(1, 0), GroupPoint(1, 4));
    CHECK(std::abs(d - a) < 1e-4 * std::abs(d));
}

TEST_CASE("conjugated kernel reproduces coefficients of the non-invariant operator") {
    const SpatialGrid g(8.0, 1024);
    const CZKernel& k = find_model("DampedHilbert_1").kernel;
    const DiscreteOperator T(k, g);
    const GroupPoint src(2.0, 1.0), dst(2.0, 3.0);
    const Complex lhs = matrix_coefficient(T, src, dst).value;
    const Complex rhs = matrix_coefficient(DiscreteOperator(conjugate(k, src), g), GroupPoint(1, 0), src.inverse() * dst).value;
    CHECK(std::abs(lhs - rhs) < 0.02 * std::abs(lhs));
}

TEST_CASE("zero operator has a vanishing Schur integral") {
    const SpatialGrid g(8.0, 256);
    FrameGridConfig c;
    c.a_min = 0.125;
    c.a_max = 16.0;
    c.half_width_b = 8.0;
    const auto fg = make_frame_grid(c, g);
    const AtomDictionary dict = wavelet_dictionary(fg);
    CHECK(schur_value(find_model("Zero").kernel, dict, GroupPoint(1, 0)) == 0.0);
    const DiscreteOperator Z(find_model("Zero").kernel, g);
    CHECK(matrix_coefficient(Z, GroupPoint(1, 0), GroupPoint(2, 1)).value == Complex{});
}

TEST_CASE("default anchors and test bundle") {
    const std::vector<GroupPoint> anchors = default_anchor_lattice();
    CHECK(anchors.size() == 35);
    for (const Profile& p : default_test_bundle()) {
        CHECK(p.support <= 1.0);
        CHECK(p.eval(1.0) == 0.0);
    }
}

}
