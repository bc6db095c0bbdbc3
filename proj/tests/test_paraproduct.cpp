#include "doctest.h"

#include "czframe/error.hpp"
#include "czframe/paraproduct.hpp"

#include <cmath>

using namespace czframe;

namespace {

struct Setup {
    SpatialGrid grid{8.0, 256};
    std::shared_ptr<const FrameGrid> frame;
    std::shared_ptr<const AtomDictionary> psi;
    std::shared_ptr<const AtomDictionary> phi;
    Setup() {
        FrameGridConfig c;
        c.a_min = 0.125;
        c.a_max = 1024.0;
        c.half_width_b = 8.0;
        frame = make_frame_grid(c, grid);
        psi = std::make_shared<const AtomDictionary>(wavelet_dictionary(frame));
        phi = std::make_shared<const AtomDictionary>(phi_dictionary(frame));
    }
    SampledFunction sample(RealFunction f) const { return SampledFunction::sample(grid, f); }
};

const ClosedForm kBump{"bump", [](double x) { return smooth_bump(x); }};
const ClosedForm kOne{"1", [](double) { return 1.0; }};

} // namespace

TEST_SUITE("paraproduct") {

TEST_CASE("plateau bump") {
    const BumpPhi& phi = bump_phi();
    CHECK(phi(0.0) == 1.0);
    CHECK(phi(0.5) == 1.0);
    CHECK(phi(-1.0) == 0.0);
    CHECK(phi(0.75) == doctest::Approx(0.5));
    // symmetric transition: phi(1/2 + t) + phi(1 - t) = 1
    for (double t : {0.05, 0.2, 0.4}) CHECK(phi(0.5 + t) + phi(1.0 - t) == doctest::Approx(1.0));
    const int m = 200000;
    double mass = 0.0;
    for (int k = 0; k < m; ++k) mass += phi(-1.0 + (k + 0.5) * 2.0 / m) * 2.0 / m;
    CHECK(phi.mass() == doctest::Approx(mass).epsilon(1e-10));
    CHECK(phi.mass() == 1.5);
}

TEST_CASE("L1 normalized bumps integrate constants to m_phi") {
    Setup s;
    const CoefficientField c = s.phi->analyze(kOne);
    for (std::size_t n = 0; n < c.size(); n += 97) CHECK(c[n].real() == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("paraproduct identities") {
    Setup s;
    const Paraproduct P(s.psi, s.phi, ParaproductSymbol::from_closed_form(kBump, *s.psi));
    const SampledFunction beta = s.sample(kBump.eval);
    CHECK(relative_l2_error(P.apply(kOne), 1.5 * beta, 8.0) < 0.05);
    const SampledFunction adj = P.adjoint(kOne);
    for (std::size_t i = 0; i < adj.size(); ++i) CHECK(std::abs(adj[i]) < 1e-9);

    const SampledFunction f = s.sample([](double x) { return std::exp(-(x - 1) * (x - 1)); });
    const SampledFunction g = s.sample([](double x) { return x * std::exp(-x * x / 3); });
    const Complex a = inner_product(P.apply(f), g);
    CHECK(std::abs(a - inner_product(f, P.adjoint(g))) < 1e-10 * std::abs(a));
    CHECK(std::abs(a - P.pairing(f, g)) < 1e-10 * std::abs(a));
}

TEST_CASE("zero symbol gives the zero map") {
    Setup s;
    const Paraproduct P(s.psi, s.phi, ParaproductSymbol::zero(*s.psi));
    const SampledFunction f = s.sample([](double x) { return std::exp(-x * x); });
    CHECK(P.apply(f).norm() == 0.0);
    CHECK(P.adjoint(f).norm() == 0.0);
}

TEST_CASE("mismatched lattices are rejected") {
    Setup s;
    FrameGridConfig c;
    c.a_min = 0.25;
    c.a_max = 8.0;
    c.half_width_b = 8.0;
    const auto other = std::make_shared<const AtomDictionary>(phi_dictionary(make_frame_grid(c, s.grid)));
    CHECK_THROWS_AS(Paraproduct(s.psi, other, ParaproductSymbol::zero(*s.psi)), GridMismatch);
}

TEST_CASE("decomposition of the Hilbert transform is trivial") {
    Setup s;
    const CZDecomposition D(find_model("Hilbert").kernel, s.psi, s.phi, 16.0, 0.1);
    const SampledFunction f = s.sample([](double x) { return std::exp(-x * x) * (1 + x); });
    const SampledFunction d = D.apply(f) - D.T().apply(f);
    CHECK(d.norm() < 1e-12);
}

TEST_CASE("decomposition reassembles the operator") {
    Setup s;
    const CZDecomposition D(find_model("DampedHilbert_1").kernel, s.psi, s.phi, 512.0, 0.1);
    const SampledFunction f = s.sample([](double x) { return std::exp(-x * x) * (1 + x); });
    const SampledFunction g = s.sample([](double x) { return std::exp(-(x + 1) * (x + 1)); });
    const Complex t = inner_product(D.T().apply(f), g);
    const Complex sum = inner_product(D.apply(f), g) + inner_product(D.p_t1().apply(f), g) +
                        inner_product(D.p_t1star().adjoint(f), g);
    CHECK(std::abs(t - sum) < 1e-10 * std::abs(t));
    // adjoint of the remainder is the remainder of the adjoint
    CHECK(std::abs(inner_product(D.apply(f), g) - inner_product(f, D.adjoint(g))) < 1e-10 * std::abs(t));
}

}
