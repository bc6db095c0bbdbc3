#include "czframe/paraproduct.hpp"

#include "czframe/error.hpp"
#include "czframe/summation.hpp"

#include <cmath>

namespace czframe {

namespace {

double smoothstep(double t) noexcept {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double p = std::exp(-1.0 / t);
    const double q = std::exp(-1.0 / (1.0 - t));
    return p / (p + q);
}

CoefficientField multiply(const CoefficientField& d, const CoefficientField& beta, bool conjugate) {
    if (d.size() != beta.size()) throw GridMismatch("symbol and coefficients use different lattices");
    CoefficientField out(d.grid_ptr());
    for (std::size_t n = 0; n < d.size(); ++n) out[n] = d[n] * (conjugate ? std::conj(beta[n]) : beta[n]);
    return out;
}

const ClosedForm& one() {
    static const ClosedForm f{"1", [](double) { return 1.0; }};
    return f;
}

} // namespace

double BumpPhi::operator()(double x) const noexcept {
    const double ax = std::abs(x);
    if (ax <= 0.5) return 1.0;
    if (ax >= 1.0) return 0.0;
    return smoothstep(2.0 * (1.0 - ax));
}

Profile BumpPhi::profile() const {
    return {[this](double x) { return (*this)(x); }, 1.0, "phi"};
}

const BumpPhi& bump_phi() {
    static const BumpPhi phi;
    return phi;
}

AtomDictionary phi_dictionary(std::shared_ptr<const FrameGrid> grid) {
    return AtomDictionary(std::move(grid), bump_phi().profile(), AtomNormalization::L1);
}

AtomDictionary phi_l2_dictionary(std::shared_ptr<const FrameGrid> grid) {
    return AtomDictionary(std::move(grid), bump_phi().profile(), AtomNormalization::L2);
}

ParaproductSymbol ParaproductSymbol::from_sampled(std::string label, const SampledFunction& beta,
                                                  const AtomDictionary& psi) {
    return {std::move(label), psi.analyze(beta)};
}

ParaproductSymbol ParaproductSymbol::from_closed_form(const ClosedForm& beta, const AtomDictionary& psi) {
    return {beta.label, psi.analyze(beta)};
}

ParaproductSymbol ParaproductSymbol::zero(const AtomDictionary& psi) {
    return {"0", CoefficientField(psi.grid_ptr())};
}

Paraproduct::Paraproduct(std::shared_ptr<const AtomDictionary> psi, std::shared_ptr<const AtomDictionary> phi,
                         ParaproductSymbol symbol)
    : psi_(std::move(psi)), phi_(std::move(phi)), symbol_(std::move(symbol)) {
    if (psi_->grid_ptr() != phi_->grid_ptr() && !(psi_->grid().spatial() == phi_->grid().spatial() &&
                                                  psi_->grid().size() == phi_->grid().size()))
        throw GridMismatch("paraproduct dictionaries use different lattices");
    if (symbol_.coefficients.size() != psi_->grid().size())
        throw GridMismatch("paraproduct symbol uses a different lattice");
}

SampledFunction Paraproduct::synthesize_psi(const CoefficientField& d) const {
    return psi_->synthesize(multiply(d, symbol_.coefficients, false));
}

SampledFunction Paraproduct::synthesize_phi(const CoefficientField& c) const {
    return phi_->synthesize(multiply(c, symbol_.coefficients, true));
}

SampledFunction Paraproduct::apply(const SampledFunction& f) const { return synthesize_psi(phi_->analyze(f)); }
SampledFunction Paraproduct::apply(const ClosedForm& f) const { return synthesize_psi(phi_->analyze(f)); }
SampledFunction Paraproduct::adjoint(const SampledFunction& g) const { return synthesize_phi(psi_->analyze(g)); }
SampledFunction Paraproduct::adjoint(const ClosedForm& g) const { return synthesize_phi(psi_->analyze(g)); }

Complex Paraproduct::pairing(const SampledFunction& f, const SampledFunction& g) const {
    const CoefficientField d = phi_->analyze(f);
    const CoefficientField c = psi_->analyze(g);
    ComplexCompensatedSum acc;
    for (std::size_t n = 0; n < d.size(); ++n)
        acc += d[n] * symbol_.coefficients[n] * std::conj(c[n]) * psi_->grid()[n].weight;
    return acc.value();
}

CZDecomposition::CZDecomposition(const CZKernel& k, std::shared_ptr<const AtomDictionary> psi,
                                 std::shared_ptr<const AtomDictionary> phi, double window, double tolerance)
    : T_(k, psi->grid().spatial()),
      t1_(compute_T1(k, psi->grid().spatial(), window, tolerance)),
      t1star_(compute_T1star(k, psi->grid().spatial(), window, tolerance)) {
    const double m = bump_phi().mass();
    SampledFunction b1 = t1_.values;
    b1 *= 1.0 / m;
    SampledFunction b2 = t1star_.values;
    b2 *= 1.0 / m;
    p1_ = std::make_unique<Paraproduct>(psi, phi, ParaproductSymbol::from_sampled("T1/m", b1, *psi));
    p2_ = std::make_unique<Paraproduct>(psi, phi, ParaproductSymbol::from_sampled("T*1/m", b2, *psi));
}

SampledFunction CZDecomposition::apply(const SampledFunction& f) const {
    SampledFunction out = T_.apply(f);
    out -= p1_->apply(f);
    out -= p2_->adjoint(f);
    return out;
}

SampledFunction CZDecomposition::adjoint(const SampledFunction& g) const {
    SampledFunction out = T_.adjoint(g);
    out -= p1_->adjoint(g);
    out -= p2_->apply(g);
    return out;
}

SampledFunction CZDecomposition::apply_to_one() const {
    SampledFunction out = t1_.values;
    out -= p1_->apply(one());
    out -= p2_->adjoint(one());
    return out;
}

SampledFunction CZDecomposition::adjoint_to_one() const {
    SampledFunction out = t1star_.values;
    out -= p1_->adjoint(one());
    out -= p2_->apply(one());
    return out;
}

} // namespace czframe
