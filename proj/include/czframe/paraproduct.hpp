#pragma once

// Paraproducts P_beta f = int <f, phi~_(a,b)> <beta, psi_(a,b)> psi_(a,b) dλ with the
// L1-normalized bump phi~_(a,b) = a^{-1} phi((x-b)/a), their adjoints, and the
// splitting T = S + P_{T1/m} + P*_{T*1/m}.

#include "czframe/operators.hpp"
#include "czframe/wavelet.hpp"

#include <memory>
#include <string>

namespace czframe {

// phi = 1 on [-1/2, 1/2], 0 off (-1,1), even, non-increasing in |x|, C-infinity. The
// transition is the smoothstep s(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}); since
// s(t) + s(1-t) = 1 the mass is exactly 3/2.
class BumpPhi {
public:
    [[nodiscard]] double operator()(double x) const noexcept;
    [[nodiscard]] double mass() const noexcept { return 1.5; }
    [[nodiscard]] Profile profile() const;
};

[[nodiscard]] const BumpPhi& bump_phi();

// Dictionary of phi~_(a,b) (L1) on the frame lattice.
[[nodiscard]] AtomDictionary phi_dictionary(std::shared_ptr<const FrameGrid> grid);
// Dictionary of a^{-1/2} phi((x-b)/a) (L2), used for non-tangential maximal functions.
[[nodiscard]] AtomDictionary phi_l2_dictionary(std::shared_ptr<const FrameGrid> grid);

// beta with its cached wavelet coefficients <beta, psi_(a,b)>.
struct ParaproductSymbol {
    std::string label;
    CoefficientField coefficients;

    static ParaproductSymbol from_sampled(std::string label, const SampledFunction& beta, const AtomDictionary& psi);
    static ParaproductSymbol from_closed_form(const ClosedForm& beta, const AtomDictionary& psi);
    static ParaproductSymbol zero(const AtomDictionary& psi);
};

class Paraproduct final : public LinearMap {
public:
    Paraproduct(std::shared_ptr<const AtomDictionary> psi, std::shared_ptr<const AtomDictionary> phi,
                ParaproductSymbol symbol);

    [[nodiscard]] const SpatialGrid& grid() const override { return psi_->grid().spatial(); }
    [[nodiscard]] const ParaproductSymbol& symbol() const noexcept { return symbol_; }

    // sum_n <f, phi~_n> <beta, psi_n> dλ_n psi_n
    [[nodiscard]] SampledFunction apply(const SampledFunction& f) const override;
    // Same with <f, phi~_n> taken on the whole line (e.g. f = 1).
    [[nodiscard]] SampledFunction apply(const ClosedForm& f) const;
    // sum_n <g, psi_n> conj(<beta, psi_n>) dλ_n phi~_n
    [[nodiscard]] SampledFunction adjoint(const SampledFunction& g) const override;
    [[nodiscard]] SampledFunction adjoint(const ClosedForm& g) const;

    // <P f, g> as the node-wise triple sum sum_n <f,phi~_n> <beta,psi_n> conj(<g,psi_n>) dλ_n.
    [[nodiscard]] Complex pairing(const SampledFunction& f, const SampledFunction& g) const;

private:
    [[nodiscard]] SampledFunction synthesize_psi(const CoefficientField& d) const;
    [[nodiscard]] SampledFunction synthesize_phi(const CoefficientField& c) const;

    std::shared_ptr<const AtomDictionary> psi_;
    std::shared_ptr<const AtomDictionary> phi_;
    ParaproductSymbol symbol_;
};

// S f = T f - P_{T1/m} f - P*_{T*1/m} f with m = int phi. Dividing the symbols by m
// makes P_{T1/m} 1 reproduce T1, so S1 = 0 in the paired sense.
class CZDecomposition final : public LinearMap {
public:
    CZDecomposition(const CZKernel& k, std::shared_ptr<const AtomDictionary> psi,
                    std::shared_ptr<const AtomDictionary> phi, double window, double tolerance);

    [[nodiscard]] const SpatialGrid& grid() const override { return T_.grid(); }
    [[nodiscard]] const DiscreteOperator& T() const noexcept { return T_; }
    [[nodiscard]] const Paraproduct& p_t1() const noexcept { return *p1_; }
    [[nodiscard]] const Paraproduct& p_t1star() const noexcept { return *p2_; }
    [[nodiscard]] const T1Result& t1() const noexcept { return t1_; }
    [[nodiscard]] const T1Result& t1star() const noexcept { return t1star_; }

    // S f
    [[nodiscard]] SampledFunction apply(const SampledFunction& f) const override;
    [[nodiscard]] SampledFunction adjoint(const SampledFunction& g) const override;
    // S1 = T1 - P_{T1/m} 1 - P*_{T*1/m} 1 with 1 taken on the whole line.
    [[nodiscard]] SampledFunction apply_to_one() const;
    // S*1 = T*1 - P*_{T1/m} 1 - P_{T*1/m} 1
    [[nodiscard]] SampledFunction adjoint_to_one() const;

private:
    DiscreteOperator T_;
    T1Result t1_;
    T1Result t1star_;
    std::unique_ptr<Paraproduct> p1_;
    std::unique_ptr<Paraproduct> p2_;
};

} // namespace czframe
