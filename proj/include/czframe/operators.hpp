#pragma once

// Calderón–Zygmund kernels, their discretization on the spatial grid, and the
// model operators used throughout the diagnostics.

#include "czframe/grid.hpp"
#include "czframe/group.hpp"
#include "czframe/wavelet.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace czframe {

using KernelFunction = std::function<double(double, double)>;

// Off-diagonal kernel K(x,y) with size constant C_K and Hölder exponent delta:
//   |K(x,y)| <= C_K / |x-y|
//   |K(x,y) - K(x,y')| <= C_K |y-y'|^delta / |x-y|^{1+delta}   for |y-y'| <= |x-y|/2
// and the same in the first variable. One constant covers both conditions.
struct CZKernel {
    std::string label;
    KernelFunction eval;
    double constant = 1.0;
    double delta = 1.0;
    bool antisymmetric = false;
    bool exact_cancellation = false; // T1 = T*1 = 0 analytically
    bool singular = true;            // unbounded at the diagonal (needs a principal value)
    bool invariant = false;          // commutes with every dilation and translation
    double support = std::numeric_limits<double>::infinity(); // K = 0 unless |x|, |y| < support

    [[nodiscard]] double operator()(double x, double y) const { return eval(x, y); }
};

struct ModelOperator {
    CZKernel kernel;
    std::optional<bool> compact; // analytically known status, when there is one
    std::string description;
};

// Hilbert, DampedHilbert_0.5, DampedHilbert_1, FiniteRank, Zero.
[[nodiscard]] const std::vector<ModelOperator>& model_zoo();
// Throws UnsupportedKernel for an unknown label.
[[nodiscard]] const ModelOperator& find_model(const std::string& label);

// Factors of the FiniteRank kernel u(x) v(y): u has vanishing moments of order 0 and 1.
[[nodiscard]] double finite_rank_u(double x) noexcept;
[[nodiscard]] double finite_rank_v(double x) noexcept;

// a K(a x + b, a y + b); constants and flags carry over.
[[nodiscard]] CZKernel conjugate(const CZKernel& k, const GroupPoint& g);
// K~(x,y) = K(y,x)
[[nodiscard]] CZKernel transpose(const CZKernel& k);

struct CZScanReport {
    std::size_t samples = 0;
    double size_ratio = 0.0;       // max |K| |x-y| / C
    double smoothness_ratio = 0.0; // max over both variables, divided by C
    [[nodiscard]] bool passed() const noexcept { return size_ratio <= 1.0 + 1e-12 && smoothness_ratio <= 1.0 + 1e-12; }
};

// Randomized check of the size and smoothness conditions with the given constant
// (defaults to the kernel's own). Pairs are drawn with log-uniform separation.
[[nodiscard]] CZScanReport scan_cz_conditions(const CZKernel& k, std::uint64_t seed, std::size_t samples,
                                              std::optional<double> constant = std::nullopt);

// Linear map on sampled functions with its adjoint for the grid inner product.
class LinearMap {
public:
    virtual ~LinearMap() = default;
    [[nodiscard]] virtual const SpatialGrid& grid() const = 0;
    [[nodiscard]] virtual SampledFunction apply(const SampledFunction& f) const = 0;
    [[nodiscard]] virtual SampledFunction adjoint(const SampledFunction& g) const = 0;
};

// Dense discretization (Tf)_i = sum_j M_ij f_j.
//
// Singular kernels use the alternate-point principal value rule M_ij = 2h K(x_i,x_j)
// for odd i-j and 0 otherwise. The rule's discrete symbol for the Hilbert kernel is
// exactly -i sgn on the whole band, and it is spectrally accurate for smooth f. Bounded
// kernels use the plain rectangle rule M_ij = h K(x_i,x_j), diagonal included.
class DiscreteOperator final : public LinearMap {
public:
    DiscreteOperator(CZKernel kernel, const SpatialGrid& grid);

    [[nodiscard]] const SpatialGrid& grid() const override { return grid_; }
    [[nodiscard]] const CZKernel& kernel() const noexcept { return kernel_; }
    [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    [[nodiscard]] SampledFunction apply(const SampledFunction& f) const override;
    [[nodiscard]] SampledFunction adjoint(const SampledFunction& g) const override;

private:
    CZKernel kernel_;
    SpatialGrid grid_;
    Eigen::MatrixXd m_;
};

[[nodiscard]] SampledFunction apply(const CZKernel& k, const SampledFunction& f);

// T f on the whole line for a compactly supported profile f, independent of the box.
// Near the support the principal value is tabulated with the alternate-point rule at
// step 1/4096 and interpolated; farther out the regular integral is tabulated on a
// geometric grid up to |x| = 1e6 and interpolated in log|x|. Zero beyond.
[[nodiscard]] ClosedForm apply_closed_form(const CZKernel& k, const Profile& f);

struct T1Result {
    SampledFunction values;
    double window = 0.0;     // the integral at x runs over [x - window, x + window]
    double tail_bound = 0.0; // 2 C_K window^{-delta} / delta
};

// (T1)(x) as a principal value over the symmetric window x +- window, using the
// same quadrature as DiscreteOperator but evaluating the kernel beyond the box.
// Throws TruncationError when the tail bound exceeds `tolerance`.
[[nodiscard]] T1Result compute_T1(const CZKernel& k, const SpatialGrid& grid, double window,
                                  double tolerance);
[[nodiscard]] T1Result compute_T1star(const CZKernel& k, const SpatialGrid& grid, double window,
                                      double tolerance);

} // namespace czframe
