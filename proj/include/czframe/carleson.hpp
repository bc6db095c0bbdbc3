#pragma once

// Wavelet coefficient measures mu_f, tent masses, the Carleson function C mu, the
// vanishing-Carleson profile used as a CMO test, the non-tangential maximal function
// and the audit of  int |<f, phi_(a,b)>|^p dmu <~ int (Mf)^p C mu.

#include "czframe/wavelet.hpp"

#include <memory>
#include <string>
#include <vector>

namespace czframe {

// Non-negative masses attached to frame lattice nodes.
class CoefficientMeasure {
public:
    CoefficientMeasure(std::shared_ptr<const FrameGrid> grid, std::vector<double> masses);

    // |c_n|^2 dλ_n
    static CoefficientMeasure from_coefficients(const CoefficientField& c);
    static CoefficientMeasure point_mass(std::shared_ptr<const FrameGrid> grid, std::size_t node, double mass);

    [[nodiscard]] const FrameGrid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const std::shared_ptr<const FrameGrid>& grid_ptr() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<double>& masses() const noexcept { return masses_; }
    [[nodiscard]] double total() const;

    // mu(T(B(center, radius))): nodes with |center - b| < radius - a.
    [[nodiscard]] double tent_mass(double center, double radius) const;

private:
    std::shared_ptr<const FrameGrid> grid_;
    std::vector<double> masses_;
};

// Tent ratios mu(T(B(b,a))) / |B(b,a)| for every lattice node, the quantity both the
// Carleson function and the vanishing profile take suprema of.
class TentTable {
public:
    explicit TentTable(const CoefficientMeasure& mu);

    [[nodiscard]] const std::vector<double>& ratios() const noexcept { return ratios_; }
    // C mu(x): sup over lattice nodes in the cone V_x = {|x - b| < a}.
    [[nodiscard]] double carleson(double x) const;

private:
    std::shared_ptr<const FrameGrid> grid_;
    std::vector<double> ratios_;
};

[[nodiscard]] double carleson_function(const CoefficientMeasure& mu, double x);

struct VanishingProfile {
    std::vector<double> radii;
    std::vector<double> values; // sup of tent ratios over nodes with d((a,b),(1,0)) >= R
    double ratio = 0.0;         // values(R_max) / max(values(R_min), 1e-12)
};

[[nodiscard]] VanishingProfile vanishing_profile(const CoefficientMeasure& mu, const std::vector<double>& radii);
// Tent ratios restricted to the dilation axis b = 0, keyed by scale.
[[nodiscard]] std::vector<std::pair<double, double>> axis_profile(const CoefficientMeasure& mu);

enum class BMOClass { CMO, BMONotCMO, NeitherClaimed };
[[nodiscard]] std::string to_string(BMOClass c);

struct BMOExample {
    std::string label;
    ClosedForm function;
    BMOClass expected;
};

// Smooth bump, Gaussian, zero (CMO) and log|x - x0| with x0 = h/3 (BMO but not CMO).
[[nodiscard]] std::vector<BMOExample> bmo_examples(double spacing);

// Mean oscillation (1/|I|) int_I |f - f_I| over I = [c - r, c + r] by midpoint quadrature.
[[nodiscard]] double mean_oscillation(const ClosedForm& f, double center, double radius, int cells = 4096);
// sup of mean oscillation over dyadic intervals [k 2^j, (k+1) 2^j] inside [-half_width, half_width]
// for levels j in [min_level, max_level].
[[nodiscard]] double dyadic_bmo_estimate(const ClosedForm& f, double half_width, int min_level, int max_level);

// Mf on the spatial grid: Mf(x_i) = sup over cone nodes of |<f, phi_n>| for the given
// coefficient field of f against an L2-normalized bump dictionary.
[[nodiscard]] std::vector<double> nontangential_max(const CoefficientField& phi_coefficients);
[[nodiscard]] double nontangential_max(const CoefficientField& phi_coefficients, double x);

struct SteinCheck {
    double lhs = 0.0; // sum_n |<f, phi_n>|^p mu_n
    double rhs = 0.0; // h sum_i Mf(x_i)^p C mu(x_i)
    double ratio = 0.0;
    bool passed = false;
};

[[nodiscard]] SteinCheck stein_inequality_check(const CoefficientField& phi_coefficients,
                                                const CoefficientMeasure& mu, double p, double slack);

} // namespace czframe
