#pragma once

// Mother wavelet, frame elements psi_{(a,b)} = a^{-1/2} psi((x-b)/a), and the
// analysis / synthesis maps of the continuous frame, discretized on a FrameGrid.

#include "czframe/grid.hpp"
#include "czframe/group.hpp"

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace czframe {

// A compactly supported real profile p with supp p within [-support, support].
struct Profile {
    RealFunction eval;
    double support = 1.0;
    std::string label;
};

// A function given in closed form on the whole line (not truncated to the box).
struct ClosedForm {
    std::string label;
    RealFunction eval;
};

// psi = k * d/dx exp(-1/(1-x^2)) on (-1,1), zero elsewhere. k is fixed so that
// int_0^inf |psihat(t)|^2 dt/t = 1 with psihat(t) = int psi(x) e^{-ixt} dx, which is the
// normalization that makes the frame Parseval.
class MotherWavelet {
public:
    [[nodiscard]] double operator()(double x) const noexcept;
    [[nodiscard]] double derivative(double x) const noexcept;

    // Squared admissibility constant of the unnormalized generator.
    [[nodiscard]] double raw_admissibility() const noexcept { return raw_admissibility_; }
    [[nodiscard]] double normalization() const noexcept { return normalization_; }
    [[nodiscard]] double derivative_bound() const noexcept { return derivative_bound_; }
    [[nodiscard]] double l2_norm() const noexcept { return l2_norm_; }
    [[nodiscard]] Profile profile() const;

    // Sampled profile on the working grid.
    [[nodiscard]] SampledFunction sampled(const SpatialGrid& grid) const;

private:
    friend const MotherWavelet& make_mother_wavelet();
    MotherWavelet() = default;

    double raw_admissibility_ = 0.0;
    double normalization_ = 1.0;
    double derivative_bound_ = 0.0;
    double l2_norm_ = 0.0;
};

// Unnormalized generator pieces, shared with tests.
[[nodiscard]] double smooth_bump(double x) noexcept;            // exp(-1/(1-x^2)) on (-1,1)
[[nodiscard]] double smooth_bump_derivative(double x) noexcept; // its first derivative
[[nodiscard]] double smooth_bump_second_derivative(double x) noexcept;

// Computes the admissibility constant by a discrete Fourier evaluation on an
// auxiliary grid of `samples` points over [-1,1] (>= 8x the working grid). The
// result is computed once per process.
[[nodiscard]] const MotherWavelet& make_mother_wavelet();

struct FrameElement {
    SampledFunction samples;
    bool under_resolved = false; // a < 2h
};

// a^{-1/2} psi((x - b)/a) sampled on the grid. Throws std::invalid_argument when
// the support B(b,a) misses the grid box.
[[nodiscard]] FrameElement frame_element(const MotherWavelet& psi, const GroupPoint& g,
                                         const SpatialGrid& grid);

// General dilate/translate of a profile: scale^{-exponent} p((x - b)/a).
[[nodiscard]] SampledFunction dilate(const Profile& p, const GroupPoint& g, double exponent,
                                     const SpatialGrid& grid);

class CoefficientField {
public:
    explicit CoefficientField(std::shared_ptr<const FrameGrid> grid);
    CoefficientField(std::shared_ptr<const FrameGrid> grid, std::vector<Complex> values);

    [[nodiscard]] const FrameGrid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const std::shared_ptr<const FrameGrid>& grid_ptr() const noexcept { return grid_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }
    [[nodiscard]] std::span<Complex> values() noexcept { return values_; }
    Complex& operator[](std::size_t i) noexcept { return values_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    // sum |c|^2 dλ
    [[nodiscard]] double energy() const;
    // Rows "a,b,re,im,weight" with a header line.
    void write_csv(std::ostream& os) const;

private:
    std::shared_ptr<const FrameGrid> grid_;
    std::vector<Complex> values_;
};

enum class AtomNormalization {
    L2, // a^{-1/2} p((x-b)/a), unitary
    L1, // a^{-1} p((x-b)/a), mass preserving
};

// Discrete representative of one atom: a weight vector on a window of grid nodes
// such that <f, atom> ~ h sum_i f_i weights_i.
//
// Atoms narrower than `projection_cells` grid cells are not point-sampled (their
// samples alias); instead weights_i = (1/h) int atom(x) k((x - x_i)/h) dx with the
// Keys cubic interpolation kernel k, so the pairing equals the exact integral of
// the atom against the cubic interpolant of f. Wider atoms use plain samples.
struct DiscreteAtom {
    std::size_t first = 0;
    std::vector<double> weights;
};

inline constexpr double kDefaultProjectionCells = 16.0;

[[nodiscard]] DiscreteAtom discrete_atom(const Profile& p, AtomNormalization norm, double a, double b,
                                         const SpatialGrid& grid,
                                         double projection_cells = kDefaultProjectionCells);
[[nodiscard]] SampledFunction to_function(const DiscreteAtom& atom, const SpatialGrid& grid);

// Keys cubic convolution kernel (parameter -1/2); interpolating, partition of unity.
[[nodiscard]] double keys_kernel(double t) noexcept;

// Discrete atoms for every lattice node, stored by support window. The same
// dictionary serves box analysis, synthesis and their adjoints, so the two are
// exact transposes of each other.
class AtomDictionary {
public:
    AtomDictionary(std::shared_ptr<const FrameGrid> grid, Profile profile, AtomNormalization norm,
                   double projection_cells = kDefaultProjectionCells);

    [[nodiscard]] const FrameGrid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const std::shared_ptr<const FrameGrid>& grid_ptr() const noexcept { return grid_; }
    [[nodiscard]] const Profile& profile() const noexcept { return profile_; }
    [[nodiscard]] AtomNormalization normalization() const noexcept { return norm_; }

    [[nodiscard]] std::size_t first(std::size_t node) const noexcept { return first_[node]; }
    [[nodiscard]] std::span<const double> samples(std::size_t node) const noexcept {
        return {samples_.data() + offset_[node], offset_[node + 1] - offset_[node]};
    }

    // <f, atom_n> = h sum_i f_i atom_n(x_i) for every node.
    [[nodiscard]] CoefficientField analyze(const SampledFunction& f) const;
    // Same pairing restricted to the listed nodes (other entries zero).
    [[nodiscard]] CoefficientField analyze(const SampledFunction& f, std::span<const std::size_t> nodes) const;
    // <F, atom_n> = int F(x) atom_n(x) dx by midpoint quadrature on the atom's support,
    // independent of the spatial box. The point count grows with the scale so the
    // quadrature step never exceeds h (capped at 65536 points per atom).
    [[nodiscard]] CoefficientField analyze(const ClosedForm& f) const;
    // sum_n c_n dλ_n atom_n
    [[nodiscard]] SampledFunction synthesize(const CoefficientField& c) const;
    [[nodiscard]] SampledFunction synthesize(const CoefficientField& c, std::span<const std::size_t> nodes) const;

private:
    std::shared_ptr<const FrameGrid> grid_;
    Profile profile_;
    AtomNormalization norm_;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> offset_;
    std::vector<double> samples_;
    struct ClosedFormRule {
        std::vector<double> nodes;   // u_k < 0; the mirror node is -u_k
        std::vector<double> weights; // p(u_k) du
        std::vector<double> mirror;  // p(-u_k) du
    };
    std::vector<ClosedFormRule> rules_; // one per scale row
};

// Frame dictionary for the mother wavelet.
[[nodiscard]] AtomDictionary wavelet_dictionary(std::shared_ptr<const FrameGrid> grid);

[[nodiscard]] CoefficientField analyze(const SampledFunction& f, const AtomDictionary& dict);
[[nodiscard]] SampledFunction synthesize(const CoefficientField& c, const AtomDictionary& dict);

} // namespace czframe
