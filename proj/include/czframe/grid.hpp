#pragma once

// Discretizations of the line (spatial grid) and of the half-plane (frame grid).

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace czframe {

using Complex = std::complex<double>;
using RealFunction = std::function<double(double)>;

// N cells of width h = 2L/N covering [-L, L); samples sit at the cell midpoints, so
// the node set is symmetric under x -> -x.
class SpatialGrid {
public:
    SpatialGrid(double half_width, std::size_t points);

    [[nodiscard]] double half_width() const noexcept { return half_width_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }
    [[nodiscard]] double node(std::size_t i) const noexcept {
        return -half_width_ + (static_cast<double>(i) + 0.5) * spacing_;
    }
    // Index range [first, last) of nodes with x in the closed interval [lo, hi].
    [[nodiscard]] std::pair<std::size_t, std::size_t> index_range(double lo, double hi) const noexcept;

    bool operator==(const SpatialGrid&) const = default;

private:
    double half_width_;
    std::size_t points_;
    double spacing_;
};

class SampledFunction {
public:
    explicit SampledFunction(SpatialGrid grid);
    SampledFunction(SpatialGrid grid, std::vector<Complex> values);

    static SampledFunction sample(const SpatialGrid& grid, const RealFunction& f);
    static SampledFunction constant(const SpatialGrid& grid, Complex c);

    [[nodiscard]] const SpatialGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }
    [[nodiscard]] std::span<Complex> values() noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    Complex& operator[](std::size_t i) noexcept { return values_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }

    [[nodiscard]] double norm() const;

    SampledFunction& operator+=(const SampledFunction& other);
    SampledFunction& operator-=(const SampledFunction& other);
    SampledFunction& operator*=(Complex c);

private:
    SpatialGrid grid_;
    std::vector<Complex> values_;
};

SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs);
SampledFunction operator-(SampledFunction lhs, const SampledFunction& rhs);
SampledFunction operator*(Complex c, SampledFunction f);

// <f, g> = sum_i f_i conj(g_i) h. Throws GridMismatch for different grids.
[[nodiscard]] Complex inner_product(const SampledFunction& f, const SampledFunction& g);

// Relative L2 error ||f - ref|| / ||ref|| over nodes with |x| <= window.
[[nodiscard]] double relative_l2_error(const SampledFunction& f, const SampledFunction& ref,
                                       double window);

struct FrameGridConfig {
    double a_min = 0.0625;
    double a_max = 4096.0;
    int scales_per_octave = 4;
    double spacing = 0.125;    // translation step s, nodes at b = k s a
    double half_width_b = 32.0; // L_b; row j keeps |b| <= L_b + a_j

    [[nodiscard]] FrameGridConfig refined() const;
};

struct FrameNode {
    double a;
    double b;
    double weight; // Haar quadrature weight dλ of the node's cell
    int scale;     // row index into FrameGrid::scales()
};

// Scales are the powers 2^{j/spo} inside [a_min, a_max]; each row is a midpoint
// cell of width ln(2)/spo in log a. Translations are integer multiples of s a_j.
// For n = 1 every node carries weight (ln 2 / spo) * s.
class FrameGrid {
public:
    FrameGrid(const FrameGridConfig& config, const SpatialGrid& spatial);

    [[nodiscard]] const FrameGridConfig& config() const noexcept { return config_; }
    [[nodiscard]] const SpatialGrid& spatial() const noexcept { return spatial_; }
    [[nodiscard]] std::span<const FrameNode> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] const FrameNode& operator[](std::size_t i) const noexcept { return nodes_[i]; }
    [[nodiscard]] std::span<const double> scales() const noexcept { return scales_; }
    // Node indices of row j are [row_begin(j), row_begin(j+1)), sorted by b.
    [[nodiscard]] std::size_t row_begin(std::size_t j) const noexcept { return row_begin_[j]; }
    [[nodiscard]] std::size_t row_end(std::size_t j) const noexcept { return row_begin_[j + 1]; }
    [[nodiscard]] double log_step() const noexcept { return log_step_; }

    // Index of the node (a,b) when it is a lattice point, otherwise npos.
    [[nodiscard]] std::size_t find(double a, double b) const noexcept;
    // Indices of row j with lo < b < hi (strict).
    [[nodiscard]] std::pair<std::size_t, std::size_t> row_range_open(std::size_t j, double lo,
                                                                     double hi) const noexcept;
    [[nodiscard]] std::string describe() const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    FrameGridConfig config_;
    SpatialGrid spatial_;
    double log_step_;
    std::vector<double> scales_;
    std::vector<int> scale_exponents_;
    std::vector<std::size_t> row_begin_;
    std::vector<FrameNode> nodes_;
};

// Validates the configuration against the spatial grid (throws ResolutionError when
// a_min < 2h, ConfigError for other violations) and builds the lattice.
[[nodiscard]] std::shared_ptr<const FrameGrid> make_frame_grid(const FrameGridConfig& config,
                                                               const SpatialGrid& spatial);

// Nodes at hyperbolic distance >= R from (1,0), in increasing index order.
[[nodiscard]] std::vector<std::size_t> tail_nodes(const FrameGrid& grid, double radius);

// Distances of every node to (1,0), cached per call site.
[[nodiscard]] std::vector<double> identity_distances(const FrameGrid& grid);

} // namespace czframe
