#include "czframe/grid.hpp"

#include "czframe/error.hpp"
#include "czframe/group.hpp"
#include "czframe/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace czframe {

SpatialGrid::SpatialGrid(double half_width, std::size_t points)
    : half_width_(half_width), points_(points), spacing_(2.0 * half_width / static_cast<double>(points)) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw ConfigError("spatial grid half-width must be positive");
    if (points < 16) throw ConfigError("spatial grid needs at least 16 points");
}

std::pair<std::size_t, std::size_t> SpatialGrid::index_range(double lo, double hi) const noexcept {
    // node(i) >= lo  <=>  i >= (lo + L)/h - 1/2
    const double n = static_cast<double>(points_);
    double first = std::ceil((lo + half_width_) / spacing_ - 0.5);
    double last = std::floor((hi + half_width_) / spacing_ - 0.5) + 1.0;
    first = std::clamp(first, 0.0, n);
    last = std::clamp(last, 0.0, n);
    if (last < first) last = first;
    return {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
}

SampledFunction::SampledFunction(SpatialGrid grid) : grid_(grid), values_(grid.size(), Complex{}) {}

SampledFunction::SampledFunction(SpatialGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw GridMismatch("sample count does not match the spatial grid");
}

SampledFunction SampledFunction::sample(const SpatialGrid& grid, const RealFunction& f) {
    SampledFunction out(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) out.values_[i] = f(grid.node(i));
    return out;
}

SampledFunction SampledFunction::constant(const SpatialGrid& grid, Complex c) {
    return SampledFunction(grid, std::vector<Complex>(grid.size(), c));
}

double SampledFunction::norm() const { return std::sqrt(inner_product(*this, *this).real()); }

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
    if (!(grid_ == other.grid_)) throw GridMismatch("cannot add functions on different grids");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other) {
    if (!(grid_ == other.grid_)) throw GridMismatch("cannot subtract functions on different grids");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

SampledFunction& SampledFunction::operator*=(Complex c) {
    for (auto& v : values_) v *= c;
    return *this;
}

SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs) { return lhs += rhs; }
SampledFunction operator-(SampledFunction lhs, const SampledFunction& rhs) { return lhs -= rhs; }
SampledFunction operator*(Complex c, SampledFunction f) { return f *= c; }

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (!(f.grid() == g.grid())) throw GridMismatch("inner product of functions on different grids");
    ComplexCompensatedSum acc;
    const auto fv = f.values();
    const auto gv = g.values();
    for (std::size_t i = 0; i < fv.size(); ++i) acc.add(fv[i] * std::conj(gv[i]));
    return acc.value() * f.grid().spacing();
}

double relative_l2_error(const SampledFunction& f, const SampledFunction& ref, double window) {
    if (!(f.grid() == ref.grid())) throw GridMismatch("error of functions on different grids");
    CompensatedSum num;
    CompensatedSum den;
    const auto& grid = f.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid.node(i)) > window) continue;
        num.add(std::norm(f[i] - ref[i]));
        den.add(std::norm(ref[i]));
    }
    return den.value() > 0.0 ? std::sqrt(num.value() / den.value()) : std::sqrt(num.value());
}

FrameGridConfig FrameGridConfig::refined() const {
    FrameGridConfig out = *this;
    out.scales_per_octave *= 2;
    out.spacing *= 0.5;
    return out;
}

FrameGrid::FrameGrid(const FrameGridConfig& config, const SpatialGrid& spatial)
    : config_(config), spatial_(spatial), log_step_(std::numbers::ln2 / config.scales_per_octave) {
    if (config.scales_per_octave < 1) throw ConfigError("scales_per_octave must be >= 1");
    if (!(config.spacing > 0.0 && config.spacing <= 1.0))
        throw ConfigError("translation spacing ratio s must lie in (0, 1]");
    if (!(config.a_min > 0.0) || !(config.a_max >= config.a_min))
        throw ConfigError("scale range requires 0 < a_min <= a_max");
    if (!(config.half_width_b > 0.0)) throw ConfigError("translation half-width L_b must be positive");
    const double resolution = 2.0 * spatial.spacing();
    if (config.a_min < resolution * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "a_min = " << config.a_min << " is below the resolution limit 2h = " << resolution;
        throw ResolutionError(os.str());
    }

    const int spo = config.scales_per_octave;
    const int j_lo = static_cast<int>(std::ceil(spo * std::log2(config.a_min) - 1e-9));
    const int j_hi = static_cast<int>(std::floor(spo * std::log2(config.a_max) + 1e-9));
    if (j_hi < j_lo) throw ConfigError("scale range contains no lattice scale 2^{j/spo}");

    const double weight = log_step_ * config.spacing;
    row_begin_.push_back(0);
    for (int j = j_lo; j <= j_hi; ++j) {
        const double a = std::exp2(static_cast<double>(j) / spo);
        const double step = config.spacing * a;
        const auto kmax = static_cast<long>(std::floor((config.half_width_b + a) / step + 1e-9));
        const int row = static_cast<int>(scales_.size());
        for (long k = -kmax; k <= kmax; ++k)
            nodes_.push_back({a, static_cast<double>(k) * step, weight, row});
        scales_.push_back(a);
        scale_exponents_.push_back(j);
        row_begin_.push_back(nodes_.size());
    }
}

std::size_t FrameGrid::find(double a, double b) const noexcept {
    const double jf = config_.scales_per_octave * std::log2(a);
    const double jr = std::round(jf);
    if (std::abs(jf - jr) > 1e-9) return npos;
    const int j = static_cast<int>(jr);
    if (scale_exponents_.empty() || j < scale_exponents_.front() || j > scale_exponents_.back()) return npos;
    const auto row = static_cast<std::size_t>(j - scale_exponents_.front());
    const double step = config_.spacing * scales_[row];
    const double kf = b / step;
    const double kr = std::round(kf);
    if (std::abs(kf - kr) > 1e-9) return npos;
    const std::size_t begin = row_begin_[row];
    const std::size_t count = row_begin_[row + 1] - begin;
    const long kmax = static_cast<long>(count / 2);
    const long k = static_cast<long>(kr);
    if (k < -kmax || k > kmax) return npos;
    return begin + static_cast<std::size_t>(k + kmax);
}

std::pair<std::size_t, std::size_t> FrameGrid::row_range_open(std::size_t j, double lo, double hi) const noexcept {
    const std::size_t begin = row_begin_[j];
    const std::size_t end = row_begin_[j + 1];
    const double step = config_.spacing * scales_[j];
    const long kmax = static_cast<long>((end - begin) / 2);
    // smallest k with k*step > lo, largest k with k*step < hi
    long k_lo = static_cast<long>(std::floor(lo / step)) + 1;
    while (k_lo - 1 >= -kmax && static_cast<double>(k_lo - 1) * step > lo) --k_lo;
    while (static_cast<double>(k_lo) * step <= lo) ++k_lo;
    long k_hi = static_cast<long>(std::ceil(hi / step)) - 1;
    while (k_hi + 1 <= kmax && static_cast<double>(k_hi + 1) * step < hi) ++k_hi;
    while (static_cast<double>(k_hi) * step >= hi) --k_hi;
    k_lo = std::max(k_lo, -kmax);
    k_hi = std::min(k_hi, kmax);
    if (k_hi < k_lo) return {begin, begin};
    return {begin + static_cast<std::size_t>(k_lo + kmax), begin + static_cast<std::size_t>(k_hi + kmax) + 1};
}

std::string FrameGrid::describe() const {
    std::ostringstream os;
    os.precision(9);
    os << "frame lattice: a in [" << scales_.front() << ", " << scales_.back() << "], "
       << config_.scales_per_octave << " scales/octave, b step " << config_.spacing
       << "*a, |b| <= " << config_.half_width_b << " + a, " << nodes_.size() << " nodes";
    return os.str();
}

std::shared_ptr<const FrameGrid> make_frame_grid(const FrameGridConfig& config, const SpatialGrid& spatial) {
    return std::make_shared<const FrameGrid>(config, spatial);
}

std::vector<double> identity_distances(const FrameGrid& grid) {
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) d[i] = dist_to_identity(grid[i].a, grid[i].b);
    return d;
}

std::vector<std::size_t> tail_nodes(const FrameGrid& grid, double radius) {
    if (radius < 0.0) throw ConfigError("tail radius must be non-negative");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (dist_to_identity(grid[i].a, grid[i].b) >= radius) out.push_back(i);
    return out;
}

} // namespace czframe
