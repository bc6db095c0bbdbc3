#include "czframe/wavelet.hpp"

#include "czframe/error.hpp"
#include "czframe/summation.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace czframe {

double smooth_bump(double x) noexcept {
    const double q = 1.0 - x * x;
    if (q <= 0.0) return 0.0;
    return std::exp(-1.0 / q);
}

double smooth_bump_derivative(double x) noexcept {
    const double q = 1.0 - x * x;
    if (q <= 0.0) return 0.0;
    return std::exp(-1.0 / q) * (-2.0 * x / (q * q));
}

double smooth_bump_second_derivative(double x) noexcept {
    const double q = 1.0 - x * x;
    if (q <= 0.0) return 0.0;
    const double q2 = q * q;
    return std::exp(-1.0 / q) * (4.0 * x * x / (q2 * q2) - 2.0 / q2 - 8.0 * x * x / (q2 * q));
}

double MotherWavelet::operator()(double x) const noexcept { return normalization_ * smooth_bump_derivative(x); }

double MotherWavelet::derivative(double x) const noexcept {
    return normalization_ * smooth_bump_second_derivative(x);
}

Profile MotherWavelet::profile() const {
    const double k = normalization_;
    return {[k](double x) { return k * smooth_bump_derivative(x); }, 1.0, "psi"};
}

SampledFunction MotherWavelet::sampled(const SpatialGrid& grid) const {
    return SampledFunction::sample(grid, [this](double x) { return (*this)(x); });
}

namespace {

// bump_hat(t) = int phi0(x) cos(2 pi x t) dx by the trapezoid rule on [0,1] with
// `half` cells; phi0 is even and flat at x = 1, so the rule converges spectrally.
// The cosine is advanced by a rotation recurrence along x.
double bump_hat(double t, const std::vector<double>& bump_samples, double dx) {
    const double theta = 2.0 * std::numbers::pi * t * dx;
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    double c = 1.0;
    double s = 0.0;
    double acc = 0.5 * bump_samples[0];
    for (std::size_t k = 1; k < bump_samples.size(); ++k) {
        const double cn = c * c1 - s * s1;
        s = s * c1 + c * s1;
        c = cn;
        acc += bump_samples[k] * c;
    }
    return 2.0 * acc * dx;
}

} // namespace

const MotherWavelet& make_mother_wavelet() {
    static const MotherWavelet instance = [] {
        MotherWavelet w;
        // auxiliary grid: 16384 points over [-1,1], i.e. 8x the reference working grid
        constexpr std::size_t half = 8192;
        const double dx = 1.0 / half;
        std::vector<double> bump(half + 1);
        for (std::size_t k = 0; k <= half; ++k) bump[k] = smooth_bump(k * dx);

        // int_0^T 4 pi^2 t |bump_hat(t)|^2 dt, composite Simpson; |psi0_hat(t)|^2/t with
        // psi0_hat(t) = 2 pi i t bump_hat(t).
        constexpr double t_max = 64.0;
        constexpr int panels = 4096;
        const double dt = t_max / panels;
        CompensatedSum acc;
        double peak = 0.0;
        double last = 0.0;
        for (int i = 0; i <= panels; ++i) {
            const double t = i * dt;
            const double bh = bump_hat(t, bump, dx);
            const double v = 4.0 * std::numbers::pi * std::numbers::pi * t * bh * bh;
            peak = std::max(peak, v);
            last = v;
            const double wgt = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc.add(wgt * v);
        }
        const double raw = acc.value() * dt / 3.0;
        if (!(raw > 0.0) || last > 1e-12 * peak) throw std::logic_error("degenerate admissibility integral");
        w.raw_admissibility_ = raw;
        w.normalization_ = 1.0 / std::sqrt(raw);

        double dmax = 0.0;
        CompensatedSum l2;
        constexpr int fine = 1 << 16;
        const double h = 2.0 / fine;
        for (int i = 0; i < fine; ++i) {
            const double x = -1.0 + (i + 0.5) * h;
            dmax = std::max(dmax, std::abs(w.derivative(x)));
            const double v = w(x);
            l2.add(v * v * h);
        }
        w.derivative_bound_ = dmax;
        w.l2_norm_ = std::sqrt(l2.value());
        return w;
    }();
    return instance;
}

SampledFunction dilate(const Profile& p, const GroupPoint& g, double exponent, const SpatialGrid& grid) {
    SampledFunction out(grid);
    const double a = g.a();
    const double b = g.b();
    const double scale = std::pow(a, -exponent);
    const auto [lo, hi] = grid.index_range(b - a * p.support, b + a * p.support);
    for (std::size_t i = lo; i < hi; ++i) out[i] = scale * p.eval((grid.node(i) - b) / a);
    return out;
}

FrameElement frame_element(const MotherWavelet& psi, const GroupPoint& g, const SpatialGrid& grid) {
    const double L = grid.half_width();
    if (g.b() + g.a() <= -L || g.b() - g.a() >= L)
        throw std::invalid_argument("frame element support misses the grid box");
    return {dilate(psi.profile(), g, 0.5, grid), g.a() < 2.0 * grid.spacing()};
}

CoefficientField::CoefficientField(std::shared_ptr<const FrameGrid> grid)
    : grid_(std::move(grid)), values_(grid_->size(), Complex{}) {}

CoefficientField::CoefficientField(std::shared_ptr<const FrameGrid> grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size()) throw GridMismatch("coefficient count does not match the frame grid");
}

double CoefficientField::energy() const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < values_.size(); ++i) acc.add(std::norm(values_[i]) * (*grid_)[i].weight);
    return acc.value();
}

void CoefficientField::write_csv(std::ostream& os) const {
    char line[160];
    os << "a,b,re,im,weight\n";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto& n = (*grid_)[i];
        std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.9g\n", n.a, n.b, values_[i].real(),
                      values_[i].imag(), n.weight);
        os << line;
    }
}

double keys_kernel(double t) noexcept {
    t = std::abs(t);
    if (t < 1.0) return (1.5 * t - 2.5) * t * t + 1.0;
    if (t < 2.0) return ((-0.5 * t + 2.5) * t - 4.0) * t + 2.0;
    return 0.0;
}

DiscreteAtom discrete_atom(const Profile& p, AtomNormalization norm, double a, double b, const SpatialGrid& grid,
                           double projection_cells) {
    const double h = grid.spacing();
    const double S = p.support;
    const double scale = norm == AtomNormalization::L2 ? 1.0 / std::sqrt(a) : 1.0 / a;
    DiscreteAtom out;
    if (a >= projection_cells * h) {
        const auto [lo, hi] = grid.index_range(b - a * S, b + a * S);
        out.first = lo;
        out.weights.resize(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) out.weights[i - lo] = scale * p.eval((grid.node(i) - b) / a);
        return out;
    }
    const auto [lo, hi] = grid.index_range(b - a * S - 2.0 * h, b + a * S + 2.0 * h);
    out.first = lo;
    out.weights.assign(hi - lo, 0.0);
    if (hi == lo) return out;
    constexpr int sub = 256;
    const double du = 2.0 * S / sub;
    const double L = grid.half_width();
    for (int m = 0; m < sub; ++m) {
        const double u = -S + (m + 0.5) * du;
        const double x = b + a * u;
        const double mass = scale * p.eval(u) * a * du / h;
        if (mass == 0.0) continue;
        // nearest nodes: x_i = -L + (i + 1/2) h
        const double pos = (x + L) / h - 0.5;
        const auto base = static_cast<long>(std::floor(pos));
        for (long i = base - 1; i <= base + 2; ++i) {
            if (i < static_cast<long>(lo) || i >= static_cast<long>(hi)) continue;
            out.weights[static_cast<std::size_t>(i) - lo] += mass * keys_kernel(pos - static_cast<double>(i));
        }
    }
    return out;
}

SampledFunction to_function(const DiscreteAtom& atom, const SpatialGrid& grid) {
    SampledFunction out(grid);
    for (std::size_t k = 0; k < atom.weights.size(); ++k) out[atom.first + k] = atom.weights[k];
    return out;
}

AtomDictionary::AtomDictionary(std::shared_ptr<const FrameGrid> grid, Profile profile, AtomNormalization norm,
                               double projection_cells)
    : grid_(std::move(grid)), profile_(std::move(profile)), norm_(norm) {
    const FrameGrid& fg = *grid_;
    const SpatialGrid& sg = fg.spatial();
    const double S = profile_.support;
    first_.resize(fg.size());
    offset_.resize(fg.size() + 1);
    offset_[0] = 0;
    for (std::size_t n = 0; n < fg.size(); ++n) {
        DiscreteAtom atom = discrete_atom(profile_, norm_, fg[n].a, fg[n].b, sg, projection_cells);
        first_[n] = atom.first;
        offset_[n + 1] = offset_[n] + atom.weights.size();
        samples_.insert(samples_.end(), atom.weights.begin(), atom.weights.end());
    }

    const double h = sg.spacing();
    rules_.resize(fg.scales().size());
    for (std::size_t j = 0; j < fg.scales().size(); ++j) {
        const double a = fg.scales()[j];
        const double wanted = std::ceil(2.0 * S * a / h / 2.0) * 2.0;
        const int points = static_cast<int>(std::clamp(wanted, 512.0, 65536.0));
        const int half = points / 2;
        const double du = 2.0 * S / points;
        auto& rule = rules_[j];
        rule.nodes.resize(half);
        rule.weights.resize(half);
        rule.mirror.resize(half);
        for (int k = 0; k < half; ++k) {
            const double u = -S + (k + 0.5) * du;
            rule.nodes[k] = u;
            rule.weights[k] = profile_.eval(u) * du;
            rule.mirror[k] = profile_.eval(-u) * du;
        }
    }
}

CoefficientField AtomDictionary::analyze(const SampledFunction& f) const {
    if (!(f.grid() == grid_->spatial())) throw GridMismatch("analysis on a different spatial grid");
    CoefficientField out(grid_);
    const double h = f.grid().spacing();
    const auto fv = f.values();
    for (std::size_t n = 0; n < grid_->size(); ++n) {
        const auto s = samples(n);
        const Complex* x = fv.data() + first_[n];
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            re += s[k] * x[k].real();
            im += s[k] * x[k].imag();
        }
        out[n] = Complex(re, im) * h;
    }
    return out;
}

CoefficientField AtomDictionary::analyze(const SampledFunction& f, std::span<const std::size_t> nodes) const {
    if (!(f.grid() == grid_->spatial())) throw GridMismatch("analysis on a different spatial grid");
    CoefficientField out(grid_);
    const double h = f.grid().spacing();
    const auto fv = f.values();
    for (std::size_t n : nodes) {
        const auto s = samples(n);
        const Complex* x = fv.data() + first_[n];
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            re += s[k] * x[k].real();
            im += s[k] * x[k].imag();
        }
        out[n] = Complex(re, im) * h;
    }
    return out;
}

CoefficientField AtomDictionary::analyze(const ClosedForm& f) const {
    CoefficientField out(grid_);
    for (std::size_t n = 0; n < grid_->size(); ++n) {
        const double a = (*grid_)[n].a;
        const double b = (*grid_)[n].b;
        const auto& rule = rules_[static_cast<std::size_t>((*grid_)[n].scale)];
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double u = rule.nodes[k];
            acc += rule.weights[k] * f.eval(b + a * u) + rule.mirror[k] * f.eval(b - a * u);
        }
        // int F(x) s(a) p((x-b)/a) dx = s(a) a int F(b + a u) p(u) du
        const double scale = norm_ == AtomNormalization::L2 ? std::sqrt(a) : 1.0;
        out[n] = acc * scale;
    }
    return out;
}

SampledFunction AtomDictionary::synthesize(const CoefficientField& c) const {
    if (c.size() != grid_->size())
        throw GridMismatch("synthesis from a field on a different frame grid");
    SampledFunction out(grid_->spatial());
    auto ov = out.values();
    for (std::size_t n = 0; n < grid_->size(); ++n) {
        const Complex w = c[n] * (*grid_)[n].weight;
        if (w == Complex{}) continue;
        const auto s = samples(n);
        Complex* y = ov.data() + first_[n];
        for (std::size_t k = 0; k < s.size(); ++k) y[k] += w * s[k];
    }
    return out;
}

SampledFunction AtomDictionary::synthesize(const CoefficientField& c, std::span<const std::size_t> nodes) const {
    SampledFunction out(grid_->spatial());
    auto ov = out.values();
    for (std::size_t n : nodes) {
        const Complex w = c[n] * (*grid_)[n].weight;
        if (w == Complex{}) continue;
        const auto s = samples(n);
        Complex* y = ov.data() + first_[n];
        for (std::size_t k = 0; k < s.size(); ++k) y[k] += w * s[k];
    }
    return out;
}

AtomDictionary wavelet_dictionary(std::shared_ptr<const FrameGrid> grid) {
    return AtomDictionary(std::move(grid), make_mother_wavelet().profile(), AtomNormalization::L2);
}

CoefficientField analyze(const SampledFunction& f, const AtomDictionary& dict) { return dict.analyze(f); }
SampledFunction synthesize(const CoefficientField& c, const AtomDictionary& dict) { return dict.synthesize(c); }

} // namespace czframe
