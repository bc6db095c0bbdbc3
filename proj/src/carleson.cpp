#include "czframe/carleson.hpp"

#include "czframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace czframe {

CoefficientMeasure::CoefficientMeasure(std::shared_ptr<const FrameGrid> grid, std::vector<double> masses)
    : grid_(std::move(grid)), masses_(std::move(masses)) {
    if (masses_.size() != grid_->size()) throw GridMismatch("measure size differs from the frame lattice");
    for (double m : masses_)
        if (!(m >= 0.0)) throw std::invalid_argument("measure masses must be non-negative");
}

CoefficientMeasure CoefficientMeasure::from_coefficients(const CoefficientField& c) {
    std::vector<double> m(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) m[n] = std::norm(c[n]) * c.grid()[n].weight;
    return {c.grid_ptr(), std::move(m)};
}

CoefficientMeasure CoefficientMeasure::point_mass(std::shared_ptr<const FrameGrid> grid, std::size_t node, double mass) {
    std::vector<double> m(grid->size(), 0.0);
    m.at(node) = mass;
    return {std::move(grid), std::move(m)};
}

double CoefficientMeasure::total() const {
    double acc = 0.0;
    for (double m : masses_) acc += m;
    return acc;
}

double CoefficientMeasure::tent_mass(double center, double radius) const {
    const FrameGrid& fg = *grid_;
    double acc = 0.0;
    for (std::size_t j = 0; j < fg.scales().size(); ++j) {
        const double a = fg.scales()[j];
        if (a >= radius) break;
        const auto [lo, hi] = fg.row_range_open(j, center - (radius - a), center + (radius - a));
        for (std::size_t n = lo; n < hi; ++n) acc += masses_[n];
    }
    return acc;
}

TentTable::TentTable(const CoefficientMeasure& mu) : grid_(mu.grid_ptr()), ratios_(mu.grid().size()) {
    const FrameGrid& fg = *grid_;
    for (std::size_t n = 0; n < fg.size(); ++n) ratios_[n] = mu.tent_mass(fg[n].b, fg[n].a) / (2.0 * fg[n].a);
}

double TentTable::carleson(double x) const {
    const FrameGrid& fg = *grid_;
    double best = 0.0;
    for (std::size_t j = 0; j < fg.scales().size(); ++j) {
        const double a = fg.scales()[j];
        const auto [lo, hi] = fg.row_range_open(j, x - a, x + a);
        for (std::size_t n = lo; n < hi; ++n) best = std::max(best, ratios_[n]);
    }
    return best;
}

double carleson_function(const CoefficientMeasure& mu, double x) { return TentTable(mu).carleson(x); }

VanishingProfile vanishing_profile(const CoefficientMeasure& mu, const std::vector<double>& radii) {
    const TentTable table(mu);
    const std::vector<double> d = identity_distances(mu.grid());
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return d[l] > d[r]; });
    std::vector<std::size_t> by_radius(radii.size());
    std::iota(by_radius.begin(), by_radius.end(), std::size_t{0});
    std::sort(by_radius.begin(), by_radius.end(), [&](std::size_t l, std::size_t r) { return radii[l] > radii[r]; });
    VanishingProfile p{radii, std::vector<double>(radii.size(), 0.0), 0.0};
    double best = 0.0;
    std::size_t pos = 0;
    for (std::size_t idx : by_radius) {
        while (pos < order.size() && d[order[pos]] >= radii[idx]) best = std::max(best, table.ratios()[order[pos++]]);
        p.values[idx] = best;
    }
    if (!radii.empty()) p.ratio = p.values.back() / std::max(p.values.front(), 1e-12);
    return p;
}

std::vector<std::pair<double, double>> axis_profile(const CoefficientMeasure& mu) {
    const FrameGrid& fg = mu.grid();
    std::vector<std::pair<double, double>> out;
    for (std::size_t j = 0; j < fg.scales().size(); ++j) {
        const double a = fg.scales()[j];
        const std::size_t n = fg.find(a, 0.0);
        if (n == FrameGrid::npos) continue;
        out.emplace_back(a, mu.tent_mass(0.0, a) / (2.0 * a));
    }
    return out;
}

std::string to_string(BMOClass c) {
    switch (c) {
    case BMOClass::CMO: return "CMO";
    case BMOClass::BMONotCMO: return "BMO\\CMO";
    case BMOClass::NeitherClaimed: return "neither-claimed";
    }
    return "neither-claimed";
}

std::vector<BMOExample> bmo_examples(double spacing) {
    const double x0 = spacing / 3.0;
    return {
        {"bump", {"bump", [](double x) { return smooth_bump(x); }}, BMOClass::CMO},
        {"gaussian", {"gaussian", [](double x) { return std::exp(-0.5 * x * x); }}, BMOClass::CMO},
        {"zero", {"zero", [](double) { return 0.0; }}, BMOClass::CMO},
        {"log", {"log|x-h/3|", [x0](double x) { return std::log(std::abs(x - x0)); }}, BMOClass::BMONotCMO},
    };
}

double mean_oscillation(const ClosedForm& f, double center, double radius, int cells) {
    std::vector<double> v(static_cast<std::size_t>(cells));
    const double dx = 2.0 * radius / cells;
    double mean = 0.0;
    for (int i = 0; i < cells; ++i) {
        v[static_cast<std::size_t>(i)] = f.eval(center - radius + (i + 0.5) * dx);
        mean += v[static_cast<std::size_t>(i)];
    }
    mean /= cells;
    double osc = 0.0;
    for (double y : v) osc += std::abs(y - mean);
    return osc / cells;
}

double dyadic_bmo_estimate(const ClosedForm& f, double half_width, int min_level, int max_level) {
    double best = 0.0;
    for (int j = min_level; j <= max_level; ++j) {
        const double len = std::ldexp(1.0, j);
        const auto count = static_cast<long>(std::floor(half_width / len));
        for (long k = -count; k < count; ++k)
            best = std::max(best, mean_oscillation(f, (static_cast<double>(k) + 0.5) * len, 0.5 * len, 1024));
    }
    return best;
}

double nontangential_max(const CoefficientField& c, double x) {
    const FrameGrid& fg = c.grid();
    double best = 0.0;
    for (std::size_t j = 0; j < fg.scales().size(); ++j) {
        const double a = fg.scales()[j];
        const auto [lo, hi] = fg.row_range_open(j, x - a, x + a);
        for (std::size_t n = lo; n < hi; ++n) best = std::max(best, std::abs(c[n]));
    }
    return best;
}

std::vector<double> nontangential_max(const CoefficientField& c) {
    const SpatialGrid& sg = c.grid().spatial();
    std::vector<double> out(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i) out[i] = nontangential_max(c, sg.node(i));
    return out;
}

SteinCheck stein_inequality_check(const CoefficientField& c, const CoefficientMeasure& mu, double p, double slack) {
    if (c.size() != mu.grid().size()) throw GridMismatch("coefficients and measure use different lattices");
    SteinCheck s;
    for (std::size_t n = 0; n < c.size(); ++n)
        if (mu.masses()[n] > 0.0) s.lhs += std::pow(std::abs(c[n]), p) * mu.masses()[n];
    const TentTable table(mu);
    const SpatialGrid& sg = mu.grid().spatial();
    const std::vector<double> m = nontangential_max(c);
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const double cm = table.carleson(sg.node(i));
        if (cm > 0.0 && m[i] > 0.0) s.rhs += sg.spacing() * std::pow(m[i], p) * cm;
    }
    if (s.lhs == 0.0) {
        s.passed = true;
    } else if (s.rhs > 0.0) {
        s.ratio = s.lhs / s.rhs;
        s.passed = s.ratio <= slack;
    } else {
        s.ratio = std::numeric_limits<double>::infinity();
    }
    return s;
}

} // namespace czframe
