#include "czframe/localization.hpp"

#include "czframe/error.hpp"
#include "czframe/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace czframe {

double lemma_bound(const DecayBound& d, double a, double b) {
    const double half = 0.5 * d.dimension;
    const double ab = std::abs(b);
    const double decay = d.dimension + d.delta;
    if (a >= 1.0) {
        if (ab <= a) return d.constant * std::pow(a, -(half + d.delta));
        return d.constant * std::pow(a, half) * std::pow(ab, -decay);
    }
    if (ab <= 1.0) return d.constant * std::pow(a, half + d.delta);
    return d.constant * std::pow(a, half + d.delta) * std::pow(ab, -decay);
}

namespace {

DiscreteAtom psi_atom(const GroupPoint& g, const SpatialGrid& grid) {
    return discrete_atom(make_mother_wavelet().profile(), AtomNormalization::L2, g.a(), g.b(), grid);
}

bool separated(const DiscreteAtom& s, const DiscreteAtom& t) {
    const std::size_t s_end = s.first + s.weights.size();
    const std::size_t t_end = t.first + t.weights.size();
    return t.first >= s_end + 1 || s.first >= t_end + 1;
}

Complex pair_apply(const DiscreteOperator& T, const DiscreteAtom& s, const DiscreteAtom& t) {
    const auto& m = T.matrix();
    const double h = T.grid().spacing();
    CompensatedSum acc;
    for (std::size_t ii = 0; ii < t.weights.size(); ++ii) {
        const std::size_t i = t.first + ii;
        double row = 0.0;
        for (std::size_t jj = 0; jj < s.weights.size(); ++jj) row += m(i, s.first + jj) * s.weights[jj];
        acc += h * t.weights[ii] * row;
    }
    return acc.value();
}

} // namespace

Complex matrix_coefficient_direct(const DiscreteOperator& T, const GroupPoint& source, const GroupPoint& target) {
    const SpatialGrid& grid = T.grid();
    const DiscreteAtom s = psi_atom(source, grid);
    const DiscreteAtom t = psi_atom(target, grid);
    const double h = grid.spacing();
    CompensatedSum acc;
    for (std::size_t ii = 0; ii < t.weights.size(); ++ii) {
        const std::size_t i = t.first + ii;
        const double x = grid.node(i);
        double row = 0.0;
        for (std::size_t jj = 0; jj < s.weights.size(); ++jj) {
            const std::size_t j = s.first + jj;
            if (j == i) continue;
            row += T.kernel()(x, grid.node(j)) * s.weights[jj];
        }
        acc += h * h * t.weights[ii] * row;
    }
    return acc.value();
}

Complex matrix_coefficient_apply(const DiscreteOperator& T, const GroupPoint& source, const GroupPoint& target) {
    return pair_apply(T, psi_atom(source, T.grid()), psi_atom(target, T.grid()));
}

MatrixCoefficient matrix_coefficient(const DiscreteOperator& T, const GroupPoint& source, const GroupPoint& target) {
    const SpatialGrid& grid = T.grid();
    const DiscreteAtom s = psi_atom(source, grid);
    const DiscreteAtom t = psi_atom(target, grid);
    const bool coarse = source.a() < 2.0 * grid.spacing() || target.a() < 2.0 * grid.spacing();
    if (separated(s, t)) return {matrix_coefficient_direct(T, source, target), CoefficientPath::Direct, coarse};
    return {pair_apply(T, s, t), CoefficientPath::Apply, coarse};
}

DecayReport verify_decay(const DiscreteOperator& T, const AtomDictionary& dict) {
    const FrameGrid& fg = dict.grid();
    const CoefficientField c = dict.analyze(apply_closed_form(T.kernel(), make_mother_wavelet().profile()));
    const DecayBound unit{1, T.kernel().delta, 1.0};
    DecayReport r;
    r.coefficients.resize(fg.size());
    r.bounds.resize(fg.size());
    for (std::size_t n = 0; n < fg.size(); ++n) {
        r.coefficients[n] = std::abs(c[n]);
        r.bounds[n] = lemma_bound(unit, fg[n].a, fg[n].b);
        const double ratio = r.coefficients[n] / r.bounds[n];
        if (ratio > r.fitted_constant) {
            r.fitted_constant = ratio;
            r.argmax = n;
        }
    }
    r.histogram.assign(10, 0.0);
    if (r.fitted_constant > 0.0) {
        for (std::size_t n = 0; n < fg.size(); ++n) {
            const double rel = r.coefficients[n] / r.bounds[n] / r.fitted_constant;
            if (rel <= 0.0) continue;
            const int bin = std::clamp(static_cast<int>(std::floor(-std::log10(rel))), 0, 9);
            r.histogram[static_cast<std::size_t>(bin)] += 1.0;
        }
    }
    return r;
}

SchurIntegrand schur_integrand(const CZKernel& k, const AtomDictionary& dict, const GroupPoint& anchor) {
    const FrameGrid& fg = dict.grid();
    const SpatialGrid& grid = fg.spatial();
    SchurIntegrand out;
    out.values.resize(fg.size());
    out.conjugated = k.invariant || anchor.a() <= 1.0;
    CoefficientField c(dict.grid_ptr());
    double anchor_weight = 1.0;
    if (out.conjugated) {
        const DiscreteOperator Tc(conjugate(k, anchor), grid);
        c = dict.analyze(Tc.apply(to_function(psi_atom(GroupPoint(1.0, 0.0), grid), grid)));
        out.distances = identity_distances(fg);
    } else {
        const DiscreteOperator T(k, grid);
        c = dict.analyze(T.apply(to_function(psi_atom(anchor, grid), grid)));
        anchor_weight = schur_weight(anchor.a());
        out.distances.resize(fg.size());
        for (std::size_t n = 0; n < fg.size(); ++n) out.distances[n] = dist(GroupPoint(fg[n].a, fg[n].b), anchor);
    }
    for (std::size_t n = 0; n < fg.size(); ++n)
        out.values[n] = std::abs(c[n]) * schur_weight(fg[n].a) * fg[n].weight / anchor_weight;
    return out;
}

namespace {

// Tail sums over {distance >= R} for every radius, accumulated from the farthest
// node inward so the sequence is non-increasing in R bit for bit.
std::vector<double> tail_sums(const std::vector<double>& values, const std::vector<double>& distances,
                              const std::vector<double>& radii) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return distances[l] > distances[r]; });
    std::vector<std::size_t> by_radius(radii.size());
    std::iota(by_radius.begin(), by_radius.end(), std::size_t{0});
    std::sort(by_radius.begin(), by_radius.end(), [&](std::size_t l, std::size_t r) { return radii[l] > radii[r]; });
    std::vector<double> out(radii.size(), 0.0);
    double acc = 0.0;
    std::size_t pos = 0;
    for (std::size_t idx : by_radius) {
        while (pos < order.size() && distances[order[pos]] >= radii[idx]) acc += values[order[pos++]];
        out[idx] = acc;
    }
    return out;
}

} // namespace

double schur_value(const CZKernel& k, const AtomDictionary& dict, const GroupPoint& anchor) {
    return schur_tail(k, dict, anchor, 0.0);
}

double schur_tail(const CZKernel& k, const AtomDictionary& dict, const GroupPoint& anchor, double radius) {
    const SchurIntegrand s = schur_integrand(k, dict, anchor);
    return tail_sums(s.values, s.distances, {radius}).front();
}

std::vector<GroupPoint> default_anchor_lattice() {
    std::vector<GroupPoint> anchors;
    for (int e = -2; e <= 2; ++e)
        for (double b : {0.0, 2.0, -2.0, 8.0, -8.0, 24.0, -24.0}) anchors.emplace_back(std::ldexp(1.0, e), b);
    return anchors;
}

namespace {

void fold_sup(SchurProfile& p, const std::vector<double>& tails, std::size_t anchor) {
    for (std::size_t r = 0; r < tails.size(); ++r) {
        if (tails[r] > p.values[r]) {
            p.values[r] = tails[r];
            p.argmax[r] = anchor;
        }
    }
}

} // namespace

SchurProfile schur_profile(const CZKernel& k, const AtomDictionary& dict, const std::vector<GroupPoint>& anchors,
                           const std::vector<double>& radii) {
    SchurProfile p{radii, std::vector<double>(radii.size(), 0.0), std::vector<std::size_t>(radii.size(), 0)};
    if (anchors.empty()) return p;
    const std::size_t count = k.invariant ? 1 : anchors.size();
    for (std::size_t i = 0; i < count; ++i) {
        const SchurIntegrand s = schur_integrand(k, dict, anchors[i]);
        fold_sup(p, tail_sums(s.values, s.distances, radii), i);
    }
    return p;
}

SchurProfile origin_tail_profile(const DiscreteOperator& T, const AtomDictionary& dict,
                                 const std::vector<GroupPoint>& anchors, const std::vector<double>& radii) {
    const FrameGrid& fg = dict.grid();
    const SpatialGrid& grid = T.grid();
    const std::vector<double> distances = identity_distances(fg);
    SchurProfile p{radii, std::vector<double>(radii.size(), 0.0), std::vector<std::size_t>(radii.size(), 0)};
    std::vector<double> values(fg.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const CoefficientField c = dict.analyze(T.apply(to_function(psi_atom(anchors[i], grid), grid)));
        const double wa = schur_weight(anchors[i].a());
        for (std::size_t n = 0; n < fg.size(); ++n)
            values[n] = std::abs(c[n]) * schur_weight(fg[n].a) * fg[n].weight / wa;
        fold_sup(p, tail_sums(values, distances, radii), i);
    }
    return p;
}

std::vector<Profile> default_test_bundle() {
    const auto& psi = make_mother_wavelet();
    // bump normalized in L2: int exp(-2/(1-x^2)) dx over (-1,1)
    constexpr int cells = 20000;
    double mass = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double x = -1.0 + (i + 0.5) * 2.0 / cells;
        mass += smooth_bump(x) * smooth_bump(x) * 2.0 / cells;
    }
    const double k = 1.0 / std::sqrt(mass);
    return {psi.profile(), Profile{[k](double x) { return k * smooth_bump(x); }, 1.0, "bump"}};
}

WeakProfile weak_compactness_profile(const DiscreteOperator& T, const FrameGrid& fg, const std::vector<Profile>& bundle,
                                     const std::vector<double>& radii, double bin_width) {
    if (!(fg.spatial() == T.grid())) throw GridMismatch("frame grid and operator use different spatial grids");
    WeakProfile out{radii, std::vector<double>(radii.size(), 0.0), std::vector<std::size_t>(radii.size(), 0), bin_width};
    if (radii.empty() || bundle.empty()) return out;
    const SpatialGrid& grid = T.grid();
    const CZKernel& k = T.kernel();
    const double h = grid.spacing();
    const auto& m = T.matrix();

    double support = 0.0;
    for (const auto& p : bundle) support = std::max(support, p.support);
    const auto [lo, hi] = grid.index_range(-support, support);
    const std::size_t w = hi - lo;
    std::vector<std::vector<double>> base(bundle.size(), std::vector<double>(w));
    for (std::size_t f = 0; f < bundle.size(); ++f)
        for (std::size_t i = 0; i < w; ++i) base[f][i] = bundle[f].eval(grid.node(lo + i));
    Eigen::MatrixXd block(w, w);

    const std::vector<double> distances = identity_distances(fg);
    for (std::size_t n = 0; n < fg.size(); ++n) {
        const double d = distances[n];
        std::size_t bin = radii.size();
        for (std::size_t r = 0; r < radii.size(); ++r)
            if (d >= radii[r] && d < radii[r] + bin_width) bin = r;
        if (bin == radii.size()) continue;
        ++out.counts[bin];
        const double a = fg[n].a;
        const double b = fg[n].b;
        double best = 0.0;
        if (k.invariant || a <= 1.0) {
            // <T f_{(a,b)}, g_{(a,b)}> = int int a K(a x + b, a y + b) f(y) g(x) dy dx
            for (std::size_t j = 0; j < w; ++j) {
                const double y = a * grid.node(lo + j) + b;
                for (std::size_t i = 0; i < w; ++i) {
                    double wt = h * h;
                    if (k.singular) wt = (((i > j ? i - j : j - i) & 1U) != 0) ? 2.0 * h * h : 0.0;
                    block(i, j) = wt == 0.0 ? 0.0 : wt * a * k(a * grid.node(lo + i) + b, y);
                }
            }
            for (std::size_t f = 0; f < bundle.size(); ++f) {
                const Eigen::Map<const Eigen::VectorXd> fv(base[f].data(), static_cast<Eigen::Index>(w));
                const Eigen::VectorXd tf = block * fv;
                for (std::size_t g = 0; g < bundle.size(); ++g) {
                    const Eigen::Map<const Eigen::VectorXd> gv(base[g].data(), static_cast<Eigen::Index>(w));
                    best = std::max(best, std::abs(gv.dot(tf)));
                }
            }
        } else {
            std::vector<DiscreteAtom> atoms;
            for (const auto& p : bundle) atoms.push_back(discrete_atom(p, AtomNormalization::L2, a, b, grid));
            for (const auto& fa : atoms) {
                if (fa.weights.empty()) continue;
                const Eigen::Map<const Eigen::VectorXd> fv(fa.weights.data(), static_cast<Eigen::Index>(fa.weights.size()));
                for (const auto& ga : atoms) {
                    if (ga.weights.empty()) continue;
                    const Eigen::Map<const Eigen::VectorXd> gv(ga.weights.data(),
                                                               static_cast<Eigen::Index>(ga.weights.size()));
                    const double v = gv.dot(m.block(static_cast<Eigen::Index>(ga.first), static_cast<Eigen::Index>(fa.first),
                                                    gv.size(), fv.size()) * fv);
                    best = std::max(best, std::abs(h * v));
                }
            }
        }
        out.values[bin] = std::max(out.values[bin], best);
    }
    return out;
}

} // namespace czframe
