#include "czframe/compactness.hpp"

#include "czframe/grid.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace czframe {

namespace {

// Tail energy of Tf and A*A f = T* sum_n dλ_n <Tf, psi_n> psi_n.
std::pair<double, SampledFunction> normal_step(const LinearMap& T, const AtomDictionary& dict,
                                               const std::vector<std::size_t>& tail, const SampledFunction& f) {
    const CoefficientField c = dict.analyze(T.apply(f), tail);
    double energy = 0.0;
    for (std::size_t n : tail) energy += std::norm(c[n]) * dict.grid()[n].weight;
    return {energy, T.adjoint(dict.synthesize(c, tail))};
}

} // namespace

TailResult rk_tail(const LinearMap& T, const AtomDictionary& dict, double radius,
                   const PowerIterationOptions& options, const std::optional<SampledFunction>& start) {
    const SpatialGrid& grid = T.grid();
    const std::vector<std::size_t> tail = tail_nodes(dict.grid(), radius);
    TailResult r{0.0, 0, false, SampledFunction(grid)};
    SampledFunction f(grid);
    if (start && start->norm() > 0.0) {
        f = *start;
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (std::size_t i = 0; i < grid.size(); ++i) f[i] = u(rng);
    }
    f *= 1.0 / f.norm();
    if (tail.empty()) {
        r.converged = true;
        r.witness = f;
        return r;
    }
    for (int it = 1; it <= options.max_iterations; ++it) {
        auto [value, next] = normal_step(T, dict, tail, f);
        r.iterations = it;
        if (value > r.value) {
            r.value = value;
            r.witness = f;
        }
        if (value == 0.0) {
            r.converged = true;
            r.value = 0.0;
            r.witness = f;
            break;
        }
        // eigen-residual ||A*A f - value f|| relative to value
        const double norm = next.norm();
        SampledFunction residual = next;
        residual -= value * f;
        if (residual.norm() <= options.tolerance * value) {
            r.converged = true;
            break;
        }
        f = std::move(next);
        f *= 1.0 / norm;
    }
    return r;
}

std::string to_string(TrendVerdict v) {
    switch (v) {
    case TrendVerdict::Vanishing: return "vanishing";
    case TrendVerdict::NonVanishing: return "non-vanishing";
    case TrendVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

TailProfile rk_tail_profile(const LinearMap& T, const AtomDictionary& dict, const std::vector<double>& radii,
                            const PowerIterationOptions& options, double vanish_below, double persist_above) {
    const std::size_t m = radii.size();
    TailProfile p{radii, std::vector<double>(m, 0.0), std::vector<int>(m, 0), std::vector<bool>(m, false),
                  SampledFunction(T.grid())};
    if (m == 0) return p;
    std::optional<SampledFunction> warm;
    for (std::size_t k = m; k-- > 0;) {
        TailResult r = rk_tail(T, dict, radii[k], options, warm);
        p.values[k] = r.value;
        if (k + 1 < m) p.values[k] = std::max(p.values[k], p.values[k + 1]);
        p.iterations[k] = r.iterations;
        p.converged[k] = r.converged;
        if (k == m - 1) p.witness = r.witness;
        warm = std::move(r.witness);
    }
    if (p.values.front() > 0.0) {
        p.ratio = p.values.back() / p.values.front();
        if (p.ratio < vanish_below)
            p.verdict = TrendVerdict::Vanishing;
        else if (p.ratio > persist_above)
            p.verdict = TrendVerdict::NonVanishing;
    } else {
        p.verdict = TrendVerdict::Vanishing;
    }
    return p;
}

Eigen::MatrixXd assemble(const LinearMap& T) {
    if (const auto* d = dynamic_cast<const DiscreteOperator*>(&T)) return d->matrix();
    const SpatialGrid& grid = T.grid();
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd m(n, n);
    SampledFunction e(grid);
    for (Eigen::Index j = 0; j < n; ++j) {
        e[static_cast<std::size_t>(j)] = 1.0;
        const SampledFunction col = T.apply(e);
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = col[static_cast<std::size_t>(i)].real();
        e[static_cast<std::size_t>(j)] = 0.0;
    }
    return m;
}

std::vector<double> singular_spectrum(const Eigen::MatrixXd& m, std::size_t k) {
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    std::vector<double> out(s.data(), s.data() + std::min<std::size_t>(k, static_cast<std::size_t>(s.size())));
    return out;
}

std::vector<double> singular_spectrum(const LinearMap& T, std::size_t k) { return singular_spectrum(assemble(T), k); }

double rk_tail_dense(const LinearMap& T, const AtomDictionary& dict, double radius) {
    const SpatialGrid& grid = T.grid();
    const FrameGrid& fg = dict.grid();
    const std::vector<std::size_t> tail = tail_nodes(fg, radius);
    if (tail.empty()) return 0.0;
    const double h = grid.spacing();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(tail.size()), static_cast<Eigen::Index>(grid.size()));
    for (std::size_t r = 0; r < tail.size(); ++r) {
        const std::size_t n = tail[r];
        const auto s = dict.samples(n);
        const double scale = std::sqrt(fg[n].weight) * h;
        for (std::size_t k = 0; k < s.size(); ++k)
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(dict.first(n) + k)) = scale * s[k];
    }
    const Eigen::MatrixXd composite = a * assemble(T) / std::sqrt(h);
    const auto s = singular_spectrum(composite, 1);
    return s.empty() ? 0.0 : s.front() * s.front();
}

} // namespace czframe
