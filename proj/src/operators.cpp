#include "czframe/operators.hpp"

#include "czframe/error.hpp"
#include "czframe/summation.hpp"
#include "czframe/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace czframe {

namespace {

constexpr double kPi = std::numbers::pi;

double hilbert(double x, double y) { return 1.0 / (kPi * (x - y)); }

KernelFunction damped(double alpha) {
    return [alpha](double x, double y) {
        return std::pow(1.0 + x * x + y * y, -0.5 * alpha) / (kPi * (x - y));
    };
}

// sup of |f| and |f'| on [-1,1] by dense sampling; the derivative by central
// differences. Padded by 5% so the declared constant is an upper bound.
std::pair<double, double> sup_and_derivative_sup(double (*f)(double) noexcept) {
    constexpr int n = 200000;
    constexpr double eps = 1e-6;
    double sf = 0.0;
    double sd = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = -1.0 + 2.0 * i / n;
        sf = std::max(sf, std::abs(f(x)));
        sd = std::max(sd, std::abs(f(x + eps) - f(x - eps)) / (2.0 * eps));
    }
    return {1.05 * sf, 1.05 * sd};
}

std::vector<ModelOperator> build_zoo() {
    std::vector<ModelOperator> zoo;

    CZKernel h{"Hilbert", hilbert, 2.0 / kPi, 1.0, true, true, true, true};
    zoo.push_back({h, false, "1/(pi (x-y)); bounded, dilation/translation invariant, not compact"});

    for (double alpha : {0.5, 1.0}) {
        CZKernel k{alpha == 1.0 ? "DampedHilbert_1" : "DampedHilbert_0.5", damped(alpha), (2.0 + 6.0 * alpha) / kPi,
                   1.0, true, false, true, false};
        zoo.push_back({k, std::nullopt, "(pi (x-y))^-1 (1+x^2+y^2)^(-alpha/2); compactness is a numerical hypothesis"});
    }

    // Supports lie in [-1,1], so |x-y| <= 2 wherever K != 0 and |x-y| <= 4 in the
    // smoothness condition whenever either value is nonzero.
    const auto [su, sdu] = sup_and_derivative_sup(finite_rank_u);
    const auto [sv, sdv] = sup_and_derivative_sup(finite_rank_v);
    const double c = std::max({2.0 * su * sv, 16.0 * su * sdv, 16.0 * sdu * sv});
    CZKernel fr{"FiniteRank", [](double x, double y) { return finite_rank_u(x) * finite_rank_v(y); }, c, 1.0,
                false, false, false, false, 1.0};
    zoo.push_back({fr, true, "u(x) v(y) with smooth compactly supported u, v; rank one"});

    CZKernel z{"Zero", [](double, double) { return 0.0; }, 1.0, 1.0, true, true, false, true};
    zoo.push_back({z, true, "the zero operator"});
    return zoo;
}

} // namespace

double finite_rank_u(double x) noexcept { return smooth_bump_second_derivative(x); }
double finite_rank_v(double x) noexcept { return smooth_bump(x); }

const std::vector<ModelOperator>& model_zoo() {
    static const std::vector<ModelOperator> zoo = build_zoo();
    return zoo;
}

const ModelOperator& find_model(const std::string& label) {
    for (const auto& m : model_zoo())
        if (m.kernel.label == label) return m;
    throw UnsupportedKernel("unknown operator label '" + label + "'");
}

CZKernel conjugate(const CZKernel& k, const GroupPoint& g) {
    CZKernel out = k;
    const double a = g.a();
    const double b = g.b();
    out.label = k.label + "@" + g.to_string();
    out.eval = [inner = k.eval, a, b](double x, double y) { return a * inner(a * x + b, a * y + b); };
    out.support = (k.support + std::abs(b)) / a;
    return out;
}

CZKernel transpose(const CZKernel& k) {
    CZKernel out = k;
    out.label = k.label + "^T";
    out.eval = [inner = k.eval](double x, double y) { return inner(y, x); };
    return out;
}

CZScanReport scan_cz_conditions(const CZKernel& k, std::uint64_t seed, std::size_t samples,
                                std::optional<double> constant) {
    const double c = constant.value_or(k.constant);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> centre(-4.0, 4.0);
    std::uniform_real_distribution<double> logsep(std::log(1e-3), std::log(50.0));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    CZScanReport r;
    r.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        const double x = centre(rng);
        const double sep = std::exp(logsep(rng)) * (unit(rng) < 0.0 ? -1.0 : 1.0);
        const double y = x + sep;
        const double dist = std::abs(sep);
        const double shift = 0.5 * dist * unit(rng);
        if (shift == 0.0) continue;
        r.size_ratio = std::max(r.size_ratio, std::abs(k(x, y)) * dist / c);
        const double scale = std::pow(std::abs(shift), k.delta) / std::pow(dist, 1.0 + k.delta);
        const double dy = std::abs(k(x, y) - k(x, y + shift)) / scale;
        const double dx = std::abs(k(x, y) - k(x + shift, y)) / scale;
        r.smoothness_ratio = std::max({r.smoothness_ratio, dy / c, dx / c});
    }
    return r;
}

DiscreteOperator::DiscreteOperator(CZKernel kernel, const SpatialGrid& grid)
    : kernel_(std::move(kernel)), grid_(grid), m_(grid.size(), grid.size()) {
    const std::size_t n = grid_.size();
    const double h = grid_.spacing();
    for (std::size_t j = 0; j < n; ++j) {
        const double y = grid_.node(j);
        for (std::size_t i = 0; i < n; ++i) {
            if (kernel_.singular) {
                const bool odd = ((i > j ? i - j : j - i) & 1U) != 0;
                m_(i, j) = odd ? 2.0 * h * kernel_(grid_.node(i), y) : 0.0;
            } else {
                m_(i, j) = h * kernel_(grid_.node(i), y);
            }
        }
    }
}

namespace {

SampledFunction multiply(const Eigen::MatrixXd& m, bool transposed, const SampledFunction& f) {
    const std::size_t n = f.size();
    Eigen::VectorXd re(n);
    Eigen::VectorXd im(n);
    bool complex = false;
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = f[i].real();
        im[i] = f[i].imag();
        complex = complex || im[i] != 0.0;
    }
    Eigen::VectorXd ore = transposed ? Eigen::VectorXd(m.transpose() * re) : Eigen::VectorXd(m * re);
    Eigen::VectorXd oim = Eigen::VectorXd::Zero(n);
    if (complex) oim = transposed ? Eigen::VectorXd(m.transpose() * im) : Eigen::VectorXd(m * im);
    SampledFunction out(f.grid());
    for (std::size_t i = 0; i < n; ++i) out[i] = {ore[i], oim[i]};
    return out;
}

} // namespace

SampledFunction DiscreteOperator::apply(const SampledFunction& f) const {
    if (!(f.grid() == grid_)) throw GridMismatch("operator and function live on different grids");
    return multiply(m_, false, f);
}

SampledFunction DiscreteOperator::adjoint(const SampledFunction& g) const {
    if (!(g.grid() == grid_)) throw GridMismatch("operator and function live on different grids");
    return multiply(m_, true, g);
}

SampledFunction apply(const CZKernel& k, const SampledFunction& f) {
    return DiscreteOperator(k, f.grid()).apply(f);
}

namespace {

double catmull_rom(const std::vector<double>& v, double pos) {
    const auto last = static_cast<long>(v.size()) - 1;
    const long i = std::clamp(static_cast<long>(std::floor(pos)), 0L, last - 1);
    const double t = pos - static_cast<double>(i);
    const auto at = [&](long k) { return v[static_cast<std::size_t>(std::clamp(k, 0L, last))]; };
    double acc = 0.0;
    for (long k = i - 1; k <= i + 2; ++k) acc += at(k) * keys_kernel(t - static_cast<double>(k - i));
    return acc;
}

} // namespace

ClosedForm apply_closed_form(const CZKernel& k, const Profile& f) {
    const double S = f.support;
    const double inner = S + 1.0;
    constexpr double table_step = 1.0 / 512.0;
    constexpr double eps = 1.0 / 4096.0;
    const auto inner_points = static_cast<std::size_t>(std::lround(2.0 * inner / table_step)) + 1;
    auto near = std::make_shared<std::vector<double>>(inner_points);
    const auto reach = static_cast<long>(std::ceil(2.0 * inner / eps));
    for (std::size_t t = 0; t < inner_points; ++t) {
        const double x = -inner + static_cast<double>(t) * table_step;
        CompensatedSum acc;
        if (k.singular) {
            for (long d = 1; d <= reach; d += 2) {
                for (double y : {x + d * eps, x - d * eps})
                    if (std::abs(y) < S) acc += 2.0 * eps * k(x, y) * f.eval(y);
            }
        } else {
            const long m = static_cast<long>(std::ceil(S / eps));
            for (long j = -m; j < m; ++j) {
                const double y = (j + 0.5) * eps;
                acc += eps * k(x, y) * f.eval(y);
            }
        }
        (*near)[t] = acc.value();
    }

    constexpr double far_end = 1e6;
    constexpr std::size_t far_points = 4000;
    constexpr int quad = 2048;
    const double log_lo = std::log(inner);
    const double log_step = (std::log(far_end) - log_lo) / (far_points - 1);
    auto right = std::make_shared<std::vector<double>>(far_points);
    auto left = std::make_shared<std::vector<double>>(far_points);
    const double du = 2.0 * S / quad;
    for (std::size_t t = 0; t < far_points; ++t) {
        const double r = std::exp(log_lo + static_cast<double>(t) * log_step);
        CompensatedSum pr;
        CompensatedSum pl;
        for (int j = 0; j < quad; ++j) {
            const double y = -S + (j + 0.5) * du;
            const double fy = f.eval(y) * du;
            pr += k(r, y) * fy;
            pl += k(-r, y) * fy;
        }
        (*right)[t] = pr.value();
        (*left)[t] = pl.value();
    }

    return {"T[" + f.label + "]", [=](double x) {
                if (std::abs(x) < inner) return catmull_rom(*near, (x + inner) / table_step);
                if (std::abs(x) >= far_end) return 0.0;
                const double pos = (std::log(std::abs(x)) - log_lo) / log_step;
                return catmull_rom(x > 0 ? *right : *left, pos);
            }};
}

T1Result compute_T1(const CZKernel& k, const SpatialGrid& grid, double window, double tolerance) {
    T1Result r{SampledFunction(grid), window, 2.0 * k.constant * std::pow(window, -k.delta) / k.delta};
    // An odd convolution kernel integrates to zero over every symmetric shell.
    if (k.exact_cancellation && k.invariant) r.tail_bound = 0.0;
    // Nothing is cut off when the kernel's support fits inside every window.
    if (k.support + grid.half_width() <= window) r.tail_bound = 0.0;
    if (r.tail_bound > tolerance)
        throw TruncationError(k.label + ": T1 tail bound " + std::to_string(r.tail_bound) +
                              " exceeds tolerance " + std::to_string(tolerance));
    const double h = grid.spacing();
    const double L = grid.half_width();
    const auto reach = static_cast<long>(std::floor(window / h));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.node(i);
        const auto at = [&](long k_off) { return -L + (static_cast<double>(static_cast<long>(i) + k_off) + 0.5) * h; };
        CompensatedSum acc;
        if (k.singular) {
            for (long d = 1; d <= reach; d += 2) acc += 2.0 * h * (k(x, at(d)) + k(x, at(-d)));
        } else {
            acc += h * k(x, x);
            for (long d = 1; d <= reach; ++d) acc += h * (k(x, at(d)) + k(x, at(-d)));
        }
        r.values[i] = acc.value();
    }
    return r;
}

T1Result compute_T1star(const CZKernel& k, const SpatialGrid& grid, double window, double tolerance) {
    return compute_T1(transpose(k), grid, window, tolerance);
}

} // namespace czframe
