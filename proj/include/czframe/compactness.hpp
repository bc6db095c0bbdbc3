#pragma once

// Riesz–Kolmogorov tail functional sup_{||f|| <= 1} sum_{tail} |<Tf, psi_n>|^2 dλ_n and a
// singular-spectrum proxy for compactness of the discretized operator.

#include "czframe/operators.hpp"
#include "czframe/wavelet.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace czframe {

struct PowerIterationOptions {
    double tolerance = 1e-6; // eigen-residual |A*A f - lambda f| / lambda
    int max_iterations = 500;
    std::uint64_t seed = 1;
};

struct TailResult {
    double value = 0.0; // largest singular value squared of f -> (sqrt(dλ_n) <Tf, psi_n>)_{tail}
    int iterations = 0;
    bool converged = false;
    SampledFunction witness; // unit-norm maximizer
};

// Power iteration on A*A with A f = (sqrt(dλ_n) <Tf, psi_n>)_{n in tail_nodes(R)}. A
// `start` vector warm-starts the iteration; otherwise a seeded random vector is used.
[[nodiscard]] TailResult rk_tail(const LinearMap& T, const AtomDictionary& dict, double radius,
                                 const PowerIterationOptions& options = {},
                                 const std::optional<SampledFunction>& start = std::nullopt);

enum class TrendVerdict { Vanishing, NonVanishing, Inconclusive };
[[nodiscard]] std::string to_string(TrendVerdict v);

struct TailProfile {
    std::vector<double> radii;
    std::vector<double> values;
    std::vector<int> iterations;
    std::vector<bool> converged;
    SampledFunction witness;  // maximizer at the largest radius
    double ratio = 0.0;       // value(R_max) / value(R_min), 0 for a zero operator
    TrendVerdict verdict = TrendVerdict::Inconclusive;
};

// rk_tail at every radius, from the largest radius inward with warm starts. Each value
// is a lower bound of the exact supremum; the profile reports the running max from the
// outside in, which remains a lower bound since tails are nested.
// Verdict: Vanishing when ratio < vanish_below, NonVanishing when ratio > persist_above.
[[nodiscard]] TailProfile rk_tail_profile(const LinearMap& T, const AtomDictionary& dict,
                                          const std::vector<double>& radii, const PowerIterationOptions& options,
                                          double vanish_below = 1e-3, double persist_above = 0.1);

// Dense operator matrix of any linear map, column by column.
[[nodiscard]] Eigen::MatrixXd assemble(const LinearMap& T);

// Top-k singular values (descending) of the discretized operator matrix. Since the
// grid inner product carries the same weight h on both sides, these are the operator
// norms of the discretization restricted to orthogonal directions.
[[nodiscard]] std::vector<double> singular_spectrum(const Eigen::MatrixXd& m, std::size_t k);
[[nodiscard]] std::vector<double> singular_spectrum(const LinearMap& T, std::size_t k);

// Dense counterpart of rk_tail: sigma_max^2 of the tail analysis matrix times M.
[[nodiscard]] double rk_tail_dense(const LinearMap& T, const AtomDictionary& dict, double radius);

} // namespace czframe
