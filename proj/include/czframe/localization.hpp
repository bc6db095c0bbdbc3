#pragma once

// Frame matrix coefficients <T psi_{g'}, psi_g>, the four-regime decay majorant for
// operators with T1 = T*1 = 0, weighted Schur integrals and the weak compactness
// profile.

#include "czframe/operators.hpp"
#include "czframe/wavelet.hpp"

#include <cstddef>
#include <vector>

namespace czframe {

struct DecayBound {
    int dimension = 1;
    double delta = 1.0;
    double constant = 1.0;
};

// C * { a^{-(n/2+delta)}            a >= 1, |b| <= a
//       a^{n/2} |b|^{-(n+delta)}     a >= 1, |b| >  a
//       a^{n/2+delta}                a <  1, |b| <= 1
//       a^{n/2+delta} |b|^{-(n+delta)} a < 1, |b| > 1 }
[[nodiscard]] double lemma_bound(const DecayBound& d, double a, double b);

enum class CoefficientPath { Direct, Apply };

struct MatrixCoefficient {
    Complex value;
    CoefficientPath path;
    bool under_resolved;
};

// <T psi_{g'}, psi_g>. Atoms separated by at least one grid cell use the plain
// double sum h^2 sum_ij K(x_i,x_j) psi_{g'}(x_j) psi_g(x_i); otherwise the PV
// discretization is applied to psi_{g'} and paired with psi_g.
[[nodiscard]] MatrixCoefficient matrix_coefficient(const DiscreteOperator& T, const GroupPoint& source,
                                                   const GroupPoint& target);
[[nodiscard]] Complex matrix_coefficient_direct(const DiscreteOperator& T, const GroupPoint& source,
                                                const GroupPoint& target);
[[nodiscard]] Complex matrix_coefficient_apply(const DiscreteOperator& T, const GroupPoint& source,
                                               const GroupPoint& target);

struct DecayReport {
    double fitted_constant = 0.0;     // max |coeff| / bound with C = 1
    std::size_t argmax = 0;           // node attaining it (lowest index on ties)
    std::vector<double> coefficients; // |<T psi, psi_n>| per node
    std::vector<double> bounds;       // bound with C = 1
    std::vector<double> histogram;    // counts of log10(ratio / fitted) in unit bins, [-10, 0]
};

// |<T psi, psi_n>| over the whole lattice and the smallest C with |coeff| <= C bound.
// T psi is taken on the whole line (apply_closed_form), so large atoms are not cut
// off by the box.
[[nodiscard]] DecayReport verify_decay(const DiscreteOperator& T, const AtomDictionary& dict);

// w(a,b) = a^{n/2}
[[nodiscard]] inline double schur_weight(double a) { return localization_weight(a); }

// Per-node integrand of the weighted Schur integral at one anchor, with the
// distance used for tail restrictions.
struct SchurIntegrand {
    std::vector<double> values;    // |coeff| w dλ / w(anchor)
    std::vector<double> distances; // to the anchor, in the geometry of the route used
    bool conjugated = false;
};

// Conjugation route (for invariant kernels and anchors with a' <= 1):
//   <T psi_{g'}, psi_{g' m}> = <T_{g'} psi, psi_m>
// so the integral is taken over the lattice m with distances to (1,0). Direct route
// otherwise: <T psi_{g'}, psi_n> with distances d(n, g').
[[nodiscard]] SchurIntegrand schur_integrand(const CZKernel& k, const AtomDictionary& dict,
                                             const GroupPoint& anchor);

[[nodiscard]] double schur_value(const CZKernel& k, const AtomDictionary& dict, const GroupPoint& anchor);
[[nodiscard]] double schur_tail(const CZKernel& k, const AtomDictionary& dict, const GroupPoint& anchor,
                                double radius);

struct SchurProfile {
    std::vector<double> radii;
    std::vector<double> values;       // sup over anchors, per radius
    std::vector<std::size_t> argmax;  // anchor index attaining each sup
};

// Finite anchor lattice: a' = 2^k for k = -2..2 and b' in {0, +-2, +-8, +-24}.
[[nodiscard]] std::vector<GroupPoint> default_anchor_lattice();

// sup over anchors of schur_tail at each radius (radius 0 gives schur_sup). For an
// invariant kernel every anchor gives the same integral, so one anchor is evaluated.
[[nodiscard]] SchurProfile schur_profile(const CZKernel& k, const AtomDictionary& dict,
                                         const std::vector<GroupPoint>& anchors, const std::vector<double>& radii);

// sup over anchors of sum over n outside D((1,0),R) of |<T psi_{g'}, psi_n>| w(n) dλ / w(g').
[[nodiscard]] SchurProfile origin_tail_profile(const DiscreteOperator& T, const AtomDictionary& dict,
                                               const std::vector<GroupPoint>& anchors,
                                               const std::vector<double>& radii);

// Test bundle for weak compactness: profiles supported in [-1,1].
[[nodiscard]] std::vector<Profile> default_test_bundle();

struct WeakProfile {
    std::vector<double> radii;
    std::vector<double> values;      // sup over the bin [R, R + bin_width)
    std::vector<std::size_t> counts; // lattice nodes in each bin
    double bin_width = 0.5;
};

// sup over f, g in the bundle and lattice nodes with d((a,b),(1,0)) in [R, R+dR) of
// |<T f_{(a,b)}, g_{(a,b)}>|. Nodes with a <= 1 (or an invariant kernel) use the
// conjugated kernel against f, g; the others pair g_{(a,b)} with T f_{(a,b)} on the grid.
[[nodiscard]] WeakProfile weak_compactness_profile(const DiscreteOperator& T, const FrameGrid& grid,
                                                   const std::vector<Profile>& bundle,
                                                   const std::vector<double>& radii, double bin_width);

} // namespace czframe
