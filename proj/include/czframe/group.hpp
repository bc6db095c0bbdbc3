#pragma once

// Geometry of the ax+b group, identified with the upper half-plane {(a,b): a > 0}.
// The reference configuration is one spatial dimension (n = 1).

#include <cmath>
#include <string>

namespace czframe {

class GroupPoint {
public:
    // Throws std::invalid_argument unless a > 0 and both coordinates are finite.
    GroupPoint(double a, double b);

    static GroupPoint identity() noexcept { return {}; }

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

    [[nodiscard]] GroupPoint inverse() const;

    bool operator==(const GroupPoint&) const = default;

    [[nodiscard]] std::string to_string() const;

private:
    GroupPoint() noexcept = default;

    double a_ = 1.0;
    double b_ = 0.0;
};

// (a,b)*(a',b') = (aa', ab' + b)
[[nodiscard]] GroupPoint mul(const GroupPoint& g, const GroupPoint& h);
inline GroupPoint operator*(const GroupPoint& g, const GroupPoint& h) { return mul(g, h); }

// Hyperbolic distance for ds^2 = (da^2 + db^2)/a^2, via
// sinh(d/2) = |(a,b) - (a',b')| / (2 sqrt(a a')), which equals the cosh form
// cosh d = 1 + (|b-b'|^2 + (a-a')^2)/(2aa') without cancellation near d = 0.
[[nodiscard]] double dist(const GroupPoint& g, const GroupPoint& h);

// Distance to the identity (1,0).
[[nodiscard]] double dist_to_identity(double a, double b);

// Localization weight w(a,b) = a^{n/2}, n = 1. Multiplicative: w(g*h) = w(g) w(h).
[[nodiscard]] inline double localization_weight(double a) noexcept { return std::sqrt(a); }

struct Tent {
    double center = 0.0;
    double radius = 1.0;
};

struct Cone {
    double vertex = 0.0;
};

// (a,b) in T(B(x,r))  iff  |x - b| < r - a.
[[nodiscard]] bool in_tent(const GroupPoint& p, const Tent& t) noexcept;
[[nodiscard]] bool in_tent(double a, double b, const Tent& t) noexcept;
// (a,b) in V_x  iff  |x - b| < a.
[[nodiscard]] bool in_cone(const GroupPoint& p, const Cone& c) noexcept;
[[nodiscard]] bool in_cone(double a, double b, const Cone& c) noexcept;

struct QuadratureValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Haar measure of the hyperbolic disk D((1,0), R) by tensorized midpoint quadrature
// in (log a, b). `cells` is the number of log-scale cells; the b cells use the same
// count per unit of b/a. The error estimate is the difference to the half-resolution
// value.
[[nodiscard]] QuadratureValue haar_ball_volume(double radius, int cells = 4000);

} // namespace czframe
