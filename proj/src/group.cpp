#include "czframe/group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace czframe {

GroupPoint::GroupPoint(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("GroupPoint requires a finite scale a > 0");
}

GroupPoint GroupPoint::inverse() const { return {1.0 / a_, -b_ / a_}; }

std::string GroupPoint::to_string() const {
    std::ostringstream os;
    os.precision(9);
    os << '(' << a_ << ',' << b_ << ')';
    return os.str();
}

GroupPoint mul(const GroupPoint& g, const GroupPoint& h) {
    return {g.a() * h.a(), g.a() * h.b() + g.b()};
}

double dist(const GroupPoint& g, const GroupPoint& h) {
    const double chord = std::hypot(g.a() - h.a(), g.b() - h.b());
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(g.a() * h.a())));
}

double dist_to_identity(double a, double b) {
    const double chord = std::hypot(a - 1.0, b);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(a)));
}

bool in_tent(double a, double b, const Tent& t) noexcept { return std::abs(t.center - b) < t.radius - a; }
bool in_tent(const GroupPoint& p, const Tent& t) noexcept { return in_tent(p.a(), p.b(), t); }
bool in_cone(double a, double b, const Cone& c) noexcept { return std::abs(c.vertex - b) < a; }
bool in_cone(const GroupPoint& p, const Cone& c) noexcept { return in_cone(p.a(), p.b(), c); }

namespace {

// Midpoint rule on u = log a in [-R, R]; inside each u cell the b axis is cut into
// cells of width a*du (uniform in dλ) and the midpoints lying inside the disk are
// counted exactly from the disk's half-width at that scale.
double haar_ball_midpoint(double radius, int cells) {
    const double du = 2.0 * radius / cells;
    const double cosh_r = std::cosh(radius);
    double total = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double u = -radius + (i + 0.5) * du;
        const double a = std::exp(u);
        const double half_sq = 2.0 * a * (cosh_r - 1.0) - (1.0 - a) * (1.0 - a);
        if (half_sq <= 0.0) continue;
        const double half = std::sqrt(half_sq);
        const double db = a * du;
        // midpoints (k + 1/2) db, k integer, with |b| < half
        const double count = 2.0 * std::floor(half / db + 0.5);
        total += count * db * du / a;
    }
    return total;
}

} // namespace

QuadratureValue haar_ball_volume(double radius, int cells) {
    if (!(radius > 0.0)) throw std::invalid_argument("haar_ball_volume requires R > 0");
    if (cells < 8) throw std::invalid_argument("haar_ball_volume requires at least 8 cells");
    const double fine = haar_ball_midpoint(radius, cells);
    const double coarse = haar_ball_midpoint(radius, cells / 2);
    return {fine, std::abs(fine - coarse)};
}

} // namespace czframe
