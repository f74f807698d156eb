#include "mink/orthogonality.hpp"

#include <cmath>
#include <stdexcept>

#include "mink/functionals.hpp"
#include "mink/numerics.hpp"

namespace mink {

namespace {

void require_nonzero(Vec2 x, Vec2 y, const char* who) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument(std::string(who) + ": vectors must be nonzero");
}

OrthoResult make(double residual, double tol, bool abs_band = true) {
    OrthoResult r;
    r.residual = residual;
    r.tol = tol;
    r.orthogonal = abs_band ? std::abs(residual) <= tol : residual <= tol;
    return r;
}

} // namespace

OrthoResult birkhoff(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, y, "birkhoff");
    double nx = plane.gauge(x);
    double bracket = 2.0 * nx / plane.gauge(y);  // |t*| <= 2||x||/||y||
    auto f = [&](double t) { return plane.gauge(x + t * y); };
    MinResult m = golden_min(f, -bracket, bracket);
    double best = std::min(m.value, nx);  // t = 0 is always a candidate
    return make(nx - best, tol, false);
}

OrthoResult isosceles(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    return make(plane.gauge(x + y) - plane.gauge(x - y), tol);
}

OrthoResult pythagorean(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    double nx = plane.gauge(x), ny = plane.gauge(y);
    double d = plane.gauge(x - y);
    return make(nx * nx + ny * ny - d * d, tol);
}

OrthoResult singer(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    double nx = plane.gauge(x), ny = plane.gauge(y);
    if (nx * ny == 0.0) return make(0.0, tol);
    Vec2 xh = x * (1.0 / nx), yh = y * (1.0 / ny);
    return make(plane.gauge(xh - yh) - plane.gauge(xh + yh), tol);
}

OrthoResult roberts(const NormedPlane& plane, Vec2 x, Vec2 y,
                    const std::vector<double>& t_grid, double tol) {
    if (t_grid.empty()) throw std::invalid_argument("roberts: t_grid must be nonempty");
    double worst = 0.0;
    for (double t : t_grid)
        worst = std::max(worst, std::abs(plane.gauge(x + t * y) - plane.gauge(x - t * y)));
    return make(worst, tol);
}

std::vector<double> roberts_default_grid() {
    std::vector<double> g;
    for (int k = -20; k <= 20; ++k) {
        double t = std::ldexp(1.0, k);
        g.push_back(t);
        g.push_back(-t);
    }
    return g;
}

OrthoResult daf_orthogonal(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    double nx = plane.gauge(x), ny = plane.gauge(y);
    if (nx * ny == 0.0) return make(0.0, tol);
    Vec2 xh = x * (1.0 / nx), yh = y * (1.0 / ny);
    return make(plane.gauge(xh - yh) - std::sqrt(2.0), tol);
}

OrthoResult g_orthogonal(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, y, "g_orthogonal");
    return make(g_functional(plane, x, y), tol);
}

OrthoResult g_symmetric(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, y, "g_symmetric");
    return make(g_functional(plane, x, y) + g_functional(plane, y, x), tol);
}

OrthoResult g_isosceles(const NormedPlane& plane, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, y, "g_isosceles");
    double nx = plane.gauge(x), ny = plane.gauge(y);
    return make(nx * nx * g_functional(plane, x, y) + ny * ny * g_functional(plane, y, x),
                tol);
}

Vec2 left_normal(const NormedPlane& plane, Vec2 y, double /*tol*/) {
    if (!plane.strictly_convex())
        throw std::invalid_argument("left_normal: plane must be strictly convex");
    if (y.is_zero()) throw std::invalid_argument("left_normal: y must be nonzero");
    // On the arc {gamma(phi) : [y, gamma(phi)] > 0} the slope of
    // t -> ||gamma(phi) + t y|| at 0 falls monotonically from +||y|| to
    // -||y||; its zero is the Birkhoff-normal direction.
    double base = dir_angle(y);
    auto slope = [&](double phi) {
        auto [tm, tp] = plane.gauge_onesided(plane.unit_circle_point(phi), y);
        return 0.5 * (tm + tp);
    };
    const double eps = 1e-12;
    double root = bisect_root(slope, base + eps, base + kPi - eps);
    return plane.unit_circle_point(root);
}

} // namespace mink
