#pragma once

#include <cmath>

namespace mink {

/// Plane vector with double components. Value type, no invariants beyond
/// finiteness (enforced where vectors enter the library through I/O).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    double euclid() const { return std::hypot(x, y); }
    constexpr bool is_zero() const { return x == 0.0 && y == 0.0; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Standard determinant form [u,v] = u.x v.y - u.y v.x. Bilinear and
/// antisymmetric; the constant is pinned to the standard basis.
constexpr double det_form(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

/// Counterclockwise quarter turn.
constexpr Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }

/// Euclidean direction angle in [0, 2*pi).
inline double dir_angle(Vec2 v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += 2.0 * 3.14159265358979323846;
    return a;
}

} // namespace mink
