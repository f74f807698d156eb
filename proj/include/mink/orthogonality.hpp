#pragma once

#include <vector>

#include "mink/plane.hpp"

namespace mink {

/// Default tolerances: closed-form residuals vs. residuals that run a
/// 1-D minimization internally.
inline constexpr double kTolClosedForm = 1e-9;
inline constexpr double kTolSearch = 1e-6;

/// Signed defect of the defining identity of an orthogonality relation.
struct OrthoResult {
    double residual = 0.0;
    bool orthogonal = false;
    double tol = 0.0;
};

/// ||x|| - min_t ||x + t y|| >= 0; orthogonal iff the minimum is at t = 0.
OrthoResult birkhoff(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolSearch);

/// ||x+y|| - ||x-y||.
OrthoResult isosceles(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);

/// ||x||^2 + ||y||^2 - ||x-y||^2.
OrthoResult pythagorean(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);

/// Normalized isosceles identity; any pair with a zero vector is orthogonal.
OrthoResult singer(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);

/// max over the sampled t-grid of | ||x+ty|| - ||x-ty|| |. The relation
/// quantifies over all t; the grid makes this a sound-but-incomplete check.
OrthoResult roberts(const NormedPlane& plane, Vec2 x, Vec2 y,
                    const std::vector<double>& t_grid, double tol = kTolClosedForm);

/// Logarithmic default grid {±2^k : k = -20..20}.
std::vector<double> roberts_default_grid();

/// || x/||x|| - y/||y|| || - sqrt(2); zero-vector pairs are orthogonal.
OrthoResult daf_orthogonal(const NormedPlane& plane, Vec2 x, Vec2 y,
                           double tol = kTolClosedForm);

/// g(x,y) = 0.
OrthoResult g_orthogonal(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);
/// g(x,y) + g(y,x) = 0.
OrthoResult g_symmetric(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);
/// ||x||^2 g(x,y) + ||y||^2 g(y,x) = 0.
OrthoResult g_isosceles(const NormedPlane& plane, Vec2 x, Vec2 y, double tol = kTolClosedForm);

/// The unique unit vector b(y) with b(y) -|B y and [y, b(y)] > 0.
/// Requires a strictly convex plane and y != 0.
Vec2 left_normal(const NormedPlane& plane, Vec2 y, double tol = 1e-12);

} // namespace mink
