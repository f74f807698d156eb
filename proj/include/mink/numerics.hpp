#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mink {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct MinResult {
    double arg = 0.0;
    double value = 0.0;
};

/// Golden-section minimization of a convex function on [lo, hi].
/// Runs a fixed number of iterations so results are deterministic.
/// Ties are safe for convex objectives: either retained bracket still
/// contains a global minimizer.
MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200);

/// Bisection for a root of f on [lo, hi] given f(lo) and f(hi) with
/// opposite signs (f(lo) <= 0 <= f(hi) or the reverse). Returns the
/// midpoint after `iters` halvings.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   int iters = 200);

/// Adaptive Gauss-Legendre quadrature of f over [a, b].
/// `breaks` lists interior abscissae where the integrand may have kinks;
/// panels never straddle them. Throws std::runtime_error when the
/// refinement depth limit is hit before the panel tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breaks = {}, double panel_tol = 1e-10);

/// Deterministic uniform RNG. std::mt19937_64 with an explicit
/// bits-to-double map so streams are identical across standard libraries
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // xorshift* stream; small, portable, reproducible
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::uint64_t state_;
};

} // namespace mink
