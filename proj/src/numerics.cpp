#include "mink/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mink {

MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int iters) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && b - a > 0.0; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double m = 0.5 * (a + b);
    double fm = f(m);
    // the endpoint samples can beat the midpoint on flat valleys
    if (fc < fm) { m = c; fm = fc; }
    if (fd < fm) { m = d; fm = fd; }
    return {m, fm};
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   int iters) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("bisect_root: endpoints do not bracket a sign change");
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGL15Nodes[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGL15Weights[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double gl15(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += kGL15Weights[i] * f(mid + half * kGL15Nodes[i]);
    return s * half;
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int depth) {
    double whole = gl15(f, a, b);
    double mid = 0.5 * (a + b);
    double halves = gl15(f, a, mid) + gl15(f, mid, b);
    if (std::abs(whole - halves) <= tol * (1.0 + std::abs(halves))) return halves;
    if (depth >= 40)
        throw std::runtime_error("integrate: adaptive refinement failed to converge");
    return adaptive(f, a, mid, tol, depth + 1) + adaptive(f, mid, b, tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breaks, double panel_tol) {
    if (a == b) return 0.0;
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) total += adaptive(f, cuts[i], cuts[i + 1], panel_tol, 0);
    return total;
}

} // namespace mink
