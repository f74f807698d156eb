#include "mink/plane.hpp"

#include <algorithm>
#include <cmath>

#include "mink/numerics.hpp"

namespace mink {

PlaneSpec PlaneSpec::lp(double p) {
    PlaneSpec s;
    s.kind = PlaneKind::Lp;
    s.p = p;
    return s;
}

PlaneSpec PlaneSpec::inner_product(double a, double b, double c) {
    PlaneSpec s;
    s.kind = PlaneKind::InnerProduct;
    s.m00 = a;
    s.m01 = b;
    s.m11 = c;
    return s;
}

PlaneSpec PlaneSpec::polygon(std::vector<Vec2> verts) {
    PlaneSpec s;
    s.kind = PlaneKind::Polygon;
    s.vertices = std::move(verts);
    return s;
}

PlaneSpec PlaneSpec::regular_polygon(int n, double rotation) {
    PlaneSpec s;
    s.kind = PlaneKind::RegularPolygon;
    s.n_sides = n;
    s.rotation = rotation;
    if (n >= 3) {
        s.vertices.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            double a = rotation + kTwoPi * k / n;
            s.vertices.push_back({std::cos(a), std::sin(a)});
        }
    }
    return s;
}

bool NormedPlane::is_polygonal() const {
    return spec_.kind == PlaneKind::Polygon || spec_.kind == PlaneKind::RegularPolygon;
}

NormedPlane::NormedPlane(PlaneSpec spec) : spec_(std::move(spec)) {
    switch (spec_.kind) {
        case PlaneKind::Euclidean:
            break;
        case PlaneKind::InnerProduct: {
            if (spec_.m00 <= 0.0 || spec_.m00 * spec_.m11 - spec_.m01 * spec_.m01 <= 0.0)
                throw SpecError("matrix", "must be symmetric positive-definite");
            double det = spec_.m00 * spec_.m11 - spec_.m01 * spec_.m01;
            im00_ = spec_.m11 / det;
            im01_ = -spec_.m01 / det;
            im11_ = spec_.m00 / det;
            break;
        }
        case PlaneKind::Lp: {
            if (!(spec_.p >= 1.0))
                throw SpecError("p", "must be >= 1");
            strictly_convex_ = smooth_ = (spec_.p > 1.0 && spec_.p < kLpInf);
            if (!strictly_convex_) {
                // kinks of the diamond (p=1) sit on the axes, of the square
                // (p=inf) on the diagonals; edge directions fill in the rest
                for (int k = 0; k < 8; ++k) kinks_.push_back(k * kPi / 4.0);
            }
            break;
        }
        case PlaneKind::RegularPolygon:
            if (spec_.n_sides < 4 || spec_.n_sides % 2 != 0)
                throw SpecError("n", "must be an even integer >= 4");
            [[fallthrough]];
        case PlaneKind::Polygon:
            strictly_convex_ = smooth_ = false;
            build_polygon_caches();
            break;
    }
}

void NormedPlane::build_polygon_caches() {
    auto& v = spec_.vertices;
    const std::size_t n = v.size();
    if (n < 4 || n % 2 != 0)
        throw SpecError("vertices", "need an even number of vertices, at least 4");
    for (std::size_t i = 0; i < n; ++i)
        if (!v[i].finite() || v[i].is_zero())
            throw SpecError("vertices[" + std::to_string(i) + "]",
                            "must be finite and nonzero");
    // strictly convex position, counterclockwise
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e1 = v[(i + 1) % n] - v[i];
        Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
        if (det_form(e1, e2) <= 0.0)
            throw SpecError("vertices[" + std::to_string((i + 1) % n) + "]",
                            "vertices must be in strictly convex counterclockwise position");
    }
    // central symmetry: opposite vertex is the negation
    for (std::size_t i = 0; i < n / 2; ++i) {
        Vec2 d = v[i] + v[i + n / 2];
        double scale = v[i].euclid();
        if (d.euclid() > 1e-9 * std::max(1.0, scale))
            throw SpecError("vertices[" + std::to_string(i + n / 2) + "]",
                            "vertex list is not centrally symmetric");
    }
    // rotate storage so direction angles ascend from vertices[0]
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (dir_angle(v[i]) < dir_angle(v[start])) start = i;
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start), v.end());

    vertex_angles_.reserve(n);
    for (auto& vert : v) vertex_angles_.push_back(dir_angle(vert));
    edge_normals_.reserve(n);
    edge_offsets_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = v[i], b = v[(i + 1) % n];
        Vec2 nrm = -rot90(b - a);  // outward for a CCW polygon
        double h = nrm.dot(a);
        edge_normals_.push_back(nrm);
        edge_offsets_.push_back(h);
    }
    kinks_ = vertex_angles_;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = v[(i + 1) % n] - v[i];
        kinks_.push_back(dir_angle(e));  // support/antinorm integrands kink here
    }
    std::sort(kinks_.begin(), kinks_.end());
    kinks_.erase(std::unique(kinks_.begin(), kinks_.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 kinks_.end());
}

std::size_t NormedPlane::edge_for_direction(Vec2 u) const {
    double a = dir_angle(u);
    auto it = std::upper_bound(vertex_angles_.begin(), vertex_angles_.end(), a);
    if (it == vertex_angles_.begin() || it == vertex_angles_.end())
        return vertex_angles_.size() - 1;  // wrap-around edge v_{n-1} -> v_0
    return static_cast<std::size_t>(it - vertex_angles_.begin()) - 1;
}

double NormedPlane::gauge(Vec2 v) const {
    if (v.is_zero()) return 0.0;
    switch (spec_.kind) {
        case PlaneKind::Euclidean:
            return v.euclid();
        case PlaneKind::InnerProduct:
            return std::sqrt(v.x * (spec_.m00 * v.x + spec_.m01 * v.y) +
                             v.y * (spec_.m01 * v.x + spec_.m11 * v.y));
        case PlaneKind::Lp: {
            double ax = std::abs(v.x), ay = std::abs(v.y);
            if (spec_.p == kLpInf) return std::max(ax, ay);
            if (spec_.p == 1.0) return ax + ay;
            double m = std::max(ax, ay);
            return m * std::pow(std::pow(ax / m, spec_.p) + std::pow(ay / m, spec_.p),
                                1.0 / spec_.p);
        }
        case PlaneKind::Polygon:
        case PlaneKind::RegularPolygon: {
            std::size_t e = edge_for_direction(v);
            return edge_normals_[e].dot(v) / edge_offsets_[e];
        }
    }
    return 0.0;
}

Vec2 NormedPlane::unit_circle_point(double theta) const {
    Vec2 u{std::cos(theta), std::sin(theta)};
    return u * (1.0 / gauge(u));
}

Vec2 NormedPlane::circle_velocity(double theta) const {
    Vec2 u{std::cos(theta), std::sin(theta)};
    Vec2 du{-u.y, u.x};
    double n = gauge(u);
    double dn = 0.0;  // d/dtheta gauge(u(theta))
    switch (spec_.kind) {
        case PlaneKind::Euclidean:
            return du;  // n = 1, dn = 0
        case PlaneKind::InnerProduct: {
            Vec2 mu{spec_.m00 * u.x + spec_.m01 * u.y, spec_.m01 * u.x + spec_.m11 * u.y};
            dn = du.dot(mu) / n;
            break;
        }
        case PlaneKind::Lp: {
            auto [tm, tp] = gauge_onesided(u, du);
            dn = 0.5 * (tm + tp);  // coincide wherever smooth
            break;
        }
        case PlaneKind::Polygon:
        case PlaneKind::RegularPolygon: {
            std::size_t e = edge_for_direction(u);
            dn = edge_normals_[e].dot(du) / edge_offsets_[e];
            break;
        }
    }
    return du * (1.0 / n) - u * (dn / (n * n));
}

double NormedPlane::support(Vec2 u) const {
    if (u.is_zero()) throw std::invalid_argument("support: direction must be nonzero");
    switch (spec_.kind) {
        case PlaneKind::Euclidean:
            return u.euclid();
        case PlaneKind::InnerProduct:
            // dual norm sqrt(u^T M^{-1} u)
            return std::sqrt(u.x * (im00_ * u.x + im01_ * u.y) +
                             u.y * (im01_ * u.x + im11_ * u.y));
        case PlaneKind::Lp: {
            double ax = std::abs(u.x), ay = std::abs(u.y);
            if (spec_.p == 1.0) return std::max(ax, ay);
            if (spec_.p == kLpInf) return ax + ay;
            double q = spec_.p / (spec_.p - 1.0);
            double m = std::max(ax, ay);
            return m * std::pow(std::pow(ax / m, q) + std::pow(ay / m, q), 1.0 / q);
        }
        case PlaneKind::Polygon:
        case PlaneKind::RegularPolygon: {
            double best = -kLpInf;
            for (auto& v : spec_.vertices) best = std::max(best, u.dot(v));
            return best;
        }
    }
    return 0.0;
}

double NormedPlane::antinorm(Vec2 v) const {
    if (v.is_zero()) return 0.0;
    return support(rot90(v));
}

std::pair<double, double> NormedPlane::gauge_onesided(Vec2 x, Vec2 y) const {
    switch (spec_.kind) {
        case PlaneKind::Euclidean: {
            double t = x.dot(y) / x.euclid();
            return {t, t};
        }
        case PlaneKind::InnerProduct: {
            Vec2 my{spec_.m00 * y.x + spec_.m01 * y.y, spec_.m01 * y.x + spec_.m11 * y.y};
            double t = x.dot(my) / gauge(x);
            return {t, t};
        }
        case PlaneKind::Lp: {
            double p = spec_.p;
            auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
            if (p == 1.0) {
                double base = 0.0, kink = 0.0;
                if (x.x != 0.0) base += sgn(x.x) * y.x; else kink += std::abs(y.x);
                if (x.y != 0.0) base += sgn(x.y) * y.y; else kink += std::abs(y.y);
                return {base - kink, base + kink};
            }
            if (p == kLpInf) {
                double ax = std::abs(x.x), ay = std::abs(x.y);
                double m = std::max(ax, ay);
                double hi = -kLpInf, lo = kLpInf;
                if (ax >= m * (1.0 - 1e-14)) {
                    double d = sgn(x.x) * y.x;
                    hi = std::max(hi, d);
                    lo = std::min(lo, d);
                }
                if (ay >= m * (1.0 - 1e-14)) {
                    double d = sgn(x.y) * y.y;
                    hi = std::max(hi, d);
                    lo = std::min(lo, d);
                }
                return {lo, hi};
            }
            double n = gauge(x);
            double s = std::pow(std::abs(x.x) / n, p - 1.0) * sgn(x.x) * y.x +
                       std::pow(std::abs(x.y) / n, p - 1.0) * sgn(x.y) * y.y;
            return {s, s};
        }
        case PlaneKind::Polygon:
        case PlaneKind::RegularPolygon: {
            // directional derivatives of a max of linear functionals:
            // max/min of <n_e, y>/h_e over the active edges at x
            double g = 0.0;
            std::vector<double> vals(edge_normals_.size());
            for (std::size_t e = 0; e < edge_normals_.size(); ++e) {
                vals[e] = edge_normals_[e].dot(x) / edge_offsets_[e];
                g = std::max(g, vals[e]);
            }
            double hi = -kLpInf, lo = kLpInf;
            for (std::size_t e = 0; e < edge_normals_.size(); ++e) {
                if (vals[e] >= g - 1e-12 * std::max(1.0, g)) {
                    double d = edge_normals_[e].dot(y) / edge_offsets_[e];
                    hi = std::max(hi, d);
                    lo = std::min(lo, d);
                }
            }
            return {lo, hi};
        }
    }
    return {0.0, 0.0};
}

RadonReport radon_check(const NormedPlane& plane, int n_samples, double tol) {
    if (n_samples < 8) throw std::invalid_argument("radon_check: n_samples must be >= 8");
    std::vector<double> thetas;
    thetas.reserve(static_cast<std::size_t>(n_samples) + 2 * plane.kink_angles().size());
    for (int i = 0; i < n_samples; ++i)
        thetas.push_back(kTwoPi * (i + 0.5) / n_samples);
    for (double k : plane.kink_angles()) {
        thetas.push_back(k);            // ratio extremes sit on the kinks
        thetas.push_back(k + 1e-7);
    }
    double lo = kLpInf, hi = -kLpInf, sum = 0.0;
    for (double t : thetas) {
        double r = plane.antinorm(plane.unit_circle_point(t));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        sum += r;
    }
    RadonReport rep;
    rep.scale = sum / static_cast<double>(thetas.size());
    rep.spread = hi - lo;
    rep.is_radon = rep.spread <= tol * rep.scale;
    return rep;
}

} // namespace mink
