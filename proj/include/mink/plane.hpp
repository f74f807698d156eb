#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mink/vec2.hpp"

namespace mink {

/// Thrown on invalid norm specifications; `field` names the offending
/// entry of the JSON spec (e.g. "vertices[3]", "p", "matrix").
class SpecError : public std::runtime_error {
  public:
    SpecError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

enum class PlaneKind { Euclidean, InnerProduct, Lp, Polygon, RegularPolygon };

/// Description of a 2-D norm as the gauge of a centrally symmetric convex
/// body. Construct through the factory functions; NormedPlane validates.
struct PlaneSpec {
    PlaneKind kind = PlaneKind::Euclidean;
    double p = 2.0;                           // Lp
    double m00 = 1.0, m01 = 0.0, m11 = 1.0;   // InnerProduct: [[m00,m01],[m01,m11]]
    std::vector<Vec2> vertices;               // Polygon / RegularPolygon (generated)
    int n_sides = 0;                          // RegularPolygon
    double rotation = 0.0;                    // RegularPolygon

    static PlaneSpec euclidean() { return {}; }
    static PlaneSpec lp(double p);
    static PlaneSpec inner_product(double a, double b, double c);
    static PlaneSpec polygon(std::vector<Vec2> verts);
    static PlaneSpec regular_polygon(int n, double rotation);
};

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

/// A Minkowski plane. Immutable after construction; all queries are pure
/// and safe for concurrent use.
class NormedPlane {
  public:
    explicit NormedPlane(PlaneSpec spec);

    const PlaneSpec& spec() const { return spec_; }
    bool strictly_convex() const { return strictly_convex_; }
    bool smooth() const { return smooth_; }
    bool is_polygonal() const;

    /// Minkowski functional of the unit ball; gauge(0) = 0.
    double gauge(Vec2 v) const;

    /// gamma(theta) = (cos t, sin t)/gauge(cos t, sin t); always has gauge 1.
    Vec2 unit_circle_point(double theta) const;

    /// Exact derivative gamma'(theta). At kink angles of polygonal planes
    /// the one-sided derivative from the side of increasing theta is used.
    Vec2 circle_velocity(double theta) const;

    /// Support function h_B(u) = sup{<u,x> : x in B}. Rejects u = 0.
    double support(Vec2 u) const;

    /// Antinorm ||v||_a = sup{|[v,y]| : y in S} = support(rot90(v)).
    double antinorm(Vec2 v) const;

    /// One-sided derivatives {tau_minus, tau_plus} of t -> ||x + t y|| at 0.
    /// Exact for every plane kind; requires x != 0.
    std::pair<double, double> gauge_onesided(Vec2 x, Vec2 y) const;

    /// Angles in [0, 2*pi) where circle-parametrized integrands may kink
    /// (polygon vertex directions and edge directions). Empty when smooth.
    const std::vector<double>& kink_angles() const { return kinks_; }

  private:
    PlaneSpec spec_;
    bool strictly_convex_ = true;
    bool smooth_ = true;
    // polygon caches (vertices re-ordered so direction angles ascend)
    std::vector<double> vertex_angles_;
    std::vector<Vec2> edge_normals_;  // outward normal of edge i: (v_i, v_{i+1})
    std::vector<double> edge_offsets_;
    std::vector<double> kinks_;
    double im00_ = 1.0, im01_ = 0.0, im11_ = 1.0;  // inverse inner-product matrix

    std::size_t edge_for_direction(Vec2 u) const;
    void build_polygon_caches();
};

struct RadonReport {
    bool is_radon = false;
    double scale = 0.0;   // mean antinorm/norm ratio over the unit circle
    double spread = 0.0;  // max - min of the ratio
};

/// Samples the antinorm/norm ratio over the unit circle; a plane is Radon
/// exactly when the ratio is constant (norm proportional to antinorm).
RadonReport radon_check(const NormedPlane& plane, int n_samples, double tol);

} // namespace mink
