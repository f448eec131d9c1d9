#ifndef LORCOMP_TRIANGLE_HPP
#define LORCOMP_TRIANGLE_HPP

#include <cmath>

#include "lorcomp/loc.hpp"

namespace lorcomp {

/// Side lengths of an (admissible causal) triangle x << y << z:
/// a = tau(x,y), b = tau(y,z), c = tau(x,z). The reverse triangle
/// inequality puts the long side opposite the middle vertex: c >= a + b.
/// At most one of a, b may vanish (a single null side).
struct SideTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

inline void validate_side_triple(const CurvatureGauge& g, const SideTriple& s,
                                 double slack = 1e-12) {
    if (s.a < 0.0 || s.b < 0.0 || !(s.c > 0.0))
        throw non_realizable_error("side triple: sides must be nonnegative, c positive");
    if (s.a == 0.0 && s.b == 0.0)
        throw non_realizable_error("side triple: at most one side may be null");
    if (s.c >= g.D_K) throw non_realizable_error("side triple: c reaches the diameter D_K");
    if (s.c + slack * std::fmax(1.0, s.c) < s.a + s.b)
        throw non_realizable_error("side triple: reverse triangle inequality fails");
}

/// Places the vertex Y with tau(A,Y) = a and tau(Y,C) = b on the requested
/// side of the segment [A, C], where c = tau(A,C) and c >= a + b.
/// Handles the null cases a = 0 and b = 0.
inline ModelPoint place_third_vertex(const CurvatureGauge& g, const ModelPoint& A,
                                     const ModelPoint& C, double a, double b, int side) {
    const double c = tau(g, A, C);
    if (!(c > 0.0)) throw non_realizable_error("place_third_vertex: base pair must be timelike");
    const Frame f = frame_at(g, A);
    if (a == 0.0) {
        // Y on the null cone of A; solve the affine parameter along the ray.
        const Vec3 lu = add3(f.u0, scale3(f.e1, static_cast<double>(side)));
        double lambda;
        if (g.flat()) {
            const Vec3 w = sub3(C.c, A.c);
            const double lw = -w[0] * lu[0] + w[1] * lu[1];
            lambda = (b * b - c * c) / (2.0 * lw);
        } else if (g.K > 0.0) {
            lambda = (std::cosh(g.s * b) - std::cosh(g.s * c)) / (g.s * g.s * form(g, lu, C.c));
        } else {
            lambda = (std::cos(g.s * c) - std::cos(g.s * b)) / (g.s * g.s * form(g, lu, C.c));
        }
        if (!(lambda > 0.0))
            throw non_realizable_error("place_third_vertex: null-side placement failed");
        ModelPoint Y;
        Y.c = add3(A.c, scale3(lu, lambda));
        if (g.K < 0.0) {
            const double th0 = theta_unwrapped(A);
            Y.winding = lift_winding(theta_principal(Y), th0, th0 + M_PI);
        }
        return Y;
    }
    // rapidity of C about A, then offset by the vertex angle
    const RadialCoords rc = radial_coords(g, f, C);
    const SignedAngle ang = loc_angle(g, a, c, b); // end vertex: sigma = -1
    return exp_radial(g, f, a, rc.phi + side * ang.omega, true);
}

/// A comparison triangle realized in the chart, vertices in causal order.
struct RealizedTriangle {
    CurvatureGauge g;
    ModelPoint x, y, z;
    SideTriple s;
};

enum class TriangleSide { xy, yz, xz };

/// Canonical placement: x at the chart base point, z on the reference future
/// spoke, y on the requested side.
inline RealizedTriangle realize_triangle(const CurvatureGauge& g, const SideTriple& s,
                                         int side = 1) {
    validate_side_triple(g, s);
    RealizedTriangle t;
    t.g = g;
    t.s = s;
    t.x = base_point(g);
    t.z = exp_radial(g, frame_at(g, t.x), s.c, 0.0, true);
    t.y = (s.b == 0.0)
              ? place_third_vertex(g, t.x, t.z, s.a, 0.0, side)
              : place_third_vertex(g, t.x, t.z, s.a, s.b, side);
    return t;
}

/// Same, but on a caller-supplied base segment [x, z] with tau(x,z) = c.
inline RealizedTriangle realize_triangle_on(const CurvatureGauge& g, const SideTriple& s,
                                            const ModelPoint& x, const ModelPoint& z, int side) {
    validate_side_triple(g, s);
    if (std::fabs(tau(g, x, z) - s.c) > 1e-9 * std::fmax(1.0, s.c))
        throw domain_error("realize_triangle_on: base length does not match c");
    RealizedTriangle t;
    t.g = g;
    t.s = s;
    t.x = x;
    t.z = z;
    t.y = place_third_vertex(g, x, z, s.a, s.b, side);
    return t;
}

/// Point on a (timelike) side at tau-distance `dist` from the side's
/// earlier endpoint. Comparison points are never taken on a null side.
inline ModelPoint comparison_point(const RealizedTriangle& t, TriangleSide side, double dist) {
    const ModelPoint* from = nullptr;
    const ModelPoint* to = nullptr;
    double len = 0.0;
    switch (side) {
        case TriangleSide::xy: from = &t.x; to = &t.y; len = t.s.a; break;
        case TriangleSide::yz: from = &t.y; to = &t.z; len = t.s.b; break;
        case TriangleSide::xz: from = &t.x; to = &t.z; len = t.s.c; break;
    }
    if (len <= 0.0) throw domain_error("comparison_point: side is null");
    if (dist < -1e-12 || dist > len * (1.0 + 1e-12))
        throw domain_error("comparison_point: distance outside the side");
    const double u = std::fmin(std::fmax(dist / len, 0.0), 1.0);
    return geodesic_point(t.g, *from, *to, u);
}

} // namespace lorcomp

#endif
