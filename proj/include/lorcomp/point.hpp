#ifndef LORCOMP_POINT_HPP
#define LORCOMP_POINT_HPP

#include <array>
#include <cmath>

#include "lorcomp/gauge.hpp"

namespace lorcomp {

// A point of the model space in a concrete chart.
//
//   K = 0 : Minkowski plane, c = (t, x), c[2] unused.
//   K > 0 : quadric <p,p> = +1/K in ambient signature (-,+,+), c = (p0,p1,p2).
//   K < 0 : quadric <p,p> = -1/|K| in ambient signature (-,-,+), c = (u,v,x),
//           plus an integer winding index for the universal cover of the
//           time circle theta = atan2(v,u).
struct ModelPoint {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    int winding = 0;

    double t() const { return c[0]; } // Minkowski chart accessors
    double x() const { return c[1]; }
};

inline ModelPoint minkowski(double t, double x) {
    ModelPoint p;
    p.c = {t, x, 0.0};
    return p;
}

using Vec3 = std::array<double, 3>;

inline Vec3 add3(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 scale3(const Vec3& a, double f) { return {a[0] * f, a[1] * f, a[2] * f}; }
inline Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Ambient bilinear form for the K != 0 quadric charts.
/// K > 0: diag(-1,+1,+1);  K < 0: diag(-1,-1,+1).
inline double form(const CurvatureGauge& g, const Vec3& a, const Vec3& b) {
    const double mid = (g.K < 0.0) ? -1.0 : 1.0;
    return -a[0] * b[0] + mid * a[1] * b[1] + a[2] * b[2];
}

/// Applies the form's metric to a raw Euclidean cross product; the result is
/// the form-orthogonal complement direction of span{a,b}.
inline Vec3 form_cross(const CurvatureGauge& g, const Vec3& a, const Vec3& b) {
    Vec3 c = cross3(a, b);
    c[0] = -c[0];
    if (g.K < 0.0) c[1] = -c[1];
    return c;
}

/// Quadric constant <p,p> of the chart: +1/K for K>0, -1/|K| for K<0.
inline double quadric_constant(const CurvatureGauge& g) { return 1.0 / g.K; }

inline double quadric_residual(const CurvatureGauge& g, const ModelPoint& p) {
    if (g.flat()) return 0.0;
    const double q = quadric_constant(g);
    return std::fabs(form(g, p.c, p.c) - q) / std::fmax(1.0, std::fabs(q));
}

inline void validate_point(const CurvatureGauge& g, const ModelPoint& p) {
    for (double v : p.c)
        if (!std::isfinite(v)) throw domain_error("model point has non-finite coordinate");
    if (!g.flat() && quadric_residual(g, p) > 1e-12)
        throw domain_error("model point violates the chart quadric constraint");
}

/// Rescales a nearly-on-quadric point exactly onto the quadric; constructed
/// points pass through this so the constraint holds to 1e-12 even after
/// long chains of arithmetic.
inline ModelPoint snap_to_quadric(const CurvatureGauge& g, ModelPoint p) {
    if (g.flat()) return p;
    const double q = quadric_constant(g);
    const double v = form(g, p.c, p.c);
    if (!(v * q > 0.0)) throw internal_error("snap_to_quadric: point left the chart");
    const double f = std::sqrt(q / v);
    for (double& x : p.c) x *= f;
    return p;
}

inline ModelPoint embedding_point(const CurvatureGauge& g, double c0, double c1, double c2,
                                  int winding = 0) {
    ModelPoint p;
    p.c = {c0, c1, c2};
    p.winding = (g.K < 0.0) ? winding : 0;
    validate_point(g, p);
    return p;
}

// ---- anti-de Sitter cover bookkeeping (K < 0) ----
//
// The chart is conformal to the Minkowski strip R x (-pi/2, pi/2): unwrapped
// time angle theta and space coordinate sigma = gd(rho) with sinh(rho) = s*x.
// Causality of the cover is exactly strip causality.

inline double wrap_angle(double a) {
    // principal value in (-pi, pi]
    double w = std::remainder(a, 2.0 * M_PI);
    if (w <= -M_PI) w += 2.0 * M_PI;
    return w;
}

inline double theta_principal(const ModelPoint& p) { return std::atan2(p.c[1], p.c[0]); }

inline double theta_unwrapped(const ModelPoint& p) {
    return theta_principal(p) + 2.0 * M_PI * p.winding;
}

inline double strip_sigma(const CurvatureGauge& g, const ModelPoint& p) {
    return std::atan(g.s * p.c[2]);
}

/// Winding index that lifts a quadric point into the band [lo, hi] of
/// unwrapped angles. The band must be narrower than a full turn.
inline int lift_winding(double theta_pr, double lo, double hi, double slack = 1e-9) {
    const int n = static_cast<int>(std::lround((0.5 * (lo + hi) - theta_pr) / (2.0 * M_PI)));
    const double th = theta_pr + 2.0 * M_PI * n;
    if (th < lo - slack || th > hi + slack)
        throw internal_error("lift_winding: no winding lands in the requested band");
    return n;
}

inline ModelPoint ads_from_strip(const CurvatureGauge& g, double theta_unwrapped, double sigma) {
    const double cr = 1.0 / std::cos(sigma); // cosh(rho)
    const double th = wrap_angle(theta_unwrapped);
    ModelPoint p;
    p.c = {cr * std::cos(th) / g.s, cr * std::sin(th) / g.s, std::tan(sigma) / g.s};
    p.winding = static_cast<int>(std::lround((theta_unwrapped - th) / (2.0 * M_PI)));
    return p;
}

// ---- de Sitter conformal coordinates (K > 0) ----
// eta = gd(t) in (-pi/2, pi/2), phi the spatial circle angle.

inline double ds_eta(const CurvatureGauge& g, const ModelPoint& p) {
    return std::atan(g.s * p.c[0]);
}

inline double ds_phi(const ModelPoint& p) { return std::atan2(p.c[2], p.c[1]); }

inline ModelPoint ds_from_conformal(const CurvatureGauge& g, double eta, double phi) {
    const double sec = 1.0 / std::cos(eta); // cosh(t)
    ModelPoint p;
    p.c = {std::tan(eta) / g.s, sec * std::cos(phi) / g.s, sec * std::sin(phi) / g.s};
    return p;
}

/// Chart base point: Minkowski origin, or the canonical quadric point with
/// zero time coordinate and zero reference angle.
inline ModelPoint base_point(const CurvatureGauge& g) {
    if (g.flat()) return minkowski(0.0, 0.0);
    if (g.K > 0.0) return embedding_point(g, 0.0, 1.0 / g.s, 0.0);
    return embedding_point(g, 1.0 / g.s, 0.0, 0.0);
}

/// A global time function: t, the ambient time coordinate, or the unwrapped
/// cover angle. Strictly increasing along future causal curves.
inline double time_coordinate(const CurvatureGauge& g, const ModelPoint& p) {
    if (g.flat()) return p.t();
    if (g.K > 0.0) return p.c[0];
    return theta_unwrapped(p);
}

} // namespace lorcomp

#endif
