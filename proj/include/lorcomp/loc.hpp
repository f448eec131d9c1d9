#ifndef LORCOMP_LOC_HPP
#define LORCOMP_LOC_HPP

#include <cmath>

#include "lorcomp/model.hpp"

namespace lorcomp {

// Law of cosines for timelike triangles in the model space of curvature K.
// With a, b the sides adjacent to the vertex, c the opposite side, omega the
// hyperbolic angle at the vertex and sigma its sign:
//
//   K = 0 :  a^2 + b^2 = c^2 - 2 a b sigma cosh(omega)
//   K < 0 :  cos(sc)  = cos(sa) cos(sb)  - sigma cosh(omega) sin(sa) sin(sb)
//   K > 0 :  cosh(sc) = cosh(sa) cosh(sb) + sigma cosh(omega) sinh(sa) sinh(sb)
//
// Degenerate collinear triples give sigma cosh(omega) = +1 at the vertex
// between the two shorter sides and -1 at the end vertices.

/// Solves for the side opposite the angle's vertex.
inline double loc_side(const CurvatureGauge& g, double a, double b, const SignedAngle& angle) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("loc_side: adjacent sides must be positive");
    if (a >= g.D_K || b >= g.D_K) throw domain_error("loc_side: adjacent side reaches D_K");
    const double sh2 = sqr(std::sinh(0.5 * angle.omega)); // (cosh w - 1)/2
    if (g.flat()) {
        const double c2 = (angle.sigma > 0.0) ? sqr(a + b) + 4.0 * a * b * sh2
                                              : sqr(a - b) - 4.0 * a * b * sh2;
        if (c2 < 0.0) throw range_error("loc_side: no timelike solution");
        return std::sqrt(c2);
    }
    const double s = g.s;
    if (g.K < 0.0) {
        const double rhs = (angle.sigma > 0.0)
                               ? std::cos(s * (a + b)) - 2.0 * sh2 * std::sin(s * a) * std::sin(s * b)
                               : std::cos(s * (a - b)) + 2.0 * sh2 * std::sin(s * a) * std::sin(s * b);
        if (rhs < -1.0 - 1e-12) throw range_error("loc_side: no solution below the diameter D_K");
        if (rhs > 1.0 + 1e-12) throw range_error("loc_side: no timelike solution");
        return acos_clamped(rhs, 1e-9) / s;
    }
    const double rhs = (angle.sigma > 0.0)
                           ? std::cosh(s * (a + b)) + 2.0 * sh2 * std::sinh(s * a) * std::sinh(s * b)
                           : std::cosh(s * (a - b)) - 2.0 * sh2 * std::sinh(s * a) * std::sinh(s * b);
    if (rhs < 1.0 - 1e-12) throw range_error("loc_side: no timelike solution");
    return acosh1p(std::fmax(rhs - 1.0, 0.0)) / s;
}

/// sigma*cosh(omega) solved from the three side lengths, a and b adjacent,
/// c opposite. Realizable data has magnitude >= 1.
inline double loc_sigma_cosh(const CurvatureGauge& g, double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || c < 0.0)
        throw domain_error("loc_angle: adjacent sides must be positive and c nonnegative");
    if (g.flat()) {
        // (c^2 - a^2 - b^2) / 2ab, grouped to stay exact near collinearity
        return 1.0 + (c - a - b) * (c + a + b) / (2.0 * a * b);
    }
    const double s = g.s;
    if (a >= g.D_K || b >= g.D_K || c >= g.D_K)
        throw domain_error("loc_angle: side reaches D_K");
    if (g.K < 0.0) {
        const double num = 2.0 * sqr(std::sin(0.5 * s * c)) - sqr(std::sin(0.5 * s * (a + b))) -
                           sqr(std::sin(0.5 * s * (a - b)));
        return num / (std::sin(s * a) * std::sin(s * b));
    }
    const double num = 2.0 * sqr(std::sinh(0.5 * s * c)) - sqr(std::sinh(0.5 * s * (a + b))) -
                       sqr(std::sinh(0.5 * s * (a - b)));
    return num / (std::sinh(s * a) * std::sinh(s * b));
}

/// Inverse of loc_side: the signed angle between the sides of lengths a and b
/// whose opposite side has length c.
inline SignedAngle loc_angle(const CurvatureGauge& g, double a, double b, double c) {
    double v = loc_sigma_cosh(g, a, b, c);
    if (std::fabs(v) < 1.0 - 1e-12)
        throw non_realizable_error("loc_angle: side triple admits no model triangle");
    if (std::fabs(v) < 1.0) v = (v > 0.0) ? 1.0 : -1.0;
    SignedAngle out;
    out.sigma = (v >= 0.0) ? 1.0 : -1.0;
    out.omega = acosh1p(std::fabs(v) - 1.0);
    return out;
}

} // namespace lorcomp

#endif
