#ifndef LORCOMP_GAUGE_HPP
#define LORCOMP_GAUGE_HPP

#include <cmath>
#include <limits>

#include "lorcomp/error.hpp"

namespace lorcomp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerances used throughout; all configurable per gauge.
struct Tolerances {
    double rel = 1e-9;       // relative tolerance for closed-form identities
    double null_band = 1e-10; // |discriminant| <= null_band*scale classifies null
    double verdict = 1e-7;   // verdict slack, kept apart from construction noise
    double iterative = 1e-6; // iterative / limit checks
    double boundary = 1e-10; // region-membership boundary band
};

/// Curvature data for the model space of constant curvature K.
/// s = sqrt(|K|); the timelike diameter D_K is finite only for K < 0,
/// where the cosine law is pi-periodic in s*c.
struct CurvatureGauge {
    double K = 0.0;
    double s = 0.0;
    double D_K = kInf;
    Tolerances tol;

    bool flat() const { return K == 0.0; }
    bool spherical_time() const { return K < 0.0; } // finite-diameter branch
};

inline CurvatureGauge curvature_gauge(double K, Tolerances tol = {}) {
    if (!std::isfinite(K)) throw domain_error("curvature_gauge: K must be finite");
    CurvatureGauge g;
    g.K = K;
    g.s = std::sqrt(std::fabs(K));
    g.D_K = (K < 0.0) ? M_PI / g.s : kInf;
    g.tol = tol;
    return g;
}

// ---- numerically careful inverse trig/hyperbolic helpers ----

/// acosh(1 + d) for d >= 0, accurate near d = 0.
inline double acosh1p(double d) {
    if (d < 0.0) {
        if (d > -1e-12) d = 0.0;
        else throw range_error("acosh1p: argument below 1");
    }
    return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

/// acos with arguments clamped into [-1,1] within a small band, stable near +-1.
inline double acos_clamped(double c, double band = 1e-9) {
    if (c > 1.0) {
        if (c > 1.0 + band) throw range_error("acos_clamped: argument above 1");
        c = 1.0;
    }
    if (c < -1.0) {
        if (c < -1.0 - band) throw range_error("acos_clamped: argument below -1");
        c = -1.0;
    }
    if (c >= 0.0) return 2.0 * std::asin(std::sqrt(0.5 * (1.0 - c)));
    return M_PI - 2.0 * std::asin(std::sqrt(0.5 * (1.0 + c)));
}

inline double sqr(double x) { return x * x; }

} // namespace lorcomp

#endif
