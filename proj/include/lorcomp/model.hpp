#ifndef LORCOMP_MODEL_HPP
#define LORCOMP_MODEL_HPP

#include <cmath>
#include <optional>

#include "lorcomp/point.hpp"

namespace lorcomp {

enum class CausalClass {
    chrono_future, // q strictly inside the future cone of p
    null_future,
    unrelated,
    null_past,
    chrono_past,
};

inline CausalClass time_reverse(CausalClass c) {
    switch (c) {
        case CausalClass::chrono_future: return CausalClass::chrono_past;
        case CausalClass::null_future: return CausalClass::null_past;
        case CausalClass::chrono_past: return CausalClass::chrono_future;
        case CausalClass::null_past: return CausalClass::null_future;
        default: return CausalClass::unrelated;
    }
}

inline bool is_causal_future(CausalClass c) {
    return c == CausalClass::chrono_future || c == CausalClass::null_future;
}
inline bool is_causal(CausalClass c) { return c != CausalClass::unrelated; }

inline const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::chrono_future: return "chrono-future";
        case CausalClass::null_future: return "null-future";
        case CausalClass::unrelated: return "unrelated";
        case CausalClass::null_past: return "null-past";
        case CausalClass::chrono_past: return "chrono-past";
    }
    return "?";
}

namespace detail {

// Signed discriminant with the dimensions of tau^2, positive for timelike
// separation, plus a scale for the null classification band.
struct Discriminant {
    double value;
    double scale;
    bool future; // orientation when causal
};

inline Discriminant discriminant(const CurvatureGauge& g, const ModelPoint& p,
                                 const ModelPoint& q) {
    if (g.flat()) {
        const double dt = q.t() - p.t();
        const double dx = q.x() - p.x();
        return {dt * dt - dx * dx, std::fmax(1.0, dt * dt + dx * dx), dt > 0.0};
    }
    if (g.K > 0.0) {
        // s^2<p,q> = 1 + s^2<p, q-p>; causal iff >= 1.
        const double w = g.s * g.s * form(g, p.c, sub3(q.c, p.c));
        const double d = 2.0 * w / (g.K); // ~ tau^2 in the flat limit
        const Vec3 diff = sub3(q.c, p.c);
        const double m2 = std::fabs(form(g, diff, diff)) + std::fabs(w) / (g.s * g.s);
        return {d, std::fmax(1.0, m2), q.c[0] > p.c[0]};
    }
    // K < 0: strip causality of the covering space.
    const double dth = theta_unwrapped(q) - theta_unwrapped(p);
    const double dsg = strip_sigma(g, q) - strip_sigma(g, p);
    const double d = (dth * dth - dsg * dsg) / (g.s * g.s);
    const double m2 = (dth * dth + dsg * dsg) / (g.s * g.s);
    return {d, std::fmax(1.0, m2), dth > 0.0};
}

} // namespace detail

/// Causal relation between two chart points.
inline CausalClass relation(const CurvatureGauge& g, const ModelPoint& p, const ModelPoint& q) {
    validate_point(g, p);
    validate_point(g, q);
    const auto d = detail::discriminant(g, p, q);
    if (std::fabs(d.value) <= g.tol.null_band * d.scale) {
        // degenerate: identical points are unrelated
        if (d.scale <= 1.0 + g.tol.null_band &&
            std::fabs(time_coordinate(g, q) - time_coordinate(g, p)) <= g.tol.null_band)
            return CausalClass::unrelated;
        return d.future ? CausalClass::null_future : CausalClass::null_past;
    }
    if (d.value < 0.0) return CausalClass::unrelated;
    return d.future ? CausalClass::chrono_future : CausalClass::chrono_past;
}

/// Finite time separation, or +infinity for K<0 pairs whose would-be value
/// reaches the diameter D_K (beyond the refocusing cone of the cover).
inline double tau_extended(const CurvatureGauge& g, const ModelPoint& p, const ModelPoint& q) {
    const CausalClass cls = relation(g, p, q);
    if (cls != CausalClass::chrono_future) return 0.0;
    if (g.flat()) {
        const double dt = q.t() - p.t();
        const double dx = q.x() - p.x();
        return std::sqrt((dt - dx) * (dt + dx));
    }
    if (g.K > 0.0) {
        const double w = g.s * g.s * form(g, p.c, sub3(q.c, p.c)); // s^2<p,q> - 1
        return acosh1p(std::fmax(w, 0.0)) / g.s;
    }
    // K < 0: finite only inside the first diamond of the cover.
    const double dth = theta_unwrapped(q) - theta_unwrapped(p);
    const double cap = M_PI - std::fabs(strip_sigma(g, p) + strip_sigma(g, q));
    if (dth >= cap) return kInf;
    const double inv = -g.s * g.s * form(g, p.c, q.c); // cos(s*tau)
    return acos_clamped(inv, 1e-9) / g.s;
}

/// Time separation tau(p, q); zero unless q is chronologically after p.
/// Values lie in [0, D_K); a K<0 pair past the diameter is out of domain.
inline double tau(const CurvatureGauge& g, const ModelPoint& p, const ModelPoint& q) {
    const double v = tau_extended(g, p, q);
    if (v == kInf) throw range_error("tau: separation reaches the diameter D_K");
    return v;
}

/// max of the two orientations; the side length between causally related points.
inline double tau_both(const CurvatureGauge& g, const ModelPoint& p, const ModelPoint& q) {
    return std::fmax(tau(g, p, q), tau(g, q, p));
}

/// Constant-speed geodesic point between chronologically related p << q,
/// at parameter t in [0,1]: tau(p, .) = t * tau(p,q).
inline ModelPoint geodesic_point(const CurvatureGauge& g, const ModelPoint& p,
                                 const ModelPoint& q, double t) {
    if (relation(g, p, q) != CausalClass::chrono_future)
        throw domain_error("geodesic_point: endpoints must be chronologically related");
    if (t == 0.0) return p;
    if (t == 1.0) return q;
    if (g.flat()) {
        ModelPoint r;
        r.c = add3(scale3(p.c, 1.0 - t), scale3(q.c, t));
        return r;
    }
    const double T = g.s * tau(g, p, q);
    ModelPoint r;
    if (g.K > 0.0) {
        const double den = std::sinh(T);
        r.c = add3(scale3(p.c, std::sinh((1.0 - t) * T) / den),
                   scale3(q.c, std::sinh(t * T) / den));
        return r;
    }
    const double den = std::sin(T);
    r.c = add3(scale3(p.c, std::sin((1.0 - t) * T) / den), scale3(q.c, std::sin(t * T) / den));
    // lift: the unwrapped angle moves monotonically from p to q
    r.winding = lift_winding(theta_principal(r), theta_unwrapped(p), theta_unwrapped(q));
    return r;
}

// ---- tangent frames and radial (normal) coordinates ----

/// Orthonormal tangent frame at a point: u0 future timelike, e1 spacelike,
/// oriented so that positive rapidity lands on positive side_of.
struct Frame {
    ModelPoint base;
    Vec3 u0;
    Vec3 e1;
};

inline Frame frame_at(const CurvatureGauge& g, const ModelPoint& p) {
    validate_point(g, p);
    Frame f;
    f.base = p;
    if (g.flat()) {
        f.u0 = {1.0, 0.0, 0.0};
        f.e1 = {0.0, 1.0, 0.0};
        return f;
    }
    if (g.K > 0.0) {
        // project the ambient time axis onto the tangent plane
        Vec3 w = {1.0 + g.K * p.c[0] * p.c[0], g.K * p.c[0] * p.c[1], g.K * p.c[0] * p.c[2]};
        const double n = std::sqrt(-form(g, w, w));
        f.u0 = scale3(w, 1.0 / n);
    } else {
        // rotation direction of the time circle
        Vec3 w = {-p.c[1], p.c[0], 0.0};
        const double n = std::sqrt(-form(g, w, w));
        f.u0 = scale3(w, 1.0 / n);
    }
    Vec3 e = form_cross(g, p.c, f.u0);
    const double n = std::sqrt(form(g, e, e));
    f.e1 = scale3(e, 1.0 / n);
    return f;
}

/// Future-directed unit vector at rapidity phi within a frame.
inline Vec3 frame_dir(const Frame& f, double phi) {
    return add3(scale3(f.u0, std::cosh(phi)), scale3(f.e1, std::sinh(phi)));
}

/// Exponential map along the timelike direction at rapidity phi:
/// the point at distance r (to the future when future = true).
inline ModelPoint exp_radial(const CurvatureGauge& g, const Frame& f, double r, double phi,
                             bool future = true) {
    if (r < 0.0) throw domain_error("exp_radial: negative radius");
    if (g.K < 0.0 && g.s * r >= M_PI) throw range_error("exp_radial: radius reaches D_K");
    const Vec3 u = frame_dir(f, phi);
    const double sgn = future ? 1.0 : -1.0;
    ModelPoint out;
    if (g.flat()) {
        out.c = add3(f.base.c, scale3(u, sgn * r));
        return out;
    }
    if (g.K > 0.0) {
        out.c = add3(scale3(f.base.c, std::cosh(g.s * r)), scale3(u, sgn * std::sinh(g.s * r) / g.s));
        return out;
    }
    out.c = add3(scale3(f.base.c, std::cos(g.s * r)), scale3(u, sgn * std::sin(g.s * r) / g.s));
    const double th0 = theta_unwrapped(f.base);
    out.winding = future ? lift_winding(theta_principal(out), th0, th0 + M_PI)
                         : lift_winding(theta_principal(out), th0 - M_PI, th0);
    return out;
}

/// Radial coordinates of a chronologically related target about a frame:
/// radius tau, rapidity phi (sign convention: the past direction at rapidity
/// phi is the negation of the future direction at the same phi, so collinear
/// past/future targets report equal rapidity), and the time orientation.
struct RadialCoords {
    double r;
    double phi;
    bool future;
};

inline RadialCoords radial_coords(const CurvatureGauge& g, const Frame& f, const ModelPoint& q) {
    const CausalClass cls = relation(g, f.base, q);
    double r;
    bool future;
    if (cls == CausalClass::chrono_future) {
        r = tau(g, f.base, q);
        future = true;
    } else if (cls == CausalClass::chrono_past) {
        r = tau(g, q, f.base);
        future = false;
    } else {
        throw domain_error("radial_coords: target not timelike related to the base point");
    }
    Vec3 u;
    if (g.flat()) {
        u = scale3(sub3(q.c, f.base.c), (future ? 1.0 : -1.0) / r);
    } else if (g.K > 0.0) {
        const double T = g.s * r;
        u = scale3(sub3(q.c, scale3(f.base.c, std::cosh(T))),
                   (future ? 1.0 : -1.0) * g.s / std::sinh(T));
    } else {
        const double T = g.s * r;
        u = scale3(sub3(q.c, scale3(f.base.c, std::cos(T))),
                   (future ? 1.0 : -1.0) * g.s / std::sin(T));
    }
    // u = cosh(phi) u0 + sinh(phi) e1 up to sign handled above
    const double sh = form(g, u, f.e1);
    return {r, std::asinh(sh), future};
}

/// Orientation of p relative to the (extended) geodesic through a -> b.
/// Returns +1 / 0 / -1; only meaningful for nearby configurations.
inline int side_of(const CurvatureGauge& g, const ModelPoint& a, const ModelPoint& b,
                   const ModelPoint& p, double band = 1e-12) {
    double d, scale;
    if (g.flat()) {
        const double ut = b.t() - a.t(), ux = b.x() - a.x();
        const double vt = p.t() - a.t(), vx = p.x() - a.x();
        d = ut * vx - ux * vt;
        scale = std::fmax(1.0, (ut * ut + ux * ux) + (vt * vt + vx * vx));
    } else {
        d = det3(a.c, b.c, p.c);
        double m = 0.0;
        for (double v : a.c) m = std::fmax(m, std::fabs(v));
        for (double v : b.c) m = std::fmax(m, std::fabs(v));
        for (double v : p.c) m = std::fmax(m, std::fabs(v));
        scale = std::fmax(1.0, m * m * m);
    }
    if (std::fabs(d) <= band * scale) return 0;
    return d > 0.0 ? 1 : -1;
}

// ---- hyperbolic angles ----

/// Magnitude and sign of a hyperbolic angle. The sign enters the law of
/// cosines: +1 when the vertex sits causally between the two other points,
/// -1 when both lie to its future or both to its past.
struct SignedAngle {
    double omega = 0.0;
    double sigma = 1.0;
};

/// Hyperbolic angle at `vertex` between the directions toward p and q.
/// Both must be timelike related to the vertex; the angle is the rapidity
/// gap of the two radial directions.
inline SignedAngle angle_at(const CurvatureGauge& g, const ModelPoint& vertex,
                            const ModelPoint& p, const ModelPoint& q) {
    const Frame f = frame_at(g, vertex);
    RadialCoords cp, cq;
    try {
        cp = radial_coords(g, f, p);
        cq = radial_coords(g, f, q);
    } catch (const domain_error&) {
        throw domain_error("angle_at: adjacent side is null or absent");
    }
    SignedAngle a;
    a.omega = std::fabs(cp.phi - cq.phi);
    a.sigma = (cp.future == cq.future) ? -1.0 : 1.0;
    return a;
}

// ---- hyperbolas (Lorentzian spheres) and sectors ----

struct Hyperbola {
    ModelPoint center;
    double r = 1.0;
    bool future = true;
};

/// Point of the constant-tau hyperbola at rapidity phi from the chart's
/// reference spoke through the center.
inline ModelPoint hyperbola_point(const Hyperbola& h, const CurvatureGauge& g, double phi) {
    if (h.r <= 0.0) throw domain_error("hyperbola_point: radius must be positive");
    if (h.r >= g.D_K) throw domain_error("hyperbola_point: radius reaches D_K");
    return exp_radial(g, frame_at(g, h.center), h.r, phi, h.future);
}

/// Radial collapse of a sector: the unique point on [center, spoke_end]
/// at the same time separation from the center as p.
inline ModelPoint sector_collapse(const CurvatureGauge& g, const ModelPoint& center,
                                  const ModelPoint& spoke_end, const ModelPoint& p) {
    const double R = tau(g, center, spoke_end);
    if (R <= 0.0) throw domain_error("sector_collapse: spoke must be future timelike");
    const double r = tau(g, center, p);
    if (r <= 0.0) throw domain_error("sector_collapse: point not in the future of the center");
    if (r > R * (1.0 + g.tol.rel))
        throw domain_error("sector_collapse: point beyond the sector's radial range");
    return geodesic_point(g, center, spoke_end, std::fmin(r / R, 1.0));
}

} // namespace lorcomp

#endif
