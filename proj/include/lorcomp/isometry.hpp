#ifndef LORCOMP_ISOMETRY_HPP
#define LORCOMP_ISOMETRY_HPP

#include <array>
#include <cmath>

#include "lorcomp/model.hpp"

namespace lorcomp {

using Mat3 = std::array<Vec3, 3>;

inline Vec3 mat_apply(const Mat3& m, const Vec3& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline Mat3 mat_transpose(const Mat3& a) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

/// Time-orientation preserving isometry of the model space, possibly a
/// reflection. For K = 0 an affine map, otherwise a linear map of the
/// ambient quadric form; for K < 0 a pair of anchor points fixes the lift
/// to the universal cover.
struct Isometry {
    bool flat = true;
    Mat3 M{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Vec3 b{0, 0, 0}; // translation, flat chart only
    ModelPoint src_anchor;
    ModelPoint dst_anchor;

    ModelPoint apply(const CurvatureGauge& g, const ModelPoint& p) const {
        validate_point(g, p);
        ModelPoint out;
        if (flat) {
            out.c = add3(mat_apply(M, p.c), b);
            return out;
        }
        out.c = mat_apply(M, p.c);
        if (g.K < 0.0) {
            // the image lies in the same relative band about the anchor
            const double dsrc = theta_unwrapped(p) - theta_unwrapped(src_anchor);
            const double dth = theta_unwrapped(dst_anchor);
            const double pr = theta_principal(out);
            if (dsrc > 1e-12)
                out.winding = lift_winding(pr, dth, dth + M_PI, 1e-6);
            else if (dsrc < -1e-12)
                out.winding = lift_winding(pr, dth - M_PI, dth, 1e-6);
            else
                out.winding = lift_winding(pr, dth - M_PI, dth + M_PI, 0.0);
        }
        return out;
    }

    Isometry inverse(const CurvatureGauge& g) const {
        Isometry inv;
        inv.flat = flat;
        if (flat) {
            // invert the 2x2 block
            const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
            inv.M = Mat3{{{M[1][1] / det, -M[0][1] / det, 0},
                          {-M[1][0] / det, M[0][0] / det, 0},
                          {0, 0, 1}}};
            const Vec3 mb = mat_apply(inv.M, b);
            inv.b = {-mb[0], -mb[1], 0.0};
            return inv;
        }
        // M^-1 = eta M^T eta for maps preserving the ambient form
        Mat3 eta{{{-1, 0, 0}, {0, g.K < 0.0 ? -1.0 : 1.0, 0}, {0, 0, 1}}};
        inv.M = mat_mul(mat_mul(eta, mat_transpose(M)), eta);
        inv.src_anchor = dst_anchor;
        inv.dst_anchor = src_anchor;
        return inv;
    }
};

namespace detail {

/// Unit future tangent at p0 pointing toward the chronologically later p1.
inline Vec3 segment_dir(const CurvatureGauge& g, const ModelPoint& p0, const ModelPoint& p1,
                        double T /* = tau(p0,p1) */) {
    if (g.flat()) return scale3(sub3(p1.c, p0.c), 1.0 / T);
    if (g.K > 0.0)
        return scale3(sub3(p1.c, scale3(p0.c, std::cosh(g.s * T))), g.s / std::sinh(g.s * T));
    return scale3(sub3(p1.c, scale3(p0.c, std::cos(g.s * T))), g.s / std::sin(g.s * T));
}

struct SegFrame {
    Vec3 cols[3];
    int ncols;
    double gram[3]; // diagonal Gram entries, or the null-pair marker
    bool null_pair;
};

inline SegFrame segment_frame(const CurvatureGauge& g, const ModelPoint& p0, const ModelPoint& p1) {
    SegFrame f{};
    const CausalClass rel01 = relation(g, p0, p1);
    int k = 0;
    if (!g.flat()) {
        f.cols[k] = scale3(p0.c, g.s);
        f.gram[k] = (g.K < 0.0) ? -1.0 : 1.0;
        ++k;
    }
    if (rel01 == CausalClass::chrono_future) {
        const double T = tau(g, p0, p1);
        const Vec3 u = segment_dir(g, p0, p1, T);
        Vec3 n = g.flat() ? Vec3{u[1], u[0], 0.0} : form_cross(g, p0.c, u);
        if (!g.flat()) n = scale3(n, 1.0 / std::sqrt(form(g, n, n)));
        f.cols[k] = u;
        f.gram[k] = -1.0;
        ++k;
        f.cols[k] = n;
        f.gram[k] = 1.0;
        ++k;
        f.null_pair = false;
    } else if (rel01 == CausalClass::null_future) {
        // null pair frame: l = p1 - p0 and the complementary null direction m
        // normalized so that <l, m> = -2.
        const Vec3 l = sub3(p1.c, p0.c);
        const Frame fr = frame_at(g, p0);
        const double a = -form(g, l, fr.u0);
        const double bb = form(g, l, fr.e1);
        if (a <= 0.0) throw internal_error("segment_frame: null direction not future");
        const Vec3 m = scale3(sub3(scale3(fr.u0, a), scale3(fr.e1, bb)), 1.0 / (a * a));
        f.cols[k] = l;
        ++k;
        f.cols[k] = m;
        ++k;
        f.null_pair = true;
    } else {
        throw domain_error("isometry_from_segments: segment must be future causal");
    }
    f.ncols = k;
    return f;
}

/// Inverse of the frame matrix via the (block) Gram relation F^T eta F = G.
inline Mat3 frame_inverse(const CurvatureGauge& g, const SegFrame& f) {
    Mat3 F{};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) F[i][j] = (j < f.ncols) ? f.cols[j][i] : (i == j ? 1.0 : 0.0);
    Mat3 eta{{{-1, 0, 0}, {0, g.K < 0.0 ? -1.0 : 1.0, 0}, {0, 0, 1}}};
    if (g.flat()) eta = Mat3{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3 Ft_eta = mat_mul(mat_transpose(F), eta);
    // G is diagonal for timelike frames; for null pairs the 2x2 block
    // [[0,-2],[-2,0]] has inverse [[0,-1/2],[-1/2,0]].
    Mat3 Ginv{};
    if (!f.null_pair) {
        int j = 0;
        if (!g.flat()) {
            Ginv[0][0] = 1.0 / f.gram[0];
            j = 1;
        }
        Ginv[j][j] = 1.0 / f.gram[j];
        Ginv[j + 1][j + 1] = 1.0 / f.gram[j + 1];
        if (g.flat()) Ginv[2][2] = 1.0;
    } else {
        int j = 0;
        if (!g.flat()) {
            Ginv[0][0] = 1.0 / f.gram[0];
            j = 1;
        }
        Ginv[j][j + 1] = -0.5;
        Ginv[j + 1][j] = -0.5;
        if (g.flat()) Ginv[2][2] = 1.0;
    }
    return mat_mul(Ginv, Ft_eta);
}

} // namespace detail

/// The isometry mapping the segment (src0, src1) onto (dst0, dst1).
/// Segment lengths must agree; `flip` reflects across the target segment,
/// selecting which side the image half-plane lands on. Null segments admit
/// no flip: the attachment side of a null segment is forced.
inline Isometry isometry_from_segments(const CurvatureGauge& g, const ModelPoint& src0,
                                       const ModelPoint& src1, const ModelPoint& dst0,
                                       const ModelPoint& dst1, bool flip) {
    const CausalClass rs = relation(g, src0, src1);
    const CausalClass rd = relation(g, dst0, dst1);
    if (rs != rd) throw domain_error("isometry_from_segments: segment classes differ");
    if (rs == CausalClass::chrono_future) {
        const double ts = tau(g, src0, src1), td = tau(g, dst0, dst1);
        if (std::fabs(ts - td) > 1e-9 * std::fmax(1.0, std::fmax(ts, td)))
            throw domain_error("isometry_from_segments: segment lengths differ");
    } else if (rs == CausalClass::null_future) {
        if (flip) throw unsupported_error("isometry_from_segments: null segment admits no flip");
    } else {
        throw domain_error("isometry_from_segments: segments must be future causal");
    }

    detail::SegFrame fs = detail::segment_frame(g, src0, src1);
    detail::SegFrame fd = detail::segment_frame(g, dst0, dst1);
    if (flip) {
        const int n_col = fd.ncols - 1;
        fd.cols[n_col] = scale3(fd.cols[n_col], -1.0);
    }
    Mat3 Fd{};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            Fd[i][j] = (j < fd.ncols) ? fd.cols[j][i] : (i == j ? 1.0 : 0.0);

    Isometry iso;
    iso.flat = g.flat();
    if (g.flat()) {
        // linear part on differences, then translation
        Mat3 Fs_inv = detail::frame_inverse(g, fs);
        // frames were built without the position column for flat charts
        iso.M = mat_mul(Fd, Fs_inv);
        iso.M[2][2] = 1.0;
        const Vec3 ms = mat_apply(iso.M, src0.c);
        iso.b = sub3(dst0.c, ms);
        return iso;
    }
    iso.M = mat_mul(Fd, detail::frame_inverse(g, fs));
    iso.src_anchor = src0;
    iso.dst_anchor = dst0;
    return iso;
}

/// Lorentz reflection across the line through the timelike segment [a, b].
inline Isometry reflection_across(const CurvatureGauge& g, const ModelPoint& a,
                                  const ModelPoint& b) {
    return isometry_from_segments(g, a, b, a, b, true);
}

/// Chart anti-isometry reversing time orientation: tau(flip q, flip p) = tau(p, q).
inline ModelPoint time_flip(const CurvatureGauge& g, const ModelPoint& p) {
    ModelPoint out = p;
    if (g.flat()) {
        out.c[0] = -out.c[0];
        return out;
    }
    if (g.K > 0.0) {
        out.c[0] = -out.c[0];
        return out;
    }
    out.c[1] = -out.c[1];
    const double th = -theta_unwrapped(p);
    const double pr = theta_principal(out);
    out.winding = static_cast<int>(std::lround((th - pr) / (2.0 * M_PI)));
    return out;
}

} // namespace lorcomp

#endif
