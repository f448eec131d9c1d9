#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lorcomp/isometry.hpp"
#include "lorcomp/loc.hpp"
#include "lorcomp/model.hpp"
#include "lorcomp/triangle.hpp"

using namespace lorcomp;
using lorcomp::testing::sample_canonical_diamond;
using lorcomp::testing::sample_chain;
using Catch::Approx;

namespace {
const double kKs[3] = {-1.0, 0.0, 1.0};
}

TEST_CASE("curvature gauge fields") {
    auto g0 = curvature_gauge(0.0);
    CHECK(g0.s == 0.0);
    CHECK(g0.D_K == kInf);

    auto gm = curvature_gauge(-1.0);
    CHECK(gm.s == Approx(1.0));
    CHECK(gm.D_K == Approx(M_PI));

    auto gm4 = curvature_gauge(-4.0);
    CHECK(gm4.s == Approx(2.0));
    CHECK(gm4.D_K == Approx(M_PI / 2));

    auto gp = curvature_gauge(2.5);
    CHECK(gp.s == Approx(std::sqrt(2.5)));
    CHECK(gp.D_K == kInf);

    CHECK_THROWS_AS(curvature_gauge(kInf), domain_error);
}

TEST_CASE("minkowski tau and relation") {
    auto g = curvature_gauge(0.0);
    CHECK(tau(g, minkowski(0, 0), minkowski(2, 1)) == Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(tau(g, minkowski(0, 0), minkowski(0, 0)) == 0.0);
    CHECK(tau(g, minkowski(0, 0), minkowski(1, 2)) == 0.0);
    CHECK(tau(g, minkowski(2, 1), minkowski(0, 0)) == 0.0); // past direction

    CHECK(relation(g, minkowski(0, 0), minkowski(2, 1)) == CausalClass::chrono_future);
    CHECK(relation(g, minkowski(0, 0), minkowski(1, 1)) == CausalClass::null_future);
    CHECK(relation(g, minkowski(0, 0), minkowski(1, 2)) == CausalClass::unrelated);
    CHECK(relation(g, minkowski(2, 1), minkowski(0, 0)) == CausalClass::chrono_past);
    CHECK(relation(g, minkowski(1, 1), minkowski(0, 0)) == CausalClass::null_past);
}

TEST_CASE("tau of identical points vanishes for every gauge") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const ModelPoint p = base_point(g);
        CHECK(tau(g, p, p) == 0.0);
        CHECK(relation(g, p, p) == CausalClass::unrelated);
    }
}

TEST_CASE("relation is antisymmetric under argument swap") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(7);
        for (int i = 0; i < 300; ++i) {
            const ModelPoint p = sample_canonical_diamond(g, 2.0, rng);
            const ModelPoint q = sample_canonical_diamond(g, 2.0, rng);
            CHECK(relation(g, q, p) == time_reverse(relation(g, p, q)));
        }
    }
}

TEST_CASE("geodesic points split tau proportionally") {
    auto g0 = curvature_gauge(0.0);
    const ModelPoint mid = geodesic_point(g0, minkowski(0, 0), minkowski(2, 1), 0.5);
    CHECK(mid.t() == Approx(1.0));
    CHECK(mid.x() == Approx(0.5));

    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(11);
        for (int i = 0; i < 50; ++i) {
            auto chain = sample_chain(g, 2.0, 2, rng);
            const ModelPoint &p = chain[0], &q = chain[1];
            CHECK(geodesic_point(g, p, q, 0.0).c == p.c);
            CHECK(geodesic_point(g, p, q, 1.0).c == q.c);
            const double T = tau(g, p, q);
            const ModelPoint m = geodesic_point(g, p, q, 0.3);
            CHECK(tau(g, p, m) == Approx(0.3 * T).epsilon(1e-9));
            CHECK(tau(g, m, q) == Approx(0.7 * T).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(geodesic_point(g0, minkowski(0, 0), minkowski(1, 2), 0.5), domain_error);
}

TEST_CASE("law of cosines side solver") {
    auto g0 = curvature_gauge(0.0);
    CHECK(loc_side(g0, 1, 2, SignedAngle{0.0, +1.0}) == Approx(3.0).epsilon(1e-12));
    // direct evaluation of the flat law as the oracle
    CHECK(loc_side(g0, 1, 2, SignedAngle{0.5, +1.0}) ==
          Approx(std::sqrt(5.0 + 4.0 * std::cosh(0.5))).epsilon(1e-12));

    auto gm = curvature_gauge(-1.0);
    const double expect = std::acos(sqr(std::cos(0.5)) - std::cosh(1.0) * sqr(std::sin(0.5)));
    CHECK(loc_side(gm, 0.5, 0.5, SignedAngle{1.0, +1.0}) == Approx(expect).epsilon(1e-12));
    CHECK(expect == Approx(1.1424).margin(1e-3));

    // no solution below the diameter once the angle is too wide
    CHECK_THROWS_AS(loc_side(gm, 1.5, 1.5, SignedAngle{5.0, +1.0}), range_error);
    // spacelike-closing end-vertex configuration
    CHECK_THROWS_AS(loc_side(g0, 1.0, 1.0, SignedAngle{2.0, -1.0}), range_error);
}

TEST_CASE("law of cosines angle solver") {
    auto g0 = curvature_gauge(0.0);
    auto a = loc_angle(g0, 1, 1, 3);
    CHECK(a.sigma == 1.0);
    CHECK(a.omega == Approx(std::acosh(3.5)).epsilon(1e-12));
    CHECK(a.omega == Approx(1.924847).margin(1e-6));

    auto b = loc_angle(g0, 1, 2, 3);
    CHECK(b.sigma == 1.0);
    CHECK(b.omega == Approx(0.0).margin(1e-9));

    // flat limit of the curved laws
    auto gp = curvature_gauge(1.0);
    auto c = loc_angle(gp, 1e-4, 1e-4, 3e-4);
    CHECK(c.omega == Approx(std::acosh(3.5)).epsilon(1e-6));
    CHECK(c.sigma == 1.0);

    // end vertex: the long side is adjacent
    auto d = loc_angle(g0, 3, 1, 1);
    CHECK(d.sigma == -1.0);
    CHECK(d.omega == Approx(std::acosh(1.5)).epsilon(1e-12));

    CHECK_THROWS_AS(loc_angle(g0, 1, 1, 1.5), non_realizable_error);
}

TEST_CASE("loc_angle inverts loc_side") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(13);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double cap = (K < 0.0) ? 1.2 : 3.0;
            const double a = rng.next_in(0.01, cap);
            const double b = rng.next_in(0.01, cap);
            const double w = rng.next_in(0.0, 2.0);
            double c;
            try {
                c = loc_side(g, a, b, SignedAngle{w, +1.0});
            } catch (const range_error&) {
                continue; // beyond the diameter for K < 0
            }
            const SignedAngle back = loc_angle(g, a, b, c);
            REQUIRE(back.sigma == 1.0);
            worst = std::fmax(worst, std::fabs(back.omega - w) / std::fmax(1.0, w));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("law of cosines monotonicity in the longest side") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const double a = 0.4, b = 0.3;
        double prev = -1.0;
        for (double c = a + b + 0.05; c < a + b + 0.8; c += 0.05) {
            const double w = loc_angle(g, a, b, c).omega;
            CHECK(w > prev); // omega strictly increasing in c
            prev = w;
        }
        // and strictly decreasing in an adjacent side at fixed c
        const double c = 1.6;
        prev = kInf;
        for (double aa = 0.2; aa < 0.7; aa += 0.05) {
            const double w = loc_angle(g, aa, b, c).omega;
            CHECK(w < prev);
            prev = w;
        }
    }
}

TEST_CASE("angle_at measures rapidity gaps") {
    auto g = curvature_gauge(0.0);
    const ModelPoint v = minkowski(0, 0);
    auto zero = angle_at(g, v, minkowski(2, 0), minkowski(2, 0));
    CHECK(zero.omega == Approx(0.0).margin(1e-12));
    CHECK(zero.sigma == -1.0);

    auto one = angle_at(g, v, minkowski(std::cosh(1.0), std::sinh(1.0)), minkowski(1, 0));
    CHECK(one.omega == Approx(1.0).epsilon(1e-12));
    CHECK(one.sigma == -1.0);

    // reflecting q across the axis through p keeps omega and sigma
    auto refl = angle_at(g, v, minkowski(std::cosh(1.0), -std::sinh(1.0)), minkowski(1, 0));
    CHECK(refl.omega == Approx(1.0).epsilon(1e-12));
    CHECK(refl.sigma == -1.0);

    CHECK_THROWS_AS(angle_at(g, v, minkowski(1, 1), minkowski(2, 0)), domain_error);
}

TEST_CASE("angle_at is additive and agrees with loc_angle on triangles") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        // additivity over angularly ordered directions
        const ModelPoint p = exp_radial(g, f, 0.7, -0.4);
        const ModelPoint q = exp_radial(g, f, 0.5, 0.2);
        const ModelPoint r = exp_radial(g, f, 0.9, 0.9);
        const double w_pq = angle_at(g, f.base, p, q).omega;
        const double w_qr = angle_at(g, f.base, q, r).omega;
        const double w_pr = angle_at(g, f.base, p, r).omega;
        CHECK(w_pq + w_qr == Approx(w_pr).epsilon(1e-9));

        CounterRng rng(17);
        for (int i = 0; i < 200; ++i) {
            auto ch = sample_chain(g, 1.8, 3, rng);
            const double a = tau(g, ch[0], ch[1]);
            const double b = tau(g, ch[1], ch[2]);
            const double c = tau(g, ch[0], ch[2]);
            if (a < 0.05 || b < 0.05 || c < 0.05) continue;
            // middle vertex: sigma = +1
            const SignedAngle am = angle_at(g, ch[1], ch[0], ch[2]);
            const SignedAngle lm = loc_angle(g, a, b, c);
            CHECK(am.sigma == lm.sigma);
            CHECK(am.omega == Approx(lm.omega).margin(1e-8));
            // bottom vertex: sigma = -1
            const SignedAngle ab = angle_at(g, ch[0], ch[1], ch[2]);
            const SignedAngle lb = loc_angle(g, a, c, b);
            CHECK(ab.sigma == lb.sigma);
            CHECK(ab.omega == Approx(lb.omega).margin(1e-8));
        }
    }
}

TEST_CASE("triangles built from points satisfy the K-branch law") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(23);
        int checked = 0;
        for (int i = 0; i < 400 && checked < 150; ++i) {
            auto ch = sample_chain(g, 1.8, 3, rng);
            const double a = tau(g, ch[0], ch[1]);
            const double b = tau(g, ch[1], ch[2]);
            const double c = tau(g, ch[0], ch[2]);
            if (a < 0.02 || b < 0.02) continue;
            const SignedAngle ang = angle_at(g, ch[1], ch[0], ch[2]);
            CHECK(loc_side(g, a, b, ang) == Approx(c).epsilon(1e-9));
            ++checked;
        }
        REQUIRE(checked >= 100);
    }
}

TEST_CASE("reverse triangle inequality on sampled chains") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(29);
        for (int i = 0; i < 300; ++i) {
            auto ch = sample_chain(g, 2.0, 3, rng);
            CHECK(tau(g, ch[0], ch[2]) >=
                  tau(g, ch[0], ch[1]) + tau(g, ch[1], ch[2]) - 1e-9);
        }
    }
}

TEST_CASE("flat limit agreement at |K| = 1e-8") {
    auto g0 = curvature_gauge(0.0);
    for (double K : {-1e-8, 1e-8}) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        const Frame f0 = frame_at(g0, base_point(g0));
        CounterRng rng(31);
        for (int i = 0; i < 200; ++i) {
            const double r1 = rng.next_in(0.1, 2.0), w1 = rng.next_in(-1.0, 1.0);
            const double r2 = rng.next_in(0.1, 2.0), w2 = rng.next_in(-1.0, 1.0);
            const ModelPoint p = exp_radial(g, f, r1, w1), q = exp_radial(g, f, r2, w2);
            const ModelPoint p0 = exp_radial(g0, f0, r1, w1), q0 = exp_radial(g0, f0, r2, w2);
            CHECK(std::fabs(tau(g, p, q) - tau(g0, p0, q0)) < 1e-6);
        }
        // loc agreement
        CHECK(std::fabs(loc_side(g, 1.0, 2.0, SignedAngle{0.5, 1.0}) -
                        loc_side(g0, 1.0, 2.0, SignedAngle{0.5, 1.0})) < 1e-6);
        CHECK(std::fabs(loc_angle(g, 1.0, 1.0, 3.0).omega - loc_angle(g0, 1.0, 1.0, 3.0).omega) <
              1e-6);
    }
}

TEST_CASE("isometries from segments") {
    auto g0 = curvature_gauge(0.0);
    // identity on matched segments
    const ModelPoint a = minkowski(0, 0), b = minkowski(2, 0.5);
    const Isometry id = isometry_from_segments(g0, a, b, a, b, false);
    const ModelPoint probe = minkowski(0.7, -0.3);
    CHECK(id.apply(g0, probe).t() == Approx(probe.t()).margin(1e-12));
    CHECK(id.apply(g0, probe).x() == Approx(probe.x()).margin(1e-12));

    // a t-axis segment onto its boosted copy: a pure boost
    const double phi = 0.6;
    const ModelPoint d1 = minkowski(2 * std::cosh(phi), 2 * std::sinh(phi));
    const Isometry boost = isometry_from_segments(g0, a, minkowski(2, 0), a, d1, false);
    const ModelPoint img = boost.apply(g0, minkowski(1, 0));
    CHECK(img.t() == Approx(std::cosh(phi)).epsilon(1e-12));
    CHECK(img.x() == Approx(std::sinh(phi)).epsilon(1e-12));

    // reflections are involutive
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        const ModelPoint z = exp_radial(g, f, 1.5, 0.2);
        const Isometry refl = reflection_across(g, base_point(g), z);
        CounterRng rng(37);
        for (int i = 0; i < 100; ++i) {
            const ModelPoint p = sample_canonical_diamond(g, 1.4, rng);
            const ModelPoint pp = refl.apply(g, refl.apply(g, p));
            for (int k = 0; k < 3; ++k) CHECK(pp.c[k] == Approx(p.c[k]).margin(1e-9));
        }
    }
}

TEST_CASE("isometries preserve tau and causal class") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        const ModelPoint s1 = exp_radial(g, f, 1.2, 0.0);
        const ModelPoint d0 = exp_radial(g, f, 0.3, 0.4);
        const ModelPoint d1b = exp_radial(g, frame_at(g, d0), 1.2, -0.5);
        for (bool flip : {false, true}) {
            const Isometry iso = isometry_from_segments(g, base_point(g), s1, d0, d1b, flip);
            CounterRng rng(41);
            for (int i = 0; i < 1000; ++i) {
                const ModelPoint p = sample_canonical_diamond(g, 1.2, rng);
                const ModelPoint q = sample_canonical_diamond(g, 1.2, rng);
                const ModelPoint ip = iso.apply(g, p), iq = iso.apply(g, q);
                CHECK(relation(g, ip, iq) == relation(g, p, q));
                CHECK(std::fabs(tau(g, ip, iq) - tau(g, p, q)) <=
                      1e-9 * std::fmax(1.0, tau(g, p, q)));
            }
        }
    }
}

TEST_CASE("null segment isometries") {
    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        // null source pair built from a degenerate triangle placement
        const ModelPoint top = exp_radial(g, f, 1.0, 0.0);
        const ModelPoint n = place_third_vertex(g, base_point(g), top, 0.0, 0.6, +1);
        REQUIRE(relation(g, base_point(g), n) == CausalClass::null_future);
        const ModelPoint d0 = exp_radial(g, f, 0.2, -0.3);
        const ModelPoint dtop = exp_radial(g, frame_at(g, d0), 1.0, 0.1);
        const ModelPoint dn = place_third_vertex(g, d0, dtop, 0.0, 0.6, +1);
        const Isometry iso = isometry_from_segments(g, base_point(g), n, d0, dn, false);
        const ModelPoint in0 = iso.apply(g, n);
        for (int k = 0; k < 3; ++k) CHECK(in0.c[k] == Approx(dn.c[k]).margin(1e-9));
        CHECK(std::fabs(tau(g, iso.apply(g, top), in0)) < 1e-9);
        CHECK(tau(g, in0, iso.apply(g, top)) == Approx(0.6).margin(1e-9));
        CHECK_THROWS_AS(isometry_from_segments(g, base_point(g), n, d0, dn, true),
                        unsupported_error);
    }
}

TEST_CASE("hyperbola points stay at constant separation") {
    auto g0 = curvature_gauge(0.0);
    Hyperbola h{base_point(g0), 1.0, true};
    CHECK(hyperbola_point(h, g0, 0.0).t() == Approx(1.0));
    CHECK(hyperbola_point(h, g0, 0.0).x() == Approx(0.0).margin(1e-15));
    CHECK(hyperbola_point(h, g0, 0.3).t() == Approx(std::cosh(0.3)));
    CHECK(hyperbola_point(h, g0, 0.3).x() == Approx(std::sinh(0.3)));

    for (double K : kKs) {
        auto g = curvature_gauge(K);
        CounterRng rng(43);
        Hyperbola hf{base_point(g), 0.8, true};
        Hyperbola hp{exp_radial(g, frame_at(g, base_point(g)), 2.0, 0.0), 0.9, false};
        for (int i = 0; i < 100; ++i) {
            const double phi = rng.next_in(-2.0, 2.0);
            CHECK(tau(g, hf.center, hyperbola_point(hf, g, phi)) == Approx(0.8).epsilon(1e-9));
            CHECK(tau(g, hyperbola_point(hp, g, phi), hp.center) == Approx(0.9).epsilon(1e-9));
        }
    }
}

TEST_CASE("sector collapse is long within a sector") {
    auto g0 = curvature_gauge(0.0);
    const ModelPoint spoke = minkowski(2, 0);
    const ModelPoint p = minkowski(std::cosh(0.3), std::sinh(0.3));
    const ModelPoint c = sector_collapse(g0, base_point(g0), spoke, p);
    CHECK(c.t() == Approx(1.0).epsilon(1e-12));
    CHECK(c.x() == Approx(0.0).margin(1e-12));

    for (double K : kKs) {
        auto g = curvature_gauge(K);
        const Frame f = frame_at(g, base_point(g));
        const ModelPoint end = exp_radial(g, f, 1.5, 0.0);
        // a point already on the spoke is fixed
        const ModelPoint on = exp_radial(g, f, 0.7, 0.0);
        const ModelPoint fixed = sector_collapse(g, base_point(g), end, on);
        for (int k = 0; k < 3; ++k) CHECK(fixed.c[k] == Approx(on.c[k]).margin(1e-9));

        CounterRng rng(47);
        for (int i = 0; i < 500; ++i) {
            // sector between rapidities [0, 0.8], radius 1.5
            const ModelPoint a = exp_radial(g, f, rng.next_in(0.05, 1.5), rng.next_in(0.0, 0.8));
            const ModelPoint b = exp_radial(g, f, rng.next_in(0.05, 1.5), rng.next_in(0.0, 0.8));
            const ModelPoint ca = sector_collapse(g, base_point(g), end, a);
            const ModelPoint cb = sector_collapse(g, base_point(g), end, b);
            CHECK(tau(g, ca, cb) + tau(g, cb, ca) >= tau_both(g, a, b) - 1e-9);
            if (is_causal_future(relation(g, a, b)))
                CHECK(is_causal_future(relation(g, ca, cb)));
        }
        CHECK_THROWS_AS(
            sector_collapse(g, base_point(g), exp_radial(g, f, 0.5, 0.0), exp_radial(g, f, 0.9, 0.3)),
            domain_error);
    }
}

TEST_CASE("anti-de Sitter cover bookkeeping") {
    auto g = curvature_gauge(-1.0);
    // construction across the principal branch cut of the time angle
    const ModelPoint near_cut = ads_from_strip(g, M_PI - 0.01, 0.2);
    const ModelPoint above = exp_radial(g, frame_at(g, near_cut), 0.5, 0.3);
    CHECK(relation(g, near_cut, above) == CausalClass::chrono_future);
    CHECK(tau(g, near_cut, above) == Approx(0.5).epsilon(1e-9));
    CHECK(theta_unwrapped(above) > M_PI - 0.01);

    // separations at the diameter are reported as the +inf sentinel
    const ModelPoint A = ads_from_strip(g, 0.0, 0.0);
    const ModelPoint far = ads_from_strip(g, M_PI - 0.2, 0.3); // beyond pi - |0 + 0.3|
    CHECK(relation(g, A, far) == CausalClass::chrono_future);
    CHECK(tau_extended(g, A, far) == kInf);
    CHECK_THROWS_AS(tau(g, A, far), range_error);

    // winding a full turn is far in the future, never a small separation
    ModelPoint wound = A;
    wound.winding += 1;
    CHECK(relation(g, A, wound) == CausalClass::chrono_future);
    CHECK(tau_extended(g, A, wound) == kInf);

    // time flip reverses separations
    const ModelPoint p = ads_from_strip(g, 0.4, -0.1), q = ads_from_strip(g, 1.2, 0.2);
    CHECK(tau(g, time_flip(g, q), time_flip(g, p)) == Approx(tau(g, p, q)).epsilon(1e-12));
}
