#ifndef LORCOMP_TESTS_HELPERS_HPP
#define LORCOMP_TESTS_HELPERS_HPP

#include <vector>

#include "lorcomp/model.hpp"
#include "lorcomp/rng.hpp"

namespace lorcomp::testing {

/// Uniform-ish sample from the causal diamond between the chart base point
/// and the point at separation T above it (rejection in conformal/strip
/// coordinates; not volume-weighted, which the tests do not need).
inline ModelPoint sample_canonical_diamond(const CurvatureGauge& g, double T, CounterRng& rng) {
    const ModelPoint A = base_point(g);
    const Frame f = frame_at(g, A);
    const ModelPoint B = exp_radial(g, f, T, 0.0, true);
    if (g.flat()) {
        while (true) {
            const double t = rng.next_in(0.0, T);
            const double x = rng.next_in(-T / 2, T / 2);
            if (t - std::fabs(x) > 0.0 && (T - t) - std::fabs(x) > 0.0) return minkowski(t, x);
        }
    }
    if (g.K < 0.0) {
        const double thA = theta_unwrapped(A), thB = theta_unwrapped(B);
        const double half = 0.5 * (thB - thA);
        while (true) {
            const double th = rng.next_in(thA, thB);
            const double sg = rng.next_in(-half, half);
            if (th - thA > std::fabs(sg) && thB - th > std::fabs(sg))
                return ads_from_strip(g, th, sg);
        }
    }
    const double eB = ds_eta(g, B);
    while (true) {
        const double e = rng.next_in(0.0, eB);
        const double ph = rng.next_in(-eB / 2, eB / 2);
        if (e > std::fabs(ph) && eB - e > std::fabs(ph)) return ds_from_conformal(g, e, ph);
    }
}

/// Chronologically ordered chain of n points inside the canonical diamond.
inline std::vector<ModelPoint> sample_chain(const CurvatureGauge& g, double T, int n,
                                            CounterRng& rng, int max_tries = 100000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<ModelPoint> pts;
        for (int i = 0; i < n; ++i) pts.push_back(sample_canonical_diamond(g, T, rng));
        std::sort(pts.begin(), pts.end(), [&](const ModelPoint& a, const ModelPoint& b) {
            return time_coordinate(g, a) < time_coordinate(g, b);
        });
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = relation(g, pts[i], pts[i + 1]) == CausalClass::chrono_future;
        if (ok) return pts;
    }
    throw std::runtime_error("sample_chain: exhausted attempts");
}

} // namespace lorcomp::testing

#endif
