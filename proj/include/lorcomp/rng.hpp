#ifndef LORCOMP_RNG_HPP
#define LORCOMP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace lorcomp {

/// Counter-based generator (splitmix64 finalizer over key + counter).
/// Identical seeds give identical streams on every platform; sub-streams
/// are derived by mixing a stream id into the key, so parallel consumers
/// stay reproducible regardless of scheduling.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))), counter_(0) {}

    /// Independent sub-stream derived from this generator's key.
    CounterRng split(uint64_t stream) const { return CounterRng(key_, stream + 1); }

    uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller.
    double next_normal() {
        const double u1 = std::fmax(next_double(), 0x1.0p-60);
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Exact Poisson sample by summing exponentials (fine for lambda <~ 1e5).
    uint64_t next_poisson(double lambda) {
        uint64_t k = 0;
        double acc = 0.0;
        while (true) {
            acc += -std::log(std::fmax(next_double(), 0x1.0p-60));
            if (acc > lambda) break;
            ++k;
        }
        return k;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_;
};

} // namespace lorcomp

#endif
