#pragma once

#include <cmath>
#include <cstdint>

namespace egim {

/// Counter-style splitmix64 generator. Cheap to construct, so every
/// (sweep point, frame) pair gets its own stream and results do not
/// depend on how frames are distributed over worker threads.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Derive an independent stream from (seed, a, b).
    static Rng stream(uint64_t seed, uint64_t a, uint64_t b) {
        uint64_t s = mix(seed ^ 0x9E3779B97F4A7C15ull);
        s = mix(s ^ a);
        s = mix(s ^ b);
        return Rng(s);
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0,1], safe as a log() argument.
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    uint32_t bit() { return static_cast<uint32_t>(next_u64() >> 63); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller. Hand-rolled so that streams are
    /// reproducible across standard libraries (std::normal_distribution
    /// is implementation-defined).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace egim
