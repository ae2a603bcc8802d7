#pragma once

// Shared helpers for the test suites: a deterministic RNG (so expected
// values frozen from oracle runs stay stable) and small numeric utilities.

#include <complex>
#include <cstdint>

namespace testsupport {

// splitmix64-seeded xoshiro256**; independent of std implementations
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    long long integer(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::complex<double> box(double half_width) {
        return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
    }

private:
    std::uint64_t s_[4];
};

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    double scale = std::abs(want);
    if (scale < 1e-300) return std::abs(got - want);
    return std::abs(got - want) / scale;
}

}  // namespace testsupport
