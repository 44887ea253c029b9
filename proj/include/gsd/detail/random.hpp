#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gsd::detail {

// splitmix64; used to derive independent per-task seeds from a master seed
// so results do not depend on thread scheduling.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased draw in [0, n) that only depends on the engine's bit stream
// (std::uniform_int_distribution is implementation-defined).
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;  // 53 random bits in [0,1)
}

// Box-Muller; kept explicit because std::normal_distribution's algorithm is
// implementation-defined and seeded reproducibility is part of the contract.
class NormalSampler {
public:
    double operator()(std::mt19937_64& rng) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01(rng);
        while (u1 <= 0.0) u1 = uniform01(rng);
        const double u2 = uniform01(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Draws a uniformly random size-k subset of {0,...,n-1} via partial
// Fisher-Yates; returned indices are not sorted.
inline std::vector<int> sample_without_replacement(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(bounded(rng, static_cast<uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    return out;
}

}  // namespace gsd::detail
