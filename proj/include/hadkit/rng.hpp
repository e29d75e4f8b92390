#ifndef HADKIT_RNG_HPP
#define HADKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace had {

// Seedable 64-bit generator with hand-rolled variate transforms.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the
// standard. The transforms below (bounded ints, uniforms, Box-Muller
// normals) are implemented here rather than via <random> distributions,
// because distribution output is implementation-defined and results must
// be bit-reproducible per seed across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0,1) with 24 random bits (float payloads).
    float uniform_f32() { return static_cast<float>(engine_() >> 40) * 0x1.0p-24f; }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller, one spare cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // k distinct indices from [0, n), order unspecified (partial Fisher-Yates).
    std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Mixes a stream position into a base seed (stable across platforms).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + n * 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace had

#endif
