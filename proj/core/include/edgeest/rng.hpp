#ifndef EDGEEST_RNG_HPP
#define EDGEEST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace edgeest {

// Stream ids used when deriving per-module generators from a trial seed.
// Keeping the mapping in one place makes experiment runs reproducible: a
// trial is fully determined by (base_seed + trial_index, stream).
enum class RngStream : std::uint64_t {
    graph_gen = 0,
    bis_estimator = 1,
    is_estimator = 2,
    degree_estimator = 3,
    sparsify = 4,
    size_estimate = 5,
    test = 100,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random source. The engine is std::mt19937_64 (fully
// specified by the standard); bounded draws and doubles are produced here
// rather than through std::*_distribution, whose output is
// implementation-defined. Identical (seed, stream) gives identical draws
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed, RngStream stream = RngStream::test)
        : eng_(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream))) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound) via rejection; bound = 0 returns 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t rem = std::uint64_t(-bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = eng_();
            if (x >= rem) return x % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    // Number of failures before the next success of a Bernoulli(p) stream;
    // used for sparse subset sampling in O(hits) rather than O(universe).
    // Caller guarantees 0 < p <= 1.
    std::uint64_t geometric_skip(double p) {
        if (p >= 1.0) return 0;
        const double u = uniform01();
        // log(1-u) is safe: u < 1 by construction.
        const double g = std::floor(std::log1p(-u) / std::log1p(-p));
        if (g >= 9.007199254740992e15) return std::uint64_t(1) << 53;
        return static_cast<std::uint64_t>(g);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace edgeest

#endif
