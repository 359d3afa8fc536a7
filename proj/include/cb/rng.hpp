#pragma once
/*
 * Deterministic 64-bit RNG (splitmix64).
 *
 * Randomized sweeps must reproduce byte-identical reports from the same
 * seed on every platform, so we avoid std::uniform_int_distribution (whose
 * output is implementation-defined) and use a fully specified generator.
 */

#include <cstdint>

namespace cb {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0.  Modulo bias is < 2^-50 at our sizes.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + long(below(std::uint64_t(hi - lo + 1)));
    }

    // derive an independent stream (for per-instance seeding)
    Rng fork(std::uint64_t salt) {
        Rng r(state ^ (salt * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
        r.next();
        return r;
    }
};

} // namespace cb
