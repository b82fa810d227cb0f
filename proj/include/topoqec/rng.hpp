#pragma once

#include <cstdint>

namespace topoqec {

/// splitmix64 step; the standard 64-bit finalizer used to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic counter-based random stream.
///
/// A stream is identified by (master seed, key words). Mixing the key through
/// splitmix64 gives the xoshiro256** state, so trials indexed by
/// (size, p index, trial) draw from independent streams regardless of the
/// execution order or thread count.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t k0 = 0, std::uint64_t k1 = 0,
              std::uint64_t k2 = 0) {
        std::uint64_t st = master_seed;
        (void)splitmix64(st);
        st ^= 0xd1b54a32d192ed03ULL * (k0 + 1);
        (void)splitmix64(st);
        st ^= 0x8cb92ba72f3d8dd7ULL * (k1 + 1);
        (void)splitmix64(st);
        st ^= 0xaef17502108ef2d9ULL * (k2 + 1);
        for (auto& w : s_) w = splitmix64(st);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // modulo bias is negligible for the small n used here, but reject anyway
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

} // namespace topoqec
