#pragma once

#include <cstdint>

namespace lemni {

// splitmix64; small, portable, and the same bit stream on every platform,
// which is what the reproducibility contract needs (std:: distributions are
// implementation-defined).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
};

// Counter-based stream split: independent deterministic substream per
// (master seed, stream index) pair.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    Rng r(master ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
    r.next_u64();
    return r.next_u64();
}

}  // namespace lemni
