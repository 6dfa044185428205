#pragma once

#include <cstdint>

namespace purepairs {

// Deterministic across platforms: splitmix64 streams only, no std distributions
// (libstdc++/libc++ disagree on distribution output, not on the engine).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stream derivation: (seed, index) -> independent stream seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        return mix(mix(seed) ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); modulo bias is irrelevant at our scales and keeps
    // the stream identical everywhere.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) {  // inclusive
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }

    // 53-bit uniform in [0,1); exact IEEE semantics, platform independent.
    double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace purepairs
