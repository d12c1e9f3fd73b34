#pragma once

#include <cstdint>
#include <random>

namespace listdec {

/// Seeded generator with rejection-sampled bounded draws. mt19937_64's output
/// sequence is fixed by the standard, and the bounded draw avoids
/// std::uniform_int_distribution, whose mapping is implementation-defined;
/// together that makes every seeded run reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = gen_();
        } while (draw >= limit);
        return draw % bound;
    }

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// Stateless mix for deriving per-trial seeds from a base seed (splitmix64
/// finalizer).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace listdec
