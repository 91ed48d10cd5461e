#pragma once

// Portable draws on top of std::mt19937_64 (whose output sequence is fixed
// by the standard). The <random> distributions are implementation-defined,
// so seeded results would differ between standard libraries.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace varkg {

using Rng = std::mt19937_64;

/** Uniform integer in [0, bound); bound must be > 0. */
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/** Uniform double in [0, 1) with 53 random bits. */
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_between(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform_unit(rng); }

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace varkg
