// prng.hpp
// Seeded random primitives with fully specified output. std::mt19937_64 is
// pinned by the standard; the distributions here avoid the
// implementation-defined std::uniform_real_distribution / std::shuffle so
// identical seeds give identical results on every platform.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qdb {

// Uniform double in [0, 1) with 53 random bits.
inline double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be nonzero.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

} // namespace qdb
