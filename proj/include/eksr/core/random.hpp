#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eksr {

// All seeded randomness goes through std::mt19937_64, whose output sequence
// is fixed by the C++ standard. Bounded draws use rejection sampling on the
// raw 64-bit output instead of std::uniform_int_distribution, whose mapping
// is implementation-defined, so fixtures reproduce across toolchains.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Requires bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

bool coin(Rng& rng);

// Fisher-Yates, drawing j uniformly from [0, i] for i = size-1 .. 1.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace eksr
