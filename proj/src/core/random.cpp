#include "eksr/core/random.hpp"

#include "eksr/core/error.hpp"

#include <limits>

namespace eksr {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("uniform_below: bound must be positive");
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace eksr
