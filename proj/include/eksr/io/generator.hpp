#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/instance.hpp"

#include <cstddef>
#include <cstdint>

namespace eksr {

// Random width-k instance whose clauses are all satisfied by two planted
// assignments, which become the endpoints.
struct PlantedGenerator {
    static constexpr std::size_t attempt_cap = 1'000'000;

    int n = 0;
    int m = 0;
    int k = 0;
    std::uint64_t seed = 0;
    Assignment start;  // defaults to 0^n when empty
    Assignment end;    // defaults to 1^n when empty
};

// Each clause: k distinct variables by a partial Fisher-Yates over 1..n
// (positions drawn front to back), then one coin per literal for its sign;
// redrawn until both plants satisfy it. Throws DomainError unless
// 1 <= k <= n and m >= 1, and CapExceeded after attempt_cap failed draws
// for one clause.
Instance gen_random_instance(const PlantedGenerator& gen);

}  // namespace eksr
