#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/core/random.hpp"
#include "eksr/core/rational.hpp"
#include "eksr/core/sequence.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eksr {

// Entry v-1 holds the fixed value of x_v, or nullopt when undecided.
using PartialAssignment = std::vector<std::optional<bool>>;

// Intermediate assignment rho and the flip orders of both phases.
struct RoundingPlan {
    Assignment rho;
    std::vector<int> phase1_order;  // permutation of diff_vars(start, rho)
    std::vector<int> phase2_order;  // permutation of diff_vars(rho, end)
};

// Walk start -> rho -> end along the plan. Throws DomainError if an order is
// not a permutation of the corresponding difference set.
ReconfSequence realize(const Instance& inst, const RoundingPlan& plan);

// Expected value, over uniform completions of rho and uniform flip orders,
// of the fraction of clauses kept satisfied along the whole walk.
Rational expected_sequence_value(const Instance& inst, const PartialAssignment& rho);

// Draws rho bit by bit (x_1 first, one coin each), then shuffles the phase-1
// difference set, then the phase-2 difference set.
RoundingPlan sample_plan(const Instance& inst, Rng& rng);
ReconfSequence randomized_round(const Instance& inst, std::uint64_t seed);

struct DerandomizeResult {
    RoundingPlan plan;
    ReconfSequence sequence;
    Rational initial_expectation;    // over the unconstrained process
    Rational surviving_fraction;     // clauses satisfied along the whole walk
};

// Conditional expectations: fix rho bits x_1..x_n (ties to 0), then choose
// the phase-1 flips one at a time (ties to the smallest variable), then the
// phase-2 flips likewise. surviving_fraction >= initial_expectation.
// Identical endpoints short-circuit to the one-step sequence.
DerandomizeResult derandomize_trace(const Instance& inst);
ReconfSequence derandomize(const Instance& inst);

}  // namespace eksr
