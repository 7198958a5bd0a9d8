#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/core/rational.hpp"
#include "eksr/core/sequence.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace eksr {

enum class ReductionKind {
    Pad,     // append every sign pattern over K fresh variables
    Horn,    // 3-lambda-wide clauses forbidding negated Horn views
    Width,   // split wide clauses into implication chains
    Np3Raw,  // E3-SAT -> {3,4}-SAT reconfiguration gadget
    Np3,     // Np3Raw with its width-4 clauses split down to width 3
    Np4,     // E3-SAT -> E4-SAT reconfiguration gadget
    Npk,     // E3-SAT -> Ek-SAT reconfiguration gadget, k >= 5
};

const char* to_string(ReductionKind kind);

struct ReductionParams {
    std::optional<int> K;
    std::optional<int> Gamma;
    std::optional<int> lambda;
    std::optional<Rational> delta;
    std::optional<long> m1, m2, m3;
    // Horn emulation bookkeeping.
    std::optional<std::size_t> tuples_total;
    std::optional<std::size_t> tuples_disjoint;
    std::optional<Rational> discarded_fraction;
};

// One wide clause split into a chain. sets[i] lists literal positions of the
// source clause forming S_{i+1}; chain variable y_{i+1} is first_fresh + i.
struct WidthBlock {
    std::size_t clause = 0;
    std::vector<std::vector<std::size_t>> sets;
    int first_fresh = 0;
};

struct ReductionOutput {
    ReductionKind kind = ReductionKind::Pad;
    Instance instance;
    std::optional<ReconfSequence> witness;
    std::vector<int> var_map;  // var_map[i-1] = target variable of source x_i
    ReductionParams params;

    // Construction data needed to lift witnesses.
    Formula source;
    std::optional<Instance> source_instance;
    std::vector<WidthBlock> width_blocks;
};

struct HornLimits {
    int width_cap = 12;
    std::size_t tuple_cap = 10'000'000;
    std::size_t clause_cap = 10'000'000;
};

ReductionOutput reduce_pad(const Instance& source, int k_target);
ReductionOutput reduce_horn_emulation(const Instance& source, int lambda, const HornLimits& limits = {});
ReductionOutput reduce_width(const Instance& source, int k_target);

// k_target 3 gives the width-3 composition; use reduce_np3_raw for the
// mixed-width gadget itself.
ReductionOutput reduce_np_gadget(const Formula& source, int k_target, const Rational& delta);
ReductionOutput reduce_np3_raw(const Formula& source, const Rational& delta);

// Np* reductions take a satisfying assignment of the source formula; the
// others take a value-1 reconfiguration sequence between the source
// endpoints. Throws DomainError when the input does not fit the kind or is
// not satisfying.
using WitnessSource = std::variant<Assignment, ReconfSequence>;
ReconfSequence build_witness(const ReductionOutput& reduction, const WitnessSource& source);

}  // namespace eksr
