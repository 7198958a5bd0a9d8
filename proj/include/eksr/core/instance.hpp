#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/sequence.hpp"

#include <string>
#include <string_view>

namespace eksr {

// A formula together with two satisfying endpoint assignments.
class Instance {
public:
    // Throws DomainError if the endpoint lengths differ from the formula's n
    // or either endpoint leaves a clause unsatisfied.
    Instance(Formula formula, Assignment start, Assignment end);

    const Formula& formula() const noexcept { return formula_; }
    const Assignment& start() const noexcept { return start_; }
    const Assignment& end() const noexcept { return end_; }
    int num_vars() const noexcept { return formula_.num_vars(); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Formula formula_;
    Assignment start_;
    Assignment end_;
};

// Instance file format:
//
//   c <comment>                 ignored anywhere
//   p eksr <n> <m> <k>          first non-comment line
//   <k signed literals> 0       exactly m clause lines
//   s <bitstring of length n>
//   t <bitstring of length n>
Instance parse_instance(std::string_view text);

// Header and clause lines only; any s/t lines are read but not required and
// not checked for satisfaction. Used for formula-only sources.
Formula parse_formula(std::string_view text);

// Requires an exact-width formula. Output carries no comments.
std::string serialize_instance(const Instance& inst);
std::string serialize_formula(const Formula& f);

struct SequenceCheck {
    bool valid = false;
    std::optional<Rational> value;  // set when valid
    std::string reason;             // set when invalid
};

SequenceCheck check_sequence(const Instance& inst, const ReconfSequence& s);

}  // namespace eksr
