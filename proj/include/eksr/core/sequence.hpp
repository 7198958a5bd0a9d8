#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eksr {

// A list of assignments. Adjacency (Hamming distance <= 1 between
// neighbours) is checked by the operations that rely on it rather than at
// construction, so that invalid candidate sequences can be reported.
class ReconfSequence {
public:
    ReconfSequence() = default;
    explicit ReconfSequence(std::vector<Assignment> steps) : steps_(std::move(steps)) {}
    explicit ReconfSequence(Assignment start) { steps_.push_back(std::move(start)); }

    const std::vector<Assignment>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    const Assignment& front() const { return steps_.front(); }
    const Assignment& back() const { return steps_.back(); }

    // Append the assignment obtained by flipping `var` in the last step.
    void push_flip(int var);
    void push(Assignment a) { steps_.push_back(std::move(a)); }
    // Append `tail` minus its first element, which must equal back().
    void append(const ReconfSequence& tail);

    // Index of the first step whose predecessor differs by more than one bit.
    std::optional<std::size_t> adjacency_violation() const;

    // Variables flipped between consecutive steps, in order; repeated
    // (unchanged) steps contribute nothing.
    std::vector<int> flips() const;

    friend bool operator==(const ReconfSequence&, const ReconfSequence&) = default;

private:
    std::vector<Assignment> steps_;
};

// Min over steps of value(). Throws DomainError if empty or non-adjacent.
Rational seq_value(const Formula& f, const ReconfSequence& s);

// Irredundant sequences from start to end: one per ordering of the differing
// variables, in lexicographic order of the flip permutation.
class IrredundantSequences {
public:
    static constexpr std::size_t default_cap = 8;

    // Throws CapExceeded if more than `cap` variables differ.
    IrredundantSequences(Assignment start, Assignment end, std::size_t cap = default_cap);

    std::optional<ReconfSequence> next();
    const std::vector<int>& diff() const noexcept { return order_; }

private:
    Assignment start_;
    std::vector<int> order_;
    bool done_ = false;
};

}  // namespace eksr
