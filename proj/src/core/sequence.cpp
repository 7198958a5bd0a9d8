#include "eksr/core/sequence.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>

namespace eksr {

void ReconfSequence::push_flip(int var) {
    if (steps_.empty()) throw DomainError("push_flip on an empty sequence");
    Assignment next = steps_.back();
    next.flip(var);
    steps_.push_back(std::move(next));
}

void ReconfSequence::append(const ReconfSequence& tail) {
    if (tail.empty()) return;
    if (steps_.empty()) {
        steps_ = tail.steps_;
        return;
    }
    if (tail.front() != back()) throw DomainError("appended sequence does not continue from the last step");
    steps_.insert(steps_.end(), tail.steps_.begin() + 1, tail.steps_.end());
}

std::optional<std::size_t> ReconfSequence::adjacency_violation() const {
    for (std::size_t i = 1; i < steps_.size(); ++i)
        if (steps_[i].size() != steps_[i - 1].size() || hamming(steps_[i - 1], steps_[i]) > 1)
            return i;
    return std::nullopt;
}

std::vector<int> ReconfSequence::flips() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < steps_.size(); ++i)
        for (int v : diff_vars(steps_[i - 1], steps_[i])) out.push_back(v);
    return out;
}

Rational seq_value(const Formula& f, const ReconfSequence& s) {
    if (s.empty()) throw DomainError("empty reconfiguration sequence");
    if (auto bad = s.adjacency_violation())
        throw DomainError("steps " + std::to_string(*bad) + " and " + std::to_string(*bad + 1) +
                          " differ in more than one variable");
    std::size_t worst = f.num_clauses();
    for (const auto& a : s.steps()) worst = std::min(worst, satisfied_count(f, a));
    return make_rational(static_cast<long>(worst), static_cast<long>(f.num_clauses()));
}

IrredundantSequences::IrredundantSequences(Assignment start, Assignment end, std::size_t cap)
    : start_(std::move(start)), order_(diff_vars(start_, end)) {
    if (order_.size() > cap)
        throw CapExceeded(std::to_string(order_.size()) + " differing variables exceed the cap of " +
                          std::to_string(cap));
}

std::optional<ReconfSequence> IrredundantSequences::next() {
    if (done_) return std::nullopt;
    ReconfSequence s(start_);
    for (int v : order_) s.push_flip(v);
    done_ = !std::next_permutation(order_.begin(), order_.end());
    return s;
}

}  // namespace eksr
