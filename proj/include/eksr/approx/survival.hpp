#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/rational.hpp"

#include <map>
#include <tuple>

namespace eksr {

// Clause-local view of one phase of the rounding walk: c literals are
// currently true, a pending flips will turn a true literal false and b
// pending flips will turn a false literal true.
struct PhaseState {
    int c = 0;
    int a = 0;
    int b = 0;

    friend auto operator<=>(const PhaseState&, const PhaseState&) = default;
};

// Memo table for phase_survival. Owned by the caller; not thread-safe.
class SurvivalCache {
public:
    const Rational& get(PhaseState s);
    std::size_t size() const noexcept { return memo_.size(); }

private:
    std::map<std::tuple<int, int, int>, Rational> memo_;
};

// Probability that the running count, started at c and driven by a uniform
// interleaving of a decrements and b increments, never reaches 0.
Rational phase_survival(PhaseState s);
Rational phase_survival(PhaseState s, SurvivalCache& cache);

// Phase state of `clause` for a walk from `from` to `to`.
PhaseState phase_state(const Clause& clause, const Assignment& from, const Assignment& to);

// Probability that a uniformly random irredundant walk start -> rho -> end
// keeps the clause satisfied at every step.
Rational clause_survival_given_rho(const Clause& clause, const Assignment& start,
                                   const Assignment& end, const Assignment& rho);
Rational clause_survival_given_rho(const Clause& clause, const Assignment& start,
                                   const Assignment& end, const Assignment& rho,
                                   SurvivalCache& cache);

}  // namespace eksr
