#include "eksr/approx/survival.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

const Rational& SurvivalCache::get(PhaseState s) {
    if (s.c < 0 || s.a < 0 || s.b < 0) throw DomainError("phase state counts must be non-negative");
    auto key = std::make_tuple(s.c, s.a, s.b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Rational r;
    if (s.c == 0) {
        r = 0;
    } else if (s.a == 0) {
        // Nothing can lower the count any more.
        r = 1;
    } else {
        Rational down = get({s.c - 1, s.a - 1, s.b});
        Rational up = s.b > 0 ? get({s.c + 1, s.a, s.b - 1}) : Rational(0);
        r = (Rational(s.a) * down + Rational(s.b) * up) / (s.a + s.b);
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

Rational phase_survival(PhaseState s) {
    SurvivalCache cache;
    return cache.get(s);
}

Rational phase_survival(PhaseState s, SurvivalCache& cache) { return cache.get(s); }

PhaseState phase_state(const Clause& clause, const Assignment& from, const Assignment& to) {
    PhaseState s;
    for (const auto& l : clause.literals()) {
        bool before = l.eval(from), after = l.eval(to);
        if (before) ++s.c;
        if (before && !after) ++s.a;
        if (!before && after) ++s.b;
    }
    return s;
}

Rational clause_survival_given_rho(const Clause& clause, const Assignment& start,
                                   const Assignment& end, const Assignment& rho,
                                   SurvivalCache& cache) {
    const Rational& first = cache.get(phase_state(clause, start, rho));
    if (first == 0) return 0;
    return first * cache.get(phase_state(clause, rho, end));
}

Rational clause_survival_given_rho(const Clause& clause, const Assignment& start,
                                   const Assignment& end, const Assignment& rho) {
    SurvivalCache cache;
    return clause_survival_given_rho(clause, start, end, rho, cache);
}

}  // namespace eksr
