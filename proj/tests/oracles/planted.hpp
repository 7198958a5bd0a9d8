#pragma once

// Small planted instances for tests, built without the CLI generator.

#include "eksr/core/instance.hpp"
#include "eksr/core/random.hpp"

namespace oracle {

inline eksr::Instance planted(int n, int m, int k, std::uint64_t seed, const eksr::Assignment& s,
                              const eksr::Assignment& t) {
    eksr::Rng rng(seed);
    std::vector<eksr::Clause> clauses;
    while (static_cast<int>(clauses.size()) < m) {
        std::vector<int> vars(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
        eksr::shuffle(vars, rng);
        std::vector<eksr::Literal> lits;
        for (int i = 0; i < k; ++i) lits.push_back({vars[static_cast<std::size_t>(i)], eksr::coin(rng)});
        eksr::Clause c(std::move(lits));
        if (c.satisfied_by(s) && c.satisfied_by(t)) clauses.push_back(std::move(c));
    }
    return eksr::Instance(eksr::Formula(n, k, std::move(clauses)), s, t);
}

inline eksr::Instance planted(int n, int m, int k, std::uint64_t seed) {
    return planted(n, m, k, seed, eksr::Assignment(static_cast<std::size_t>(n)),
                   eksr::Assignment(static_cast<std::size_t>(n), true));
}

}  // namespace oracle
