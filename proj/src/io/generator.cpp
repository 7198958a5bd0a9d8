#include "eksr/io/generator.hpp"

#include "eksr/core/error.hpp"
#include "eksr/core/random.hpp"

#include <numeric>

namespace eksr {

Instance gen_random_instance(const PlantedGenerator& gen) {
    if (gen.k < 1 || gen.k > gen.n) throw DomainError("generator needs 1 <= k <= n");
    if (gen.m < 1) throw DomainError("generator needs m >= 1");
    const auto n = static_cast<std::size_t>(gen.n);
    const Assignment s = gen.start.size() == 0 ? Assignment(n, false) : gen.start;
    const Assignment t = gen.end.size() == 0 ? Assignment(n, true) : gen.end;
    if (s.size() != n || t.size() != n) throw DomainError("planted assignments must have length n");

    Rng rng(gen.seed);
    std::vector<int> vars(n);
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(gen.m));
    while (clauses.size() < static_cast<std::size_t>(gen.m)) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < PlantedGenerator::attempt_cap && !placed; ++attempt) {
            std::iota(vars.begin(), vars.end(), 1);
            std::vector<Literal> lits;
            for (std::size_t i = 0; i < static_cast<std::size_t>(gen.k); ++i) {
                const auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
                std::swap(vars[i], vars[j]);
            }
            for (std::size_t i = 0; i < static_cast<std::size_t>(gen.k); ++i) lits.push_back({vars[i], coin(rng)});
            Clause c(std::move(lits));
            if (c.satisfied_by(s) && c.satisfied_by(t)) {
                clauses.push_back(std::move(c));
                placed = true;
            }
        }
        if (!placed) throw CapExceeded("no clause satisfying both planted assignments after " +
                                       std::to_string(PlantedGenerator::attempt_cap) + " draws");
    }
    return Instance(Formula(gen.n, gen.k, std::move(clauses)), s, t);
}

}  // namespace eksr
