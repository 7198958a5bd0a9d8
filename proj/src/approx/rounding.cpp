#include "eksr/approx/rounding.hpp"

#include "eksr/approx/survival.hpp"
#include "eksr/core/error.hpp"

#include <algorithm>

namespace eksr {

namespace {

void check_order(std::vector<int> order, const std::vector<int>& diff, const char* phase) {
    std::sort(order.begin(), order.end());
    if (order != diff)
        throw DomainError(std::string(phase) + " order is not a permutation of the differing variables");
}

void check_partial(const Instance& inst, const PartialAssignment& rho) {
    if (rho.size() != static_cast<std::size_t>(inst.num_vars()))
        throw DomainError("partial assignment length does not match the variable count");
}

// Survival probability of one clause for every restriction of rho to the
// clause's variables; bit i of the index is the value of the i-th literal's
// variable.
class ClauseTable {
public:
    ClauseTable(const Clause& clause, const Assignment& start, const Assignment& end,
                SurvivalCache& cache)
        : clause_(&clause) {
        const auto w = clause.width();
        if (w > 20) throw CapExceeded("clause width too large for survival tables");
        table_.resize(std::size_t{1} << w);
        for (std::size_t mask = 0; mask < table_.size(); ++mask) {
            PhaseState p1, p2;
            for (std::size_t i = 0; i < w; ++i) {
                const Literal& l = clause[i];
                bool s = l.eval(start), e = l.eval(end);
                bool r = (((mask >> i) & 1U) != 0) != l.negated;
                if (s) ++p1.c;
                if (s && !r) ++p1.a;
                if (!s && r) ++p1.b;
                if (r) ++p2.c;
                if (r && !e) ++p2.a;
                if (!r && e) ++p2.b;
            }
            const Rational& f = cache.get(p1);
            table_[mask] = f == 0 ? Rational(0) : f * cache.get(p2);
        }
    }

    // Average over the completions of the undecided clause variables.
    Rational average(const PartialAssignment& rho) const {
        std::size_t fixed = 0, free = 0;
        for (std::size_t i = 0; i < clause_->width(); ++i) {
            const auto& bit = rho[static_cast<std::size_t>((*clause_)[i].var - 1)];
            if (!bit)
                free |= std::size_t{1} << i;
            else if (*bit)
                fixed |= std::size_t{1} << i;
        }
        Rational sum = 0;
        std::size_t count = 0;
        for (std::size_t sub = free;; sub = (sub - 1) & free) {
            sum += table_[fixed | sub];
            ++count;
            if (sub == 0) break;
        }
        return sum / static_cast<unsigned long>(count);
    }

private:
    const Clause* clause_;
    std::vector<Rational> table_;
};

std::vector<ClauseTable> build_tables(const Instance& inst, SurvivalCache& cache) {
    std::vector<ClauseTable> tables;
    tables.reserve(inst.formula().num_clauses());
    for (const auto& c : inst.formula().clauses()) tables.emplace_back(c, inst.start(), inst.end(), cache);
    return tables;
}

std::size_t literal_index(const Clause& c, int var) {
    for (std::size_t i = 0; i < c.width(); ++i)
        if (c[i].var == var) return i;
    return c.width();
}

// Greedy flip ordering for one phase from `from` to `to`. weight[j] scales
// clause j's phase survival (the other phase's contribution); alive[j] is
// updated in place.
std::vector<int> order_phase(const Formula& f, const Assignment& from, const Assignment& to,
                             const std::vector<Rational>& weight, std::vector<bool>& alive,
                             const std::vector<std::vector<std::size_t>>& occ, SurvivalCache& cache) {
    const auto m = f.num_clauses();
    std::vector<PhaseState> state(m);
    for (std::size_t j = 0; j < m; ++j) state[j] = phase_state(f.clause(j), from, to);

    Assignment cur = from;
    std::vector<int> pending = diff_vars(from, to);
    std::vector<int> order;
    order.reserve(pending.size());

    auto after_flip = [&](std::size_t j, int v) {
        PhaseState s = state[j];
        const Literal& l = f.clause(j)[literal_index(f.clause(j), v)];
        if (l.eval(cur)) {
            --s.c;
            --s.a;
        } else {
            ++s.c;
            --s.b;
        }
        return s;
    };

    while (!pending.empty()) {
        std::size_t best = 0;
        Rational best_gain;
        for (std::size_t p = 0; p < pending.size(); ++p) {
            int v = pending[p];
            Rational gain = 0;
            for (std::size_t j : occ[static_cast<std::size_t>(v)]) {
                if (!alive[j] || weight[j] == 0) continue;
                gain += weight[j] * (cache.get(after_flip(j, v)) - cache.get(state[j]));
            }
            if (p == 0 || gain > best_gain) {
                best = p;
                best_gain = gain;
            }
        }
        int v = pending[best];
        for (std::size_t j : occ[static_cast<std::size_t>(v)]) {
            state[j] = after_flip(j, v);
            if (state[j].c == 0) alive[j] = false;
        }
        cur.flip(v);
        order.push_back(v);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return order;
}

}  // namespace

ReconfSequence realize(const Instance& inst, const RoundingPlan& plan) {
    if (plan.rho.size() != static_cast<std::size_t>(inst.num_vars()))
        throw DomainError("rho length does not match the variable count");
    check_order(plan.phase1_order, diff_vars(inst.start(), plan.rho), "phase-1");
    check_order(plan.phase2_order, diff_vars(plan.rho, inst.end()), "phase-2");
    ReconfSequence s(inst.start());
    for (int v : plan.phase1_order) s.push_flip(v);
    for (int v : plan.phase2_order) s.push_flip(v);
    return s;
}

Rational expected_sequence_value(const Instance& inst, const PartialAssignment& rho) {
    check_partial(inst, rho);
    SurvivalCache cache;
    Rational sum = 0;
    for (const auto& t : build_tables(inst, cache)) sum += t.average(rho);
    return sum / static_cast<unsigned long>(inst.formula().num_clauses());
}

RoundingPlan sample_plan(const Instance& inst, Rng& rng) {
    RoundingPlan plan{Assignment(static_cast<std::size_t>(inst.num_vars())), {}, {}};
    for (int v = 1; v <= inst.num_vars(); ++v) plan.rho.set(v, coin(rng));
    plan.phase1_order = diff_vars(inst.start(), plan.rho);
    shuffle(plan.phase1_order, rng);
    plan.phase2_order = diff_vars(plan.rho, inst.end());
    shuffle(plan.phase2_order, rng);
    return plan;
}

ReconfSequence randomized_round(const Instance& inst, std::uint64_t seed) {
    Rng rng(seed);
    return realize(inst, sample_plan(inst, rng));
}

DerandomizeResult derandomize_trace(const Instance& inst) {
    const Formula& f = inst.formula();
    const auto n = static_cast<std::size_t>(inst.num_vars());
    const auto m = f.num_clauses();
    const auto occ = f.occurrences();
    SurvivalCache cache;
    const auto tables = build_tables(inst, cache);

    PartialAssignment partial(n);
    Rational initial = 0;
    for (const auto& t : tables) initial += t.average(partial);
    initial /= static_cast<unsigned long>(m);

    // rho = start is already optimal here; the bitwise greedy could tie
    // its way to a longer walk of the same value.
    if (inst.start() == inst.end()) {
        RoundingPlan plan{inst.start(), {}, {}};
        return {plan, ReconfSequence(inst.start()), initial, Rational(1)};
    }

    // Stage 1: rho. Only clauses mentioning x_v change with its value.
    Assignment rho(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational score[2];
        for (int b = 0; b < 2; ++b) {
            partial[i] = b == 1;
            for (std::size_t j : occ[i + 1]) score[b] += tables[j].average(partial);
        }
        bool bit = score[1] > score[0];
        partial[i] = bit;
        rho.set(static_cast<int>(i) + 1, bit);
    }

    // Stage 2: phase-1 order, each clause weighted by its fixed phase-2 survival.
    std::vector<bool> alive(m);
    std::vector<Rational> weight(m);
    for (std::size_t j = 0; j < m; ++j) {
        alive[j] = true;
        weight[j] = cache.get(phase_state(f.clause(j), rho, inst.end()));
    }
    auto order1 = order_phase(f, inst.start(), rho, weight, alive, occ, cache);

    // Stage 3: phase-2 order; phase-1 outcomes are now certain.
    for (std::size_t j = 0; j < m; ++j) weight[j] = alive[j] ? 1 : 0;
    auto order2 = order_phase(f, rho, inst.end(), weight, alive, occ, cache);

    auto survivors = static_cast<long>(std::count(alive.begin(), alive.end(), true));
    RoundingPlan plan{rho, std::move(order1), std::move(order2)};
    ReconfSequence seq = realize(inst, plan);
    return {std::move(plan), std::move(seq), initial, make_rational(survivors, static_cast<long>(m))};
}

ReconfSequence derandomize(const Instance& inst) { return derandomize_trace(inst).sequence; }

}  // namespace eksr
