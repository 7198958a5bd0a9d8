#include "detail.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

ReductionOutput reduce_horn_emulation(const Instance& source, int lambda, const HornLimits& limits) {
    const Formula& f = source.formula();
    if (f.width() != 3) throw DomainError("Horn emulation needs a width-3 source");
    if (lambda < 2) throw DomainError("lambda must be at least 2");
    const int width = 3 * lambda;
    if (width > limits.width_cap)
        throw CapExceeded("clause width " + std::to_string(width) + " exceeds the cap of " +
                          std::to_string(limits.width_cap));
    const std::size_t m = f.num_clauses();
    std::size_t total = 1;
    for (int i = 0; i < lambda; ++i) {
        if (total > limits.tuple_cap / m) throw CapExceeded("too many clause tuples to enumerate");
        total *= m;
    }

    std::vector<Clause> out;
    std::size_t disjoint = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(lambda), 0);
    for (std::size_t t = 0; t < total; ++t) {
        // Decode t into (i_1, ..., i_lambda), i_1 most significant, so tuples
        // come out in lexicographic order.
        for (std::size_t r = t, p = idx.size(); p-- > 0; r /= m) idx[p] = r % m;

        bool ok = true;
        for (std::size_t a = 0; a < idx.size() && ok; ++a)
            for (std::size_t b = a + 1; b < idx.size() && ok; ++b)
                ok = !f.clause(idx[a]).shares_var_with(f.clause(idx[b]));
        if (!ok) continue;
        ++disjoint;

        // Views with C_{i_1} false and every other clause true: the first
        // clause has one falsifying view, each other clause 7 satisfying ones.
        std::size_t views = 1;
        for (int i = 1; i < lambda; ++i) views *= 7;
        if (out.size() + views > limits.clause_cap) throw CapExceeded("too many emitted clauses");
        std::vector<unsigned> local(static_cast<std::size_t>(lambda - 1), 0);
        for (std::size_t v = 0; v < views; ++v) {
            for (std::size_t r = v, p = local.size(); p-- > 0; r /= 7) local[p] = static_cast<unsigned>(r % 7);
            std::vector<Literal> lits;
            // Forbidding a view means requiring some variable to differ from
            // it: a positive literal where the view has 0.
            for (const auto& l : f.clause(idx[0]).literals()) {
                bool view_value = l.negated;  // the value falsifying l
                lits.push_back({l.var, view_value});
            }
            for (std::size_t p = 1; p < idx.size(); ++p) {
                const Clause& c = f.clause(idx[p]);
                // Satisfying views of a 3-clause, enumerated as codes 1..7 over
                // "literal i is true" bits.
                unsigned code = local[p - 1] + 1;
                for (std::size_t i = 0; i < 3; ++i) {
                    bool lit_true = ((code >> i) & 1U) != 0;
                    bool view_value = lit_true != c[i].negated;
                    lits.push_back({c[i].var, view_value});
                }
            }
            out.emplace_back(std::move(lits));
        }
    }
    if (disjoint == 0) throw DomainError("no tuple of pairwise variable-disjoint clauses exists");

    Instance inst(Formula(f.num_vars(), width, std::move(out)), source.start(), source.end());
    auto r = detail::make_output(ReductionKind::Horn, std::move(inst), f);
    r.source_instance = source;
    r.params.lambda = lambda;
    r.params.tuples_total = total;
    r.params.tuples_disjoint = disjoint;
    r.params.discarded_fraction = make_rational(static_cast<long>(total - disjoint), static_cast<long>(total));
    r.var_map = detail::identity_map(f.num_vars());
    return r;
}

}  // namespace eksr
