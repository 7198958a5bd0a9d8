#include "detail.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

ReductionOutput reduce_pad(const Instance& source, int k_target) {
    const Formula& f = source.formula();
    if (f.width() != 3) throw DomainError("padding needs a width-3 source");
    if (k_target < 4) throw DomainError("padding needs a target width of at least 4");
    const int K = k_target - 3;
    if (K > 20) throw CapExceeded("too many padding variables");
    const int n = f.num_vars();

    std::vector<Clause> clauses;
    clauses.reserve(f.num_clauses() << K);
    for (const auto& c : f.clauses())
        for (unsigned pattern = 0; pattern < (1U << K); ++pattern) {
            std::vector<Literal> ys;
            for (int i = 0; i < K; ++i) ys.push_back({n + 1 + i, ((pattern >> i) & 1U) != 0});
            clauses.push_back(c.extended(ys));
        }

    Assignment zeros(static_cast<std::size_t>(K));
    Instance out(Formula(n + K, k_target, std::move(clauses)), source.start().concat(zeros),
                 source.end().concat(zeros));
    auto r = detail::make_output(ReductionKind::Pad, std::move(out), f);
    r.source_instance = source;
    r.params.K = K;
    r.var_map = detail::identity_map(n);
    return r;
}

}  // namespace eksr
