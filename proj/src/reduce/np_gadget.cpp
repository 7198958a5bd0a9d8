#include "detail.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

namespace {

void check_source(const Formula& f, const Rational& delta) {
    if (f.width() != 3) throw DomainError("gadget reductions need a width-3 source");
    if (delta <= 0 || delta > 1) throw DomainError("delta must lie in (0, 1]");
}

long copies(const Formula& f, const Rational& delta) {
    return ceil(delta * static_cast<unsigned long>(f.num_clauses())).get_si();
}

// C_j v y for every source clause, then `guards` copied `count` times each.
std::vector<Clause> guarded(const Formula& f, int y, const std::vector<Clause>& guards, long count) {
    std::vector<Clause> out;
    for (const auto& c : f.clauses()) {
        Literal ly{y, false};
        out.push_back(c.extended(std::span<const Literal>(&ly, 1)));
    }
    for (const auto& g : guards)
        for (long i = 0; i < count; ++i) out.push_back(g);
    return out;
}

Assignment starting(int n, std::initializer_list<int> tail) {
    Assignment a(static_cast<std::size_t>(n), true);
    Assignment t(tail.size());
    int i = 1;
    for (int b : tail) t.set(i++, b != 0);
    return a.concat(t);
}

Assignment ending(int n, std::initializer_list<int> tail) {
    Assignment a(static_cast<std::size_t>(n), false);
    Assignment t(tail.size());
    int i = 1;
    for (int b : tail) t.set(i++, b != 0);
    return a.concat(t);
}

}  // namespace

ReductionOutput reduce_np3_raw(const Formula& source, const Rational& delta) {
    check_source(source, delta);
    const int n = source.num_vars();
    const int y = n + 1, z1 = n + 2, z2 = n + 3;
    const long c = copies(source, delta);
    auto clauses = guarded(source, y, {Clause{-y, z1, -z2}, Clause{-y, -z1, z2}}, c);
    Instance inst(Formula::mixed(n + 3, std::move(clauses)), starting(n, {1, 1, 1}), ending(n, {1, 0, 0}));
    auto r = detail::make_output(ReductionKind::Np3Raw, std::move(inst), source);
    r.params.delta = delta;
    r.params.m1 = c;
    r.params.m2 = c;
    r.var_map = detail::identity_map(n);
    return r;
}

ReductionOutput reduce_np_gadget(const Formula& source, int k_target, const Rational& delta) {
    if (k_target < 3) throw DomainError("target width must be at least 3");
    const int n = source.num_vars();

    if (k_target == 3) {
        auto raw = reduce_np3_raw(source, delta);
        const Formula& rf = raw.instance.formula();
        auto split = detail::split_wide_clauses(rf, 3);
        const int total = split.formula.num_vars();
        Formula out(total, 3, split.formula.clauses());
        auto start = detail::lift_assignment(rf, split.blocks, total, raw.instance.start());
        auto end = detail::lift_assignment(rf, split.blocks, total, raw.instance.end());
        auto r = detail::make_output(ReductionKind::Np3, Instance(std::move(out), start, end), source);
        r.params = raw.params;
        r.params.Gamma = 4;
        r.var_map = raw.var_map;
        r.width_blocks = std::move(split.blocks);
        return r;
    }

    if (k_target == 4) {
        check_source(source, delta);
        const int y = n + 1, z1 = n + 2, z2 = n + 3, z3 = n + 4;
        const long c = copies(source, delta);
        // Each guard forbids one of (1,0,1,1), (1,1,0,1), (1,1,1,0) on (y,z1,z2,z3).
        auto clauses = guarded(source, y,
                               {Clause{-y, z1, -z2, -z3}, Clause{-y, -z1, z2, -z3}, Clause{-y, -z1, -z2, z3}}, c);
        Instance inst(Formula(n + 4, 4, std::move(clauses)), starting(n, {1, 1, 1, 1}), ending(n, {1, 0, 0, 0}));
        auto r = detail::make_output(ReductionKind::Np4, std::move(inst), source);
        r.params.delta = delta;
        r.params.m1 = c;
        r.params.m2 = c;
        r.params.m3 = c;
        r.var_map = detail::identity_map(n);
        return r;
    }

    if (source.width() != 3) throw DomainError("gadget reductions need a width-3 source");
    const int K = k_target - 3;
    std::vector<Clause> clauses;
    for (const auto& c : source.clauses())
        for (int i = 1; i <= K; ++i) {
            std::vector<Literal> h;
            for (int t = 1; t <= K; ++t) h.push_back({n + t, t != i});
            clauses.push_back(c.extended(h));
        }
    const auto total = static_cast<std::size_t>(n + K);
    Instance inst(Formula(n + K, k_target, std::move(clauses)), Assignment(total, true), Assignment(total, false));
    auto r = detail::make_output(ReductionKind::Npk, std::move(inst), source);
    r.params.K = K;
    r.params.delta = delta;
    r.var_map = detail::identity_map(n);
    return r;
}

}  // namespace eksr
