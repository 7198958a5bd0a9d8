#include "detail.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

namespace {

const Assignment& satisfying(const ReductionOutput& r, const WitnessSource& src) {
    const auto* a = std::get_if<Assignment>(&src);
    if (!a) throw DomainError(std::string(to_string(r.kind)) + " witness needs a satisfying assignment");
    if (a->size() != static_cast<std::size_t>(r.source.num_vars()) ||
        satisfied_count(r.source, *a) != r.source.num_clauses())
        throw DomainError("assignment does not satisfy the source formula");
    return *a;
}

const ReconfSequence& value_one_path(const ReductionOutput& r, const WitnessSource& src) {
    const auto* s = std::get_if<ReconfSequence>(&src);
    if (!s) throw DomainError(std::string(to_string(r.kind)) + " witness needs a value-1 source sequence");
    auto check = check_sequence(*r.source_instance, *s);
    if (!check.valid) throw DomainError("source sequence is invalid: " + check.reason);
    if (*check.value != 1) throw DomainError("source sequence does not keep every clause satisfied");
    return *s;
}

// Flip the source variables from their values in `from` to those in `to`,
// in increasing variable order.
void walk_x(ReconfSequence& s, const Assignment& from, const Assignment& to) {
    for (int v : diff_vars(from, to)) s.push_flip(v);
}

// x: start -> a*, then the gadget flips, then x: a* -> end.
ReconfSequence gadget_walk(const ReductionOutput& r, const Assignment& sat, const std::vector<int>& middle) {
    const auto n = sat.size();
    const Instance& inst = r.instance;
    ReconfSequence s(inst.start());
    walk_x(s, inst.start().slice(1, n), sat);
    for (int v : middle) s.push_flip(v);
    walk_x(s, sat, inst.end().slice(1, n));
    return s;
}

}  // namespace

ReconfSequence build_witness(const ReductionOutput& r, const WitnessSource& src) {
    const int n = r.source.num_vars();
    switch (r.kind) {
    case ReductionKind::Pad: {
        const auto& path = value_one_path(r, src);
        const auto pad = static_cast<std::size_t>(r.instance.num_vars() - n);
        std::vector<Assignment> steps;
        for (const auto& a : path.steps()) steps.push_back(a.concat(Assignment(pad)));
        return ReconfSequence(std::move(steps));
    }
    case ReductionKind::Horn:
        // A value-1 source path satisfies every C_{i_1}, so no emitted clause
        // can be violated along it.
        return value_one_path(r, src);
    case ReductionKind::Width:
        return detail::lift_path(r.source, r.width_blocks, r.instance.num_vars(), value_one_path(r, src));
    case ReductionKind::Np3Raw:
        // (y,z1,z2): (1,1,1) -> (0,1,1) -> (0,0,1) -> (0,0,0) -> (1,0,0)
        return gadget_walk(r, satisfying(r, src), {n + 1, n + 2, n + 3, n + 1});
    case ReductionKind::Np3: {
        auto raw = reduce_np3_raw(r.source, *r.params.delta);
        auto raw_path = build_witness(raw, src);
        return detail::lift_path(raw.instance.formula(), r.width_blocks, r.instance.num_vars(), raw_path);
    }
    case ReductionKind::Np4:
        // (y,z1,z2,z3): 1111 -> 0111 -> 0011 -> 0001 -> 0000 -> 1000
        return gadget_walk(r, satisfying(r, src), {n + 1, n + 2, n + 3, n + 4, n + 1});
    case ReductionKind::Npk: {
        std::vector<int> ys;
        for (int i = 1; i <= *r.params.K; ++i) ys.push_back(n + i);
        return gadget_walk(r, satisfying(r, src), ys);
    }
    }
    throw DomainError("unknown reduction kind");
}

}  // namespace eksr
