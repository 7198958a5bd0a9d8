#include "detail.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>

namespace eksr {
namespace detail {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// S_1..S_Gamma over literal positions 0..L-1: consecutive runs of w, the last
// run aligned to the end, then S_1 and S_Gamma each topped up with the
// lowest position they do not yet hold.
std::vector<std::vector<std::size_t>> make_sets(int L, int w) {
    const int gamma = ceil_div(L, w);
    std::vector<std::vector<std::size_t>> sets(static_cast<std::size_t>(gamma));
    for (int i = 0; i < gamma; ++i) {
        int first = i + 1 < gamma ? i * w : L - w;
        for (int p = first; p < first + w; ++p) sets[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(p));
    }
    for (auto* s : {&sets.front(), &sets.back()}) {
        std::size_t p = 0;
        while (std::find(s->begin(), s->end(), p) != s->end()) ++p;
        s->push_back(p);
    }
    return sets;
}

// Index (0-based) of the first set holding a literal true under a, or -1.
int first_true_set(const Clause& c, const WidthBlock& b, const Assignment& a) {
    for (std::size_t i = 0; i < b.sets.size(); ++i)
        for (std::size_t p : b.sets[i])
            if (c[p].eval(a)) return static_cast<int>(i);
    return -1;
}

// First set holding a literal true under both a and a2.
int first_common_set(const Clause& c, const WidthBlock& b, const Assignment& a, const Assignment& a2) {
    for (std::size_t i = 0; i < b.sets.size(); ++i)
        for (std::size_t p : b.sets[i])
            if (c[p].eval(a) && c[p].eval(a2)) return static_cast<int>(i);
    return -1;
}

}  // namespace

WidthSplit split_wide_clauses(const Formula& f, int k_target) {
    if (k_target < 3) throw DomainError("target width must be at least 3");
    const int w = k_target - 2;
    int next_var = f.num_vars() + 1;
    std::vector<Clause> out;
    std::vector<WidthBlock> blocks;
    for (std::size_t j = 0; j < f.num_clauses(); ++j) {
        const Clause& c = f.clause(j);
        const int L = static_cast<int>(c.width());
        if (L == k_target) {
            out.push_back(c);
            continue;
        }
        if (L < k_target)
            throw DomainError("clause " + std::to_string(j + 1) + " is narrower than the target width");
        WidthBlock b{j, make_sets(L, w), next_var};
        const int gamma = static_cast<int>(b.sets.size());
        next_var += gamma - 1;
        auto y = [&](int i) { return b.first_fresh + i - 1; };  // y_1..y_{Gamma-1}
        for (int i = 1; i <= gamma; ++i) {
            std::vector<Literal> lits;
            if (i < gamma) lits.push_back({y(i), true});
            if (i > 1) lits.push_back({y(i - 1), false});
            for (std::size_t p : b.sets[static_cast<std::size_t>(i - 1)]) lits.push_back(c[p]);
            out.emplace_back(std::move(lits));
        }
        blocks.push_back(std::move(b));
    }
    return {Formula::mixed(next_var - 1, std::move(out)), std::move(blocks)};
}

Assignment lift_assignment(const Formula& f, const std::vector<WidthBlock>& blocks, int total_vars,
                           const Assignment& a) {
    Assignment out = a.concat(Assignment(static_cast<std::size_t>(total_vars) - a.size()));
    for (const auto& b : blocks) {
        int t = first_true_set(f.clause(b.clause), b, a);
        if (t < 0) throw DomainError("assignment does not satisfy source clause " + std::to_string(b.clause + 1));
        // y_i (1-based) is on iff i >= t+1.
        for (int i = t + 1; i < static_cast<int>(b.sets.size()); ++i) out.set(b.first_fresh + i - 1, true);
    }
    return out;
}

ReconfSequence lift_path(const Formula& f, const std::vector<WidthBlock>& blocks, int total_vars,
                         const ReconfSequence& path) {
    const auto n = path.front().size();
    ReconfSequence out(lift_assignment(f, blocks, total_vars, path.front()));
    std::vector<int> threshold(blocks.size());  // 0-based set index
    std::vector<std::vector<std::size_t>> blocks_of(n + 1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& b = blocks[bi];
        threshold[bi] = first_true_set(f.clause(b.clause), b, path.front());
        for (const auto& l : f.clause(b.clause).literals()) blocks_of[static_cast<std::size_t>(l.var)].push_back(bi);
    }

    // Lowering switches y_c..y_{a-1} on in increasing order; raising switches
    // y_{c-1}..y_a off in decreasing order. Every intermediate pattern keeps
    // the chain satisfied as long as S_a and S_c both hold a true literal.
    auto move = [&](std::size_t bi, int target) {
        const auto& b = blocks[bi];
        int a = threshold[bi];
        for (int i = target; i < a; ++i) out.push_flip(b.first_fresh + i);
        for (int i = target - 1; i >= a; --i) out.push_flip(b.first_fresh + i);
        threshold[bi] = target;
    };

    Assignment cur = path.front();
    for (std::size_t s = 1; s < path.length(); ++s) {
        const Assignment& next = path.steps()[s];
        for (int v : diff_vars(cur, next)) {
            Assignment after = cur;
            after.flip(v);
            for (std::size_t bi : blocks_of[static_cast<std::size_t>(v)]) {
                int c = first_common_set(f.clause(blocks[bi].clause), blocks[bi], cur, after);
                if (c < 0) throw DomainError("source path leaves a clause unsatisfied");
                if (c != threshold[bi]) move(bi, c);
            }
            out.push_flip(v);
            cur = std::move(after);
        }
    }
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        int t = first_true_set(f.clause(blocks[bi].clause), blocks[bi], cur);
        if (t != threshold[bi]) move(bi, t);
    }
    return out;
}

}  // namespace detail

ReductionOutput reduce_width(const Instance& source, int k_target) {
    const Formula& f = source.formula();
    if (!f.width()) throw DomainError("width reduction needs a uniform-width source");
    if (k_target - 2 <= 0) throw DomainError("target width must be at least 3");
    if (*f.width() <= k_target) throw DomainError("source width must exceed the target width");
    auto split = detail::split_wide_clauses(f, k_target);
    const int total = split.formula.num_vars();
    Formula out(total, k_target, split.formula.clauses());
    auto start = detail::lift_assignment(f, split.blocks, total, source.start());
    auto end = detail::lift_assignment(f, split.blocks, total, source.end());
    auto r = detail::make_output(ReductionKind::Width, Instance(std::move(out), start, end), f);
    r.source_instance = source;
    r.width_blocks = std::move(split.blocks);
    r.params.Gamma = static_cast<int>(r.width_blocks.front().sets.size());
    r.var_map = detail::identity_map(f.num_vars());
    return r;
}

}  // namespace eksr
