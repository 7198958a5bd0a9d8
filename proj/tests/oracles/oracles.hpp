#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// the library's search or probability code; only the plain data types.

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/core/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using eksr::Assignment;
using eksr::Clause;
using eksr::Formula;
using eksr::Rational;

// Fraction of the distinct orderings of a '-' and b '+' steps along which the
// count started at c stays positive at every point (including the start).
inline Rational phase_survival(int c, int a, int b) {
    std::vector<int> steps(static_cast<std::size_t>(a), -1);
    steps.insert(steps.end(), static_cast<std::size_t>(b), +1);
    std::sort(steps.begin(), steps.end());
    long good = 0, total = 0;
    do {
        ++total;
        int cur = c;
        bool ok = cur > 0;
        for (int s : steps) {
            cur += s;
            if (cur <= 0) ok = false;
        }
        if (ok) ++good;
    } while (std::next_permutation(steps.begin(), steps.end()));
    return eksr::make_rational(good, total);
}

inline std::vector<int> differing(const Assignment& a, const Assignment& b) {
    std::vector<int> out;
    for (std::size_t i = 1; i <= a.size(); ++i)
        if (a[static_cast<int>(i)] != b[static_cast<int>(i)]) out.push_back(static_cast<int>(i));
    return out;
}

// Fraction of flip orders from `from` to `to` keeping the clause satisfied.
inline Rational walk_survival(const Clause& c, const Assignment& from, const Assignment& to) {
    auto order = differing(from, to);
    long good = 0, total = 0;
    do {
        ++total;
        Assignment cur = from;
        bool ok = c.satisfied_by(cur);
        for (int v : order) {
            cur.flip(v);
            ok = ok && c.satisfied_by(cur);
        }
        if (ok) ++good;
    } while (std::next_permutation(order.begin(), order.end()));
    return eksr::make_rational(good, total);
}

// Exact survival of a clause through start -> rho -> end, enumerating every
// pair of phase orders (the phases are drawn independently).
inline Rational clause_survival(const Clause& c, const Assignment& start, const Assignment& end,
                                const Assignment& rho) {
    auto p1 = differing(start, rho), p2 = differing(rho, end);
    long good = 0, total = 0;
    do {
        auto q = p2;
        do {
            ++total;
            Assignment cur = start;
            bool ok = c.satisfied_by(cur);
            for (int v : p1) cur.flip(v), ok = ok && c.satisfied_by(cur);
            for (int v : q) cur.flip(v), ok = ok && c.satisfied_by(cur);
            if (ok) ++good;
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
    return eksr::make_rational(good, total);
}

inline std::size_t sat_count(const Formula& f, const Assignment& a) {
    std::size_t s = 0;
    for (const auto& c : f.clauses())
        if (c.satisfied_by(a)) ++s;
    return s;
}

// Maxmin optimum by trying every threshold from the top and running a plain
// BFS on the assignments meeting it.
inline Rational opt(const eksr::Instance& inst) {
    const Formula& f = inst.formula();
    const auto n = static_cast<std::size_t>(f.num_vars());
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::size_t> score(size);
    for (std::uint64_t v = 0; v < size; ++v) score[v] = sat_count(f, Assignment::from_code(v, n));
    const auto s = inst.start().to_code(), t = inst.end().to_code();
    for (std::size_t th = f.num_clauses() + 1; th-- > 0;) {
        if (score[s] < th || score[t] < th) continue;
        std::vector<char> seen(size, 0);
        std::vector<std::uint64_t> q{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (std::size_t i = 0; i < n; ++i) {
                auto w = q[h] ^ (std::uint64_t{1} << i);
                if (!seen[w] && score[w] >= th) seen[w] = 1, q.push_back(w);
            }
        if (seen[t]) return eksr::make_rational(static_cast<long>(th), static_cast<long>(f.num_clauses()));
    }
    return 0;
}

inline Rational max_sat(const Formula& f) {
    const auto n = static_cast<std::size_t>(f.num_vars());
    std::size_t best = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        best = std::max(best, sat_count(f, Assignment::from_code(v, n)));
    return eksr::make_rational(static_cast<long>(best), static_cast<long>(f.num_clauses()));
}

// Per-clause survival bounds (min over the two endpoint cases) tabulated
// independently with exact fraction arithmetic for k = 3..10.
struct BoundRow {
    int k;
    long neq_num, neq_den, eq_num, eq_den;
};

inline const std::vector<BoundRow>& bound_table() {
    static const std::vector<BoundRow> rows = {
        {3, 55, 96, 89, 144},
        {4, 91, 144, 511, 768},
        {5, 5219, 7680, 6767, 9600},
        {6, 13787, 19200, 16997, 23040},
        {7, 241739, 322560, 287879, 376320},
        {8, 291727, 376320, 1355173, 1720320},
        {9, 8222399, 10321920, 9369559, 11612160},
        {10, 18916831, 23224320, 4247903, 5160960},
    };
    return rows;
}

// The eight published approximation factors for k = 3..10.
inline const std::vector<double>& published_factors() {
    static const std::vector<double> v = {0.572, 0.631, 0.679, 0.718, 0.749, 0.775, 0.796, 0.814};
    return v;
}

inline const char* example_instance_text() {
    return "c six-clause example with optimum 5/6\n"
           "p eksr 4 6 3\n"
           "-1 -2 3 0\n"
           "-1 2 -3 0\n"
           "1 -2 -3 0\n"
           "-1 2 -4 0\n"
           "-2 3 -4 0\n"
           "1 -3 -4 0\n"
           "s 0000\n"
           "t 1111\n";
}

}  // namespace oracle
