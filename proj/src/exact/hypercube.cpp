#include "eksr/exact/hypercube.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eksr {

namespace {

constexpr std::uint16_t unset = 0xFFFF;
constexpr std::uint8_t no_parent = 0xFF;

std::uint32_t code_of(const Assignment& a) { return static_cast<std::uint32_t>(a.to_code()); }

}  // namespace

HypercubeSearch::HypercubeSearch(const Formula& f, int n_cap)
    : n_(f.num_vars()), m_(f.num_clauses()) {
    if (n_ > n_cap || n_ > 30)
        throw CapExceeded(std::to_string(n_) + " variables exceed the exact-search cap of " +
                          std::to_string(std::min(n_cap, 30)));
    if (m_ >= unset) throw CapExceeded("too many clauses for 16-bit vertex scores");

    const std::uint32_t size = std::uint32_t{1} << n_;
    const std::uint32_t all = size - 1;
    scores_.assign(size, static_cast<std::uint16_t>(m_));
    // Each clause is falsified exactly on the vertices that agree with its
    // negation on the clause variables.
    for (const auto& c : f.clauses()) {
        std::uint32_t vars = 0, fixed = 0;
        for (const auto& l : c.literals()) {
            std::uint32_t bit = std::uint32_t{1} << (l.var - 1);
            vars |= bit;
            if (l.negated) fixed |= bit;
        }
        const std::uint32_t free = all & ~vars;
        for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
            --scores_[fixed | sub];
            if (sub == 0) break;
        }
    }
}

std::uint16_t HypercubeSearch::max_score() const {
    return *std::max_element(scores_.begin(), scores_.end());
}

std::uint16_t HypercubeSearch::widest_path(std::uint32_t from, std::uint32_t to,
                                           std::vector<std::uint32_t>* path) const {
    std::vector<std::uint16_t> best(scores_.size(), unset);
    std::vector<std::uint8_t> parent(scores_.size(), no_parent);
    std::vector<std::vector<std::uint32_t>> bucket(m_ + 1);

    best[from] = scores_[from];
    bucket[best[from]].push_back(from);
    for (std::size_t level = m_ + 1; level-- > 0;) {
        auto& q = bucket[level];
        while (!q.empty()) {
            std::uint32_t u = q.back();
            q.pop_back();
            if (best[u] != level) continue;  // stale entry
            if (u == to) break;
            for (int i = 0; i < n_; ++i) {
                std::uint32_t w = u ^ (std::uint32_t{1} << i);
                auto cand = static_cast<std::uint16_t>(std::min<std::size_t>(level, scores_[w]));
                if (best[w] == unset || cand > best[w]) {
                    best[w] = cand;
                    parent[w] = static_cast<std::uint8_t>(i);
                    bucket[cand].push_back(w);
                }
            }
        }
        if (best[to] != unset && best[to] == level) break;
    }

    if (path) {
        path->clear();
        for (std::uint32_t v = to;; v ^= std::uint32_t{1} << parent[v]) {
            path->push_back(v);
            if (v == from) break;
        }
        std::reverse(path->begin(), path->end());
    }
    return best[to];
}

std::uint16_t HypercubeSearch::bottleneck_union_find(std::uint32_t from, std::uint32_t to) const {
    const auto size = static_cast<std::uint32_t>(scores_.size());
    std::vector<std::uint32_t> root(size);
    std::iota(root.begin(), root.end(), 0U);
    std::vector<bool> active(size, false);
    auto find = [&](std::uint32_t x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };

    // Counting sort by descending score.
    std::vector<std::uint32_t> start(m_ + 2, 0);
    for (auto s : scores_) ++start[s + 1];
    for (std::size_t s = 1; s < start.size(); ++s) start[s] += start[s - 1];
    std::vector<std::uint32_t> order(size);
    {
        auto fill = start;
        for (std::uint32_t v = 0; v < size; ++v) order[fill[scores_[v]]++] = v;
    }

    for (std::size_t level = m_ + 1; level-- > 0;) {
        for (std::uint32_t p = start[level]; p < start[level + 1]; ++p) {
            std::uint32_t v = order[p];
            active[v] = true;
            for (int i = 0; i < n_; ++i) {
                std::uint32_t w = v ^ (std::uint32_t{1} << i);
                if (!active[w]) continue;
                std::uint32_t a = find(v), b = find(w);
                if (a != b) root[a] = b;
            }
        }
        if (active[from] && active[to] && find(from) == find(to))
            return static_cast<std::uint16_t>(level);
    }
    return 0;
}

bool HypercubeSearch::connected_at(std::uint32_t from, std::uint32_t to, std::uint32_t min_score) const {
    if (scores_[from] < min_score || scores_[to] < min_score) return false;
    std::vector<bool> seen(scores_.size(), false);
    std::vector<std::uint32_t> queue{from};
    seen[from] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t u = queue[head];
        if (u == to) return true;
        for (int i = 0; i < n_; ++i) {
            std::uint32_t w = u ^ (std::uint32_t{1} << i);
            if (!seen[w] && scores_[w] >= min_score) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

ExactResult opt_exact(const Instance& inst, int n_cap) {
    HypercubeSearch cube(inst.formula(), n_cap);
    const auto from = code_of(inst.start()), to = code_of(inst.end());
    std::vector<std::uint32_t> path;
    auto widest = cube.widest_path(from, to, &path);
    auto swept = cube.bottleneck_union_find(from, to);
    if (widest != swept)
        throw std::logic_error("exact search disagreement: max-min search " + std::to_string(widest) +
                               ", union-find sweep " + std::to_string(swept));

    const auto n = static_cast<std::size_t>(inst.num_vars());
    std::vector<Assignment> steps;
    steps.reserve(path.size());
    for (auto v : path) steps.push_back(Assignment::from_code(v, n));
    return {make_rational(widest, static_cast<long>(cube.num_clauses())), ReconfSequence(std::move(steps))};
}

bool reachable_at_threshold(const Instance& inst, const Rational& theta, int n_cap) {
    HypercubeSearch cube(inst.formula(), n_cap);
    if (theta > 1) return false;
    // score/m >= theta  <=>  score >= ceil(theta * m)
    BigInt need = ceil(theta * static_cast<unsigned long>(cube.num_clauses()));
    std::uint32_t min_score = need < 0 ? 0U : static_cast<std::uint32_t>(need.get_ui());
    return cube.connected_at(code_of(inst.start()), code_of(inst.end()), min_score);
}

Rational max_sat_value(const Formula& f, int n_cap) {
    HypercubeSearch cube(f, n_cap);
    return make_rational(cube.max_score(), static_cast<long>(cube.num_clauses()));
}

}  // namespace eksr
