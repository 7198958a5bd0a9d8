#pragma once

#include "eksr/core/formula.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/core/rational.hpp"
#include "eksr/core/sequence.hpp"

#include <cstdint>
#include <vector>

namespace eksr {

inline constexpr int default_n_cap = 24;

// Satisfied-clause counts of every vertex of the n-cube. Vertex codes follow
// Assignment::to_code (bit i = x_{i+1}).
class HypercubeSearch {
public:
    // Throws CapExceeded if n > n_cap, n > 30 or m > 65534.
    explicit HypercubeSearch(const Formula& f, int n_cap = default_n_cap);

    int dimension() const noexcept { return n_; }
    std::size_t num_clauses() const noexcept { return m_; }
    std::uint16_t score(std::uint32_t code) const { return scores_[code]; }
    std::uint16_t max_score() const;

    // Largest b such that some path from `from` to `to` keeps every score
    // >= b, together with one such path (max-min search over score buckets).
    std::uint16_t widest_path(std::uint32_t from, std::uint32_t to,
                              std::vector<std::uint32_t>* path = nullptr) const;

    // Same bottleneck computed by adding vertices in descending score order
    // to a union-find structure until the endpoints connect.
    std::uint16_t bottleneck_union_find(std::uint32_t from, std::uint32_t to) const;

    // Whether `from` and `to` connect through vertices with score >= min_score.
    bool connected_at(std::uint32_t from, std::uint32_t to, std::uint32_t min_score) const;

private:
    int n_;
    std::size_t m_;
    std::vector<std::uint16_t> scores_;
};

struct ExactResult {
    Rational opt;
    ReconfSequence witness;
};

// Exact maxmin optimum. Both search strategies run and must agree; a
// disagreement raises std::logic_error.
ExactResult opt_exact(const Instance& inst, int n_cap = default_n_cap);

bool reachable_at_threshold(const Instance& inst, const Rational& theta, int n_cap = default_n_cap);

// Maximum fraction of clauses satisfiable by a single assignment.
Rational max_sat_value(const Formula& f, int n_cap = default_n_cap);

}  // namespace eksr
