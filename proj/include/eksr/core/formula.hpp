#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eksr {

struct Literal {
    int var = 0;           // 1-based
    bool negated = false;

    static Literal from_dimacs(int code) { return {code < 0 ? -code : code, code < 0}; }
    int to_dimacs() const { return negated ? -var : var; }
    Literal operator~() const { return {var, !negated}; }

    bool eval(const Assignment& a) const { return a[var] != negated; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {}
    Clause(std::initializer_list<int> dimacs);

    std::span<const Literal> literals() const { return literals_; }
    std::size_t width() const { return literals_.size(); }
    const Literal& operator[](std::size_t i) const { return literals_[i]; }

    bool satisfied_by(const Assignment& a) const;
    int true_count(const Assignment& a) const;
    bool has_distinct_vars() const;
    bool shares_var_with(const Clause& other) const;
    // Clause with `extra` literals appended.
    Clause extended(std::span<const Literal> extra) const;

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

// CNF formula over x_1..x_n. Exact-width formulas (the problem input) carry
// their width k; gadget reductions also build mixed-width formulas
// internally, for which width() is empty.
class Formula {
public:
    // Throws DomainError unless every clause has width k, variables in 1..n,
    // distinct variables per clause, and at least one clause.
    Formula(int n, int k, std::vector<Clause> clauses);
    static Formula mixed(int n, std::vector<Clause> clauses);

    int num_vars() const noexcept { return n_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    std::optional<int> width() const noexcept { return k_; }
    int max_width() const;
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    const Clause& clause(std::size_t j) const { return clauses_[j]; }

    // For each variable (1-based index), the clauses that mention it.
    std::vector<std::vector<std::size_t>> occurrences() const;

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    Formula() = default;
    void validate() const;

    int n_ = 0;
    std::optional<int> k_;
    std::vector<Clause> clauses_;
};

std::size_t satisfied_count(const Formula& f, const Assignment& a);

// Fraction of satisfied clauses. Throws DomainError on a length mismatch.
Rational value(const Formula& f, const Assignment& a);

}  // namespace eksr
