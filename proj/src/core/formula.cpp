#include "eksr/core/formula.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>

namespace eksr {

Clause::Clause(std::initializer_list<int> dimacs) {
    literals_.reserve(dimacs.size());
    for (int code : dimacs) {
        if (code == 0) throw DomainError("literal 0 is not a variable");
        literals_.push_back(Literal::from_dimacs(code));
    }
}

bool Clause::satisfied_by(const Assignment& a) const {
    return std::any_of(literals_.begin(), literals_.end(),
                       [&](const Literal& l) { return l.eval(a); });
}

int Clause::true_count(const Assignment& a) const {
    return static_cast<int>(std::count_if(literals_.begin(), literals_.end(),
                                          [&](const Literal& l) { return l.eval(a); }));
}

bool Clause::has_distinct_vars() const {
    for (std::size_t i = 0; i < literals_.size(); ++i)
        for (std::size_t j = i + 1; j < literals_.size(); ++j)
            if (literals_[i].var == literals_[j].var) return false;
    return true;
}

bool Clause::shares_var_with(const Clause& other) const {
    for (const auto& a : literals_)
        for (const auto& b : other.literals_)
            if (a.var == b.var) return true;
    return false;
}

Clause Clause::extended(std::span<const Literal> extra) const {
    std::vector<Literal> lits = literals_;
    lits.insert(lits.end(), extra.begin(), extra.end());
    return Clause(std::move(lits));
}

Formula::Formula(int n, int k, std::vector<Clause> clauses)
    : n_(n), k_(k), clauses_(std::move(clauses)) {
    if (k < 1) throw DomainError("clause width must be positive");
    validate();
}

Formula Formula::mixed(int n, std::vector<Clause> clauses) {
    Formula f;
    f.n_ = n;
    f.clauses_ = std::move(clauses);
    f.validate();
    if (!f.clauses_.empty()) {
        auto w = f.clauses_.front().width();
        bool uniform = std::all_of(f.clauses_.begin(), f.clauses_.end(),
                                   [&](const Clause& c) { return c.width() == w; });
        if (uniform) f.k_ = static_cast<int>(w);
    }
    return f;
}

void Formula::validate() const {
    if (n_ < 0) throw DomainError("negative variable count");
    if (clauses_.empty()) throw DomainError("formula needs at least one clause");
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
        const auto& c = clauses_[j];
        if (c.width() == 0) throw DomainError("empty clause " + std::to_string(j + 1));
        if (k_ && c.width() != static_cast<std::size_t>(*k_))
            throw DomainError("clause " + std::to_string(j + 1) + " has width " +
                              std::to_string(c.width()) + ", expected " + std::to_string(*k_));
        for (const auto& l : c.literals())
            if (l.var < 1 || l.var > n_)
                throw DomainError("clause " + std::to_string(j + 1) + " mentions variable " +
                                  std::to_string(l.var) + " outside 1.." + std::to_string(n_));
        if (!c.has_distinct_vars())
            throw DomainError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
}

int Formula::max_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses_) w = std::max(w, c.width());
    return static_cast<int>(w);
}

std::vector<std::vector<std::size_t>> Formula::occurrences() const {
    std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(n_) + 1);
    for (std::size_t j = 0; j < clauses_.size(); ++j)
        for (const auto& l : clauses_[j].literals()) occ[static_cast<std::size_t>(l.var)].push_back(j);
    return occ;
}

std::size_t satisfied_count(const Formula& f, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(f.num_vars()))
        throw DomainError("assignment has " + std::to_string(a.size()) + " bits, formula has " +
                          std::to_string(f.num_vars()) + " variables");
    std::size_t sat = 0;
    for (const auto& c : f.clauses())
        if (c.satisfied_by(a)) ++sat;
    return sat;
}

Rational value(const Formula& f, const Assignment& a) {
    return make_rational(static_cast<long>(satisfied_count(f, a)),
                         static_cast<long>(f.num_clauses()));
}

}  // namespace eksr
