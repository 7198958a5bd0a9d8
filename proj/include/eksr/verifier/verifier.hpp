#pragma once

#include "eksr/core/assignment.hpp"
#include "eksr/core/formula.hpp"
#include "eksr/core/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eksr {

// One outcome of a verifier's randomness: a weight, the proof positions read
// and the decision circuit as a truth table. The view of a proof is indexed
// as sum over i of proof[queries[i]] << i.
struct Atom {
    Rational weight;
    std::vector<int> queries;  // 1-based, distinct
    std::vector<bool> table;   // size 2^|queries|; true = accept

    std::size_t view(const Assignment& proof) const;
    bool accepts(const Assignment& proof) const { return table[view(proof)]; }
    std::size_t rejecting_views() const;

    static Atom always_accept(Rational weight);

    friend bool operator==(const Atom&, const Atom&) = default;
};

// A randomized verifier written out as its finite distribution over atoms.
struct VerifierSpec {
    static constexpr std::size_t default_q_cap = 12;
    static constexpr std::size_t default_atom_cap = 10'000'000;

    int proof_len = 0;
    std::vector<Atom> atoms;

    std::size_t max_queries() const;

    friend bool operator==(const VerifierSpec&, const VerifierSpec&) = default;
};

// Throws DomainError unless weights are positive and sum to 1, every query is
// in 1..proof_len without repeats, tables have the right size and no atom
// reads more than q_cap positions.
void validate(const VerifierSpec& v, std::size_t q_cap = VerifierSpec::default_q_cap);

struct VerifierParams {
    int q = 3;
    Rational g;      // 1 - soundness
    Rational mu;     // q/2 unless overridden
    Rational delta;  // epsilon/4
    int lambda = 2;
    int k = 6;

    // mu / (g k), the probability of running the base verifier.
    Rational mixture_weight() const;
};

// mu = q/2, delta = epsilon/4, lambda = floor(k/q). Throws DomainError if
// lambda < 2 or the mixture weight falls outside (0,1).
VerifierParams make_params(int q, const Rational& g, const Rational& epsilon, int k);

// Sum of weight * D(proof|I). Throws DomainError on a length mismatch.
Rational acceptance_probability(const VerifierSpec& v, const Assignment& proof);

// Picks clause j with probability 1/m and checks it.
VerifierSpec make_clause_verifier(const Formula& f);

// Picks a p-subset of 1..ell uniformly and accepts iff all bits are 1.
VerifierSpec make_all_one(int p, int ell);

// Runs `base` on the first base.proof_len bits with the mixture weight and
// `allone` on the remaining bits otherwise.
VerifierSpec make_combined(const VerifierSpec& base, const VerifierSpec& allone,
                           const VerifierParams& params);

// Product of one atom of `w`, lambda-1 atoms of `allone_q` and one atom of
// `allone_rem`. The all-one verifiers read the tail of w's proof. Tuples with
// overlapping queries accept outright; otherwise the atom accepts iff w's
// part accepts or some all-one part rejects.
VerifierSpec make_horn(const VerifierSpec& w, const VerifierSpec& allone_q,
                       const VerifierSpec& allone_rem, int lambda,
                       std::size_t atom_cap = VerifierSpec::default_atom_cap);
// Same without the trailing part, for k = q lambda.
VerifierSpec make_horn(const VerifierSpec& w, const VerifierSpec& allone_q, int lambda,
                       std::size_t atom_cap = VerifierSpec::default_atom_cap);

enum class TupleMode { WithReplacement, Disjoint };

// Samples lambda clauses independently and accepts iff
// C_1 or not C_2 or ... or not C_lambda holds. In Disjoint mode tuples whose
// clauses share a variable accept outright.
VerifierSpec make_overview_horn(const Formula& f, int lambda, TupleMode mode,
                                std::size_t atom_cap = VerifierSpec::default_atom_cap);

// Splits each atom with R rejecting views into R atoms of weight w/R, each
// rejecting exactly one of those views. Atoms that never reject become
// always-accept atoms with no queries.
VerifierSpec make_or_emulator(const VerifierSpec& horn);

// One clause per rejecting atom, repeated weight * D times where D is the
// lcm of the rejecting atoms' weight denominators. Throws DomainError if an
// atom rejects more than one view, a rejecting atom does not read exactly
// width_k positions, or nothing rejects; CapExceeded past clause_cap.
struct OrCnf {
    Formula formula;
    BigInt denominator;  // D
};
OrCnf cnf_from_or_verifier(const VerifierSpec& x, int width_k,
                           std::size_t clause_cap = VerifierSpec::default_atom_cap);

// Total weight of atoms reading `position`. Throws DomainError if out of range.
Rational query_probability(const VerifierSpec& v, int position);

// ceil(mu (mu + delta) / delta / (g q)) with mu = q/2 and delta = epsilon/4.
long lambda_zero(int q, const Rational& g, const Rational& epsilon);
long lambda_zero(const VerifierParams& params, const Rational& epsilon);

// Points (eps, eps (1-eps)^(lambda-1)). Throws DomainError for eps outside
// [0,1] or lambda < 1.
std::vector<std::pair<Rational, Rational>> horn_rejection_curve(int lambda,
                                                                const std::vector<Rational>& samples);

// {"proof_len": l, "atoms": [{"weight": "n/d", "queries": [...], "table": "hex"}]}
// The table is the hex form of sum over views v of table[v] << v.
std::string verifier_to_json(const VerifierSpec& v);
VerifierSpec verifier_from_json(std::string_view text);

}  // namespace eksr
