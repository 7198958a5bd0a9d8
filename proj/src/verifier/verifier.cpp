#include "eksr/verifier/verifier.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>
#include <numeric>

namespace eksr {

std::size_t Atom::view(const Assignment& proof) const {
    std::size_t v = 0;
    for (std::size_t i = 0; i < queries.size(); ++i)
        if (proof[queries[i]]) v |= std::size_t{1} << i;
    return v;
}

std::size_t Atom::rejecting_views() const {
    return static_cast<std::size_t>(std::count(table.begin(), table.end(), false));
}

Atom Atom::always_accept(Rational weight) {
    return {std::move(weight), {}, {true}};
}

std::size_t VerifierSpec::max_queries() const {
    std::size_t q = 0;
    for (const auto& a : atoms) q = std::max(q, a.queries.size());
    return q;
}

void validate(const VerifierSpec& v, std::size_t q_cap) {
    if (v.proof_len < 1) throw DomainError("proof length must be positive");
    if (v.atoms.empty()) throw DomainError("verifier has no atoms");
    Rational total = 0;
    std::vector<bool> seen(static_cast<std::size_t>(v.proof_len) + 1, false);
    for (std::size_t j = 0; j < v.atoms.size(); ++j) {
        const Atom& a = v.atoms[j];
        const std::string where = "atom " + std::to_string(j) + ": ";
        if (sgn(a.weight) <= 0) throw DomainError(where + "weight must be positive");
        total += a.weight;
        if (a.queries.size() > q_cap)
            throw DomainError(where + "reads " + std::to_string(a.queries.size()) +
                              " positions, more than the cap of " + std::to_string(q_cap));
        if (a.table.size() != std::size_t{1} << a.queries.size())
            throw DomainError(where + "truth table size does not match the query count");
        for (int p : a.queries) {
            if (p < 1 || p > v.proof_len) throw DomainError(where + "query position out of range");
            if (seen[static_cast<std::size_t>(p)]) throw DomainError(where + "repeated query position");
            seen[static_cast<std::size_t>(p)] = true;
        }
        for (int p : a.queries) seen[static_cast<std::size_t>(p)] = false;
    }
    if (total != 1) throw DomainError("atom weights sum to " + to_string(total) + ", not 1");
}

Rational VerifierParams::mixture_weight() const {
    if (sgn(g) == 0 || k == 0) throw DomainError("g and k must be nonzero");
    return mu / (g * k);
}

namespace {

void check_mixture(const VerifierParams& p) {
    Rational w = p.mixture_weight();
    if (sgn(w) <= 0 || w >= 1)
        throw DomainError("mixture weight mu/(g k) = " + to_string(w) + " is not in (0,1)");
}

}  // namespace

VerifierParams make_params(int q, const Rational& g, const Rational& epsilon, int k) {
    if (q < 1) throw DomainError("q must be positive");
    if (sgn(g) <= 0 || g >= 1) throw DomainError("g must lie in (0,1)");
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw DomainError("epsilon must lie in (0,1)");
    VerifierParams p;
    p.q = q;
    p.g = g;
    p.mu = make_rational(q, 2);
    p.delta = epsilon / 4;
    p.k = k;
    p.lambda = k / q;
    if (p.lambda < 2) throw DomainError("k must be at least 2q");
    check_mixture(p);
    return p;
}

Rational acceptance_probability(const VerifierSpec& v, const Assignment& proof) {
    if (proof.size() != static_cast<std::size_t>(v.proof_len))
        throw DomainError("proof has length " + std::to_string(proof.size()) + ", verifier expects " +
                          std::to_string(v.proof_len));
    Rational p = 0;
    for (const auto& a : v.atoms)
        if (a.accepts(proof)) p += a.weight;
    return p;
}

VerifierSpec make_clause_verifier(const Formula& f) {
    VerifierSpec v;
    v.proof_len = f.num_vars();
    const Rational w = make_rational(1, static_cast<long>(f.num_clauses()));
    for (const auto& c : f.clauses()) {
        Atom a{w, {}, {}};
        for (const auto& l : c.literals()) a.queries.push_back(l.var);
        a.table.assign(std::size_t{1} << c.width(), true);
        // The only rejecting view sets every literal false.
        std::size_t reject = 0;
        for (std::size_t i = 0; i < c.width(); ++i)
            if (c[i].negated) reject |= std::size_t{1} << i;
        a.table[reject] = false;
        v.atoms.push_back(std::move(a));
    }
    return v;
}

VerifierSpec make_all_one(int p, int ell) {
    if (p < 1 || p > ell) throw DomainError("all-one verifier needs 1 <= p <= ell");
    const BigInt count = binomial(static_cast<unsigned long>(ell), static_cast<unsigned long>(p));
    if (count > BigInt(static_cast<unsigned long>(VerifierSpec::default_atom_cap)))
        throw CapExceeded("C(" + std::to_string(ell) + "," + std::to_string(p) + ") atoms exceed the cap");
    if (static_cast<std::size_t>(p) > VerifierSpec::default_q_cap)
        throw DomainError("p exceeds the query cap");
    VerifierSpec v;
    v.proof_len = ell;
    const Rational w = make_rational(BigInt(1), count);
    std::vector<int> subset(static_cast<std::size_t>(p));
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        Atom a{w, subset, std::vector<bool>(std::size_t{1} << p, false)};
        a.table.back() = true;
        v.atoms.push_back(std::move(a));
        // Next p-subset in lexicographic order.
        int i = p - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == ell - p + i + 1) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return v;
}

VerifierSpec make_combined(const VerifierSpec& base, const VerifierSpec& allone,
                           const VerifierParams& params) {
    check_mixture(params);
    const Rational w = params.mixture_weight();
    VerifierSpec v;
    v.proof_len = base.proof_len + allone.proof_len;
    for (const auto& a : base.atoms) v.atoms.push_back({a.weight * w, a.queries, a.table});
    for (const auto& a : allone.atoms) {
        Atom b{a.weight * (1 - w), a.queries, a.table};
        for (int& p : b.queries) p += base.proof_len;
        v.atoms.push_back(std::move(b));
    }
    return v;
}

namespace {

struct Part {
    const VerifierSpec* spec;
    int shift;
};

// Enumerates every tuple of one atom per part. The first part is the
// positive test, the rest negated: accept iff part 0 accepts or any other
// part rejects.
VerifierSpec horn_product(const std::vector<Part>& parts, int proof_len, bool overlap_accepts,
                          std::size_t atom_cap) {
    std::size_t total = 1;
    for (const auto& p : parts) {
        const std::size_t c = p.spec->atoms.size();
        if (c == 0) throw DomainError("component verifier has no atoms");
        if (total > atom_cap / c) throw CapExceeded("product verifier exceeds the atom cap");
        total *= c;
    }

    VerifierSpec v;
    v.proof_len = proof_len;
    v.atoms.reserve(total);
    std::vector<std::size_t> idx(parts.size(), 0);
    std::vector<int> owner(static_cast<std::size_t>(proof_len) + 1, -1);
    for (std::size_t t = 0; t < total; ++t) {
        // First part most significant, so tuples come out lexicographically.
        for (std::size_t r = t, p = parts.size(); p-- > 0;) {
            const std::size_t c = parts[p].spec->atoms.size();
            idx[p] = r % c;
            r /= c;
        }

        Rational weight = 1;
        std::vector<int> queries;
        bool overlap = false;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const Atom& a = parts[p].spec->atoms[idx[p]];
            weight *= a.weight;
            for (int q : a.queries) {
                const int pos = q + parts[p].shift;
                int& o = owner[static_cast<std::size_t>(pos)];
                if (o == -1) {
                    o = static_cast<int>(p);
                    queries.push_back(pos);
                } else if (o != static_cast<int>(p)) {
                    overlap = true;
                }
            }
        }
        for (int q : queries) owner[static_cast<std::size_t>(q)] = -1;

        if (overlap && overlap_accepts) {
            v.atoms.push_back(Atom::always_accept(std::move(weight)));
            continue;
        }
        if (queries.size() > VerifierSpec::default_q_cap)
            throw DomainError("product atom reads " + std::to_string(queries.size()) +
                              " positions, more than the query cap");

        // Where each part's i-th query sits in the union.
        std::vector<std::vector<std::size_t>> slot(parts.size());
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (int q : parts[p].spec->atoms[idx[p]].queries) {
                const int pos = q + parts[p].shift;
                slot[p].push_back(static_cast<std::size_t>(
                    std::find(queries.begin(), queries.end(), pos) - queries.begin()));
            }

        Atom out{std::move(weight), std::move(queries), {}};
        out.table.resize(std::size_t{1} << out.queries.size());
        for (std::size_t view = 0; view < out.table.size(); ++view) {
            bool accept = false;
            for (std::size_t p = 0; p < parts.size() && !accept; ++p) {
                const Atom& a = parts[p].spec->atoms[idx[p]];
                std::size_t sub = 0;
                for (std::size_t i = 0; i < slot[p].size(); ++i)
                    if ((view >> slot[p][i]) & 1U) sub |= std::size_t{1} << i;
                accept = (p == 0) ? a.table[sub] : !a.table[sub];
            }
            out.table[view] = accept;
        }
        v.atoms.push_back(std::move(out));
    }
    return v;
}

int tail_shift(const VerifierSpec& w, const VerifierSpec& allone) {
    if (allone.proof_len > w.proof_len) throw DomainError("all-one verifier reads a longer proof than w");
    return w.proof_len - allone.proof_len;
}

}  // namespace

VerifierSpec make_horn(const VerifierSpec& w, const VerifierSpec& allone_q, const VerifierSpec& allone_rem,
                       int lambda, std::size_t atom_cap) {
    if (lambda < 2) throw DomainError("lambda must be at least 2");
    std::vector<Part> parts{{&w, 0}};
    for (int i = 1; i < lambda; ++i) parts.push_back({&allone_q, tail_shift(w, allone_q)});
    parts.push_back({&allone_rem, tail_shift(w, allone_rem)});
    return horn_product(parts, w.proof_len, true, atom_cap);
}

VerifierSpec make_horn(const VerifierSpec& w, const VerifierSpec& allone_q, int lambda, std::size_t atom_cap) {
    if (lambda < 2) throw DomainError("lambda must be at least 2");
    std::vector<Part> parts{{&w, 0}};
    for (int i = 1; i < lambda; ++i) parts.push_back({&allone_q, tail_shift(w, allone_q)});
    return horn_product(parts, w.proof_len, true, atom_cap);
}

VerifierSpec make_overview_horn(const Formula& f, int lambda, TupleMode mode, std::size_t atom_cap) {
    if (lambda < 2) throw DomainError("lambda must be at least 2");
    const VerifierSpec base = make_clause_verifier(f);
    std::vector<Part> parts(static_cast<std::size_t>(lambda), Part{&base, 0});
    return horn_product(parts, f.num_vars(), mode == TupleMode::Disjoint, atom_cap);
}

VerifierSpec make_or_emulator(const VerifierSpec& horn) {
    VerifierSpec x;
    x.proof_len = horn.proof_len;
    for (const auto& a : horn.atoms) {
        const std::size_t r = a.rejecting_views();
        if (r == 0) {
            x.atoms.push_back(Atom::always_accept(a.weight));
            continue;
        }
        const Rational w = a.weight / static_cast<unsigned long>(r);
        for (std::size_t view = 0; view < a.table.size(); ++view) {
            if (a.table[view]) continue;
            Atom b{w, a.queries, std::vector<bool>(a.table.size(), true)};
            b.table[view] = false;
            x.atoms.push_back(std::move(b));
        }
    }
    return x;
}

OrCnf cnf_from_or_verifier(const VerifierSpec& x, int width_k, std::size_t clause_cap) {
    BigInt d = 1;
    for (const auto& a : x.atoms) {
        const std::size_t r = a.rejecting_views();
        if (r == 0) continue;
        if (r > 1) throw DomainError("atom rejects more than one view; not an OR predicate");
        if (a.queries.size() != static_cast<std::size_t>(width_k))
            throw DomainError("rejecting atom reads " + std::to_string(a.queries.size()) +
                              " positions, expected " + std::to_string(width_k));
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.weight.get_den_mpz_t());
    }

    std::vector<Clause> clauses;
    for (const auto& a : x.atoms) {
        if (a.rejecting_views() == 0) continue;
        const std::size_t view = static_cast<std::size_t>(
            std::find(a.table.begin(), a.table.end(), false) - a.table.begin());
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < a.queries.size(); ++i) {
            // Forbid the view: x_i must differ from its value there.
            const bool bit = (view >> i) & 1U;
            lits.push_back({a.queries[i], bit});
        }
        const BigInt copies = a.weight.get_num() * (d / a.weight.get_den());
        if (copies > BigInt(static_cast<unsigned long>(clause_cap - clauses.size())))
            throw CapExceeded("emitted clause count exceeds the cap");
        Clause c(std::move(lits));
        for (unsigned long i = 0; i < copies.get_ui(); ++i) clauses.push_back(c);
    }
    if (clauses.empty()) throw DomainError("verifier never rejects; no clauses to emit");
    return {Formula(x.proof_len, width_k, std::move(clauses)), d};
}

Rational query_probability(const VerifierSpec& v, int position) {
    if (position < 1 || position > v.proof_len) throw DomainError("position out of range");
    Rational p = 0;
    for (const auto& a : v.atoms)
        if (std::find(a.queries.begin(), a.queries.end(), position) != a.queries.end()) p += a.weight;
    return p;
}

long lambda_zero(int q, const Rational& g, const Rational& epsilon) {
    if (q < 1) throw DomainError("q must be positive");
    if (sgn(g) <= 0 || g >= 1) throw DomainError("g must lie in (0,1)");
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw DomainError("epsilon must lie in (0,1)");
    const Rational mu = make_rational(q, 2);
    const Rational delta = epsilon / 4;
    const Rational x = mu * (mu + delta) / delta / (g * q);
    return ceil(x).get_si();
}

long lambda_zero(const VerifierParams& params, const Rational& epsilon) {
    return lambda_zero(params.q, params.g, epsilon);
}

std::vector<std::pair<Rational, Rational>> horn_rejection_curve(int lambda, const std::vector<Rational>& samples) {
    if (lambda < 1) throw DomainError("lambda must be positive");
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& eps : samples) {
        if (sgn(eps) < 0 || eps > 1) throw DomainError("epsilon must lie in [0,1]");
        Rational y = eps;
        for (int i = 1; i < lambda; ++i) y *= 1 - eps;
        out.emplace_back(eps, y);
    }
    return out;
}

}  // namespace eksr
