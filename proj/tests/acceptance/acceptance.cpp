// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "oracles/oracles.hpp"

#include "eksr/approx/bounds.hpp"
#include "eksr/approx/rounding.hpp"
#include "eksr/core/error.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/core/random.hpp"
#include "eksr/exact/hypercube.hpp"
#include "eksr/io/generator.hpp"
#include "eksr/reduce/reductions.hpp"
#include "eksr/verifier/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace eksr;

namespace {

// Table values are compared to this many units of the third decimal.
constexpr double table_tolerance = 0.001;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first failure; later checks still run so the detail line
// reports what was covered.
class Check {
public:
    void require(bool ok, const std::string& what) {
        ++count_;
        if (!ok && pass_) {
            pass_ = false;
            first_failure_ = what;
        }
    }
    Outcome done(const std::string& summary) const {
        if (pass_) return {true, summary + " (" + std::to_string(count_) + " checks)"};
        return {false, "first failure: " + first_failure_};
    }
    std::size_t count() const { return count_; }

private:
    bool pass_ = true;
    std::size_t count_ = 0;
    std::string first_failure_;
};

Instance example() { return parse_instance(oracle::example_instance_text()); }

Assignment bits(const char* s) { return Assignment::from_string(s); }

// 1. Six-clause example.
Outcome example_reproduction() {
    Check c;
    auto inst = example();
    auto r = opt_exact(inst);
    c.require(r.opt == make_rational(5, 6), "opt is " + to_string(r.opt));
    auto wchk = check_sequence(inst, r.witness);
    c.require(wchk.valid && *wchk.value == r.opt, "exact witness does not attain opt");
    ReconfSequence listed({bits("0000"), bits("0001"), bits("0011"), bits("0111"), bits("1111")});
    auto chk = check_sequence(inst, listed);
    c.require(chk.valid && *chk.value == make_rational(4, 6), "listed path value");
    ReconfSequence best({bits("0000"), bits("1000"), bits("1100"), bits("1110"), bits("1111")});
    auto bchk = check_sequence(inst, best);
    c.require(bchk.valid && *bchk.value == make_rational(5, 6), "optimal path value");
    c.require(r.opt == oracle::opt(inst), "brute-force optimum disagrees");
    return c.done("opt = 5/6, listed path 4/6, optimal path 5/6");
}

// 2. Approximation factors for k = 3..10.
Outcome table_reproduction() {
    Check c;
    std::ostringstream got;
    const auto& pub = oracle::published_factors();
    for (int k = 3; k <= 10; ++k) {
        const Rational f = approximation_factor(k);
        const Rational neq = closed_form_bound(k, BoundCase::Neq), eq = closed_form_bound(k, BoundCase::Eq);
        c.require(f == (neq < eq ? neq : eq), "k=" + std::to_string(k) + ": factor is not the smaller closed form");
        const std::string dec = to_decimal(f, 3);
        const double diff = std::abs(std::stod(dec) - pub[static_cast<std::size_t>(k - 3)]);
        c.require(diff <= table_tolerance + 1e-12, "k=" + std::to_string(k) + " renders " + dec);
        got << (k > 3 ? " " : "") << dec;
    }
    return c.done("factors " + got.str() + ", tolerance 0.001");
}

// Survival of a clause through start -> rho -> end, averaged over rho, by
// walking every pair of phase orders in literal-truth space.
Rational enumerated_survival(int k, unsigned start, unsigned end) {
    const unsigned full = (1U << k) - 1;
    Rational total = 0;
    for (unsigned rho = 0; rho <= full; ++rho) {
        std::vector<unsigned> d1, d2;
        for (int i = 0; i < k; ++i) {
            if (((start ^ rho) >> i) & 1U) d1.push_back(1U << i);
            if (((rho ^ end) >> i) & 1U) d2.push_back(1U << i);
        }
        long good = 0, pairs = 0;
        std::sort(d1.begin(), d1.end());
        do {
            unsigned cur = start;
            bool ok1 = cur != 0;
            for (unsigned b : d1) ok1 = ok1 && (cur ^= b) != 0;
            std::sort(d2.begin(), d2.end());
            do {
                ++pairs;
                unsigned cur2 = cur;
                bool ok = ok1;
                for (unsigned b : d2) ok = ok && (cur2 ^= b) != 0;
                if (ok) ++good;
            } while (std::next_permutation(d2.begin(), d2.end()));
        } while (std::next_permutation(d1.begin(), d1.end()));
        total += make_rational(good, pairs);
    }
    return total / (1L << k);
}

// A width-k clause over x_1..x_k with a sign pattern, and the assignment
// making exactly the literals in `truth` true.
Clause signed_clause(int k, unsigned signs) {
    std::vector<Literal> lits;
    for (int i = 0; i < k; ++i) lits.push_back({i + 1, ((signs >> i) & 1U) != 0});
    return Clause(std::move(lits));
}

Assignment realize_truth(const Clause& c, unsigned truth) {
    Assignment a(c.width());
    for (std::size_t i = 0; i < c.width(); ++i) a.set(c[i].var, (((truth >> i) & 1U) != 0) != c[i].negated);
    return a;
}

// 3. Closed forms against exhaustive enumeration.
Outcome closed_form_equivalence() {
    Check c;
    for (int k = 3; k <= 6; ++k) {
        const Rational neq = closed_form_bound(k, BoundCase::Neq), eq = closed_form_bound(k, BoundCase::Eq);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const std::string where = "k=" + std::to_string(k) + " start literal " + std::to_string(i + 1) +
                                          " end literal " + std::to_string(j + 1);
                const Rational want = i == j ? eq : neq;
                const Rational brute = enumerated_survival(k, 1U << i, 1U << j);
                c.require(brute == want, where + ": enumeration gives " + to_string(brute));
                // The library's expectation on the same clause, under a
                // varying sign pattern.
                const Clause cl = signed_clause(k, static_cast<unsigned>(i * k + j) % (1U << k));
                Instance inst(Formula(k, k, {cl}), realize_truth(cl, 1U << i), realize_truth(cl, 1U << j));
                const Rational lib = expected_sequence_value(inst, PartialAssignment(static_cast<std::size_t>(k)));
                c.require(lib == want, where + ": library gives " + to_string(lib));
            }
    }
    return c.done("k = 3..6, all single-literal endpoint pairs");
}

// 4. Derandomized value between the guaranteed factor and the optimum.
Outcome theorem_guarantee() {
    Check c;
    Rng rng(2024);
    int compared = 0;
    for (int t = 0; t < 200; ++t) {
        const int k = 3 + t % 4;
        PlantedGenerator gen;
        gen.k = k;
        gen.n = k + 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(24 - k)));
        gen.m = 1 + static_cast<int>(uniform_below(rng, 200));
        gen.seed = rng();
        if (t % 2 == 1) {
            // Random plants instead of 0^n / 1^n.
            gen.start = Assignment::from_code(rng(), static_cast<std::size_t>(gen.n));
            gen.end = Assignment::from_code(rng(), static_cast<std::size_t>(gen.n));
        }
        const Instance inst = gen_random_instance(gen);
        const std::string where = "instance " + std::to_string(t) + " (n=" + std::to_string(gen.n) +
                                  ", m=" + std::to_string(gen.m) + ", k=" + std::to_string(k) + ")";
        const ReconfSequence seq = derandomize(inst);
        const auto chk = check_sequence(inst, seq);
        c.require(chk.valid, where + ": invalid sequence: " + chk.reason);
        if (!chk.valid) continue;
        c.require(*chk.value >= approximation_factor(k), where + ": value " + to_string(*chk.value) + " below bound");
        if (gen.n <= 20) {
            const Rational opt = opt_exact(inst).opt;
            c.require(*chk.value <= opt, where + ": value exceeds opt " + to_string(opt));
            ++compared;
        }
    }
    return c.done("200 planted instances, " + std::to_string(compared) + " compared with the exact optimum");
}

// 5. Binomial sum identities.
Outcome binomial_identities() {
    Check c;
    for (int n = 0; n <= 40; ++n)
        for (int shift : {1, 2}) {
            c.require(binom_sum(n, shift) == binom_sum_closed(n, shift),
                      "n=" + std::to_string(n) + " shift=" + std::to_string(shift));
        }
    // Independent check of the closed forms themselves.
    for (int n = 0; n <= 40; ++n) {
        Rational s1 = 0, s2 = 0;
        for (int j = 0; j <= n; ++j) {
            const BigInt b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
            s1 += Rational(b) / (j + 1);
            s2 += Rational(b) / (j + 2);
        }
        s1.canonicalize();
        s2.canonicalize();
        const BigInt p = pow2(static_cast<unsigned long>(n + 1));
        c.require(s1 == make_rational(p - 1, BigInt(n + 1)), "shift 1 closed form, n=" + std::to_string(n));
        c.require(s2 == make_rational(p * n + 1, BigInt((n + 1) * (n + 2))), "shift 2 closed form, n=" + std::to_string(n));
    }
    return c.done("n = 0..40, both identities");
}

// 6. Raising an endpoint literal never lowers averaged survival.
Outcome monotonicity() {
    Check c;
    for (int k = 3; k <= 4; ++k) {
        const unsigned full = (1U << k) - 1;
        const Clause cl = signed_clause(k, 0b0101U & full);
        auto avg = [&](unsigned s, unsigned t) {
            Instance inst(Formula(k, k, {cl}), realize_truth(cl, s), realize_truth(cl, t));
            return expected_sequence_value(inst, PartialAssignment(static_cast<std::size_t>(k)));
        };
        std::vector<Rational> table((full + 1) * (full + 1));
        for (unsigned s = 1; s <= full; ++s)
            for (unsigned t = 1; t <= full; ++t) table[s * (full + 1) + t] = avg(s, t);
        for (unsigned s = 1; s <= full; ++s)
            for (unsigned t = 1; t <= full; ++t)
                for (int i = 0; i < k; ++i) {
                    const unsigned bit = 1U << i;
                    const Rational base = table[s * (full + 1) + t];
                    const std::string where = "k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                              " t=" + std::to_string(t) + " literal " + std::to_string(i + 1);
                    if (!(s & bit)) c.require(table[(s | bit) * (full + 1) + t] >= base, where + " in start");
                    if (!(t & bit)) c.require(table[s * (full + 1) + (t | bit)] >= base, where + " in end");
                }
    }
    return c.done("k = 3, 4, every satisfying endpoint pair and literal");
}

// A planted source whose endpoints connect at value 1, with a path.
std::pair<Instance, ReconfSequence> connected_source(int n, int m, int k, std::uint64_t seed) {
    for (;; ++seed) {
        PlantedGenerator gen{n, m, k, seed, {}, {}};
        Instance inst = gen_random_instance(gen);
        auto r = opt_exact(inst);
        if (r.opt == 1) return {inst, r.witness};
    }
}

void require_value_one(Check& c, const ReductionOutput& r, const ReconfSequence& w, const std::string& where) {
    const auto chk = check_sequence(r.instance, w);
    c.require(chk.valid, where + ": " + chk.reason);
    c.require(chk.valid && *chk.value == 1, where + ": witness value below 1");
}

// 7. Completeness of every reduction.
Outcome reduction_completeness() {
    Check c;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const std::string s = " seed " + std::to_string(seed);
        auto [src3, path3] = connected_source(7, 12, 3, seed * 1000);
        for (int k : {4, 5, 6}) {
            auto r = reduce_pad(src3, k);
            require_value_one(c, r, build_witness(r, path3), "pad k=" + std::to_string(k) + s);
        }

        auto [srch, pathh] = connected_source(9, 5, 3, seed * 1000 + 7);
        try {
            auto r = reduce_horn_emulation(srch, 2);
            require_value_one(c, r, build_witness(r, pathh), "horn" + s);
        } catch (const DomainError&) {
            // No disjoint pair in this draw; the next seed covers it.
        }

        auto [src5, path5] = connected_source(8, 5, 5, seed * 1000 + 13);
        for (int k : {3, 4}) {
            auto r = reduce_width(src5, k);
            require_value_one(c, r, build_witness(r, path5), "width k=" + std::to_string(k) + s);
        }

        const Instance sat = gen_random_instance(PlantedGenerator{8, 20, 3, seed, {}, {}});
        const Rational delta = make_rational(1, static_cast<long>(seed + 2));
        for (int k : {3, 4, 5, 6, 7}) {
            auto r = reduce_np_gadget(sat.formula(), k, delta);
            require_value_one(c, r, build_witness(r, sat.start()), std::string(to_string(r.kind)) + s);
        }
        auto raw = reduce_np3_raw(sat.formula(), delta);
        require_value_one(c, raw, build_witness(raw, sat.start()), "np3-raw" + s);
    }
    // Horn needs at least one disjoint tuple; make sure one case ran.
    const Formula dis(6, 3, {{1, 2, -3}, {-4, 5, 6}});
    Instance hinst(dis, bits("000000"), bits("111111"));
    auto hr = reduce_horn_emulation(hinst, 2);
    require_value_one(c, hr, build_witness(hr, opt_exact(hinst).witness), "horn disjoint pair");
    return c.done("pad, horn, width, np3, np3-raw, np4, npk");
}

// Random width-3 formula that no assignment satisfies.
Formula unsatisfiable_source(int n, int m, Rng& rng) {
    while (true) {
        std::vector<Clause> cls;
        for (int j = 0; j < m; ++j) {
            std::vector<int> vars(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
            shuffle(vars, rng);
            std::vector<Literal> lits;
            for (int i = 0; i < 3; ++i) lits.push_back({vars[static_cast<std::size_t>(i)], coin(rng)});
            cls.emplace_back(std::move(lits));
        }
        Formula f(n, 3, std::move(cls));
        if (oracle::max_sat(f) < 1) return f;
    }
}

// 8. Soundness at desk scale.
Outcome reduction_soundness() {
    Check c;
    Rng rng(77);
    std::vector<Formula> sources;
    {
        std::vector<Clause> all;
        for (int mask = 0; mask < 8; ++mask)
            all.push_back(Clause({Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0}, Literal{3, (mask & 4) != 0}}));
        sources.emplace_back(3, 3, all);
    }
    for (int n : {4, 5, 6, 7, 8}) sources.push_back(unsatisfiable_source(n, 6 * n, rng));

    int checked = 0;
    for (std::size_t s = 0; s < sources.size(); ++s) {
        const Formula& f = sources[s];
        const Rational gap = 1 - oracle::max_sat(f);
        for (const Rational& delta : std::vector<Rational>{gap, Rational(gap / 2)}) {
            const std::string where = "source " + std::to_string(s) + " delta " + to_string(delta);
            auto r3 = reduce_np3_raw(f, delta);
            auto r4 = reduce_np_gadget(f, 4, delta);
            c.require(r3.instance.num_vars() <= 20 && r4.instance.num_vars() <= 20, where + ": output too large");
            const Rational o3 = opt_exact(r3.instance).opt, o4 = opt_exact(r4.instance).opt;
            c.require(o3 <= 1 - delta / (1 + 2 * delta), where + ": np3 opt " + to_string(o3));
            c.require(o4 <= 1 - delta / (1 + 3 * delta), where + ": np4 opt " + to_string(o4));
            checked += 2;
        }
    }

    // Padding: sources with optimum below 1.
    std::vector<Instance> pads{example()};
    for (std::uint64_t seed = 1; pads.size() < 6; ++seed) {
        Instance inst = gen_random_instance(PlantedGenerator{6, 14, 3, seed, {}, {}});
        if (oracle::opt(inst) < 1) pads.push_back(inst);
    }
    for (std::size_t s = 0; s < pads.size(); ++s) {
        const Rational src_opt = oracle::opt(pads[s]);
        for (int K = 1; K <= 3; ++K) {
            auto r = reduce_pad(pads[s], 3 + K);
            const Rational o = opt_exact(r.instance).opt;
            c.require(o <= 1 - (1 - src_opt) / (1L << K),
                      "pad source " + std::to_string(s) + " K=" + std::to_string(K) + ": opt " + to_string(o));
            ++checked;
        }
    }
    return c.done(std::to_string(checked) + " exact optima of np3-raw, np4 and pad outputs, n <= 20");
}

// 9. Verifier laws.
Outcome verifier_laws() {
    Check c;
    // Clause verifier equals value on every assignment.
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const int n = 9 + static_cast<int>(seed);
        const Instance inst = gen_random_instance(PlantedGenerator{n, 25, 3 + static_cast<int>(seed % 3), seed, {}, {}});
        const auto cv = make_clause_verifier(inst.formula());
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
            const auto a = Assignment::from_code(code, static_cast<std::size_t>(n));
            c.require(acceptance_probability(cv, a) ==
                          make_rational(static_cast<long>(oracle::sat_count(inst.formula(), a)), 25),
                      "clause verifier on n=" + std::to_string(n));
        }
    }

    // Rejection law on disjoint clauses.
    const Formula dis(12, 3, {{1, -2, 3}, {-4, 5, 6}, {7, 8, -9}, {-10, -11, 12}});
    for (int lambda : {2, 3}) {
        const auto h = make_overview_horn(dis, lambda, TupleMode::WithReplacement);
        for (std::uint64_t code = 0; code < (1U << 12); ++code) {
            const auto a = Assignment::from_code(code, 12);
            const Rational eps = make_rational(static_cast<long>(4 - oracle::sat_count(dis, a)), 4);
            Rational law = eps;
            for (int i = 1; i < lambda; ++i) law *= 1 - eps;
            c.require(1 - acceptance_probability(h, a) == law, "rejection law, lambda=" + std::to_string(lambda));
        }
    }

    // OR emulation keeps the probability-1 set; the emitted CNF's violated
    // fraction is D / m times the rejection probability.
    std::vector<Formula> fs{dis, Formula(6, 3, {{1, 2, -3}, {-4, 5, 6}})};
    for (std::uint64_t seed = 3; seed <= 5; ++seed)
        fs.push_back(gen_random_instance(PlantedGenerator{7, 5, 3, seed, {}, {}}).formula());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Formula& f = fs[i];
        for (auto mode : {TupleMode::WithReplacement, TupleMode::Disjoint}) {
            const auto h = make_overview_horn(f, 2, mode);
            const auto x = make_or_emulator(h);
            std::optional<OrCnf> cnf;
            if (mode == TupleMode::Disjoint) {
                try {
                    cnf = cnf_from_or_verifier(x, 6);
                } catch (const DomainError&) {
                    // Every tuple overlaps: nothing rejects.
                }
            }
            const auto n = static_cast<std::size_t>(f.num_vars());
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
                const auto a = Assignment::from_code(code, n);
                const Rational ph = acceptance_probability(h, a), px = acceptance_probability(x, a);
                c.require((ph == 1) == (px == 1), "probability-1 set, formula " + std::to_string(i));
                if (!cnf) continue;
                const auto m = static_cast<long>(cnf->formula.num_clauses());
                c.require(1 - value(cnf->formula, a) == (1 - px) * Rational(cnf->denominator) / m,
                          "cnf violated fraction, formula " + std::to_string(i));
            }
        }
    }
    return c.done("clause verifier, rejection law for lambda 2 and 3, OR emulation, CNF emission");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "six-clause example", example_reproduction},
        {2, "approximation factor table", table_reproduction},
        {3, "closed forms vs enumeration", closed_form_equivalence},
        {4, "derandomized guarantee", theorem_guarantee},
        {5, "binomial identities", binomial_identities},
        {6, "endpoint monotonicity", monotonicity},
        {7, "reduction completeness", reduction_completeness},
        {8, "reduction soundness (desk scale)", reduction_soundness},
        {9, "verifier laws", verifier_laws},
    };

    bool all = true;
    bool constructive = true;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        if (cr.id >= 7) constructive = constructive && o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << ": " << o.detail << " [" << secs
             << " s]";
        std::cout << line.str() << std::endl;
    }
    // The asymptotic hardness statements cannot be executed; what can be
    // checked of them is the constructive pipeline above.
    std::cout << (constructive ? "PASS" : "FAIL")
              << " [10] asymptotic hardness claims: out of scope, covered through criteria 7-9"
              << (constructive ? "" : " (a constructive criterion failed)") << std::endl;
    all = all && constructive;
    return all ? 0 : 1;
}
