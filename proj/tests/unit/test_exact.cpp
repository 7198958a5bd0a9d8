#include "oracles/oracles.hpp"
#include "oracles/planted.hpp"

#include "eksr/approx/rounding.hpp"
#include "eksr/core/error.hpp"
#include "eksr/core/random.hpp"
#include "eksr/exact/hypercube.hpp"

#include <doctest.h>

using namespace eksr;

namespace {

Instance example() { return parse_instance(oracle::example_instance_text()); }

using oracle::planted;

}  // namespace

TEST_CASE("exact optimum of the example") {
    auto inst = example();
    auto r = opt_exact(inst);
    CHECK(r.opt == make_rational(5, 6));
    auto chk = check_sequence(inst, r.witness);
    REQUIRE(chk.valid);
    CHECK(*chk.value == make_rational(5, 6));
    CHECK(r.witness.length() >= 5);
}

TEST_CASE("identical endpoints") {
    Instance inst(Formula(3, 3, {Clause{1, 2, 3}}), Assignment::from_string("101"),
                  Assignment::from_string("101"));
    auto r = opt_exact(inst);
    CHECK(r.opt == 1);
    CHECK(r.witness.length() == 1);
}

TEST_CASE("threshold reachability on the example") {
    auto inst = example();
    CHECK(!reachable_at_threshold(inst, 1));
    CHECK(reachable_at_threshold(inst, make_rational(5, 6)));
    CHECK(reachable_at_threshold(inst, make_rational(4, 5)));
    CHECK(!reachable_at_threshold(inst, make_rational(11, 12)));
    CHECK(reachable_at_threshold(inst, 0));
    CHECK(!reachable_at_threshold(inst, 2));
}

TEST_CASE("cap is enforced") {
    auto inst = planted(12, 10, 3, 1);
    CHECK_THROWS_AS(opt_exact(inst, 11), CapExceeded);
    CHECK_THROWS_AS(reachable_at_threshold(inst, 1, 11), CapExceeded);
    CHECK_NOTHROW(opt_exact(inst, 12));
}

TEST_CASE("agrees with brute force on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        int k = 3 + static_cast<int>(seed % 2);
        auto inst = planted(n, 3 * n, k, seed);
        CAPTURE(seed);
        auto r = opt_exact(inst);
        CHECK(r.opt == oracle::opt(inst));
        auto chk = check_sequence(inst, r.witness);
        REQUIRE(chk.valid);
        CHECK(*chk.value == r.opt);
        CHECK(r.witness.length() >= hamming(inst.start(), inst.end()) + 1);
        CHECK(max_sat_value(inst.formula()) == 1);

        // opt is the largest reachable threshold among multiples of 1/m.
        const long m = static_cast<long>(inst.formula().num_clauses());
        bool prev = true;
        for (long s = 0; s <= m; ++s) {
            bool now = reachable_at_threshold(inst, make_rational(s, m));
            CHECK((!now || prev));
            CHECK(now == (make_rational(s, m) <= r.opt));
            prev = now;
        }
    }
}

TEST_CASE("optimum dominates the approximation") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        auto inst = planted(10, 40, 3, seed);
        auto opt = opt_exact(inst).opt;
        CHECK(opt >= seq_value(inst.formula(), derandomize(inst)));
        CHECK(opt >= seq_value(inst.formula(), randomized_round(inst, seed)));
    }
}

TEST_CASE("max_sat on an unsatisfiable formula") {
    std::vector<Clause> all;
    for (int mask = 0; mask < 8; ++mask)
        all.push_back(Clause({Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0}, Literal{3, (mask & 4) != 0}}));
    Formula f(3, 3, all);
    CHECK(max_sat_value(f) == make_rational(7, 8));
    CHECK(max_sat_value(f) == oracle::max_sat(f));
}
