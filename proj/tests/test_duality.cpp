#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualscope/duality.hpp"
#include "properties.hpp"

using namespace dualscope;

TEST_CASE("check_formal_dual: pinned verdicts") {
    DualityReport tito = check_formal_dual(make_subset(4, {0, 1}), make_subset(4, {0, 1}));
    CHECK(tito.is_dual);
    CHECK(tito.failure == DualityFailure::None);
    REQUIRE(tito.checked_divisors.size() == 3);
    CHECK(tito.checked_divisors[0].lhs == 2);  // |S(zeta_4)|^2
    CHECK(tito.checked_divisors[1].lhs == 0);
    CHECK(tito.checked_divisors[2].lhs == 4);

    CHECK(check_formal_dual(make_subset(1, {0}), make_subset(1, {0})).is_dual);

    DualityReport bad = check_formal_dual(make_subset(4, {0, 1}), make_subset(4, {0, 2}));
    CHECK_FALSE(bad.is_dual);
    CHECK(bad.failure == DualityFailure::DivisorEquation);
    CHECK(bad.failing_divisor == 1);

    DualityReport sz = check_formal_dual(make_subset(6, {0, 1, 2, 3}), make_subset(6, {0, 1}));
    CHECK(sz.failure == DualityFailure::SizeProduct);

    // sizes multiply, but the divisor equations fail
    DualityReport n6 = check_formal_dual(make_subset(6, {0, 1, 2}), make_subset(6, {0, 1}));
    CHECK_FALSE(n6.is_dual);
    CHECK(n6.failure != DualityFailure::SizeProduct);

    DualityReport ncc = check_formal_dual(make_subset(8, {0, 1, 2, 3}), make_subset(8, {0, 1}));
    CHECK(ncc.failure == DualityFailure::TNotClassConstant);
    DualityReport scc = check_formal_dual(make_subset(8, {0, 1, 2, 5}), make_subset(8, {0, 1}));
    CHECK(scc.failure == DualityFailure::SNotClassConstant);  // that T happens to be class-constant

    CHECK_THROWS_AS(check_formal_dual(make_subset(4, {0, 1}), make_subset(6, {0, 1})), ModulusMismatch);
}

TEST_CASE("verify_mainformula") {
    ZnSubset t = make_subset(4, {0, 1});
    for (i64 d : {1, 2, 4}) CHECK(verify_mainformula(t, t, d));
    CHECK(verify_mainformula(make_subset(1, {0}), make_subset(1, {0}), 1));
    CHECK_THROWS_AS(verify_mainformula(t, make_subset(4, {0, 2}), 1), NotADualPair);
}

TEST_CASE("structural bounds") {
    BoundsReport b44 = structural_bounds(2, 2, factorize(4));
    CHECK(b44.firstestimate_cap == Rat(1));
    CHECK(b44.mainestimate_cap == Rat(1));
    CHECK(b44.size_window_ok);

    // |T| = p^k, |S| = p^(k+1): |T|^2 - |T| < phi(N) kills the window
    BoundsReport odd = structural_bounds(9, 27, factorize(243));
    CHECK_FALSE(odd.size_window_ok);

    BoundsReport trivial = structural_bounds(1, 8, factorize(8));
    CHECK(trivial.firstestimate_cap >= Rat(0));
    CHECK_FALSE(trivial.size_window_ok);

    CHECK_THROWS_AS(structural_bounds(3, 4, factorize(8)), std::invalid_argument);
}

TEST_CASE("canonical orbit representatives") {
    CHECK(canonical_set(4, {0, 3}) == std::vector<i64>{0, 1});
    CHECK(canonical_set(4, {1, 2}) == std::vector<i64>{0, 1});
    CHECK(canonical_set(1, {0}) == std::vector<i64>{0});
    // canonical form is invariant across the whole orbit
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        i64 n = 1 + (i64)(rng() % 20);
        ZnSubset t = props::detail::random_subset(rng, n, 1 + (i64)(rng() % (u64)n));
        auto canon = canonical_set(n, t.elems);
        i64 g;
        do {
            g = 1 + (i64)(rng() % (u64)n);
        } while (std::gcd(g, n) != 1);
        i64 c = (i64)(rng() % (u64)n);
        std::vector<i64> img;
        for (i64 x : t.elems) img.push_back((g * x + c) % n);
        CHECK(canonical_set(n, img) == canon);
    }
}

TEST_CASE("search: known landscape") {
    auto one = search_dual_pairs(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].t_rep.elems == std::vector<i64>{0});

    auto four = search_dual_pairs(4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].t_rep.elems == std::vector<i64>{0, 1});
    CHECK(four[0].s_rep.elems == std::vector<i64>{0, 1});

    CHECK(search_dual_pairs(9).empty());
    CHECK(search_dual_pairs(30).empty());

    // without the primitivity requirement, subgroup pairs appear
    SearchOptions all;
    all.require_primitive = false;
    auto n9 = search_dual_pairs(9, all);
    bool has_subgroup = false;
    for (auto& o : n9)
        if (o.t_rep.elems == std::vector<i64>{0, 3, 6}) has_subgroup = true;
    CHECK(has_subgroup);
}

TEST_CASE("search budget") {
    SearchOptions opt;
    opt.max_nodes = 5;
    CHECK_THROWS_AS(search_dual_pairs(24, opt), BudgetExceeded);
}

TEST_CASE("search agrees with the unpruned oracle (small N)") {
    for (i64 n = 1; n <= 16; ++n) {
        auto pruned = oracle::orbit_key_set(search_dual_pairs(n));
        auto brute = oracle::brute_force_dual_orbits(n, true);
        INFO("N = ", n);
        CHECK(pruned == brute);
    }
    for (i64 n = 1; n <= 12; ++n) {
        SearchOptions all;
        all.require_primitive = false;
        auto pruned = oracle::orbit_key_set(search_dual_pairs(n, all));
        auto brute = oracle::brute_force_dual_orbits(n, false);
        INFO("N = ", n, " (imprimitive included)");
        CHECK(pruned == brute);
    }
}

TEST_CASE("duality property laws") {
    for (auto r : {props::law_duality_symmetry(31), props::law_duality_invariance(32)}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
        CHECK(r.cases >= 1000);
    }
    auto fc = props::law_found_pair_properties(20);
    for (auto r : {fc.stn, fc.intersection, fc.mainformula, fc.fibers}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
        CHECK(r.cases >= 1);
    }
}
