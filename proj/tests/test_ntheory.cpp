#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualscope/ntheory.hpp"
#include "properties.hpp"

using namespace dualscope;

TEST_CASE("factorize canonical forms") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(216).factors == std::vector<std::pair<i64, int>>{{2, 3}, {3, 3}});
    CHECK(factorize(144).factors == std::vector<std::pair<i64, int>>{{2, 4}, {3, 2}});
    CHECK(factorize(1).value == 1);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-5), std::invalid_argument);
    // beyond the trial-division range
    i64 big = 999999999989LL;  // prime
    CHECK(factorize(big).factors == std::vector<std::pair<i64, int>>{{big, 1}});
}

TEST_CASE("mobius, phi, radical, omega, valuations") {
    CHECK(mobius(factorize(1)) == 1);
    CHECK(mobius(factorize(6)) == 1);
    CHECK(mobius(factorize(12)) == 0);
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(euler_phi(factorize(12)) == 4);
    CHECK(euler_phi(factorize(36)) == 12);  // p^2 q^2 with (p,q) = (2,3)
    CHECK(radical(factorize(1)) == 1);
    CHECK(radical(factorize(72)) == 6);
    CHECK(omega(factorize(72)) == 2);
    CHECK(radical(factorize(396)) == 66);
    CHECK(omega(factorize(396)) == 3);
    auto nu = prime_valuations(factorize(396));
    CHECK(nu == std::map<i64, int>{{2, 2}, {3, 2}, {11, 1}});
    CHECK(prime_valuations(factorize(1)).empty());
}

TEST_CASE("divisors") {
    CHECK(divisors(factorize(1)) == std::vector<i64>{1});
    CHECK(divisors(factorize(4)) == std::vector<i64>{1, 2, 4});
    CHECK(divisors(factorize(36)) == std::vector<i64>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("ramanujan sums: pinned values") {
    CHECK(ramanujan_sum(factorize(4), 4) == 2);  // C_N(N) = phi(N)
    CHECK(ramanujan_sum(factorize(4), 2) == -2);
    CHECK(ramanujan_sum(factorize(12), 2) == 2);
    CHECK(ramanujan_sum(factorize(6), 1) == 1);
    CHECK(ramanujan_sum(factorize(4), 0) == 2);
    CHECK(ramanujan_sum(factorize(4), -2) == -2);  // reduced mod N
    CHECK(ramanujan_sum(factorize(1), 0) == 1);
}

TEST_CASE("mult_order") {
    CHECK(mult_order(2, 9) == 6);
    CHECK(mult_order(7, 1) == 1);
    CHECK(mult_order(3, 4) == 2);
    CHECK(mult_order(-1, 5) == 2);  // reduced to 4 mod 5
    CHECK_THROWS_AS(mult_order(6, 9), std::invalid_argument);
}

TEST_CASE("prime splitting") {
    SplittingData s = prime_splitting(factorize(12), 2);
    CHECK(s.e == 2);
    CHECK(s.f == 2);
    CHECK(s.r == 1);
    // fully ramified in its own power
    for (i64 p : {2, 3, 5}) {
        for (int a = 1; a <= 4; ++a) {
            i64 n = 1;
            for (int i = 0; i < a; ++i) n *= p;
            SplittingData ps = prime_splitting(factorize(n), p);
            CHECK(ps.f == 1);
            CHECK(ps.r == 1);
            CHECK(ps.e == euler_phi(factorize(n)));
        }
    }
    SplittingData s15 = prime_splitting(factorize(15), 2);
    CHECK(s15.e == 1);
    CHECK(s15.f == 4);
    CHECK(s15.r == 2);
    CHECK_THROWS_AS(prime_splitting(factorize(12), 4), std::invalid_argument);
}

TEST_CASE("self-conjugacy") {
    CHECK(is_self_conjugate(3, factorize(12)));          // 3 == -1 mod 4
    CHECK(is_self_conjugate(2, factorize(18)));          // 2^3 == -1 mod 9
    CHECK(is_self_conjugate(11, factorize(396)));        // 11^3 == -1 mod 36
    CHECK_FALSE(is_self_conjugate(5, factorize(275)));   // <5> mod 11 misses 10
    CHECK(is_self_conjugate(7, factorize(7)));           // p-free part 1
    CHECK(is_self_conjugate(7, factorize(14)));          // p-free part 2
    CHECK_THROWS_AS(is_self_conjugate(6, factorize(12)), std::invalid_argument);
}

TEST_CASE("p-adic valuation of q^e - 1") {
    CHECK(padic_valuation_of_pow_minus_one(7, 4, 5) == 2);   // 5^2 exactly divides 7^4 - 1
    CHECK(padic_valuation_of_pow_minus_one(3, 1, 2) == 1);
    CHECK(padic_valuation_of_pow_minus_one(5, 6, 7) == 1);   // 7 exactly divides 5^6 - 1
    CHECK(padic_valuation_of_pow_minus_one(7, 4, 5, 1) == 1);  // cap honored
    CHECK_THROWS_AS(padic_valuation_of_pow_minus_one(10, 3, 5), std::invalid_argument);
}

TEST_CASE("wieferich primes and pairs") {
    CHECK(is_wieferich(1093));
    CHECK(is_wieferich(3511));
    CHECK_FALSE(is_wieferich(2));
    CHECK_FALSE(is_wieferich(1097));
    CHECK_FALSE(is_wieferich(1193));  // sometimes misquoted; it is not one
    CHECK(is_wieferich_pair(2, 1093));
    CHECK(is_wieferich_pair(83, 4871));
    CHECK_FALSE(is_wieferich_pair(3, 5));
    CHECK(is_wieferich_pair(5, 1645333507));
    CHECK(is_wieferich_pair(5, 188748146801));
    CHECK_THROWS_AS(is_wieferich_pair(5, 5), std::invalid_argument);
}

TEST_CASE("ntheory property laws") {
    for (auto r : {props::law_dirichlet_identities(), props::law_ramanujan_two_formulas(120),
                   props::law_ramanujan_row_sum(120), props::law_ramanujan_multiplicative(80),
                   props::law_splitting_invariant(200), props::law_self_conjugacy_equivalence(0xda1)}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
        CHECK(r.cases >= 100);
    }
}
