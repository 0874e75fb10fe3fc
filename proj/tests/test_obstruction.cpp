#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualscope/obstruction.hpp"
#include "dualscope/serialize.hpp"
#include "properties.hpp"

using namespace dualscope;

namespace {
Verdict run(i64 n, EliminationMode mode = EliminationMode::Paper) { return eliminate(factorize(n), mode); }
}  // namespace

TEST_CASE("eliminate: pinned verdicts") {
    CHECK(run(1).outcome == Outcome::KnownPair);
    CHECK(run(4).outcome == Outcome::KnownPair);

    CHECK(run(8).criterion == CriterionId::PrimePower);
    CHECK(run(9).criterion == CriterionId::PrimePower);
    CHECK(run(2).criterion == CriterionId::PrimePower);

    CHECK(run(30).criterion == CriterionId::SquareFreeExternal);
    CHECK(run(6).criterion == CriterionId::SquareFreeExternal);

    CHECK(run(12).criterion == CriterionId::SelfConjugateExactDivisor);
    CHECK(run(18).criterion == CriterionId::SelfConjugateExactDivisor);
    CHECK(run(396).criterion == CriterionId::SelfConjugateExactDivisor);

    CHECK(run(72).criterion == CriterionId::TwoPrimeQSquaredOddA);
    CHECK(run(36).criterion == CriterionId::TwoPrimeP2Q2);
    CHECK(run(16 * 27).criterion == CriterionId::TwoPrimeP4Q3);
    CHECK(run(27 * 125).criterion == CriterionId::TwoPrimeP3Q3Wieferich);
    CHECK(run(1728).criterion == CriterionId::TwoPrimeGenericSplit);  // 2^6 3^3

    Verdict v144 = run(144);
    CHECK(v144.outcome == Outcome::Undecided);
    CHECK(v144.residual == "p^{2k}q^2, k=2");

    Verdict vbig = run(551414660329LL);  // 13^2 239^4
    CHECK(vbig.outcome == Outcome::Undecided);
    CHECK(vbig.residual == "p^2q^{2k}, k=2");

    CHECK(run(900).outcome == Outcome::Undecided);  // 2^2 3^2 5^2: omega >= 3, nothing applies
    CHECK(run(4 * 9 * 11).criterion == CriterionId::SelfConjugateExactDivisor);  // 396 again, by parts
}

TEST_CASE("generic split: pinned behavior") {
    GenericSplitResult g144 = two_prime_generic_split(factorize(144), EliminationMode::Paper);
    CHECK_FALSE(g144.eliminated);
    REQUIRE(g144.survivors.size() == 1);
    CHECK(g144.survivors[0].t_size == 12);
    CHECK(g144.survivors[0].s_size == 12);

    CHECK(two_prime_generic_split(factorize(1728), EliminationMode::Paper).eliminated);
    CHECK(two_prime_generic_split(factorize(576), EliminationMode::Paper).eliminated);  // 2^6 3^2
    CHECK(two_prime_generic_split(factorize(324), EliminationMode::Paper).eliminated);  // 2^2 3^4

    CHECK_THROWS_AS(two_prime_generic_split(factorize(8), EliminationMode::Paper), std::invalid_argument);
    CHECK_THROWS_AS(two_prime_generic_split(factorize(30), EliminationMode::Paper), std::invalid_argument);
}

TEST_CASE("generic split subsumes the p^m q^3 and p^m q^n (m,n >= 4) eliminations") {
    std::vector<i64> primes = primes_upto(50);
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = i + 1; j < primes.size(); ++j) {
            i64 p = primes[i], q = primes[j];
            for (auto [kp, kq] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {3, 5}, {4, 4}, {5, 4}, {4, 5}}) {
                u128 n = 1;
                for (int t = 0; t < kp; ++t) n *= (u128)p;
                for (int t = 0; t < kq; ++t) n *= (u128)q;
                if (n > (u128)1'000'000'000'000ULL) continue;
                Verdict v = run((i64)n);
                INFO("N = ", (i64)n);
                CHECK(v.outcome == Outcome::Eliminated);
            }
        }
    }
}

TEST_CASE("small census: (2,3) alone") {
    CensusReport rep = census_engine(5, 5, EliminationMode::Paper, 1);
    CHECK(rep.totals.pairs_scanned == 3);
    CHECK(rep.totals.all == 1);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].p == 2);
    CHECK(rep.pairs[0].q == 3);
    REQUIRE(rep.pairs[0].undecided.size() == 1);
    CHECK(rep.pairs[0].undecided[0].n_value == 144);

    CensusReport form = census_formula(5, 5);
    CHECK(census_diff(rep, form).empty());
}

TEST_CASE("census formula: q=3 term and determinism across workers") {
    CensusReport f = census_formula(5, 5);
    REQUIRE(f.pairs.size() == 1);
    CHECK(f.pairs[0].undecided.size() == 1);  // a(3) = 3 gives the single exception 2^4 3^2

    CensusReport one = census_engine(100, 100, EliminationMode::Paper, 1);
    CensusReport four = census_engine(100, 100, EliminationMode::Paper, 4);
    CHECK(to_json(one) == to_json(four));
}

TEST_CASE("census engine equals formula pair-by-pair (bounded run)") {
    CensusReport eng = census_engine(200, 200, EliminationMode::Paper, 4);
    CensusReport form = census_formula(200, 200);
    auto diff = census_diff(eng, form);
    for (auto& d : diff) MESSAGE(d);
    CHECK(diff.empty());
    CHECK(eng.totals.pairs_scanned == form.totals.pairs_scanned);
}

TEST_CASE("census budget") {
    CHECK_THROWS_AS(census_engine(100, 100, EliminationMode::Paper, 1, 10), BudgetExceeded);
    CHECK_THROWS_AS(census_engine(20000, 20000, EliminationMode::Paper, 1), std::invalid_argument);
}

TEST_CASE("extended mode is strictly stronger here") {
    CHECK(run(551414660329LL, EliminationMode::Extended).outcome == Outcome::Eliminated);
    CHECK(run(551414660329LL, EliminationMode::Paper).outcome == Outcome::Undecided);
    CHECK(run(144, EliminationMode::Extended).outcome == Outcome::Undecided);  // a genuine gap
}

TEST_CASE("obstruction property laws") {
    for (auto r : {props::law_eliminate_sound_vs_search(24), props::law_trace_replayable(300),
                   props::law_mode_monotonicity(1000)}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
        CHECK(r.cases >= 24);
    }
    CensusReport rep = census_engine(300, 300, EliminationMode::Paper, 4);
    auto rr = props::law_census_residual_forms(rep);
    INFO(rr.name, ": ", rr.detail);
    CHECK(rr.ok);
}
