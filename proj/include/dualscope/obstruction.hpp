// obstruction.hpp
// The elimination engine: given factored N, decide whether Z_N can carry a
// primitive formally dual pair by applying a fixed, first-match-wins
// sequence of machine-checkable criteria, plus the two-prime census over
// prime pairs and its closed-form counting oracle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualscope/fielddescent.hpp"
#include "dualscope/ntheory.hpp"
#include "dualscope/rational.hpp"

namespace dualscope {

enum class CriterionId {
    KnownPairSmall,
    PrimePower,
    SquareFreeExternal,
    SelfConjugateExactDivisor,
    TwoPrimeSingleQ,
    TwoPrimeQSquaredOddA,
    TwoPrimeP4Q3,
    TwoPrimeP2Q2,
    TwoPrimeP3Q3Wieferich,
    TwoPrimeGenericSplit,
};

const char* to_string(CriterionId id);

// A named exact fact: `holds` always equals eval(relation)(lhs, rhs), so a
// trace can be replayed by pure arithmetic. relation is one of
// ==, !=, <, <=, >, >=, divides.
struct Premise {
    std::string name;
    Rat lhs;
    Rat rhs;
    std::string relation;
    bool holds = false;
};

bool eval_premise(const Premise& p);

struct CriterionResult {
    CriterionId id;
    bool matched = false;        // criterion fired (decided the verdict)
    bool external_result = false;  // conclusion imported from outside this artifact
    std::vector<Premise> premises;
};

enum class Outcome { KnownPair, Eliminated, Undecided };
const char* to_string(Outcome o);

enum class EliminationMode { Paper, Extended };
const char* to_string(EliminationMode m);

struct Verdict {
    FactoredInt n;
    EliminationMode mode = EliminationMode::Paper;
    Outcome outcome = Outcome::Undecided;
    std::optional<CriterionId> criterion;  // the criterion that decided (Eliminated/KnownPair)
    std::vector<CriterionResult> trace;    // every criterion evaluated, in order
    std::string residual;                  // set when Undecided
};

Verdict eliminate(const FactoredInt& n, EliminationMode mode, bool want_trace = true);

// The two-prime eliminator: enumerates all splits |T| * |S| = N with
// |T| <= |S| and kills each by the size window, the difference-count bound,
// the |S|^3/N integrality, and the field-descent exclusion on both
// |S(zeta_N)|^2 and the admissible |T(zeta_N)|^2 values. Rejects
// omega(N) != 2.
struct SplitSurvivor {
    i64 t_size = 0;
    i64 s_size = 0;
};
struct GenericSplitResult {
    bool eliminated = false;
    std::vector<SplitSurvivor> survivors;
    std::vector<Premise> premises;  // per-split survival facts (one decisive line per split)
};
GenericSplitResult two_prime_generic_split(const FactoredInt& n, EliminationMode mode, bool want_trace = true);

struct CensusEntry {
    i64 p = 0, q = 0;
    int k = 0, l = 0;  // N = p^k q^l
    u64 n_value = 0;
};

struct CensusPair {
    i64 p = 0, q = 0;
    std::vector<CensusEntry> undecided;
};

struct CensusTotals {
    i64 all = 0;
    i64 even = 0;
    i64 odd = 0;
    i64 pairs_with_exceptions = 0;
    i64 pairs_scanned = 0;
};

struct CensusReport {
    i64 p_max = 0, q_max = 0;
    EliminationMode mode = EliminationMode::Paper;
    std::vector<CensusPair> pairs;  // only pairs with undecided orders, sorted by (p, q)
    CensusTotals totals;
    bool valid = true;  // false on a partial, budget-exceeded run
};

// Runs eliminate over every candidate order p^k q^l (p < q primes up to the
// bounds) inside the finite region where the field-descent inequality does
// not rule everything out a priori; collects the Undecided orders.
// Throws BudgetExceeded when the scanned-order cap is passed.
CensusReport census_engine(i64 p_max, i64 q_max, EliminationMode mode, int jobs = 1,
                           u64 max_orders = 100'000'000);

// Closed-form counting of the same exceptions, family by family, computed
// from the per-pair valuations alone (no split enumeration, no eliminate).
// Independent oracle for census_engine.
CensusReport census_formula(i64 p_max, i64 q_max);

// Per-N differences between two reports ("p q N side" lines); empty iff the
// reports list identical exceptions pair-by-pair.
std::vector<std::string> census_diff(const CensusReport& engine, const CensusReport& formula);

}  // namespace dualscope
