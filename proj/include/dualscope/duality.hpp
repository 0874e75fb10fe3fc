// duality.hpp
// Formal duality of subset pairs in Z_N: exact verification, the
// Moebius-convolved cross identity, structural size bounds, and exhaustive
// search for primitive formally dual pairs at small N.
//
// (T, S) are formally dual iff |S(zeta_N^y)|^2 / |S|^2 = nu_T(y) / |T| for
// every y; with both profiles class-constant this reduces to one exact
// integer equation per divisor of N.

#pragma once

#include <string>
#include <vector>

#include "dualscope/rational.hpp"
#include "dualscope/znset.hpp"

namespace dualscope {

enum class DualityFailure {
    None,
    SizeProduct,
    TNotClassConstant,
    SNotClassConstant,
    DivisorEquation,
};

const char* to_string(DualityFailure f);

struct DivisorCheck {
    i64 d = 1;
    i64 lhs = 0;  // |S(zeta_N^d)|^2, exact integer
    Rat rhs;      // |S|^2 nu_T(d) / |T|
    bool holds = false;
};

struct DualityReport {
    bool is_dual = false;
    DualityFailure failure = DualityFailure::None;
    i64 failing_divisor = 0;  // set when failure == DivisorEquation
    std::vector<DivisorCheck> checked_divisors;
};

// Throws ModulusMismatch when T and S live in different Z_N.
DualityReport check_formal_dual(const ZnSubset& t, const ZnSubset& s);

// For a formally dual pair and d | N, both sides of the identity
//   (1/(sqrt(d) |T|^{3/2})) sum_{e|d} mu(d/e) |T(zeta^e)|^2 =
//   (1/(sqrt(N/d) |S|^{3/2})) sum_{delta|N/d} mu((N/d)/delta) |S(zeta^delta)|^2
// agree; compared exactly via signs and squared cross-multiplication.
// Signals NotADualPair when the pair is not formally dual.
bool verify_mainformula(const ZnSubset& t, const ZnSubset& s, i64 d);

// Size-based caps on nu_T(1) and the feasibility of the size window
// sqrt(phi(N)) < |T| <= sqrt(N) <= |S| < N/sqrt(phi(N)) for a primitive
// pair with nu_T(1) >= 1.
struct BoundsReport {
    Rat firstestimate_cap;  // 2^(omega(N)-1) |T|^2 / N
    Rat mainestimate_cap;   // (|T|^2 - |T|) / phi(N)
    bool size_window_ok = false;
};

BoundsReport structural_bounds(i64 t_size, i64 s_size, const FactoredInt& n);

// Canonical representative of a pair orbit under translations and unit
// scalings applied to each set independently: each set is replaced by the
// lexicographically smallest image (which contains 0), pairs are ordered
// |T| <= |S| with a lexicographic tie-break.
struct DualPairOrbit {
    i64 n = 1;
    ZnSubset t_rep;
    ZnSubset s_rep;
    std::string symmetries;
};

std::vector<i64> canonical_set(i64 n, const std::vector<i64>& elems);

struct SearchOptions {
    bool require_primitive = true;
    i64 max_nodes = 200'000'000;  // enumeration budget; BudgetExceeded beyond
};

// All orbits of formally dual pairs (T, S) in Z_N with |T| <= |S|, each
// reported once. Enumeration fixes 0 in both sets and prunes on
// class-constancy plus the structural bounds (primitive mode only); every
// reported pair passes check_formal_dual.
std::vector<DualPairOrbit> search_dual_pairs(i64 n, const SearchOptions& opt = {});

}  // namespace dualscope
