// znset.hpp
// Subsets of Z_N: weight enumerators (autocorrelations), primitivity,
// fiber decompositions, and exact evaluation of |T(zeta_N^d)|^2 through
// divisor-class profiles and Ramanujan sums. No complex arithmetic.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dualscope/errors.hpp"
#include "dualscope/ntheory.hpp"

namespace dualscope {

// A set of distinct residues mod N, kept sorted. Fiber decompositions may
// produce empty sets; CLI inputs are validated to be nonempty.
struct ZnSubset {
    i64 n = 1;
    std::vector<i64> elems;

    i64 size() const { return (i64)elems.size(); }
};

// Builds a ZnSubset after validating range/distinctness (sorts a copy).
ZnSubset make_subset(i64 n, std::vector<i64> elems);

// The autocorrelation nu_T = 1_T * 1_{-T}: full[x] counts ordered pairs
// (t, t') with t - t' == x mod N. class_profile is present iff nu is
// constant on every divisor class d*Z_N^* (gcd(x, N) == d), mapping d to
// the common value; class N is the zero residue with value |T|.
struct WeightProfile {
    i64 n = 1;
    std::vector<i64> full;
    std::optional<std::map<i64, i64>> class_profile;

    i64 set_size() const { return full.empty() ? 0 : full[0]; }
};

WeightProfile weight_enumerator(const ZnSubset& t);

// A set is primitive iff it is contained in no coset of a proper subgroup:
// gcd(N, gcd_t (t - t0)) == 1. Every nonempty subset of Z_1 is primitive.
bool is_primitive(const ZnSubset& t);

// The multiset d*T: residue -> multiplicity of d*t mod N. Rejects d not
// dividing N.
std::map<i64, i64> scale_multiset(i64 d, const ZnSubset& t);

// Elements of T congruent to j mod d (possibly empty). The fibers over
// j = 0..d-1 partition T. Rejects d not dividing N or j out of range.
ZnSubset fiber(const ZnSubset& t, i64 j, i64 d);

// |T(zeta_N^d)|^2 = sum_{e | N} nu_T(e) * C_{N/e}(d), valid for
// class-constant profiles only (signals ProfileNotClassConstant otherwise).
// Rejects d not dividing N. Always a nonnegative integer; |T|^2 at d = N.
i64 mask_abs2_at_divisor(const WeightProfile& profile, i64 d);

}  // namespace dualscope
