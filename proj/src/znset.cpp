#include "dualscope/znset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualscope {

ZnSubset make_subset(i64 n, std::vector<i64> elems) {
    if (n < 1) throw std::invalid_argument("make_subset: modulus must be positive");
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 0 || elems[i] >= n) throw std::invalid_argument("make_subset: residue out of range");
        if (i > 0 && elems[i] == elems[i - 1]) throw std::invalid_argument("make_subset: duplicate residue");
    }
    return ZnSubset{n, std::move(elems)};
}

WeightProfile weight_enumerator(const ZnSubset& t) {
    WeightProfile w;
    w.n = t.n;
    w.full.assign(t.n, 0);
    for (i64 a : t.elems)
        for (i64 b : t.elems) {
            i64 d = a - b;
            if (d < 0) d += t.n;
            w.full[d]++;
        }
    // class-constancy: every residue class d*Z_N^* must carry one value
    std::map<i64, i64> prof;
    bool constant = true;
    for (i64 x = 0; x < t.n && constant; ++x) {
        i64 d = x == 0 ? t.n : std::gcd(x, t.n);
        auto it = prof.find(d);
        if (it == prof.end())
            prof[d] = w.full[x];
        else if (it->second != w.full[x])
            constant = false;
    }
    if (constant) w.class_profile = std::move(prof);
    return w;
}

bool is_primitive(const ZnSubset& t) {
    if (t.elems.empty()) return false;
    i64 g = 0;
    i64 t0 = t.elems.front();
    for (i64 x : t.elems) g = std::gcd(g, x - t0);
    return std::gcd(g, t.n) == 1;
}

std::map<i64, i64> scale_multiset(i64 d, const ZnSubset& t) {
    if (d <= 0 || t.n % d != 0) throw std::invalid_argument("scale_multiset: d must divide N");
    std::map<i64, i64> out;
    for (i64 x : t.elems) out[(d * x) % t.n]++;
    return out;
}

ZnSubset fiber(const ZnSubset& t, i64 j, i64 d) {
    if (d <= 0 || t.n % d != 0) throw std::invalid_argument("fiber: d must divide N");
    if (j < 0 || j >= d) throw std::invalid_argument("fiber: j out of range");
    ZnSubset out;
    out.n = t.n;
    for (i64 x : t.elems)
        if (x % d == j) out.elems.push_back(x);
    return out;
}

i64 mask_abs2_at_divisor(const WeightProfile& profile, i64 d) {
    if (d <= 0 || profile.n % d != 0) throw std::invalid_argument("mask_abs2_at_divisor: d must divide N");
    if (!profile.class_profile)
        throw ProfileNotClassConstant("mask_abs2_at_divisor: profile is not constant on divisor classes");
    FactoredInt nf = factorize(profile.n);
    i64 acc = 0;
    for (auto& [e, nu] : *profile.class_profile) {
        FactoredInt q = factored_divisor(nf, profile.n / e);
        acc += nu * ramanujan_sum(q, d);
    }
    return acc;
}

}  // namespace dualscope
