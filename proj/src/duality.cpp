#include "dualscope/duality.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dualscope/errors.hpp"

namespace dualscope {

const char* to_string(DualityFailure f) {
    switch (f) {
        case DualityFailure::None: return "None";
        case DualityFailure::SizeProduct: return "SizeProduct";
        case DualityFailure::TNotClassConstant: return "TNotClassConstant";
        case DualityFailure::SNotClassConstant: return "SNotClassConstant";
        case DualityFailure::DivisorEquation: return "DivisorEquation";
    }
    return "?";
}

DualityReport check_formal_dual(const ZnSubset& t, const ZnSubset& s) {
    if (t.n != s.n) throw ModulusMismatch("check_formal_dual: T and S have different moduli");
    const i64 n = t.n;
    DualityReport rep;
    if (t.size() * s.size() != n) {
        rep.failure = DualityFailure::SizeProduct;
        return rep;
    }
    WeightProfile wt = weight_enumerator(t);
    if (!wt.class_profile) {
        rep.failure = DualityFailure::TNotClassConstant;
        return rep;
    }
    WeightProfile ws = weight_enumerator(s);
    if (!ws.class_profile) {
        rep.failure = DualityFailure::SNotClassConstant;
        return rep;
    }
    FactoredInt nf = factorize(n);
    bool ok = true;
    for (i64 d : divisors(nf)) {
        DivisorCheck chk;
        chk.d = d;
        chk.lhs = mask_abs2_at_divisor(ws, d);
        chk.rhs = Rat((i128)s.size() * s.size() * wt.class_profile->at(d), (i128)t.size());
        chk.holds = Rat((i128)chk.lhs) == chk.rhs;
        rep.checked_divisors.push_back(chk);
        if (!chk.holds && ok) {
            ok = false;
            rep.failure = DualityFailure::DivisorEquation;
            rep.failing_divisor = d;
        }
    }
    rep.is_dual = ok;
    if (ok) rep.failure = DualityFailure::None;
    return rep;
}

bool verify_mainformula(const ZnSubset& t, const ZnSubset& s, i64 d) {
    if (!check_formal_dual(t, s).is_dual) throw NotADualPair("verify_mainformula: pair is not formally dual");
    const i64 n = t.n;
    if (d <= 0 || n % d != 0) throw std::invalid_argument("verify_mainformula: d must divide N");
    FactoredInt nf = factorize(n);
    WeightProfile wt = weight_enumerator(t);
    WeightProfile ws = weight_enumerator(s);

    i128 lhs_sum = 0;  // sum_{e | d} mu(d/e) |T(zeta_N^e)|^2
    FactoredInt df = factored_divisor(nf, d);
    for (i64 e : divisors(df)) lhs_sum += (i128)mobius(factored_divisor(df, d / e)) * mask_abs2_at_divisor(wt, e);
    i128 rhs_sum = 0;  // sum_{delta | N/d} mu((N/d)/delta) |S(zeta_N^delta)|^2
    FactoredInt cf = factored_divisor(nf, n / d);
    for (i64 dl : divisors(cf))
        rhs_sum += (i128)mobius(factored_divisor(cf, (n / d) / dl)) * mask_abs2_at_divisor(ws, dl);

    // lhs_sum / (sqrt(d) |T|^{3/2}) == rhs_sum / (sqrt(N/d) |S|^{3/2});
    // compare signs, then squares cross-multiplied (normalizers positive).
    if ((lhs_sum > 0) != (rhs_sum > 0) || (lhs_sum == 0) != (rhs_sum == 0)) return false;
    i128 l2 = lhs_sum * lhs_sum, r2 = rhs_sum * rhs_sum;
    i128 tl = (i128)t.size() * t.size() * t.size() * d;
    i128 sr = (i128)s.size() * s.size() * s.size() * (n / d);
    return l2 * sr == r2 * tl;
}

BoundsReport structural_bounds(i64 t_size, i64 s_size, const FactoredInt& n) {
    if (t_size <= 0 || s_size <= 0 || t_size > s_size || t_size * s_size != n.value)
        throw std::invalid_argument("structural_bounds: need 0 < |T| <= |S| with |T||S| = N");
    BoundsReport rep;
    int om = omega(n);
    i128 pow2 = om >= 1 ? ((i128)1 << (om - 1)) : 1;
    if (om >= 1)
        rep.firstestimate_cap = Rat(pow2 * t_size * t_size, (i128)n.value);
    else
        rep.firstestimate_cap = Rat((i128)t_size * t_size, (i128)2 * n.value);  // N = 1 degenerate
    i64 phi = euler_phi(n);
    rep.mainestimate_cap = Rat((i128)t_size * t_size - t_size, (i128)phi);
    // feasibility of nu_T(1) >= 1 given both caps, with the strictness of
    // the 2^(omega-1)|T|^2/N cap for omega >= 2
    bool main_ok = (i128)phi <= (i128)t_size * t_size - t_size;
    bool first_ok = om <= 1 ? (pow2 * t_size * t_size >= n.value) : (pow2 * t_size * t_size > n.value);
    rep.size_window_ok = main_ok && first_ok;
    return rep;
}

std::vector<i64> canonical_set(i64 n, const std::vector<i64>& elems) {
    std::vector<i64> best;
    std::vector<i64> cur(elems.size());
    for (i64 g = 1; g < std::max<i64>(n, 2); ++g) {
        if (std::gcd(g, n) != 1) continue;
        for (i64 c = 0; c < n; ++c) {
            for (size_t i = 0; i < elems.size(); ++i) cur[i] = (g * elems[i] + c) % n;
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
        if (n == 1) break;
    }
    return best;
}

namespace {

struct SearchContext {
    i64 n;
    FactoredInt nf;
    std::vector<i64> divs;
    bool require_primitive;
    i64 max_nodes;
    i64 nodes = 0;
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> orbits;

    void tick() {
        if (++nodes > max_nodes) throw BudgetExceeded("search_dual_pairs: enumeration node budget exceeded");
    }
};

// Required nu_S forced by T via nu_S(y) = |S| |T(zeta^y)|^2 / |T|^2.
// Returns false when some class value is not a nonnegative integer (then no
// dual partner of T exists).
bool required_partner_profile(SearchContext& ctx, const WeightProfile& wt, i64 s_size,
                              std::vector<i64>& req_full) {
    i64 t_size = wt.set_size();
    req_full.assign(ctx.n, 0);
    for (i64 d : ctx.divs) {
        i64 m2 = mask_abs2_at_divisor(wt, d);
        i128 num = (i128)s_size * m2;
        i128 den = (i128)t_size * t_size;
        if (num < 0 || num % den != 0) return false;
        i64 v = (i64)(num / den);
        for (i64 x = 0; x < ctx.n; ++x) {
            i64 g = x == 0 ? ctx.n : std::gcd(x, ctx.n);
            if (g == d) req_full[x] = v;
        }
    }
    return req_full[0] == s_size;
}

void record_pair(SearchContext& ctx, const ZnSubset& t, const ZnSubset& s) {
    DualityReport rep = check_formal_dual(t, s);
    if (!rep.is_dual) return;
    if (ctx.require_primitive && (!is_primitive(t) || !is_primitive(s))) return;
    std::vector<i64> ct = canonical_set(ctx.n, t.elems);
    std::vector<i64> cs = canonical_set(ctx.n, s.elems);
    if (ct.size() > cs.size() || (ct.size() == cs.size() && cs < ct)) std::swap(ct, cs);
    ctx.orbits.insert({ct, cs});
}

// Enumerate S containing 0 whose difference multiset matches req exactly;
// cnt tracks partial counts, pruned against req pointwise.
void extend_partner(SearchContext& ctx, const ZnSubset& t, std::vector<i64>& chosen, std::vector<i64>& cnt,
                    const std::vector<i64>& req, i64 s_size) {
    if ((i64)chosen.size() == s_size) {
        ZnSubset s{ctx.n, chosen};
        record_pair(ctx, t, s);
        return;
    }
    i64 last = chosen.back();
    i64 need = s_size - (i64)chosen.size();
    for (i64 cand = last + 1; cand + need - 1 <= ctx.n - 1; ++cand) {
        ctx.tick();
        bool ok = true;
        for (i64 prev : chosen) {
            i64 d1 = cand - prev;
            i64 d2 = ctx.n - d1;
            i64 step = d1 == d2 ? 2 : 1;  // difference N/2 counts both ways into one slot
            if (cnt[d1] + step > req[d1] || cnt[d2] + step > req[d2]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (i64 prev : chosen) {
            i64 d1 = cand - prev;
            cnt[d1]++;
            cnt[(ctx.n - d1) % ctx.n]++;
        }
        chosen.push_back(cand);
        extend_partner(ctx, t, chosen, cnt, req, s_size);
        chosen.pop_back();
        for (i64 prev : chosen) {
            i64 d1 = cand - prev;
            cnt[d1]--;
            cnt[(ctx.n - d1) % ctx.n]--;
        }
    }
}

void consider_t(SearchContext& ctx, const std::vector<i64>& t_elems, i64 s_size) {
    ctx.tick();
    ZnSubset t{ctx.n, t_elems};
    if (ctx.require_primitive && !is_primitive(t)) return;
    WeightProfile wt = weight_enumerator(t);
    if (!wt.class_profile) return;
    i64 t_size = t.size();
    int om = omega(ctx.nf);
    if (ctx.require_primitive && ctx.n > 1) {
        i64 nu1 = wt.class_profile->at(1);
        if (om <= 2 && nu1 < 1) return;  // primitive sets meet Z_N^* when omega <= 2
        // nu_T(1) <= 2^(omega-1) |T|^2 / N, equality only for omega == 1
        // with T vanishing at the p-th roots of unity
        i128 cap_num = ((i128)1 << (om - 1)) * t_size * t_size;
        i128 lhs = (i128)nu1 * ctx.n;
        if (lhs > cap_num) return;
        if (lhs == cap_num) {
            if (om != 1) return;
            i64 p = ctx.nf.factors[0].first;
            if (mask_abs2_at_divisor(wt, ctx.n / p) != 0) return;
        }
    }
    std::vector<i64> req;
    if (!required_partner_profile(ctx, wt, s_size, req)) return;
    std::vector<i64> chosen{0};
    std::vector<i64> cnt(ctx.n, 0);
    extend_partner(ctx, t, chosen, cnt, req, s_size);
}

void enumerate_t(SearchContext& ctx, std::vector<i64>& t_elems, i64 t_size, i64 s_size, i64 next) {
    if ((i64)t_elems.size() == t_size) {
        consider_t(ctx, t_elems, s_size);
        return;
    }
    i64 need = t_size - (i64)t_elems.size();
    for (i64 cand = next; cand + need - 1 <= ctx.n - 1; ++cand) {
        t_elems.push_back(cand);
        enumerate_t(ctx, t_elems, t_size, s_size, cand + 1);
        t_elems.pop_back();
    }
}

}  // namespace

std::vector<DualPairOrbit> search_dual_pairs(i64 n, const SearchOptions& opt) {
    if (n < 1) throw std::invalid_argument("search_dual_pairs: N must be positive");
    SearchContext ctx;
    ctx.n = n;
    ctx.nf = factorize(n);
    ctx.divs = divisors(ctx.nf);
    ctx.require_primitive = opt.require_primitive;
    ctx.max_nodes = opt.max_nodes;

    if (n == 1) {
        ZnSubset t{1, {0}};
        record_pair(ctx, t, t);
    } else {
        int om = omega(ctx.nf);
        for (i64 t_size : ctx.divs) {
            if (t_size * t_size > n) continue;
            i64 s_size = n / t_size;
            if (ctx.require_primitive && om <= 2) {
                // nu_T(1) >= 1 together with the cap needs 2^(omega-1)|T|^2 >= N,
                // strict when omega == 2
                i128 cap_num = ((i128)1 << (om - 1)) * t_size * t_size;
                if (om == 1 ? cap_num < n : cap_num <= n) continue;
            }
            std::vector<i64> t_elems{0};
            enumerate_t(ctx, t_elems, t_size, s_size, 1);
        }
    }

    std::vector<DualPairOrbit> out;
    for (auto& [ct, cs] : ctx.orbits) {
        DualPairOrbit orb;
        orb.n = n;
        orb.t_rep = ZnSubset{n, ct};
        orb.s_rep = ZnSubset{n, cs};
        orb.symmetries = "translations x unit scalings, applied to T and S independently";
        out.push_back(orb);
    }
    std::sort(out.begin(), out.end(), [](const DualPairOrbit& a, const DualPairOrbit& b) {
        if (a.t_rep.size() != b.t_rep.size()) return a.t_rep.size() < b.t_rep.size();
        if (a.t_rep.elems != b.t_rep.elems) return a.t_rep.elems < b.t_rep.elems;
        return a.s_rep.elems < b.s_rep.elems;
    });
    return out;
}

}  // namespace dualscope
