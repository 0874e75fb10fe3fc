#include "dualscope/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "dualscope/errors.hpp"

namespace dualscope {

const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::KnownPairSmall: return "KnownPairSmall";
        case CriterionId::PrimePower: return "PrimePower";
        case CriterionId::SquareFreeExternal: return "SquareFreeExternal";
        case CriterionId::SelfConjugateExactDivisor: return "SelfConjugateExactDivisor";
        case CriterionId::TwoPrimeSingleQ: return "TwoPrimeSingleQ";
        case CriterionId::TwoPrimeQSquaredOddA: return "TwoPrimeQSquaredOddA";
        case CriterionId::TwoPrimeP4Q3: return "TwoPrimeP4Q3";
        case CriterionId::TwoPrimeP2Q2: return "TwoPrimeP2Q2";
        case CriterionId::TwoPrimeP3Q3Wieferich: return "TwoPrimeP3Q3Wieferich";
        case CriterionId::TwoPrimeGenericSplit: return "TwoPrimeGenericSplit";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::KnownPair: return "KnownPair";
        case Outcome::Eliminated: return "Eliminated";
        case Outcome::Undecided: return "Undecided";
    }
    return "?";
}

const char* to_string(EliminationMode m) { return m == EliminationMode::Paper ? "paper" : "extended"; }

bool eval_premise(const Premise& p) {
    const Rat& a = p.lhs;
    const Rat& b = p.rhs;
    if (p.relation == "==") return a == b;
    if (p.relation == "!=") return a != b;
    if (p.relation == "<") return a < b;
    if (p.relation == "<=") return a <= b;
    if (p.relation == ">") return a > b;
    if (p.relation == ">=") return a >= b;
    if (p.relation == "divides") {
        if (!a.is_integer() || !b.is_integer() || a.num == 0) return false;
        return b.num % a.num == 0;
    }
    throw std::invalid_argument("eval_premise: unknown relation " + p.relation);
}

namespace {

Premise mk(std::string name, Rat lhs, Rat rhs, std::string rel) {
    Premise p;
    p.name = std::move(name);
    p.lhs = lhs;
    p.rhs = rhs;
    p.relation = std::move(rel);
    p.holds = eval_premise(p);
    return p;
}

std::string num(i128 v) { return to_string_i128(v); }

i64 pow_i64(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

FactoredInt from_exponents(std::map<i64, int> exps) {
    FactoredInt f;
    f.value = 1;
    for (auto& [p, e] : exps) {
        if (e < 0) throw std::invalid_argument("from_exponents: negative exponent");
        if (e == 0) continue;
        f.factors.emplace_back(p, e);
        f.value *= pow_i64(p, e);
    }
    return f;
}

bool descent_excluded(const FactoredInt& m, const FactoredInt& n, EliminationMode mode) {
    if (mode == EliminationMode::Paper) return fbound_2capped_excludes(m, n, 1);
    return fbound_excludes(m, n, 1);
}

Rat descent_bound(const FactoredInt& m, const FactoredInt& n, EliminationMode mode) {
    if (mode == EliminationMode::Paper) return fbound_2capped(m, n, 1);
    return fbound(m, n, 1);
}

}  // namespace

GenericSplitResult two_prime_generic_split(const FactoredInt& n, EliminationMode mode, bool want_trace) {
    if (omega(n) != 2) throw std::invalid_argument("two_prime_generic_split: omega(N) must be 2");
    GenericSplitResult res;
    const i64 p = n.factors[0].first;
    const int k = n.factors[0].second;
    const i64 q = n.factors[1].first;
    const int l = n.factors[1].second;
    const i64 N = n.value;
    const i64 phi = euler_phi(n);

    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= l; ++b) {
            u128 t2 = (u128)pow_i64(p, a) * pow_i64(p, a) * pow_i64(q, b) * pow_i64(q, b);
            if (t2 > (u128)N) continue;  // only |T| <= sqrt(N)
            i64 t = pow_i64(p, a) * pow_i64(q, b);
            i64 s = N / t;
            auto tag = [&](const std::string& what) {
                return "split(|T|=" + num(t) + ",|S|=" + num(s) + "): " + what;
            };

            // window: nu_T(1) >= 1 (primitive, omega = 2) and nu_T(1) < 2|T|^2/N force 2|T|^2 > N
            bool window = (i128)2 * t * t > N;
            if (want_trace) res.premises.push_back(mk(tag("2|T|^2 > N"), Rat((i128)2 * t * t), Rat((i128)N), ">"));
            if (!window) continue;

            // nonzero differences must cover Z_N^*: phi(N) <= |T|^2 - |T|
            bool diffs = (i128)phi <= (i128)t * t - t;
            if (want_trace)
                res.premises.push_back(mk(tag("phi(N) <= |T|^2-|T|"), Rat((i128)phi), Rat((i128)t * t - t), "<="));
            if (!diffs) continue;

            // |S(zeta_N)|^2 = |S|^3 / N must be an integer
            int xs = k - a, ys = l - b;  // |S| = p^xs q^ys
            bool s_integral = 3 * xs >= k && 3 * ys >= l;
            if (want_trace)
                res.premises.push_back(mk(tag("N divides |S|^3"), Rat((i128)N), Rat((i128)s * s * s), "divides"));
            if (!s_integral) continue;
            FactoredInt ns = from_exponents({{p, 3 * xs - k}, {q, 3 * ys - l}});

            bool s_excl = descent_excluded(n, ns, mode);
            if (want_trace && ns.value > 1)
                res.premises.push_back(
                    mk(tag("n_S <= descent bound"), Rat((i128)ns.value), descent_bound(n, ns, mode), "<="));
            if (s_excl) continue;

            // |T(zeta_N)|^2 = K |T|^3 / N for K = nu_S(1) in {1,2,3}; some K
            // must be integral and not excluded
            bool admissible = false;
            for (i64 K = 1; K <= 3 && !admissible; ++K) {
                std::map<i64, int> exps{{p, 3 * a - k}, {q, 3 * b - l}};
                if (K == p)
                    exps[p] += 1;
                else if (K == q)
                    exps[q] += 1;
                else if (K > 1)
                    exps[K] = 1;
                bool integral = true;
                for (auto& [r, e] : exps)
                    if (e < 0) integral = false;
                if (!integral) continue;
                FactoredInt nt = from_exponents(exps);
                if (!descent_excluded(n, nt, mode)) {
                    admissible = true;
                    if (want_trace && nt.value > 1)
                        res.premises.push_back(mk(tag("n_T(K=" + num(K) + ") <= descent bound"),
                                                  Rat((i128)nt.value), descent_bound(n, nt, mode), "<="));
                }
            }
            if (want_trace)
                res.premises.push_back(
                    mk(tag("some K in {1,2,3} admissible"), Rat((i128)(admissible ? 1 : 0)), Rat((i128)1), "=="));
            if (!admissible) continue;

            res.survivors.push_back(SplitSurvivor{t, s});
        }
    }
    res.eliminated = res.survivors.empty();
    return res;
}

namespace {

void push_trace(Verdict& v, bool want_trace, CriterionResult&& cr) {
    if (want_trace) v.trace.push_back(std::move(cr));
}

Verdict decided(Verdict v, CriterionId id, Outcome outcome) {
    v.outcome = outcome;
    v.criterion = id;
    return v;
}

std::string residual_for_two_prime(const FactoredInt& n, const GenericSplitResult& g) {
    const int k = n.factors[0].second;
    const int l = n.factors[1].second;
    std::string detail;
    for (auto& s : g.survivors) {
        if (!detail.empty()) detail += ", ";
        detail += "(" + std::to_string(s.t_size) + "," + std::to_string(s.s_size) + ")";
    }
    if (l == 2 && k >= 4 && k % 2 == 0) return "p^{2k}q^2, k=" + std::to_string(k / 2);
    if (k == 2 && l >= 4 && l % 2 == 0) return "p^2q^{2k}, k=" + std::to_string(l / 2);
    return "surviving splits " + detail;
}

}  // namespace

Verdict eliminate(const FactoredInt& n, EliminationMode mode, bool want_trace) {
    if (n.value < 1) throw std::invalid_argument("eliminate: N must be positive");
    Verdict v;
    v.n = n;
    v.mode = mode;
    const i64 N = n.value;
    const int om = omega(n);

    // KnownPairSmall: the trivial pair in Z_1 and the TITO pair in Z_4
    {
        bool m1 = N == 1, m4 = N == 4;
        CriterionResult cr{CriterionId::KnownPairSmall, m1 || m4};
        if (want_trace) {
            cr.premises.push_back(mk("N == 1", Rat((i128)N), Rat(1), "=="));
            cr.premises.push_back(mk("N == 4", Rat((i128)N), Rat(4), "=="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (m1 || m4) return decided(std::move(v), CriterionId::KnownPairSmall, Outcome::KnownPair);
    }

    // PrimePower: no primitive pairs in Z_{p^k} except N = 4
    {
        bool m = om == 1;  // N != 4 and N > 1 here
        CriterionResult cr{CriterionId::PrimePower, m};
        if (want_trace) {
            cr.premises.push_back(mk("omega(N) == 1", Rat((i128)om), Rat(1), "=="));
            cr.premises.push_back(mk("N != 4", Rat((i128)N), Rat(4), "!="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::PrimePower, Outcome::Eliminated);
    }

    // SquareFreeExternal: imported result for square-free orders
    {
        int maxexp = 0;
        for (auto& [p, e] : n.factors) maxexp = std::max(maxexp, e);
        bool m = maxexp == 1;
        CriterionResult cr{CriterionId::SquareFreeExternal, m};
        cr.external_result = true;
        if (want_trace) cr.premises.push_back(mk("max exponent in N == 1", Rat((i128)maxexp), Rat(1), "=="));
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::SquareFreeExternal, Outcome::Eliminated);
    }

    // SelfConjugateExactDivisor: some prime p with p || N and p self-conjugate mod N
    {
        i64 witness = 0;
        for (auto& [p, e] : n.factors)
            if (e == 1 && is_self_conjugate(p, n)) {
                witness = p;
                break;
            }
        CriterionResult cr{CriterionId::SelfConjugateExactDivisor, witness != 0};
        if (want_trace) {
            if (witness != 0) {
                i64 m = N / witness;
                i64 f = mult_order(witness, m);
                cr.premises.push_back(mk("nu_" + num(witness) + "(N) == 1", Rat(1), Rat(1), "=="));
                if (m <= 2) {
                    cr.premises.push_back(mk("p-free part of N <= 2 (trivially self-conjugate)",
                                             Rat((i128)m), Rat(2), "<="));
                } else {
                    u64 pw = powmod_u64((u64)(witness % m), (u64)(f / 2), (u64)m);
                    cr.premises.push_back(mk(num(witness) + "^" + num(f / 2) + " mod " + num(m) + " == " +
                                                 num(m) + "-1",
                                             Rat((i128)pw), Rat((i128)(m - 1)), "=="));
                }
            } else {
                cr.premises.push_back(
                    mk("some p || N is self-conjugate mod N", Rat(0), Rat(1), "=="));
            }
        }
        push_trace(v, want_trace, std::move(cr));
        if (witness != 0) return decided(std::move(v), CriterionId::SelfConjugateExactDivisor, Outcome::Eliminated);
    }

    if (om != 2) {
        v.outcome = Outcome::Undecided;
        v.residual = "omega(N) >= 3: no criterion applies beyond self-conjugacy";
        return v;
    }

    const i64 p = n.factors[0].first;
    const int k = n.factors[0].second;
    const i64 q = n.factors[1].first;
    const int l = n.factors[1].second;

    // TwoPrimeSingleQ: N = p^a q (one prime exactly once)
    {
        int mn = std::min(k, l);
        bool m = mn == 1;
        CriterionResult cr{CriterionId::TwoPrimeSingleQ, m};
        if (want_trace) cr.premises.push_back(mk("min(nu_p(N), nu_q(N)) == 1", Rat((i128)mn), Rat(1), "=="));
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::TwoPrimeSingleQ, Outcome::Eliminated);
    }

    // TwoPrimeQSquaredOddA: N = p^a q^2 with a odd
    {
        bool m = (l == 2 && k % 2 == 1) || (k == 2 && l % 2 == 1);
        CriterionResult cr{CriterionId::TwoPrimeQSquaredOddA, m};
        if (want_trace) {
            int sq = l == 2 ? l : k;
            int other = l == 2 ? k : l;
            cr.premises.push_back(mk("one exponent == 2", Rat((i128)sq), Rat(2), "=="));
            cr.premises.push_back(mk("other exponent odd (mod 2 == 1)", Rat((i128)(other % 2)), Rat(1), "=="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::TwoPrimeQSquaredOddA, Outcome::Eliminated);
    }

    // TwoPrimeP4Q3
    {
        bool m = (k == 4 && l == 3) || (k == 3 && l == 4);
        CriterionResult cr{CriterionId::TwoPrimeP4Q3, m};
        if (want_trace) {
            cr.premises.push_back(mk("min exponent == 3", Rat((i128)std::min(k, l)), Rat(3), "=="));
            cr.premises.push_back(mk("max exponent == 4", Rat((i128)std::max(k, l)), Rat(4), "=="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::TwoPrimeP4Q3, Outcome::Eliminated);
    }

    // TwoPrimeP2Q2
    {
        bool m = k == 2 && l == 2;
        CriterionResult cr{CriterionId::TwoPrimeP2Q2, m};
        if (want_trace) {
            cr.premises.push_back(mk("nu_p(N) == 2", Rat((i128)k), Rat(2), "=="));
            cr.premises.push_back(mk("nu_q(N) == 2", Rat((i128)l), Rat(2), "=="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (m) return decided(std::move(v), CriterionId::TwoPrimeP2Q2, Outcome::Eliminated);
    }

    // TwoPrimeP3Q3Wieferich: p^3 q^3 is eliminated unless p, q are twin
    // primes with p^3 | q^(p-1)-1 and q^3 | p^(q-1)-1
    if (k == 3 && l == 3) {
        bool twin = q - p == 2;
        int vp = padic_valuation_of_pow_minus_one(q, p - 1, p, 4);
        int vq = padic_valuation_of_pow_minus_one(p, q - 1, q, 4);
        bool exception = twin && vp >= 3 && vq >= 3;
        CriterionResult cr{CriterionId::TwoPrimeP3Q3Wieferich, !exception};
        if (want_trace) {
            cr.premises.push_back(mk("nu_p(N) == 3", Rat((i128)k), Rat(3), "=="));
            cr.premises.push_back(mk("nu_q(N) == 3", Rat((i128)l), Rat(3), "=="));
            cr.premises.push_back(mk("q - p == 2 (twin)", Rat((i128)(q - p)), Rat(2), "=="));
            cr.premises.push_back(mk("nu_p(q^(p-1)-1) >= 3", Rat((i128)vp), Rat(3), ">="));
            cr.premises.push_back(mk("nu_q(p^(q-1)-1) >= 3", Rat((i128)vq), Rat(3), ">="));
        }
        push_trace(v, want_trace, std::move(cr));
        if (!exception) return decided(std::move(v), CriterionId::TwoPrimeP3Q3Wieferich, Outcome::Eliminated);
        v.outcome = Outcome::Undecided;
        v.residual = "p^3q^3 with p, q twin primes and cube-strength Wieferich pair";
        return v;
    }

    // TwoPrimeGenericSplit
    {
        GenericSplitResult g = two_prime_generic_split(n, mode, want_trace);
        CriterionResult cr{CriterionId::TwoPrimeGenericSplit, g.eliminated};
        if (want_trace) cr.premises = g.premises;
        push_trace(v, want_trace, std::move(cr));
        if (g.eliminated) return decided(std::move(v), CriterionId::TwoPrimeGenericSplit, Outcome::Eliminated);
        v.outcome = Outcome::Undecided;
        v.residual = residual_for_two_prime(n, g);
        return v;
    }
}

namespace {

// Largest N = p^k q^l worth scanning: beyond
// (p^bp q^bq)^2 / (16 (1-1/p)^2 (1-1/q)^2) every split fails the descent
// bound outright (|S(zeta_N)|^2 >= sqrt(N) exceeds it).
struct Region {
    u128 num = 0;
    u128 den = 1;
    bool contains(u128 nval) const { return nval * den <= num; }
};

Region census_region(i64 p, i64 q) {
    FactoredInt rad = from_exponents({{p, 1}, {q, 1}});
    int bp = b_exponent(p, rad, rad);
    int bq = b_exponent(q, rad, rad);
    u128 P = 1;
    const u128 cap = (u128)1 << 100;
    for (int i = 0; i < bp; ++i) P = mul_saturate(P, (u128)p, cap);
    for (int i = 0; i < bq; ++i) P = mul_saturate(P, (u128)q, cap);
    Region r;
    u128 lhs = mul_saturate(mul_saturate(P, (u128)p, cap), (u128)q, cap);
    r.num = mul_saturate(lhs, lhs, (u128)1 << 126);
    u128 d = (u128)4 * (p - 1) * (q - 1);
    r.den = d * d;
    return r;
}

std::vector<CensusEntry> scan_pair(i64 p, i64 q, EliminationMode mode, std::atomic<u64>& scanned,
                                   u64 max_orders, std::atomic<bool>& over_budget) {
    std::vector<CensusEntry> out;
    Region reg = census_region(p, q);
    for (int k = 1;; ++k) {
        u128 pk = 1;
        for (int i = 0; i < k; ++i) pk *= (u128)p;
        if (!reg.contains(pk * (u128)q)) break;
        for (int l = 1;; ++l) {
            u128 nv = pk;
            for (int i = 0; i < l; ++i) nv *= (u128)q;
            if (!reg.contains(nv)) break;
            if (nv > ((u128)1 << 62))
                throw BudgetExceeded("census_engine: candidate order exceeds the 64-bit range");
            if (scanned.fetch_add(1) + 1 > max_orders) {
                over_budget.store(true);
                return out;
            }
            FactoredInt nf = from_exponents({{p, k}, {q, l}});
            Verdict v = eliminate(nf, mode, /*want_trace=*/false);
            if (v.outcome == Outcome::Undecided)
                out.push_back(CensusEntry{p, q, k, l, (u64)nf.value});
        }
    }
    return out;
}

void fill_totals(CensusReport& rep) {
    rep.totals.all = 0;
    rep.totals.even = 0;
    rep.totals.odd = 0;
    rep.totals.pairs_with_exceptions = 0;
    for (auto& pr : rep.pairs) {
        if (pr.undecided.empty()) continue;
        rep.totals.pairs_with_exceptions++;
        for (auto& e : pr.undecided) {
            rep.totals.all++;
            if (e.p == 2)
                rep.totals.even++;
            else
                rep.totals.odd++;
        }
    }
}

}  // namespace

CensusReport census_engine(i64 p_max, i64 q_max, EliminationMode mode, int jobs, u64 max_orders) {
    if (p_max < 2 || q_max < 2) throw std::invalid_argument("census_engine: bounds must be >= 2");
    if (p_max > 10'000 || q_max > 10'000)
        throw std::invalid_argument("census_engine: bounds above 10^4 are outside the supported budget");
    CensusReport rep;
    rep.p_max = p_max;
    rep.q_max = q_max;
    rep.mode = mode;
    std::vector<i64> primes = primes_upto(std::max(p_max, q_max));
    std::vector<std::pair<i64, i64>> tasks;
    for (i64 p : primes) {
        if (p > p_max) break;
        for (i64 q : primes) {
            if (q <= p) continue;
            if (q > q_max) break;
            tasks.emplace_back(p, q);
        }
    }
    rep.totals.pairs_scanned = (i64)tasks.size();

    std::vector<std::vector<CensusEntry>> results(tasks.size());
    std::atomic<u64> scanned{0};
    std::atomic<bool> over_budget{false};
    std::mutex err_mu;
    std::string err;
    int nthreads = std::max(1, jobs);
    auto worker = [&](int tid) {
        for (size_t i = tid; i < tasks.size(); i += (size_t)nthreads) {
            if (over_budget.load()) return;
            try {
                results[i] = scan_pair(tasks[i].first, tasks[i].second, mode, scanned, max_orders, over_budget);
            } catch (const std::exception& e) {
                over_budget.store(true);
                std::lock_guard<std::mutex> lk(err_mu);
                if (err.empty()) err = e.what();
                return;
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (over_budget.load()) {
        rep.valid = false;
        throw BudgetExceeded(err.empty()
                                 ? "census_engine: scanned-order budget exceeded; partial results are invalid"
                                 : err);
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (results[i].empty()) continue;
        CensusPair pr;
        pr.p = tasks[i].first;
        pr.q = tasks[i].second;
        pr.undecided = std::move(results[i]);
        rep.pairs.push_back(std::move(pr));
    }
    fill_totals(rep);
    return rep;
}

namespace {

// Balanced-split survival for N = p^{2k} q^2 or p^2 q^{2k}: the surviving
// witness is |T| = |S| = sqrt(N), and it survives iff
//   4 sqrt(N) phi(P) <= P^2,   P = p^{e_p} q^{e_q},
// where e_p, e_q are the descent exponents (plain valuations for odd
// primes, nu_2(ord_4(q)(q^2-1)/2) for 2) with only the exponent of 2
// clamped by its exponent in N. This is the exact inequality behind the
// per-family counts (k <= a-1 for the even family and the short surviving
// pair lists for the odd families reduce to it).
bool balanced_split_survives(i64 p, int ep_n, int a, i64 q, int eq_n, int b, u128 sqrt_n) {
    const u128 cap = (u128)1 << 100;
    int ep = p == 2 ? std::min(a, ep_n) : a;
    int eq = q == 2 ? std::min(b, eq_n) : b;
    u128 P = 1;
    for (int i = 0; i < ep; ++i) P = mul_saturate(P, (u128)p, cap);
    for (int i = 0; i < eq; ++i) P = mul_saturate(P, (u128)q, cap);
    if (P >= cap) return true;  // bound astronomically large, nothing excluded
    u128 phi = P / (u128)p * (u128)(p - 1) / (u128)q * (u128)(q - 1);
    return 4 * sqrt_n * phi <= P * P;
}

}  // namespace

CensusReport census_formula(i64 p_max, i64 q_max) {
    if (p_max < 2 || q_max < 2) throw std::invalid_argument("census_formula: bounds must be >= 2");
    CensusReport rep;
    rep.p_max = p_max;
    rep.q_max = q_max;
    rep.mode = EliminationMode::Paper;
    std::vector<i64> primes = primes_upto(std::max(p_max, q_max));
    i64 pairs_scanned = 0;
    for (i64 p : primes) {
        if (p > p_max) break;
        for (i64 q : primes) {
            if (q <= p) continue;
            if (q > q_max) break;
            pairs_scanned++;
            CensusPair pr;
            pr.p = p;
            pr.q = q;
            // descent exponents of the pair: for p = 2 this is
            // nu_2(ord_4(q)(q^2-1)/2), for odd primes nu_p(q^(p-1)-1)
            int a = p == 2 ? int_valuation((q * q - 1) / 2, 2) + (q % 4 == 3 ? 1 : 0)
                           : padic_valuation_of_pow_minus_one(q, p - 1, p);
            int b = padic_valuation_of_pow_minus_one(p, q - 1, q);
            // p-heavy family p^{2k} q^2 (for p = 2 the survivors are exactly 2 <= k <= a-1)
            for (int kk = 2;; ++kk) {
                u128 sqrt_n = (u128)q;
                for (int i = 0; i < kk; ++i) sqrt_n = mul_saturate(sqrt_n, (u128)p, (u128)1 << 100);
                if (sqrt_n > ((u128)1 << 32) || !balanced_split_survives(p, 2 * kk, a, q, 2, b, sqrt_n)) break;
                pr.undecided.push_back(CensusEntry{p, q, 2 * kk, 2, (u64)(sqrt_n * sqrt_n)});
            }
            // q-heavy family p^2 q^{2k} (empty for p = 2: q - 1 <= 1 fails)
            for (int kk = 2;; ++kk) {
                u128 sqrt_n = (u128)p;
                for (int i = 0; i < kk; ++i) sqrt_n = mul_saturate(sqrt_n, (u128)q, (u128)1 << 100);
                if (sqrt_n > ((u128)1 << 32) || !balanced_split_survives(p, 2, a, q, 2 * kk, b, sqrt_n)) break;
                pr.undecided.push_back(CensusEntry{p, q, 2, 2 * kk, (u64)(sqrt_n * sqrt_n)});
            }
            if (!pr.undecided.empty()) rep.pairs.push_back(std::move(pr));
        }
    }
    rep.totals.pairs_scanned = pairs_scanned;
    fill_totals(rep);
    return rep;
}

std::vector<std::string> census_diff(const CensusReport& engine, const CensusReport& formula) {
    auto flatten = [](const CensusReport& r) {
        std::set<std::string> out;
        for (auto& pr : r.pairs)
            for (auto& e : pr.undecided)
                out.insert("p=" + std::to_string(e.p) + " q=" + std::to_string(e.q) + " k=" + std::to_string(e.k) +
                           " l=" + std::to_string(e.l) + " N=" + std::to_string(e.n_value));
        return out;
    };
    std::set<std::string> a = flatten(engine), b = flatten(formula);
    std::vector<std::string> diff;
    for (auto& s : a)
        if (!b.count(s)) diff.push_back(s + "  [engine only]");
    for (auto& s : b)
        if (!a.count(s)) diff.push_back(s + "  [formula only]");
    return diff;
}

}  // namespace dualscope
