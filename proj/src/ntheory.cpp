#include "dualscope/ntheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualscope {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    a %= n;
    if (a == 0) return false;
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) {
                d = n;
                break;
            }
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<i64, int>& out) {
    if (n == 1) return;
    if (is_prime((i64)n)) {
        out[(i64)n]++;
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = (u64)n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for all 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (miller_rabin_witness((u64)n, a, d, s)) return false;
    return true;
}

std::vector<i64> primes_upto(i64 limit) {
    std::vector<i64> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (i64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (i64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

FactoredInt factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    FactoredInt f;
    f.value = n;
    if (n == 1) return f;
    std::map<i64, int> acc;
    for (i64 p : {2, 3, 5}) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
    }
    for (i64 d = 7; d <= 3'000'000 && d * d <= n; d += 6) {
        for (i64 p : {d, d + 4}) {
            while (n % p == 0) {
                acc[p]++;
                n /= p;
            }
        }
    }
    if (n > 1) factor_rec((u64)n, acc);
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

int mobius(const FactoredInt& n) {
    for (auto& [p, e] : n.factors)
        if (e > 1) return 0;
    return (n.factors.size() % 2 == 0) ? 1 : -1;
}

i64 euler_phi(const FactoredInt& n) {
    i64 phi = n.value;
    for (auto& [p, e] : n.factors) phi = phi / p * (p - 1);
    return phi;
}

i64 radical(const FactoredInt& n) {
    i64 r = 1;
    for (auto& [p, e] : n.factors) r *= p;
    return r;
}

int omega(const FactoredInt& n) { return (int)n.factors.size(); }

std::map<i64, int> prime_valuations(const FactoredInt& n) {
    std::map<i64, int> out;
    for (auto& [p, e] : n.factors) out[p] = e;
    return out;
}

std::vector<i64> divisors(const FactoredInt& n) {
    std::vector<i64> out{1};
    for (auto& [p, e] : n.factors) {
        size_t sz = out.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactoredInt factored_divisor(const FactoredInt& n, i64 d) {
    if (d <= 0 || n.value % d != 0) throw std::invalid_argument("factored_divisor: not a divisor");
    FactoredInt f;
    f.value = d;
    for (auto& [p, e] : n.factors) {
        int k = 0;
        while (d % p == 0) {
            d /= p;
            ++k;
        }
        if (k > 0) f.factors.emplace_back(p, k);
    }
    return f;
}

i64 ramanujan_sum(const FactoredInt& n, i64 d) {
    i64 N = n.value;
    i64 r = d % N;
    if (r < 0) r += N;
    i64 g = r == 0 ? N : std::gcd(r, N);
    FactoredInt m = factored_divisor(n, N / g);
    int mu = mobius(m);
    if (mu == 0) return 0;
    return mu * (euler_phi(n) / euler_phi(m));
}

i64 mult_order(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("mult_order: modulus must be >= 1");
    if (m == 1) return 1;
    i64 r = a % m;
    if (r < 0) r += m;
    if (std::gcd(r, m) != 1) throw std::invalid_argument("mult_order: base not coprime to modulus");
    FactoredInt mf = factorize(m);
    i64 ord = euler_phi(mf);
    FactoredInt of = factorize(ord);
    for (auto& [p, e] : of.factors) {
        while (ord % p == 0 && powmod_u64((u64)r, (u64)(ord / p), (u64)m) == 1) ord /= p;
    }
    return ord;
}

SplittingData prime_splitting(const FactoredInt& n, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_splitting: p must be prime");
    SplittingData s;
    int a = n.exponent_of(p);
    i64 pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    s.e = a == 0 ? 1 : pa / p * (p - 1);
    i64 m = n.value / pa;
    s.f = mult_order(p, m);
    FactoredInt mf = factored_divisor(n, m);
    s.r = euler_phi(mf) / s.f;
    return s;
}

bool is_self_conjugate(i64 p, const FactoredInt& n) {
    if (!is_prime(p)) throw std::invalid_argument("is_self_conjugate: p must be prime");
    int a = n.exponent_of(p);
    i64 m = n.value;
    for (int i = 0; i < a; ++i) m /= p;
    if (m <= 2) return true;  // -1 == 1 mod m
    i64 f = mult_order(p, m);
    if (f % 2 != 0) return false;
    // the cyclic group <p> mod m contains -1 iff its unique element of
    // order 2, p^(f/2), equals -1
    return powmod_u64((u64)(p % m), (u64)(f / 2), (u64)m) == (u64)(m - 1);
}

int padic_valuation_of_pow_minus_one(i64 q, i64 e, i64 p, int cap) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    if (q <= 0 || e <= 0) throw std::invalid_argument("padic_valuation: q, e must be positive");
    if (q % p == 0) throw std::invalid_argument("padic_valuation: p divides q");
    if (cap < 0) throw std::invalid_argument("padic_valuation: negative cap");
    u128 mod = 1;
    const u128 limit = (u128)1 << 120;
    for (int j = 1; j <= cap; ++j) {
        if (mod > limit / (u128)p) return j - 1;  // modulus no longer representable
        mod *= (u128)p;
        if (powmod_u128((u128)q % mod, (u128)e, mod) != 1) return j - 1;
    }
    return cap;
}

bool is_wieferich(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("is_wieferich: p must be prime");
    if (p == 2) return false;
    u128 m = (u128)p * (u128)p;
    return powmod_u128(2, (u128)(p - 1), m) == 1;
}

bool is_wieferich_pair(i64 p, i64 q) {
    if (p == q) throw std::invalid_argument("is_wieferich_pair: p and q must be distinct");
    if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("is_wieferich_pair: both must be prime");
    u128 p2 = (u128)p * (u128)p;
    u128 q2 = (u128)q * (u128)q;
    return powmod_u128((u128)q % p2, (u128)(p - 1), p2) == 1 &&
           powmod_u128((u128)p % q2, (u128)(q - 1), q2) == 1;
}

int int_valuation(i64 n, i64 p) {
    if (n == 0) throw std::invalid_argument("int_valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace dualscope
