#include "dualscope/fielddescent.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualscope {

namespace {

void require_gt1(const FactoredInt& m, const FactoredInt& n, const char* who) {
    if (m.value <= 1 || n.value <= 1) throw std::invalid_argument(std::string(who) + ": m and n must be > 1");
}

// m_q of the definition; q must not divide the returned modulus.
i64 modulus_m_q(const FactoredInt& m, i64 q) {
    bool m_even = m.value % 2 == 0;
    if (!m_even || q == 2) {
        i64 r = 1;
        for (auto& [p, e] : m.factors)
            if (p != q) r *= p;
        return r;
    }
    i64 r = 4;
    for (auto& [p, e] : m.factors)
        if (p != 2 && p != q) r *= p;
    return r;
}

i64 pow_i64(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// gcd(p^k, x) as p^min(k, nu_p(x)) without forming x when x is given by a
// valuation; helper for the closed forms.
i64 gcd_prime_power(i64 p, int k, int nu) { return pow_i64(p, std::min(k, nu)); }

Rat bound_from_modulus(i64 F, const FactoredInt& m, i64 c) {
    // phi(F): F's primes are among m's
    i64 phi = F;
    for (auto& [p, e] : m.factors)
        if (F % p == 0) phi = phi / p * (p - 1);
    return Rat((i128)c * c * (i128)F * (i128)F, (i128)4 * phi);
}

}  // namespace

int b_exponent(i64 r, const FactoredInt& m, const FactoredInt& n) {
    require_gt1(m, n, "b_exponent");
    if (m.exponent_of(r) == 0) throw std::invalid_argument("b_exponent: r must divide m");
    bool onlyr = true;
    for (auto& [q, e] : n.factors)
        if (q != r) onlyr = false;
    if (onlyr) return r == 2 ? 2 : 1;
    int best = 0;
    for (auto& [q, e] : n.factors) {
        if (q == r) continue;
        i64 mq = modulus_m_q(m, q);
        i64 ord = mult_order(q, mq);
        int v_ord = ord == 1 ? 0 : int_valuation(ord, r);
        int term;
        if (r == 2)
            term = padic_valuation_of_pow_minus_one(q, 2, 2) + v_ord - 1;
        else
            term = padic_valuation_of_pow_minus_one(q, r - 1, r) + v_ord;
        best = std::max(best, term);
    }
    return best;
}

FParams field_descent_params(const FactoredInt& m, const FactoredInt& n) {
    require_gt1(m, n, "field_descent_F");
    FParams out;
    out.F = 1;
    for (auto& [p, e] : m.factors) {
        int b = b_exponent(p, m, n);
        out.b_values[p] = b;
        out.F *= pow_i64(p, std::min(e, b));
    }
    return out;
}

i64 field_descent_F(const FactoredInt& m, const FactoredInt& n) { return field_descent_params(m, n).F; }

i64 F_closed_two_prime(const FactoredInt& m, const FactoredInt& n) {
    require_gt1(m, n, "F_closed_two_prime");
    if (omega(m) > 2) throw std::invalid_argument("F_closed_two_prime: omega(m) must be <= 2");
    for (auto& [q, e] : n.factors)
        if (m.value % q != 0) throw std::invalid_argument("F_closed_two_prime: rad(n) must divide m");

    if (omega(m) == 1) {
        i64 p = m.factors[0].first;
        // n is a power of p here (rad(n) | m)
        if (p > 2) return p;
        return std::min<i64>(m.value, 4);  // gcd(2^k, 4)
    }

    i64 p = m.factors[0].first;
    int k = m.factors[0].second;
    i64 q = m.factors[1].first;
    int l = m.factors[1].second;
    bool n_has_p = n.value % p == 0;
    bool n_has_q = n.value % q == 0;

    if (p != 2) {
        // m odd
        int a = padic_valuation_of_pow_minus_one(q, p - 1, p);  // nu_p(q^(p-1)-1)
        int b = padic_valuation_of_pow_minus_one(p, q - 1, q);  // nu_q(p^(q-1)-1)
        if (n_has_p && n_has_q)
            return gcd_prime_power(p, k, a) * gcd_prime_power(q, l, b);
        if (n_has_p) return p * gcd_prime_power(q, l, b);
        return q * gcd_prime_power(p, k, a);
    }

    // m even, p == 2, q odd
    int nu2 = q % 4 == 1 ? int_valuation(q * q - 1, 2) - 1   // nu_2((q^2-1)/2)
                         : int_valuation(q * q - 1, 2);      // ord_4(q) = 2 contributes the lost bit back
    int nuq = padic_valuation_of_pow_minus_one(2, q - 1, q);  // nu_q(2^(q-1)-1)
    if (n_has_p && n_has_q) return gcd_prime_power(2, k, nu2) * gcd_prime_power(q, l, nuq);
    if (n_has_p) {
        i64 two_part = k >= 2 ? 4 : 2;  // 2 gcd(...) if 4 does not divide m, else 4 gcd(...)
        return two_part * gcd_prime_power(q, l, nuq);
    }
    return q * gcd_prime_power(2, k, nu2);
}

Rat fbound(const FactoredInt& m, const FactoredInt& n, i64 c) {
    if (c < 1) throw std::invalid_argument("fbound: C must be >= 1");
    return bound_from_modulus(field_descent_F(m, n), m, c);
}

bool fbound_excludes(const FactoredInt& m, const FactoredInt& n, i64 c) {
    if (n.value <= 1) return false;
    return Rat((i128)n.value) > fbound(m, n, c);
}

Rat fbound_2capped(const FactoredInt& m, const FactoredInt& n, i64 c) {
    if (c < 1) throw std::invalid_argument("fbound_2capped: C must be >= 1");
    require_gt1(m, n, "fbound_2capped");
    i128 P = 1;
    const i128 lim = (i128)1 << 100;
    for (auto& [p, e] : m.factors) {
        int b = b_exponent(p, m, n);
        if (p == 2) b = std::min(b, e);
        for (int i = 0; i < b; ++i) {
            P *= p;
            if (P > lim) throw std::overflow_error("fbound_2capped: exponent product too large");
        }
    }
    i128 phi = P;
    for (auto& [p, e] : m.factors) phi = phi / p * (p - 1);
    return Rat((i128)c * c * P * P, 4 * phi);
}

bool fbound_2capped_excludes(const FactoredInt& m, const FactoredInt& n, i64 c) {
    if (n.value <= 1) return false;
    try {
        return Rat((i128)n.value) > fbound_2capped(m, n, c);
    } catch (const std::overflow_error&) {
        return false;  // bound astronomically large, excludes nothing
    }
}

}  // namespace dualscope
