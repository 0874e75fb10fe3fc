// ntheory.hpp
// Exact integer number theory: factorizations, multiplicative functions,
// Ramanujan sums, multiplicative orders, prime splitting in cyclotomic
// fields, self-conjugacy and Wieferich predicates.
//
// All arithmetic functions consume a FactoredInt so factoring happens once
// at the boundary; every exponential is computed under a modulus, full
// powers like q^(p-1) are never formed.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dualscope/wide.hpp"

namespace dualscope {

// A positive integer together with its prime factorization.
// Invariants: value == prod p^e, primes strictly increasing, exponents >= 1,
// value == 1 iff factors empty.
struct FactoredInt {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;

    int exponent_of(i64 p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
};

FactoredInt factorize(i64 n);  // rejects n <= 0; Pollard rho beyond trial range

int mobius(const FactoredInt& n);
i64 euler_phi(const FactoredInt& n);
i64 radical(const FactoredInt& n);
int omega(const FactoredInt& n);
std::map<i64, int> prime_valuations(const FactoredInt& n);
std::vector<i64> divisors(const FactoredInt& n);  // ascending

// Factorization of a divisor d of n, derived from n's factors. Rejects d
// that do not divide n.
FactoredInt factored_divisor(const FactoredInt& n, i64 d);

// Ramanujan sum C_N(d) = mu(N/g) phi(N) / phi(N/g), g = gcd(d, N). d may be
// any integer (reduced mod N). Exact.
i64 ramanujan_sum(const FactoredInt& n, i64 d);

// Smallest f >= 1 with a^f == 1 mod m. Factors phi(m) and descends over its
// prime factors. Rejects gcd(a, m) != 1. mult_order(a, 1) == 1.
i64 mult_order(i64 a, i64 m);

// Splitting of the prime p in the N-th cyclotomic field:
// e = ramification, f = inertia degree, r = number of primes above p.
// Invariant e*f*r == phi(N).
struct SplittingData {
    i64 e = 1;
    i64 f = 1;
    i64 r = 1;
};
SplittingData prime_splitting(const FactoredInt& n, i64 p);  // rejects non-prime p

// True iff some power of p is -1 mod the p-free part m of N (equivalently
// the primes above p are fixed by complex conjugation). m <= 2 counts as
// true. Rejects non-prime p.
bool is_self_conjugate(i64 p, const FactoredInt& n);

// min(nu_p(q^e - 1), cap), via modular exponentiation mod p, p^2, ...
// Rejects p | q or non-prime p.
int padic_valuation_of_pow_minus_one(i64 q, i64 e, i64 p, int cap = 64);

// Wieferich prime: p^2 | 2^(p-1) - 1. p = 2 is never Wieferich (base and
// modulus coincide). Known instances below 10^4: 1093 and 3511; the value
// 1193 occasionally seen in print is not one (1193^2 does not divide
// 2^1192 - 1).
bool is_wieferich(i64 p);

// Wieferich pair: p^2 | q^(p-1) - 1 and q^2 | p^(q-1) - 1. Rejects p == q.
bool is_wieferich_pair(i64 p, i64 q);

bool is_prime(i64 n);                     // deterministic Miller-Rabin for 64-bit
std::vector<i64> primes_upto(i64 limit);  // sieve, inclusive

// nu_p of a plain integer (by repeated division).
int int_valuation(i64 n, i64 p);

}  // namespace dualscope
