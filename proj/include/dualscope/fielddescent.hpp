// fielddescent.hpp
// The field-descent modulus F(m,n) and the Turyn/Schmidt bound
// n <= C^2 F(m,n)^2 / (4 phi(F(m,n))) on integers n that are |X|^2 for a
// cyclotomic integer X in Z[zeta_m] with coefficients in [0, C].
//
// F(m,n) = gcd(m, prod_{p | m} p^{b(p,m,n)}), where for each prime r | m
//   b(2,m,n) = max_{q | n, q != 2} ( nu_2(q^2-1) + nu_2(ord_{m_q}(q)) - 1 )
//   b(r,m,n) = max_{q | n, q != r} ( nu_r(q^(r-1)-1) + nu_r(ord_{m_q}(q)) )
// with conventions b(2,m,n) = 2 when n is a power of 2 and b(r,m,n) = 1
// when n is a power of r, and
//   m_q = prod_{p | m, p != q} p            if m odd or q = 2
//   m_q = 4 prod_{p | m, p != 2, p != q} p  otherwise.
//
// The definition is the ground truth; the closed two-prime forms exist as
// an independent cross-check. F depends on n only through rad(n).

#pragma once

#include <map>

#include "dualscope/ntheory.hpp"
#include "dualscope/rational.hpp"

namespace dualscope {

// b(r, m, n). r must be a prime divisor of m (other primes are rejected:
// F never consults them). Requires m, n > 1.
int b_exponent(i64 r, const FactoredInt& m, const FactoredInt& n);

// F(m, n) from the definition. Requires m, n > 1.
i64 field_descent_F(const FactoredInt& m, const FactoredInt& n);

// F plus the b-exponents that produced it (for reporting).
struct FParams {
    i64 F = 1;
    std::map<i64, int> b_values;  // prime p | m -> b(p, m, n)
};
FParams field_descent_params(const FactoredInt& m, const FactoredInt& n);

// Closed forms for F(m, n) when omega(m) <= 2 and rad(n) | m. Oracle twin
// of field_descent_F; the two must agree wherever both are defined.
i64 F_closed_two_prime(const FactoredInt& m, const FactoredInt& n);

// The exact rational C^2 F(m,n)^2 / (4 phi(F(m,n))).
Rat fbound(const FactoredInt& m, const FactoredInt& n, i64 c);

// n > fbound(m, n, C): no X in Z[zeta_m] with coefficients in [0, C] has
// |X|^2 = n. n <= 1 is never excluded.
bool fbound_excludes(const FactoredInt& m, const FactoredInt& n, i64 c);

// The bound computed from the exponent product with only the exponent of 2
// clamped to nu_2(m) (odd prime exponents left unclamped). Weaker than
// fbound (F divides the product and x^2/phi(x) is increasing at fixed
// radical), hence still a sound exclusion test; this is the flavor the
// published two-prime census arithmetic uses.
Rat fbound_2capped(const FactoredInt& m, const FactoredInt& n, i64 c);
bool fbound_2capped_excludes(const FactoredInt& m, const FactoredInt& n, i64 c);

}  // namespace dualscope
