// wide.hpp
// 128-bit integer helpers: modular arithmetic with wide moduli, string
// conversion, saturating products. Used everywhere exact arithmetic on
// values beyond 64 bits is needed (q^2 for 12-digit q, |S|^3, F^2).

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dualscope {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

// a*b mod m for moduli up to 2^126, via double-and-add (no 256-bit product).
inline u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    if (m <= std::numeric_limits<u64>::max()) return (u128)mulmod_u64((u64)a, (u64)b, (u64)m);
    // fast path: product fits in 128 bits
    if (a <= std::numeric_limits<u64>::max() && b <= std::numeric_limits<u64>::max()) return a * b % m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline u128 powmod_u128(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u128(r, base, m);
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128((u128)(-v));
    return to_string_u128((u128)v);
}

// Parse a decimal string (optionally signed) into i128. Throws on junk.
inline i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// a*b, clamped to `cap` on overflow or when exceeding cap.
inline u128 mul_saturate(u128 a, u128 b, u128 cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return a * b;
}

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace dualscope
