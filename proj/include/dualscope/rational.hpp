// rational.hpp
// Exact rationals over __int128. Enough for the bound arithmetic in this
// project (numerators stay below ~10^34); comparisons cross-multiply after
// reduction, no division or floating point anywhere.

#pragma once

#include <string>

#include "dualscope/wide.hpp"

namespace dualscope {

struct Rat {
    i128 num = 0;
    i128 den = 1;  // always > 0, gcd(|num|, den) == 1

    Rat() = default;
    Rat(i128 n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        u128 g = gcd_u128(num < 0 ? (u128)(-num) : (u128)num, (u128)den);
        if (g > 1) {
            num /= (i128)g;
            den /= (i128)g;
        }
    }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    // "18" for integers, "131769/880" otherwise
    std::string str() const {
        if (den == 1) return to_string_i128(num);
        return to_string_i128(num) + "/" + to_string_i128(den);
    }

    static Rat parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Rat(parse_i128(s));
        return Rat(parse_i128(s.substr(0, pos)), parse_i128(s.substr(pos + 1)));
    }
};

}  // namespace dualscope
