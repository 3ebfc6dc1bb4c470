// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "nap/error.hpp"

namespace nap {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: coprime numerator/denominator,
// denominator > 0, zero represented as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    return Rat(n, d);
}

inline int sign(const Rat& q) { return q.sign(); }

/// Largest integer <= q.
inline Int floor_int(const Rat& q) {
    Int n = num(q), d = den(q);
    Int r = n / d;
    if (n < 0 && r * d != n) --r;
    return r;
}

/// Smallest integer >= q.
inline Int ceil_int(const Rat& q) {
    Int n = num(q), d = den(q);
    Int r = n / d;
    if (n > 0 && r * d != n) ++r;
    return r;
}

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// gcd of two rationals: the largest rational dividing both with integer
/// quotients, gcd(a/b, c/d) = gcd(a,c)/lcm(b,d). gcd(0,0) = 0.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    return Rat(gcd(num(a), num(b)), lcm(den(a), den(b)));
}

/// Renders q as "n" or "n/d".
inline std::string rat_to_string(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

/// Fixed-point decimal rendering to `digits` places, round-to-nearest,
/// ties away from zero. Display only; never fed back into arithmetic.
inline std::string rat_to_decimal(const Rat& q, int digits) {
    if (digits < 0) digits = 0;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int n = num(q) * scale * 2;
    Int d = den(q);
    Int v = n / d;
    // round half away from zero
    if (v >= 0)
        v = (v + 1) / 2;
    else
        v = (v - 1) / 2;
    bool neg = v < 0;
    if (neg) v = -v;
    std::string ds = v.str();
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = neg ? "-" : "";
    out += ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return out;
}

/// n! as an Int; m must be small (desk-scale indices).
inline Int factorial(int m) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

/// Smallest m such that q divides m!.
inline int min_factorial_divisible(const Int& q) {
    if (q == 0) throw DomainError("min_factorial_divisible(0)");
    Int target = q < 0 ? Int(-q) : q;
    Int f = 1;
    for (int m = 1;; ++m) {
        f *= m;
        if (f % target == 0) return m;
        if (m > 100000) throw ResourceLimitError("factorial search exhausted");
    }
}

} // namespace nap
