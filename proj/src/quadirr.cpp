// SPDX-License-Identifier: Apache-2.0
#include "nap/quadirr.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "nap/error.hpp"

namespace nap {

namespace {

// pull square factors out of d; returns (squarefree part, extracted root)
std::pair<Int, Int> squarefree_split(Int d) {
    Int root = 1;
    for (Int p = 2; p * p * p * p <= d * d && p <= 100000; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            root *= p;
        }
    }
    return {d, root};
}

// floor(sqrt(v)) for nonnegative v
Int isqrt(const Int& v) { return boost::multiprecision::sqrt(v); }

bool is_perfect_square(const Int& v) {
    Int r = isqrt(v);
    return r * r == v;
}

} // namespace

QuadIrr::QuadIrr(Rat rational_part, Rat coef, Int radicand)
    : r_(std::move(rational_part)), s_(std::move(coef)), d_(std::move(radicand)) {
    if (s_ == 0) throw DomainError("quadratic irrational with zero radical part");
    if (d_ < 2) throw DomainError("radicand must be >= 2");
    auto [sf, root] = squarefree_split(d_);
    d_ = sf;
    s_ *= Rat(root);
    if (d_ == 1 || is_perfect_square(d_))
        throw DomainError("radicand is a perfect square; value is rational");
}

QuadIrr QuadIrr::operator*(const Rat& q) const {
    if (q == 0) throw DomainError("scaling a quadratic irrational to zero");
    return QuadIrr(r_ * q, s_ * q, d_);
}

int QuadIrr::compare(const Rat& q) const {
    // sign of (r - q) + s*sqrt(d)
    Rat a = r_ - q;
    if (a == 0) return s_ > 0 ? 1 : -1;
    if (a > 0 && s_ > 0) return 1;
    if (a < 0 && s_ < 0) return -1;
    // opposite signs: compare a^2 with s^2 d
    Rat lhs = a * a, rhs = s_ * s_ * Rat(d_);
    if (lhs == rhs) throw DomainError("degenerate radicand"); // cannot happen, d squarefree
    bool abs_a_bigger = lhs > rhs;
    return abs_a_bigger ? (a > 0 ? 1 : -1) : (s_ > 0 ? 1 : -1);
}

int QuadIrr::compare(const QuadIrr& o) const {
    if (d_ == o.d_) {
        Rat ds = s_ - o.s_;
        if (ds == 0) {
            Rat dr = r_ - o.r_;
            return dr == 0 ? 0 : (dr > 0 ? 1 : -1);
        }
        // (r - r') + (s - s')*sqrt(d) against zero
        return QuadIrr(r_ - o.r_, ds, d_).compare(Rat(0));
    }
    // distinct squarefree radicands: the difference is irrational, so
    // bracket refinement separates the two values
    for (int k = 4;; k *= 2) {
        auto [lo1, hi1] = enclosure(k);
        auto [lo2, hi2] = o.enclosure(k);
        if (lo1 > hi2) return 1;
        if (hi1 < lo2) return -1;
        if (k > 1 << 20) throw PrecisionError("radical comparison did not separate");
    }
}

Int QuadIrr::floor() const {
    for (int k = 4;; k *= 2) {
        auto [lo, hi] = enclosure(k);
        Int fl = floor_int(lo), fh = floor_int(hi);
        if (fl == fh) return fl;
        if (k > 1 << 20) throw PrecisionError("radical floor did not converge");
    }
}

std::pair<Rat, Rat> QuadIrr::enclosure(int k) const {
    // sqrt(d) in [m/2^k, (m+1)/2^k] with m = isqrt(d * 4^k)
    Int scale = Int(1) << k;
    Int m = isqrt(d_ * scale * scale);
    Rat lo = Rat(m, scale), hi = Rat(m + 1, scale);
    if (s_ < 0) std::swap(lo, hi);
    return {r_ + s_ * lo, r_ + s_ * hi};
}

std::string QuadIrr::to_string() const {
    std::string out;
    if (r_ != 0) out += rat_to_string(r_);
    if (s_ == 1)
        out += (out.empty() ? "" : "+");
    else if (s_ == -1)
        out += "-";
    else
        out += (out.empty() || s_ < 0 ? "" : "+") + rat_to_string(s_) + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
}

int compare(const RealPoint& a, const RealPoint& b) {
    if (std::holds_alternative<Rat>(a)) {
        const Rat& x = std::get<Rat>(a);
        if (std::holds_alternative<Rat>(b)) {
            const Rat& y = std::get<Rat>(b);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        return -std::get<QuadIrr>(b).compare(x);
    }
    const QuadIrr& x = std::get<QuadIrr>(a);
    if (std::holds_alternative<Rat>(b)) return x.compare(std::get<Rat>(b));
    return x.compare(std::get<QuadIrr>(b));
}

bool is_rational(const RealPoint& p) { return std::holds_alternative<Rat>(p); }

std::string to_string(const RealPoint& p) {
    if (is_rational(p)) return rat_to_string(std::get<Rat>(p));
    return std::get<QuadIrr>(p).to_string();
}

RealPoint real_scale(const RealPoint& x, const Rat& q) {
    if (is_rational(x)) return Rat(std::get<Rat>(x) * q);
    if (q == 0) return Rat(0);
    return std::get<QuadIrr>(x) * q;
}

RealPoint real_add(const RealPoint& x, const Rat& q) {
    if (is_rational(x)) return Rat(std::get<Rat>(x) + q);
    return std::get<QuadIrr>(x) + q;
}

Int floor_real(const RealPoint& x) {
    if (is_rational(x)) return floor_int(std::get<Rat>(x));
    return std::get<QuadIrr>(x).floor();
}

Int ceil_real(const RealPoint& x) {
    if (is_rational(x)) return ceil_int(std::get<Rat>(x));
    return std::get<QuadIrr>(x).floor() + 1; // irrational: never an integer
}

Int ceil_shifted(const RealPoint& x, const Int& n, const QuadIrr& a) {
    if (is_rational(x)) {
        // rational*n - quad is a single quadratic irrational
        QuadIrr v = (-a) + std::get<Rat>(x) * Rat(n);
        return v.floor() + 1;
    }
    const QuadIrr& q = std::get<QuadIrr>(x);
    if (q.radicand() == a.radicand()) {
        Rat coef = q.coef() * Rat(n) - a.coef();
        Rat rat = q.rational_part() * Rat(n) - a.rational_part();
        if (coef == 0) return ceil_int(rat); // radicals cancelled exactly
        return QuadIrr(rat, coef, q.radicand()).floor() + 1;
    }
    // two incommensurable radicals: the value is irrational; refine both
    for (int k = 4;; k *= 2) {
        auto [xl, xh] = q.enclosure(k);
        auto [al, ah] = a.enclosure(k);
        Rat lo = xl * Rat(n) - ah, hi = xh * Rat(n) - al;
        Int cl = ceil_int(lo), ch = ceil_int(hi);
        if (cl == ch) return cl; // the true value is irrational, no ties

        if (k > 1 << 20) throw PrecisionError("radical ceiling did not converge");
    }
}

} // namespace nap
