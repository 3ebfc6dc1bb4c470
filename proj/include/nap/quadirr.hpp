// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <variant>

#include "nap/rational.hpp"

namespace nap {

/// A quadratic irrational r + s*sqrt(d), s != 0, d squarefree >= 2.
/// Every comparison against rationals and other quadratic irrationals is
/// exact, so real-grid membership never needs approximation.
class QuadIrr {
  public:
    QuadIrr(Rat rational_part, Rat coef, Int radicand); // canonicalizes d

    const Rat& rational_part() const { return r_; }
    const Rat& coef() const { return s_; }
    const Int& radicand() const { return d_; }

    QuadIrr operator+(const Rat& q) const { return QuadIrr(r_ + q, s_, d_); }
    QuadIrr operator-(const Rat& q) const { return QuadIrr(r_ - q, s_, d_); }
    QuadIrr operator*(const Rat& q) const; // q != 0
    QuadIrr operator-() const { return QuadIrr(-r_, -s_, d_); }

    int compare(const Rat& q) const;      // sign of *this - q
    int compare(const QuadIrr& o) const;  // sign of *this - o

    bool operator==(const QuadIrr& o) const {
        return r_ == o.r_ && s_ == o.s_ && d_ == o.d_;
    }

    Int floor() const;
    /// Rational bracket [lo, hi] containing the value, width <= 4^-k.
    std::pair<Rat, Rat> enclosure(int k) const;

    std::string to_string() const;

  private:
    Rat r_, s_;
    Int d_;
};

/// A point of the real line the engine can touch: rational or quadratic
/// irrational.
using RealPoint = std::variant<Rat, QuadIrr>;

int compare(const RealPoint& a, const RealPoint& b);
inline bool real_less(const RealPoint& a, const RealPoint& b) { return compare(a, b) < 0; }
inline bool real_eq(const RealPoint& a, const RealPoint& b) { return compare(a, b) == 0; }
bool is_rational(const RealPoint& p);
std::string to_string(const RealPoint& p);

/// x * q and x + q for mixed points.
RealPoint real_scale(const RealPoint& x, const Rat& q);
RealPoint real_add(const RealPoint& x, const Rat& q);

/// ceil(x * n - a) for a grid shift; exact even when x and a carry
/// different radicands (the mixed sum is then provably irrational, so
/// bracket refinement terminates).
Int ceil_shifted(const RealPoint& x, const Int& n, const QuadIrr& a);

Int floor_real(const RealPoint& x);
Int ceil_real(const RealPoint& x);

} // namespace nap
