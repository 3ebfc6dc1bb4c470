// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "nap/polynomial.hpp"

namespace nap {

/// The three infinite generators of the value field. Each is a positive
/// infinite element (larger than every rational); no order relation holds
/// between distinct generators.
///   Alpha — limit of the grid size n        (numerosity of the naturals)
///   Tau   — limit of the irrational-cloud size per cell on real grids
///   Gamma — limit of 2^N * |sigma| on coin-toss grids
enum class Gen { Alpha = 0, Tau = 1, Gamma = 2 };

enum class Cmp { Less, Equal, Greater, Undetermined };

/// Sign of p when every occurring variable is a positive infinite
/// quantity with no mutual order relation. nullopt when not determined
/// by the conservative rules (never wrong when determined).
std::optional<int> poly_sign_at_infinity(const Poly& p);

/// An element of the ordered field Q(alpha, tau, gamma) of rational
/// functions in the infinite generators.
///
/// Canonical form: numerator and denominator have integer coefficients
/// with joint content 1, their polynomial gcd is 1, and the denominator's
/// graded-lex leading coefficient is positive. Two values are equal iff
/// their canonical forms are structurally identical.
class HyperReal {
  public:
    HyperReal() : num_(Rat(0)), den_(Rat(1)) {}
    /*implicit*/ HyperReal(const Rat& q);
    /*implicit*/ HyperReal(long long v) : HyperReal(Rat(v)) {}
    HyperReal(Poly num, Poly den); // canonicalizes; den must be nonzero

    static HyperReal generator(Gen g);
    static HyperReal alpha() { return generator(Gen::Alpha); }
    static HyperReal tau() { return generator(Gen::Tau); }
    static HyperReal gamma() { return generator(Gen::Gamma); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat as_rational() const; // requires is_rational()

    /// Bitmask over Gen slots of generators that occur.
    unsigned gens_mask() const { return num_.vars_mask() | den_.vars_mask(); }
    bool is_univariate() const {
        unsigned m = gens_mask();
        return (m & (m - 1)) == 0;
    }

    HyperReal operator-() const;
    HyperReal operator+(const HyperReal& o) const;
    HyperReal operator-(const HyperReal& o) const;
    HyperReal operator*(const HyperReal& o) const;
    HyperReal operator/(const HyperReal& o) const; // throws DomainError on 0
    HyperReal inverse() const;

    bool operator==(const HyperReal&) const = default;
    /// Deterministic total order on representations (not the field order);
    /// used to sort candidate sets reproducibly.
    static bool repr_less(const HyperReal& a, const HyperReal& b);

    /// Exact evaluation with all generators set to the given rationals.
    Rat eval(const Rat& a, const Rat& t, const Rat& g) const;

    std::string to_string() const; // "(num)/(den)" in generator names

    /// Parses the rendering grammar: +,-,*,/,^ over rationals and a,t,g.
    static HyperReal parse(const std::string& text);

  private:
    Poly num_, den_;
    void canonicalize();
};

Cmp compare(const HyperReal& x, const HyperReal& y);

/// sign of x: +1, -1, 0, or nullopt when undetermined.
std::optional<int> hyper_sign(const HyperReal& x);

/// x is smaller in magnitude than every positive rational.
/// Univariate: degree rule. Multivariate: sound witness search; throws
/// UndeterminedError if no witness settles the question.
bool is_infinitesimal(const HyperReal& x);

/// |x| is bounded by some rational. Same error contract.
bool is_finite(const HyperReal& x);

/// The unique rational infinitely close to x (the representable fragment
/// has rational standard parts). Throws DomainError if x is not finite,
/// UndeterminedError if no certificate is found.
Rat standard_part(const HyperReal& x);

bool infinitely_close(const HyperReal& x, const HyperReal& y);

} // namespace nap
