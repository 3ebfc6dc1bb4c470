// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nap/rational.hpp"

namespace nap {

// Polynomials live in at most four variables. The same machinery serves
// two variable universes:
//   - field generators  a, t, g      (slots 0,1,2; slot 3 unused)
//   - grid index vars   n, t, h, s   (slots 0,1,2,3)
inline constexpr int kNumVars = 4;

using VarNames = std::array<const char*, kNumVars>;
inline constexpr VarNames kGeneratorNames{"a", "t", "g", "?"};
inline constexpr VarNames kIndexNames{"n", "t", "h", "s"};

/// Exponent vector. Ordered by graded lex, slot 0 strongest
/// (ALPHA > TAU > GAMMA for generators).
struct Monomial {
    std::array<uint32_t, kNumVars> e{0, 0, 0, 0};

    uint32_t total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool is_constant() const { return total_degree() == 0; }

    bool operator==(const Monomial&) const = default;

    /// true if every exponent of d is <= the matching exponent here.
    bool divisible_by(const Monomial& d) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] < d.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
};

/// Graded-lexicographic comparison; returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Rat, terms kept sorted in
/// descending graded-lex order with no zero coefficients. Equality of
/// canonical forms is structural equality.
class Poly {
  public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    explicit Poly(const Rat& c);
    static Poly variable(int slot, uint32_t power = 1);
    static Poly from_terms(std::vector<Term> terms); // normalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
    }
    Rat constant_value() const; // requires is_constant()
    Rat constant_term() const;  // coefficient of the 1 monomial

    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); } // requires !is_zero

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree in a single variable; -1 for the zero polynomial.
    int degree_in(int slot) const;
    /// Bitmask of variable slots that actually occur.
    unsigned vars_mask() const;
    bool is_univariate() const; // at most one variable occurs

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly pow(uint32_t k) const;

    bool operator==(const Poly&) const = default;

    Rat eval(const std::array<Rat, kNumVars>& v) const;

    /// Substitute a polynomial for one variable (used to embed index
    /// polynomials into the generator universe).
    Poly substitute(int slot, const Poly& value) const;

    /// gcd of the rational coefficients (nonnegative); 0 for zero poly.
    Rat content() const;
    /// this / content: integer coprime coefficients, sign preserved.
    Poly primitive_part() const;

    std::string to_string(const VarNames& names) const;

  private:
    std::vector<Term> terms_;
    void normalize();
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Exact multivariate division; empty if b does not divide a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// p viewed as univariate in `slot`: coefficient polynomials by ascending
/// power, size degree_in(slot)+1 (size 1 when slot does not occur).
std::vector<Poly> coefficients_in(const Poly& p, int slot);

/// Polynomial gcd, normalized primitive with positive leading
/// coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace nap
