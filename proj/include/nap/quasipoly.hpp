// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nap/hyperreal.hpp"
#include "nap/polynomial.hpp"

namespace nap {

/// The seven directed families of finite conditioning sets. Grid-size
/// variables by family:
///   AllN/EvenN/OddN/FactorialN  — n   (initial segments {1..n})
///   QGrid                       — n   (n = m!, the grid mu_n)
///   RGrid                       — n,t (n = m!, t = |theta|)
///   CoinCT                      — h,s (h = 2^N, s = |sigma|)
enum class Family { AllN, EvenN, OddN, FactorialN, QGrid, RGrid, CoinCT };

const char* family_name(Family f);

/// Residues mod `period` that occur for arbitrarily large family indices.
/// Factorial-indexed families are eventually divisible by any fixed
/// period, so only residue 0 survives.
std::vector<int> residues_hit(Family f, int period);

/// Index-variable slots for quasi-polynomials.
inline constexpr int kIdxN = 0, kIdxT = 1, kIdxH = 2, kIdxS = 3;

// Coin grids count as valid only once sigma contains the cited constant
// tails; these bits record that part of the threshold.
inline constexpr unsigned kTailH = 1u, kTailT = 2u;

/// An eventual counting function: for every family index with n >= n0
/// (and, on coin grids, sigma containing the required tails) the value is
/// branch[n mod period](index variables). The classic shape "polynomial
/// plus periodic constant correction" is the special case where branches
/// differ only in their constant terms; products of such functions need
/// the general per-residue form, which is what we store.
class QuasiPoly {
  public:
    QuasiPoly() : period_(1), threshold_(1), branches_(1), tails_(0) {}

    static QuasiPoly constant(const Rat& r);
    static QuasiPoly from_poly(Poly p, long long threshold);
    /// common part plus per-residue constant corrections
    static QuasiPoly periodic(const Poly& common, std::vector<Rat> corrections,
                              long long threshold);
    static QuasiPoly from_branches(std::vector<Poly> branches, long long threshold);

    int period() const { return period_; }
    long long threshold() const { return threshold_; }
    const std::vector<Poly>& branches() const { return branches_; }
    const Poly& branch_for(long long n) const;
    unsigned required_tails() const { return tails_; }
    void require_tails(unsigned mask) { tails_ |= mask; }

    bool is_zero() const;

    Rat eval_nat(long long n) const;
    Rat eval_rt(long long n, long long t) const;
    Rat eval_coin(int bigN, long long sigma_size) const;

    /// All branches share their non-constant part.
    bool is_standard_shape() const;
    Poly polynomial_part() const;         // standard shape, constant-free
    std::vector<Rat> corrections() const; // standard shape

    /// Least period / threshold representative (for canonical text).
    void reduce();

    std::string to_string() const;

    bool operator==(const QuasiPoly&) const = default;

  private:
    int period_;
    long long threshold_;
    std::vector<Poly> branches_;
    unsigned tails_;

    QuasiPoly lifted(int new_period) const;
    friend QuasiPoly qp_zip(const QuasiPoly&, const QuasiPoly&,
                            const std::function<Poly(const Poly&, const Poly&)>&);
};

QuasiPoly qp_add(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly qp_sub(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly qp_mul(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly qp_scale(const Rat& r, const QuasiPoly& f);

/// Value of the Lambda-limit: one field element per surviving residue
/// class. All branches equal means the family alone determines the
/// limit; otherwise each branch is a candidate and the choice of fine
/// ideal (which no computation can see) picks among them.
class LimitResult {
  public:
    static LimitResult single(Family fam, HyperReal v);
    LimitResult(Family fam, int period, std::vector<std::pair<int, HyperReal>> branches);

    Family family() const { return family_; }
    int period() const { return period_; }
    const std::vector<std::pair<int, HyperReal>>& branches() const { return branches_; }

    bool determined() const;
    const HyperReal& value() const; // requires determined()
    /// Distinct branch values, deterministically ordered.
    std::vector<HyperReal> candidates() const;

    const HyperReal& value_at_residue(int r) const;

    LimitResult map(const std::function<HyperReal(const HyperReal&)>& fn) const;
    /// Residue-aligned combination (same residue class selects the same
    /// branch on both sides).
    static LimitResult combine(const LimitResult& a, const LimitResult& b,
                               const std::function<HyperReal(const HyperReal&, const HyperReal&)>& fn);

    bool operator==(const LimitResult&) const = default;

  private:
    Family family_;
    int period_;
    std::vector<std::pair<int, HyperReal>> branches_; // sorted by residue
};

/// Residue-aligned value equality of two limits over the same family.
bool same_limit(const LimitResult& a, const LimitResult& b);

/// Substitutes the infinite generators for the index variables
/// (n -> alpha, t -> tau, (h*s)^k -> gamma^k) on every surviving residue
/// branch. Throws UnsupportedError when the index variables do not match
/// the family or a coin branch is not a polynomial in the product h*s.
LimitResult limit(const QuasiPoly& f, Family fam);

/// f and g agree at every family index beyond some threshold.
bool eventually_equal(const QuasiPoly& f, const QuasiPoly& g, Family fam);
/// f and g differ at every family index beyond some threshold (certified
/// via a determined sign of the difference; conservative).
bool eventually_different(const QuasiPoly& f, const QuasiPoly& g, Family fam);

} // namespace nap
