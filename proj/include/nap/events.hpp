// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nap/intervals.hpp"
#include "nap/quadirr.hpp"
#include "nap/quasipoly.hpp"

namespace nap {

enum class SpaceKind { Nat, Q, R, Coin };
const char* space_name(SpaceKind k);

// ------------------------------------------------------------------ nat

/// A subset of the positive naturals: a union of full residue classes
/// modulo K plus finitely many added/removed points. Closed under the
/// Boolean operations; the normal form has minimal modulus and minimal
/// exception sets, so equality is structural.
class NatEvent {
  public:
    NatEvent(); // empty

    static NatEvent empty() { return NatEvent(); }
    static NatEvent full();
    /// N_{k,l} = {k-l, 2k-l, 3k-l, ...}, 0 <= l < k.
    static NatEvent progression(long long k, long long l);
    static NatEvent finite(std::set<long long> points);

    bool member(long long x) const; // x >= 1

    NatEvent unite(const NatEvent& o) const;
    NatEvent intersect(const NatEvent& o) const;
    NatEvent complement() const;

    bool is_empty() const;
    bool is_full() const;
    bool subset_of(const NatEvent& o) const;
    bool operator==(const NatEvent&) const = default;

    /// |A n {1..n}|, exact for every n >= 0.
    Int count_upto(long long n) const;

    /// Quasi-polynomial equal to count_upto(n) for every n >= threshold.
    QuasiPoly eventual_count() const;

    int modulus() const { return modulus_; }
    const std::vector<bool>& residues() const { return residues_; }
    const std::set<long long>& added() const { return add_; }
    const std::set<long long>& removed() const { return rem_; }

    std::string to_string() const;

  private:
    int modulus_;                // K >= 1
    std::vector<bool> residues_; // size K; class r included iff residues_[r]
    std::set<long long> add_, rem_;

    bool base_member(long long x) const;
    void canonicalize();
    static NatEvent combine(const NatEvent& a, const NatEvent& b, bool (*op)(bool, bool));
};

/// Weight function on the naturals: one strictly positive rational per
/// residue class modulo a base period, plus finitely many positive point
/// exceptions. The other spaces only carry the constant weight 1.
struct WeightFn {
    int modulus = 1;
    std::vector<Rat> class_weights = {Rat(1)};
    std::map<long long, Rat> exceptions;

    static WeightFn fair() { return WeightFn{}; }
    bool is_fair() const;
    Rat weight(long long x) const;
    void validate() const; // throws DomainError on nonpositive weights
};

/// Sum of w over A n {1..n}, exact.
Rat weighted_count_upto(const NatEvent& a, const WeightFn& w, long long n);
/// Quasi-polynomial version of the above, valid beyond its threshold.
QuasiPoly weighted_eventual_count(const NatEvent& a, const WeightFn& w);

// -------------------------------------------------------------------- q

struct RatCmp3 {
    int operator()(const Rat& a, const Rat& b) const {
        return a == b ? 0 : (a < b ? -1 : 1);
    }
};
using QIntervalSet = BasicIntervalSet<Rat, RatCmp3>;

/// Integers described as residue classes with per-class index ranges:
/// x = r + j*K belongs iff j lies in the class-r range set. Closed under
/// Boolean operations; hosts embedded progressions, the integer/natural
/// embeddings and integer interval fragments.
class IntAPSet {
  public:
    IntAPSet(); // empty, modulus 1

    static IntAPSet empty() { return IntAPSet(); }
    static IntAPSet all();
    static IntAPSet from_range(std::optional<long long> lo, std::optional<long long> hi);
    /// {x : x ≡ r (mod K), x >= start} — an embedded progression tail.
    static IntAPSet progression(long long K, long long r, long long start);
    static IntAPSet singleton(long long x);

    bool contains(long long x) const;
    IntAPSet unite(const IntAPSet& o) const;
    IntAPSet intersect(const IntAPSet& o) const;
    IntAPSet complement() const;
    bool empty_set() const;

    long long modulus() const { return modulus_; }
    const std::vector<RangeSet>& classes() const { return classes_; }

    /// Exact count in the window [-n, n].
    long long count_window(long long n) const;
    /// Quasi-polynomial for count_window(n), n >= threshold.
    QuasiPoly window_count_qp() const;

    bool operator==(const IntAPSet&) const = default;

  private:
    long long modulus_;
    std::vector<RangeSet> classes_;

    IntAPSet lifted(long long K) const;
    void reduce();
};

/// A finitely-describable subset of the rationals. The non-integer part
/// is an interval set (meaningful away from the integers) with finite
/// exception sets; the integers are carried exactly by an IntAPSet.
class QEvent {
  public:
    QEvent(); // empty

    static QEvent empty() { return QEvent(); }
    static QEvent full();
    static QEvent interval(const Rat& a, const Rat& b); // [a, b)_Q
    static QEvent halfline(const Rat& a);               // [a, +oo)_Q
    static QEvent nat_embed();
    static QEvent int_embed();
    static QEvent finite(const std::set<Rat>& points);
    static QEvent from_nat(const NatEvent& a);

    bool member(const Rat& x) const;

    QEvent unite(const QEvent& o) const;
    QEvent intersect(const QEvent& o) const;
    QEvent complement() const;

    bool is_empty() const;
    bool is_full() const;
    bool same_set(const QEvent& o) const; // semantic equality
    bool operator==(const QEvent&) const = default;

    /// |A n mu_n| for any n >= 1 (mu_n = {p/n : |p/n| <= n}), exact.
    Int count_at(long long n) const;

    /// Valid at factorial grid indices n >= threshold.
    QuasiPoly eventual_count() const;

    std::string to_string() const;

  private:
    QIntervalSet nonint_;
    IntAPSet ints_;
    std::set<Rat> add_, rem_; // non-integer exception points
};

// -------------------------------------------------------------------- r

struct RealCmp3 {
    int operator()(const RealPoint& a, const RealPoint& b) const { return compare(a, b); }
};
using RIntervalSet = BasicIntervalSet<RealPoint, RealCmp3>;

/// Pair of counting quasi-polynomials enclosing |A n grid|; lower==upper
/// and exact==true when every endpoint is rational.
struct CountBounds {
    QuasiPoly lower, upper;
    bool exact;
};

/// A finite union of real intervals with rational or quadratic-irrational
/// endpoints, plus finite sets of rational points.
class REvent {
  public:
    REvent(); // empty

    static REvent empty() { return REvent(); }
    static REvent full();
    static REvent interval(const RealPoint& a, const RealPoint& b); // [a,b)_R
    static REvent finite(const std::set<Rat>& points);

    bool member(const RealPoint& x) const;

    REvent unite(const REvent& o) const;
    REvent intersect(const REvent& o) const;
    REvent complement() const;

    bool is_empty() const;
    bool is_full() const;
    bool operator==(const REvent&) const = default;

    bool has_irrational_endpoint() const;

    /// |A n mu_{n,theta}|, exact for any n >= 1 and explicit theta.
    Int count_at(long long n, const std::vector<QuadIrr>& theta) const;

    /// Counting bounds over the (n, |theta|) grid family; exact when all
    /// endpoints are rational. `bracket_denominator` controls how tightly
    /// irrational endpoints are bracketed by rationals (refinable).
    CountBounds eventual_count(long long bracket_denominator = 120) const;

    std::string to_string() const;

  private:
    RIntervalSet intervals_;
    std::set<Rat> add_, rem_;
};

// ----------------------------------------------------------------- coin

/// An eventually constant H/T sequence: explicit finite prefix, then a
/// constant tail. The canonical form strips prefix symbols equal to the
/// tail. H = true.
struct CoinSeq {
    std::vector<bool> prefix;
    bool tail = true;

    CoinSeq() = default;
    CoinSeq(std::vector<bool> p, bool t);
    static CoinSeq constant(bool t) { return CoinSeq({}, t); }

    bool at(size_t i) const { return i < prefix.size() ? prefix[i] : tail; } // 0-based
    CoinSeq shifted(size_t k) const;
    bool is_constant() const { return prefix.empty(); }

    bool operator==(const CoinSeq&) const = default;
    auto operator<=>(const CoinSeq&) const = default;
    std::string to_string() const;
};

/// A subset of the infinite coin-toss space: a set of assignments over a
/// finite index window (a disjoint union of cylinders) plus finitely many
/// added/removed eventually constant sequences.
class CoinEvent {
  public:
    CoinEvent(); // empty

    static CoinEvent empty() { return CoinEvent(); }
    static CoinEvent full();
    /// Positions are 1-based; value true = H.
    static CoinEvent cylinder(const std::vector<std::pair<int, bool>>& constraints);
    static CoinEvent finite(const std::set<CoinSeq>& seqs);

    bool member(const CoinSeq& w) const;

    CoinEvent unite(const CoinEvent& o) const;
    CoinEvent intersect(const CoinEvent& o) const;
    CoinEvent complement() const;

    bool is_empty() const;
    bool is_full() const;
    bool operator==(const CoinEvent&) const = default;

    int window() const { return window_; }
    long long assignment_count() const; // included assignments over the window

    /// |A n lambda_{N,sigma}| for an explicit sigma of eventually
    /// constant sequences, exact for any N >= 0.
    Int count_at(int bigN, const std::vector<CoinSeq>& sigma) const;

    /// (included/2^M) * h*s + (|add|-|rem|); requires sigma to contain
    /// the cited constant tails (recorded in the result).
    QuasiPoly eventual_count() const;

    std::string to_string() const;

  private:
    int window_;               // M >= 0
    std::vector<bool> assign_; // size 2^M; assignment bits: bit i = position i+1 is H
    std::set<CoinSeq> add_, rem_;

    CoinEvent widened(int m) const;
    void canonicalize();
};

} // namespace nap
