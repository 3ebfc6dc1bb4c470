// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <vector>

namespace nap {

/// Finite union of half-open intervals [lo, hi) over an ordered value
/// type; an absent bound is -oo / +oo. Pieces are kept sorted, disjoint
/// and non-adjacent, so structural equality is set equality up to the
/// comparator.
template <class V, class Cmp3 /* (V,V)->int */>
class BasicIntervalSet {
  public:
    struct Piece {
        std::optional<V> lo, hi;
        bool operator==(const Piece&) const = default;
    };

    BasicIntervalSet() = default;
    explicit BasicIntervalSet(Cmp3 cmp) : cmp_(cmp) {}

    static BasicIntervalSet all(Cmp3 cmp = Cmp3{}) {
        BasicIntervalSet s(cmp);
        s.pieces_.push_back({std::nullopt, std::nullopt});
        return s;
    }
    static BasicIntervalSet interval(std::optional<V> lo, std::optional<V> hi,
                                     Cmp3 cmp = Cmp3{}) {
        BasicIntervalSet s(cmp);
        if (lo && hi && cmp(*lo, *hi) >= 0) return s; // empty or degenerate
        s.pieces_.push_back({std::move(lo), std::move(hi)});
        return s;
    }

    bool empty() const { return pieces_.empty(); }
    bool is_all() const {
        return pieces_.size() == 1 && !pieces_[0].lo && !pieces_[0].hi;
    }
    const std::vector<Piece>& pieces() const { return pieces_; }

    bool contains(const V& x) const {
        for (auto& p : pieces_) {
            if (p.lo && cmp_(x, *p.lo) < 0) return false; // sorted: stop early
            if (!p.hi || cmp_(x, *p.hi) < 0) return !p.lo || cmp_(x, *p.lo) >= 0;
        }
        return false;
    }

    BasicIntervalSet unite(const BasicIntervalSet& o) const {
        std::vector<Piece> all;
        all.insert(all.end(), pieces_.begin(), pieces_.end());
        all.insert(all.end(), o.pieces_.begin(), o.pieces_.end());
        std::sort(all.begin(), all.end(), [&](const Piece& a, const Piece& b) {
            return lo_cmp(a.lo, b.lo) < 0;
        });
        BasicIntervalSet r(cmp_);
        for (auto& p : all) {
            if (!r.pieces_.empty()) {
                Piece& last = r.pieces_.back();
                // overlap or adjacency: p.lo <= last.hi
                if (!last.hi || (p.lo && cmp_(*p.lo, *last.hi) <= 0)) {
                    if (last.hi && (!p.hi || cmp_(*p.hi, *last.hi) > 0)) last.hi = p.hi;
                    continue;
                }
            }
            r.pieces_.push_back(p);
        }
        return r;
    }

    BasicIntervalSet intersect(const BasicIntervalSet& o) const {
        BasicIntervalSet r(cmp_);
        for (auto& a : pieces_)
            for (auto& b : o.pieces_) {
                std::optional<V> lo = lo_cmp(a.lo, b.lo) >= 0 ? a.lo : b.lo;
                std::optional<V> hi = hi_cmp(a.hi, b.hi) <= 0 ? a.hi : b.hi;
                if (lo && hi && cmp_(*lo, *hi) >= 0) continue;
                r.pieces_.push_back({lo, hi});
            }
        std::sort(r.pieces_.begin(), r.pieces_.end(), [&](const Piece& a, const Piece& b) {
            return lo_cmp(a.lo, b.lo) < 0;
        });
        return r;
    }

    BasicIntervalSet complement() const {
        BasicIntervalSet r(cmp_);
        std::optional<V> cursor; // start of the current gap; nullopt = -oo
        bool at_start = true;
        for (auto& p : pieces_) {
            if (p.lo && (at_start || cmp_(*cursor, *p.lo) < 0))
                r.pieces_.push_back({at_start ? std::nullopt : cursor, p.lo});
            if (!p.hi) return r; // the piece runs to +oo
            cursor = p.hi;
            at_start = false;
        }
        r.pieces_.push_back({at_start ? std::nullopt : cursor, std::nullopt});
        return r;
    }

    bool operator==(const BasicIntervalSet& o) const { return pieces_ == o.pieces_; }

  private:
    std::vector<Piece> pieces_;
    Cmp3 cmp_{};

    int lo_cmp(const std::optional<V>& a, const std::optional<V>& b) const {
        if (!a) return b ? -1 : 0;
        if (!b) return 1;
        return cmp_(*a, *b);
    }
    int hi_cmp(const std::optional<V>& a, const std::optional<V>& b) const {
        if (!a) return b ? 1 : 0;
        if (!b) return -1;
        return cmp_(*a, *b);
    }
};

/// Sorted disjoint integer ranges [lo, hi] with optional unbounded ends;
/// the integer layer of rational events stores one of these per residue
/// class.
class RangeSet {
  public:
    struct Range {
        std::optional<long long> lo, hi; // inclusive
        bool operator==(const Range&) const = default;
    };

    RangeSet() = default;
    static RangeSet all() {
        RangeSet r;
        r.ranges_.push_back({std::nullopt, std::nullopt});
        return r;
    }
    static RangeSet range(std::optional<long long> lo, std::optional<long long> hi) {
        RangeSet r;
        if (lo && hi && *lo > *hi) return r;
        r.ranges_.push_back({lo, hi});
        return r;
    }

    bool empty() const { return ranges_.empty(); }
    const std::vector<Range>& ranges() const { return ranges_; }

    bool contains(long long x) const {
        for (auto& r : ranges_) {
            if (r.lo && x < *r.lo) return false;
            if (!r.hi || x <= *r.hi) return !r.lo || x >= *r.lo;
        }
        return false;
    }

    RangeSet unite(const RangeSet& o) const {
        std::vector<Range> all;
        all.insert(all.end(), ranges_.begin(), ranges_.end());
        all.insert(all.end(), o.ranges_.begin(), o.ranges_.end());
        std::sort(all.begin(), all.end(), [](const Range& a, const Range& b) {
            long long la = a.lo ? *a.lo : LLONG_MIN, lb = b.lo ? *b.lo : LLONG_MIN;
            return la < lb;
        });
        RangeSet r;
        for (auto& p : all) {
            if (!r.ranges_.empty()) {
                Range& last = r.ranges_.back();
                // merge when p.lo <= last.hi + 1 (adjacency collapses)
                bool overlap = !last.hi || !p.lo || *p.lo <= *last.hi + 1;
                if (overlap) {
                    if (last.hi && (!p.hi || *p.hi > *last.hi)) last.hi = p.hi;
                    continue;
                }
            }
            r.ranges_.push_back(p);
        }
        return r;
    }

    RangeSet intersect(const RangeSet& o) const {
        RangeSet r;
        for (auto& a : ranges_)
            for (auto& b : o.ranges_) {
                std::optional<long long> lo =
                    !a.lo ? b.lo : (!b.lo ? a.lo : std::optional(std::max(*a.lo, *b.lo)));
                std::optional<long long> hi =
                    !a.hi ? b.hi : (!b.hi ? a.hi : std::optional(std::min(*a.hi, *b.hi)));
                if (lo && hi && *lo > *hi) continue;
                r.ranges_.push_back({lo, hi});
            }
        std::sort(r.ranges_.begin(), r.ranges_.end(), [](const Range& a, const Range& b) {
            long long la = a.lo ? *a.lo : LLONG_MIN, lb = b.lo ? *b.lo : LLONG_MIN;
            return la < lb;
        });
        return r;
    }

    RangeSet complement() const {
        RangeSet r;
        std::optional<long long> cursor;
        bool at_start = true;
        for (auto& p : ranges_) {
            if (p.lo && (at_start || *cursor < *p.lo))
                r.ranges_.push_back({cursor, *p.lo - 1});
            at_start = false;
            if (!p.hi) return r;
            cursor = *p.hi + 1;
        }
        r.ranges_.push_back({at_start ? std::nullopt : cursor, std::nullopt});
        return r;
    }

    /// Exact count of members in the window [a, b].
    long long count_in(long long a, long long b) const {
        long long total = 0;
        for (auto& r : ranges_) {
            long long lo = r.lo ? std::max(*r.lo, a) : a;
            long long hi = r.hi ? std::min(*r.hi, b) : b;
            if (lo <= hi) total += hi - lo + 1;
        }
        return total;
    }

    bool operator==(const RangeSet&) const = default;

  private:
    std::vector<Range> ranges_;
};

} // namespace nap
