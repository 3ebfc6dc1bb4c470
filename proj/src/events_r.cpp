// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "nap/error.hpp"
#include "nap/events.hpp"

namespace nap {

REvent::REvent() = default;

REvent REvent::full() {
    REvent e;
    e.intervals_ = RIntervalSet::all();
    return e;
}

REvent REvent::interval(const RealPoint& a, const RealPoint& b) {
    REvent e;
    e.intervals_ = RIntervalSet::interval(a, b); // empty when a >= b
    return e;
}

REvent REvent::finite(const std::set<Rat>& points) {
    REvent e;
    for (auto& p : points) e.add_.insert(p);
    return e;
}

bool REvent::member(const RealPoint& x) const {
    if (is_rational(x)) {
        const Rat& q = std::get<Rat>(x);
        if (add_.count(q)) return true;
        if (rem_.count(q)) return false;
    }
    return intervals_.contains(x);
}

REvent REvent::unite(const REvent& o) const {
    REvent r;
    r.intervals_ = intervals_.unite(o.intervals_);
    std::set<Rat> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& p : pts) {
        bool want = member(p) || o.member(p);
        bool base = r.intervals_.contains(p);
        if (want && !base) r.add_.insert(p);
        if (!want && base) r.rem_.insert(p);
    }
    return r;
}

REvent REvent::intersect(const REvent& o) const {
    REvent r;
    r.intervals_ = intervals_.intersect(o.intervals_);
    std::set<Rat> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& p : pts) {
        bool want = member(p) && o.member(p);
        bool base = r.intervals_.contains(p);
        if (want && !base) r.add_.insert(p);
        if (!want && base) r.rem_.insert(p);
    }
    return r;
}

REvent REvent::complement() const {
    REvent r;
    r.intervals_ = intervals_.complement();
    r.add_ = rem_;
    r.rem_ = add_;
    return r;
}

bool REvent::is_empty() const { return intervals_.empty() && add_.empty(); }

bool REvent::is_full() const { return intervals_.is_all() && rem_.empty(); }

bool REvent::has_irrational_endpoint() const {
    for (auto& p : intervals_.pieces()) {
        if (p.lo && !is_rational(*p.lo)) return true;
        if (p.hi && !is_rational(*p.hi)) return true;
    }
    return false;
}

Int REvent::count_at(long long n, const std::vector<QuadIrr>& theta) const {
    for (auto& a : theta)
        if (a.compare(Rat(0)) <= 0 || a.compare(Rat(1)) >= 0)
            throw DomainError("theta elements must lie in (0,1)");
    Int n2 = Int(n) * n;
    Int total = 0;
    for (auto& piece : intervals_.pieces()) {
        // rational grid points p/n
        Int neg = -n2;
        Int plo = piece.lo ? Int(ceil_real(real_scale(*piece.lo, Rat(n)))) : neg;
        Int phi = piece.hi ? Int(ceil_real(real_scale(*piece.hi, Rat(n))) - 1) : n2;
        Int lo = std::max(plo, neg), hi = std::min(phi, n2);
        if (hi >= lo) total += hi - lo + 1;
        // irrational points (p+a)/n, p in [-n^2, n^2-1]
        for (auto& a : theta) {
            Int qlo = piece.lo ? Int(ceil_shifted(*piece.lo, Int(n), a)) : neg;
            Int qhi = (piece.hi ? Int(ceil_shifted(*piece.hi, Int(n), a)) : n2) - 1;
            Int top = n2 - 1;
            Int l2 = std::max(qlo, neg), h2 = std::min(qhi, top);
            if (h2 >= l2) total += h2 - l2 + 1;
        }
    }
    auto on_grid = [&](const Rat& p) { return n % (long long)den(p) == 0 && abs(p) <= Rat(n); };
    for (auto& p : add_)
        if (on_grid(p)) ++total;
    for (auto& p : rem_)
        if (on_grid(p)) --total;
    return total;
}

namespace {

long long endpoint_threshold_r(const Rat& e) {
    long long m0 = min_factorial_divisible(den(e));
    Int f = factorial((int)m0);
    Int bound = abs(ceil_int(e)) + 1;
    return f > bound ? (long long)f : (long long)bound;
}

// exact counting quasi-polynomial for a union of rational-endpoint pieces
QuasiPoly rational_pieces_qp(const std::vector<std::pair<std::optional<Rat>, std::optional<Rat>>>& pieces) {
    const Poly n = Poly::variable(kIdxN);
    const Poly t = Poly::variable(kIdxT);
    const Poly cloud = t + Poly(Rat(1)); // points per cell: 1 rational + t irrationals
    QuasiPoly qp = QuasiPoly::constant(Rat(0));
    for (auto& [lo, hi] : pieces) {
        Poly part;
        long long thr = 1;
        if (lo && hi) {
            part = n * (*hi - *lo) * cloud;
            thr = std::max(endpoint_threshold_r(*lo), endpoint_threshold_r(*hi));
        } else if (lo) {
            // rationals: n^2 - lo*n + 1; cells: n^2 - lo*n
            part = (n * n - n * *lo) * cloud + Poly(Rat(1));
            thr = endpoint_threshold_r(*lo);
        } else if (hi) {
            part = (n * n + n * *hi) * cloud;
            thr = endpoint_threshold_r(*hi);
        } else {
            part = n * n * Rat(2) * cloud + Poly(Rat(1));
        }
        qp = qp_add(qp, QuasiPoly::from_poly(part, thr));
    }
    return qp;
}

Rat bracket_lo(const RealPoint& p, long long D) {
    if (is_rational(p)) return std::get<Rat>(p);
    return Rat(std::get<QuadIrr>(p).operator*(Rat(D)).floor(), D);
}

Rat bracket_hi(const RealPoint& p, long long D) {
    if (is_rational(p)) return std::get<Rat>(p);
    return Rat(std::get<QuadIrr>(p).operator*(Rat(D)).floor() + 1, D);
}

} // namespace

CountBounds REvent::eventual_count(long long bracket_denominator) const {
    std::vector<std::pair<std::optional<Rat>, std::optional<Rat>>> inner, outer;
    bool exact = !has_irrational_endpoint();
    long long D = bracket_denominator;
    for (auto& piece : intervals_.pieces()) {
        std::optional<Rat> ilo, ihi, olo, ohi;
        if (piece.lo) {
            ilo = bracket_hi(*piece.lo, D); // inner shrinks
            olo = bracket_lo(*piece.lo, D);
        }
        if (piece.hi) {
            ihi = bracket_lo(*piece.hi, D);
            ohi = bracket_hi(*piece.hi, D);
        }
        if (!(ilo && ihi && *ilo >= *ihi)) inner.push_back({ilo, ihi});
        outer.push_back({olo, ohi});
    }
    QuasiPoly low = rational_pieces_qp(inner);
    QuasiPoly up = rational_pieces_qp(outer);
    // exception points are exact; widen the bounds by the uncounted ones
    long long thr = 1;
    Rat radd(0), rrem(0);
    for (auto& p : add_) {
        radd += 1;
        thr = std::max(thr, endpoint_threshold_r(p));
    }
    for (auto& p : rem_) {
        rrem += 1;
        thr = std::max(thr, endpoint_threshold_r(p));
    }
    if (exact) {
        QuasiPoly delta = QuasiPoly::from_poly(Poly(radd - rrem), thr);
        low = qp_add(low, delta);
        return {low, low, true};
    }
    low = qp_add(low, QuasiPoly::from_poly(Poly(-rrem), thr));
    up = qp_add(up, QuasiPoly::from_poly(Poly(radd), thr));
    // bracket denominators must divide the grid size as well
    long long m0 = min_factorial_divisible(D);
    long long dthr = (long long)factorial((int)m0);
    low = qp_add(low, QuasiPoly::from_poly(Poly(), dthr));
    up = qp_add(up, QuasiPoly::from_poly(Poly(), dthr));
    return {low, up, false};
}

std::string REvent::to_string() const {
    if (is_empty()) return "empty";
    if (is_full()) return "all";
    std::string out = "r-event{";
    for (auto& p : intervals_.pieces()) {
        out += "[";
        out += p.lo ? nap::to_string(*p.lo) : "-inf";
        out += ",";
        out += p.hi ? nap::to_string(*p.hi) : "inf";
        out += ")";
    }
    if (!add_.empty() || !rem_.empty()) out += "; exceptions";
    return out + "}";
}

} // namespace nap
