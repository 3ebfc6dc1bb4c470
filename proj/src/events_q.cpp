// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <numeric>

#include "nap/error.hpp"
#include "nap/events.hpp"

namespace nap {

namespace {

long long floor_div(long long a, long long b) { // b > 0
    long long q = a / b;
    return (a % b != 0 && (a < 0)) ? q - 1 : q;
}
long long ceil_div(long long a, long long b) { // b > 0
    long long q = a / b;
    return (a % b != 0 && (a > 0)) ? q + 1 : q;
}

long long to_ll(const Int& v) {
    if (v > Int(1) << 60 || v < -(Int(1) << 60))
        throw ResourceLimitError("integer endpoint out of supported range");
    return (long long)v;
}

} // namespace

IntAPSet::IntAPSet() : modulus_(1), classes_(1) {}

IntAPSet IntAPSet::all() {
    IntAPSet s;
    s.classes_[0] = RangeSet::all();
    return s;
}

IntAPSet IntAPSet::from_range(std::optional<long long> lo, std::optional<long long> hi) {
    IntAPSet s;
    s.classes_[0] = RangeSet::range(lo, hi);
    return s;
}

IntAPSet IntAPSet::progression(long long K, long long r, long long start) {
    if (K < 1 || r < 0 || r >= K) throw DomainError("bad progression class");
    IntAPSet s;
    s.modulus_ = K;
    s.classes_.assign((size_t)K, RangeSet());
    s.classes_[(size_t)r] = RangeSet::range(ceil_div(start - r, K), std::nullopt);
    return s;
}

IntAPSet IntAPSet::singleton(long long x) { return from_range(x, x); }

bool IntAPSet::contains(long long x) const {
    long long r = ((x % modulus_) + modulus_) % modulus_;
    return classes_[(size_t)r].contains((x - r) / modulus_);
}

IntAPSet IntAPSet::lifted(long long K) const {
    if (K == modulus_) return *this;
    IntAPSet s;
    s.modulus_ = K;
    s.classes_.assign((size_t)K, RangeSet());
    long long m = K / modulus_;
    for (long long rp = 0; rp < K; ++rp) {
        long long r = rp % modulus_;
        long long off = (rp - r) / modulus_; // x = rp + j'K  <=>  j = off + j'*m
        RangeSet out;
        for (auto& range : classes_[(size_t)r].ranges()) {
            std::optional<long long> lo, hi;
            if (range.lo) lo = ceil_div(*range.lo - off, m);
            if (range.hi) hi = floor_div(*range.hi - off, m);
            out = out.unite(RangeSet::range(lo, hi));
        }
        s.classes_[(size_t)rp] = out;
    }
    return s;
}

void IntAPSet::reduce() {
    bool all_full = true, all_empty = true;
    for (auto& c : classes_) {
        if (!(c == RangeSet::all())) all_full = false;
        if (!c.empty()) all_empty = false;
    }
    if (all_full || all_empty) {
        modulus_ = 1;
        classes_.assign(1, all_full ? RangeSet::all() : RangeSet());
    }
}

IntAPSet IntAPSet::unite(const IntAPSet& o) const {
    long long K = std::lcm(modulus_, o.modulus_);
    if (K > 1000000) throw ResourceLimitError("integer-layer modulus overflow");
    IntAPSet a = lifted(K), b = o.lifted(K);
    for (long long r = 0; r < K; ++r)
        a.classes_[(size_t)r] = a.classes_[(size_t)r].unite(b.classes_[(size_t)r]);
    a.reduce();
    return a;
}

IntAPSet IntAPSet::intersect(const IntAPSet& o) const {
    long long K = std::lcm(modulus_, o.modulus_);
    if (K > 1000000) throw ResourceLimitError("integer-layer modulus overflow");
    IntAPSet a = lifted(K), b = o.lifted(K);
    for (long long r = 0; r < K; ++r)
        a.classes_[(size_t)r] = a.classes_[(size_t)r].intersect(b.classes_[(size_t)r]);
    a.reduce();
    return a;
}

IntAPSet IntAPSet::complement() const {
    IntAPSet s = *this;
    for (auto& c : s.classes_) c = c.complement();
    s.reduce();
    return s;
}

bool IntAPSet::empty_set() const {
    return std::all_of(classes_.begin(), classes_.end(),
                       [](const RangeSet& c) { return c.empty(); });
}

long long IntAPSet::count_window(long long n) const {
    long long total = 0;
    for (long long r = 0; r < modulus_; ++r)
        total += classes_[(size_t)r].count_in(ceil_div(-n - r, modulus_),
                                              floor_div(n - r, modulus_));
    return total;
}

QuasiPoly IntAPSet::window_count_qp() const {
    long long K = modulus_;
    Poly common;
    std::vector<Rat> corr((size_t)K, Rat(0));
    long long threshold = K;
    auto bump = [&](long long v) { threshold = std::max(threshold, std::llabs(v) + K); };
    for (long long r = 0; r < K; ++r) {
        for (auto& range : classes_[(size_t)r].ranges()) {
            if (range.lo && range.hi) {
                Rat c(*range.hi - *range.lo + 1);
                for (auto& x : corr) x += c;
                bump(r + *range.lo * K);
                bump(r + *range.hi * K);
            } else if (range.lo) {
                // floor((n-r)/K) - lo + 1
                common = common + Poly::variable(kIdxN) * Rat(1, K);
                for (long long i = 0; i < K; ++i)
                    corr[(size_t)i] +=
                        Rat(-r, K) - Rat(((i - r) % K + K) % K, K) + Rat(1 - *range.lo);
                bump(r + *range.lo * K);
            } else if (range.hi) {
                // hi + floor((n+r)/K) + 1
                common = common + Poly::variable(kIdxN) * Rat(1, K);
                for (long long i = 0; i < K; ++i)
                    corr[(size_t)i] +=
                        Rat(r, K) - Rat(((i + r) % K) % K, K) + Rat(*range.hi + 1);
                bump(r + *range.hi * K);
            } else {
                common = common + Poly::variable(kIdxN) * Rat(2, K);
                for (long long i = 0; i < K; ++i)
                    corr[(size_t)i] += Rat(-((i - r) % K + K) % K, K) -
                                       Rat(((i + r) % K) % K, K) + Rat(1);
            }
        }
    }
    QuasiPoly qp = QuasiPoly::periodic(common, std::move(corr), threshold);
    qp.reduce();
    return qp;
}

// ------------------------------------------------------------------- Q

QEvent::QEvent() = default;

QEvent QEvent::full() {
    QEvent e;
    e.nonint_ = QIntervalSet::all();
    e.ints_ = IntAPSet::all();
    return e;
}

QEvent QEvent::interval(const Rat& a, const Rat& b) {
    QEvent e;
    if (a >= b) return e;
    e.nonint_ = QIntervalSet::interval(a, b);
    e.ints_ = IntAPSet::from_range(to_ll(ceil_int(a)), to_ll(ceil_int(b)) - 1);
    return e;
}

QEvent QEvent::halfline(const Rat& a) {
    QEvent e;
    e.nonint_ = QIntervalSet::interval(a, std::nullopt);
    e.ints_ = IntAPSet::from_range(to_ll(ceil_int(a)), std::nullopt);
    return e;
}

QEvent QEvent::nat_embed() {
    QEvent e;
    e.ints_ = IntAPSet::progression(1, 0, 1);
    return e;
}

QEvent QEvent::int_embed() {
    QEvent e;
    e.ints_ = IntAPSet::all();
    return e;
}

QEvent QEvent::finite(const std::set<Rat>& points) {
    QEvent e;
    for (auto& p : points) {
        if (is_integer(p))
            e.ints_ = e.ints_.unite(IntAPSet::singleton(to_ll(num(p))));
        else
            e.add_.insert(p);
    }
    return e;
}

QEvent QEvent::from_nat(const NatEvent& a) {
    QEvent e;
    for (long long r = 0; r < a.modulus(); ++r)
        if (a.residues()[(size_t)r])
            e.ints_ = e.ints_.unite(IntAPSet::progression(a.modulus(), r, 1));
    for (long long p : a.added()) e.ints_ = e.ints_.unite(IntAPSet::singleton(p));
    for (long long p : a.removed())
        e.ints_ = e.ints_.intersect(IntAPSet::singleton(p).complement());
    return e;
}

bool QEvent::member(const Rat& x) const {
    if (is_integer(x)) return ints_.contains(to_ll(num(x)));
    if (add_.count(x)) return true;
    if (rem_.count(x)) return false;
    return nonint_.contains(x);
}

QEvent QEvent::unite(const QEvent& o) const {
    QEvent r;
    r.nonint_ = nonint_.unite(o.nonint_);
    r.ints_ = ints_.unite(o.ints_);
    std::set<Rat> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& p : pts) {
        bool want = member(p) || o.member(p);
        bool base = r.nonint_.contains(p);
        if (want && !base) r.add_.insert(p);
        if (!want && base) r.rem_.insert(p);
    }
    return r;
}

QEvent QEvent::intersect(const QEvent& o) const {
    QEvent r;
    r.nonint_ = nonint_.intersect(o.nonint_);
    r.ints_ = ints_.intersect(o.ints_);
    std::set<Rat> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& p : pts) {
        bool want = member(p) && o.member(p);
        bool base = r.nonint_.contains(p);
        if (want && !base) r.add_.insert(p);
        if (!want && base) r.rem_.insert(p);
    }
    return r;
}

QEvent QEvent::complement() const {
    QEvent r;
    r.nonint_ = nonint_.complement();
    r.ints_ = ints_.complement();
    r.add_ = rem_;
    r.rem_ = add_;
    return r;
}

bool QEvent::is_empty() const {
    return nonint_.empty() && add_.empty() && ints_.empty_set();
}

bool QEvent::is_full() const {
    return nonint_.is_all() && rem_.empty() && ints_.complement().empty_set();
}

bool QEvent::same_set(const QEvent& o) const {
    QEvent diff = intersect(o.complement()).unite(o.intersect(complement()));
    return diff.is_empty();
}

namespace {

// integers x with lo <= x < hi clipped to [-n, n]
long long integers_in(const std::optional<Rat>& lo, const std::optional<Rat>& hi,
                      long long n) {
    long long xlo = lo ? std::max(to_ll(ceil_int(*lo)), -n) : -n;
    long long xhi = hi ? std::min(to_ll(ceil_int(*hi)) - 1, n) : n;
    return xhi >= xlo ? xhi - xlo + 1 : 0;
}

} // namespace

Int QEvent::count_at(long long n) const {
    Int total = ints_.count_window(n);
    Int n2 = Int(n) * n;
    for (auto& piece : nonint_.pieces()) {
        // grid points p/n in the piece
        Int neg = -n2;
        Int plo = piece.lo ? Int(ceil_int(*piece.lo * Rat(n))) : neg;
        Int phi = piece.hi ? Int(ceil_int(*piece.hi * Rat(n)) - 1) : n2;
        plo = std::max(plo, neg);
        phi = std::min(phi, n2);
        if (phi < plo) continue;
        total += phi - plo + 1;
        total -= integers_in(piece.lo, piece.hi, n);
    }
    auto on_grid = [&](const Rat& p) {
        return n % to_ll(den(p)) == 0 && abs(p) <= Rat(n);
    };
    for (auto& p : add_)
        if (on_grid(p)) ++total;
    for (auto& p : rem_)
        if (on_grid(p)) --total;
    return total;
}

namespace {

// least factorial threshold making q/n landings exact: endpoint e = u/v
// contributes n >= v-th factorial and |e|+1
long long endpoint_threshold(const Rat& e) {
    long long m0 = min_factorial_divisible(den(e));
    Int f = factorial((int)m0);
    Int bound = abs(ceil_int(e)) + 1;
    return to_ll(f > bound ? f : bound);
}

} // namespace

QuasiPoly QEvent::eventual_count() const {
    QuasiPoly qp = ints_.window_count_qp();
    const Poly n = Poly::variable(kIdxN);
    for (auto& piece : nonint_.pieces()) {
        Poly part;
        long long thr = 1;
        if (piece.lo && piece.hi) {
            const Rat &a = *piece.lo, &b = *piece.hi;
            part = n * (b - a) - Poly(Rat(ceil_int(b) - ceil_int(a)));
            thr = std::max(endpoint_threshold(a), endpoint_threshold(b));
        } else if (piece.lo) {
            const Rat& a = *piece.lo;
            part = n * n - n * (a + 1) + Poly(Rat(ceil_int(a)));
            thr = endpoint_threshold(a);
        } else if (piece.hi) {
            const Rat& b = *piece.hi;
            part = n * n + n * (b - 1) - Poly(Rat(ceil_int(b)));
            thr = endpoint_threshold(b);
        } else {
            part = n * n * Rat(2) - n * Rat(2);
        }
        qp = qp_add(qp, QuasiPoly::from_poly(part, thr));
    }
    Rat delta(0);
    long long thr = 1;
    for (auto& p : add_) {
        delta += 1;
        thr = std::max(thr, endpoint_threshold(p));
    }
    for (auto& p : rem_) {
        delta -= 1;
        thr = std::max(thr, endpoint_threshold(p));
    }
    if (delta != 0 || thr > 1) qp = qp_add(qp, QuasiPoly::from_poly(Poly(delta), thr));
    return qp;
}

std::string QEvent::to_string() const {
    if (is_empty()) return "empty";
    if (is_full()) return "all";
    std::string out = "q-event{nonint=";
    for (auto& p : nonint_.pieces()) {
        out += "[";
        out += p.lo ? rat_to_string(*p.lo) : "-inf";
        out += ",";
        out += p.hi ? rat_to_string(*p.hi) : "inf";
        out += ")";
    }
    out += "; ints mod " + std::to_string(ints_.modulus());
    if (!add_.empty() || !rem_.empty()) out += "; exceptions";
    return out + "}";
}

} // namespace nap
