// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <numeric>

#include "nap/error.hpp"
#include "nap/events.hpp"

namespace nap {

const char* space_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::Nat: return "nat";
        case SpaceKind::Q: return "q";
        case SpaceKind::R: return "r";
        case SpaceKind::Coin: return "coin";
    }
    return "?";
}

NatEvent::NatEvent() : modulus_(1), residues_{false} {}

NatEvent NatEvent::full() {
    NatEvent e;
    e.residues_ = {true};
    return e;
}

NatEvent NatEvent::progression(long long k, long long l) {
    if (k < 1 || l < 0 || l >= k) throw DomainError("progression requires 0 <= l < k");
    NatEvent e;
    e.modulus_ = (int)k;
    e.residues_.assign((size_t)k, false);
    e.residues_[(size_t)((k - l) % k)] = true;
    e.canonicalize();
    return e;
}

NatEvent NatEvent::finite(std::set<long long> points) {
    for (long long p : points)
        if (p < 1) throw DomainError("natural-event points must be >= 1");
    NatEvent e;
    e.add_ = std::move(points);
    return e;
}

bool NatEvent::base_member(long long x) const {
    return residues_[(size_t)(x % modulus_)];
}

bool NatEvent::member(long long x) const {
    if (x < 1) throw DomainError("natural-event membership needs x >= 1");
    if (add_.count(x)) return true;
    if (rem_.count(x)) return false;
    return base_member(x);
}

void NatEvent::canonicalize() {
    // minimal modulus
    for (int d = 1; d < modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        bool ok = true;
        for (int j = d; j < modulus_ && ok; ++j) ok = residues_[j] == residues_[j % d];
        if (ok) {
            residues_.resize(d);
            modulus_ = d;
            break;
        }
    }
    // minimal exceptions
    for (auto it = add_.begin(); it != add_.end();)
        it = base_member(*it) ? add_.erase(it) : std::next(it);
    for (auto it = rem_.begin(); it != rem_.end();)
        it = base_member(*it) ? std::next(it) : rem_.erase(it);
}

NatEvent NatEvent::combine(const NatEvent& a, const NatEvent& b, bool (*op)(bool, bool)) {
    long long K = std::lcm((long long)a.modulus_, (long long)b.modulus_);
    if (K > 1000000) throw ResourceLimitError("event modulus overflow");
    NatEvent r;
    r.modulus_ = (int)K;
    r.residues_.assign((size_t)K, false);
    for (long long j = 0; j < K; ++j)
        r.residues_[(size_t)j] =
            op(a.residues_[(size_t)(j % a.modulus_)], b.residues_[(size_t)(j % b.modulus_)]);
    std::set<long long> pts;
    for (auto* s : {&a.add_, &a.rem_, &b.add_, &b.rem_})
        pts.insert(s->begin(), s->end());
    for (long long p : pts) {
        bool want = op(a.member(p), b.member(p));
        bool base = r.residues_[(size_t)(p % K)];
        if (want && !base) r.add_.insert(p);
        if (!want && base) r.rem_.insert(p);
    }
    r.canonicalize();
    return r;
}

NatEvent NatEvent::unite(const NatEvent& o) const {
    return combine(*this, o, [](bool x, bool y) { return x || y; });
}

NatEvent NatEvent::intersect(const NatEvent& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && y; });
}

NatEvent NatEvent::complement() const {
    NatEvent r = *this;
    for (size_t j = 0; j < r.residues_.size(); ++j) r.residues_[j] = !r.residues_[j];
    std::swap(r.add_, r.rem_);
    r.canonicalize();
    return r;
}

bool NatEvent::is_empty() const {
    return add_.empty() &&
           std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool NatEvent::is_full() const {
    return rem_.empty() &&
           std::all_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool NatEvent::subset_of(const NatEvent& o) const { return intersect(o) == *this; }

namespace {

// |{x in [1..n] : x ≡ r (mod K)}|
long long class_count(long long r, long long K, long long n) {
    if (r == 0) return n / K;
    if (r > n) return 0;
    return (n - r) / K + 1;
}

} // namespace

Int NatEvent::count_upto(long long n) const {
    Int total = 0;
    for (long long r = 0; r < modulus_; ++r)
        if (residues_[(size_t)r]) total += class_count(r, modulus_, n);
    for (long long p : add_)
        if (p <= n) ++total;
    for (long long p : rem_)
        if (p <= n) --total;
    return total;
}

QuasiPoly NatEvent::eventual_count() const {
    return weighted_eventual_count(*this, WeightFn::fair());
}

std::string NatEvent::to_string() const {
    if (is_empty()) return "empty";
    std::string base;
    for (long long r = 0; r < modulus_; ++r) {
        if (!residues_[(size_t)r]) continue;
        if (!base.empty()) base += " | ";
        base += "prog(" + std::to_string(modulus_) + "," +
                std::to_string((modulus_ - r) % modulus_) + ")";
    }
    if (modulus_ == 1 && residues_[0]) base = "all";
    auto fin = [](const std::set<long long>& s) {
        std::string out = "fin{";
        bool first = true;
        for (long long p : s) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(p);
        }
        return out + "}";
    };
    std::string out = base;
    if (!rem_.empty()) out = "(" + out + ") & ~" + fin(rem_);
    if (!add_.empty()) out = out.empty() ? fin(add_) : "(" + out + ") | " + fin(add_);
    return out;
}

// ------------------------------------------------------------- weights

bool WeightFn::is_fair() const {
    for (auto& w : class_weights)
        if (w != class_weights[0]) return false;
    for (auto& [x, w] : exceptions)
        if (w != class_weights[0]) return false;
    return true;
}

Rat WeightFn::weight(long long x) const {
    auto it = exceptions.find(x);
    if (it != exceptions.end()) return it->second;
    return class_weights[(size_t)(x % modulus)];
}

void WeightFn::validate() const {
    if (modulus < 1 || (int)class_weights.size() != modulus)
        throw DomainError("weight table size must equal the modulus");
    for (auto& w : class_weights)
        if (w <= 0) throw DomainError("weights must be strictly positive");
    for (auto& [x, w] : exceptions) {
        if (x < 1) throw DomainError("weight exceptions must cite positive integers");
        if (w <= 0) throw DomainError("weights must be strictly positive");
    }
}

Rat weighted_count_upto(const NatEvent& a, const WeightFn& w, long long n) {
    long long L = std::lcm((long long)a.modulus(), (long long)w.modulus);
    Rat total(0);
    for (long long j = 0; j < L; ++j)
        if (a.residues()[(size_t)(j % a.modulus())])
            total += w.class_weights[(size_t)(j % w.modulus)] * Rat(class_count(j, L, n));
    for (long long p : a.added())
        if (p <= n) total += w.weight(p);
    for (long long p : a.removed())
        if (p <= n) total -= w.class_weights[(size_t)(p % w.modulus)];
    for (auto& [x, wx] : w.exceptions)
        if (x <= n && a.residues()[(size_t)(x % a.modulus())] && !a.removed().count(x) &&
            !a.added().count(x))
            total += wx - w.class_weights[(size_t)(x % w.modulus)];
    return total;
}

QuasiPoly weighted_eventual_count(const NatEvent& a, const WeightFn& w) {
    w.validate();
    long long L = std::lcm((long long)a.modulus(), (long long)w.modulus);
    if (L > 100000) throw ResourceLimitError("weighted period overflow");
    Poly common;
    std::vector<Rat> corr((size_t)L, Rat(0));
    long long threshold = L;
    for (long long j = 0; j < L; ++j) {
        if (!a.residues()[(size_t)(j % a.modulus())]) continue;
        const Rat& wj = w.class_weights[(size_t)(j % w.modulus)];
        common = common + Poly::variable(kIdxN) * (wj / Rat(L));
        // class_count(j, L, n) = n/L - j/L - ((i-j) mod L)/L + [j>=1]
        for (long long i = 0; i < L; ++i) {
            long long m = ((i - j) % L + L) % L;
            corr[(size_t)i] += wj * (Rat(-j, L) - Rat(m, L) + (j >= 1 ? 1 : 0));
        }
    }
    Rat delta(0);
    for (long long p : a.added()) {
        delta += w.weight(p);
        threshold = std::max(threshold, p);
    }
    for (long long p : a.removed()) {
        delta -= w.class_weights[(size_t)(p % w.modulus)];
        threshold = std::max(threshold, p);
    }
    for (auto& [x, wx] : w.exceptions) {
        if (a.residues()[(size_t)(x % a.modulus())] && !a.removed().count(x) &&
            !a.added().count(x))
            delta += wx - w.class_weights[(size_t)(x % w.modulus)];
        threshold = std::max(threshold, x);
    }
    for (auto& c : corr) c += delta;
    QuasiPoly qp = QuasiPoly::periodic(common, std::move(corr), threshold);
    qp.reduce();
    return qp;
}

} // namespace nap
