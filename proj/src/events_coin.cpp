// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "nap/error.hpp"
#include "nap/events.hpp"

namespace nap {

CoinSeq::CoinSeq(std::vector<bool> p, bool t) : prefix(std::move(p)), tail(t) {
    while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
}

CoinSeq CoinSeq::shifted(size_t k) const {
    if (k >= prefix.size()) return CoinSeq({}, tail);
    return CoinSeq(std::vector<bool>(prefix.begin() + (long)k, prefix.end()), tail);
}

std::string CoinSeq::to_string() const {
    std::string out = "seq(";
    for (bool b : prefix) out += b ? 'H' : 'T';
    out += ",tail=";
    out += tail ? 'H' : 'T';
    return out + ")";
}

namespace {

constexpr int kMaxWindow = 22;

size_t assignment_index(const CoinSeq& w, int window) {
    size_t idx = 0;
    for (int j = 0; j < window; ++j)
        if (w.at((size_t)j)) idx |= (size_t)1 << j;
    return idx;
}

} // namespace

CoinEvent::CoinEvent() : window_(0), assign_{false} {}

CoinEvent CoinEvent::full() {
    CoinEvent e;
    e.assign_ = {true};
    return e;
}

CoinEvent CoinEvent::cylinder(const std::vector<std::pair<int, bool>>& constraints) {
    int m = 0;
    for (auto& [pos, v] : constraints) {
        (void)v;
        if (pos < 1) throw DomainError("cylinder positions are 1-based");
        m = std::max(m, pos);
    }
    if (m > kMaxWindow) throw ResourceLimitError("cylinder window too wide");
    for (size_t i = 0; i < constraints.size(); ++i)
        for (size_t j = i + 1; j < constraints.size(); ++j)
            if (constraints[i].first == constraints[j].first)
                throw DomainError("duplicate cylinder position");
    CoinEvent e;
    e.window_ = m;
    e.assign_.assign((size_t)1 << m, true);
    for (auto& [pos, v] : constraints)
        for (size_t idx = 0; idx < e.assign_.size(); ++idx)
            if ((bool)((idx >> (pos - 1)) & 1) != v) e.assign_[idx] = false;
    return e;
}

CoinEvent CoinEvent::finite(const std::set<CoinSeq>& seqs) {
    CoinEvent e;
    e.add_ = seqs;
    return e;
}

bool CoinEvent::member(const CoinSeq& w) const {
    if (add_.count(w)) return true;
    if (rem_.count(w)) return false;
    return assign_[assignment_index(w, window_)];
}

CoinEvent CoinEvent::widened(int m) const {
    if (m == window_) return *this;
    CoinEvent e = *this;
    e.window_ = m;
    e.assign_.assign((size_t)1 << m, false);
    size_t mask = ((size_t)1 << window_) - 1;
    for (size_t idx = 0; idx < e.assign_.size(); ++idx)
        e.assign_[idx] = assign_[idx & mask];
    return e;
}

void CoinEvent::canonicalize() {
    for (auto it = add_.begin(); it != add_.end();)
        it = assign_[assignment_index(*it, window_)] ? add_.erase(it) : std::next(it);
    for (auto it = rem_.begin(); it != rem_.end();)
        it = assign_[assignment_index(*it, window_)] ? std::next(it) : rem_.erase(it);
    while (window_ > 0) {
        size_t half = assign_.size() / 2;
        bool collapsible = true;
        for (size_t i = 0; i < half && collapsible; ++i)
            collapsible = assign_[i] == assign_[i + half];
        if (!collapsible) break;
        assign_.resize(half);
        --window_;
    }
}

CoinEvent CoinEvent::unite(const CoinEvent& o) const {
    int m = std::max(window_, o.window_);
    CoinEvent a = widened(m), b = o.widened(m);
    CoinEvent r;
    r.window_ = m;
    r.assign_.resize((size_t)1 << m);
    for (size_t i = 0; i < r.assign_.size(); ++i) r.assign_[i] = a.assign_[i] || b.assign_[i];
    std::set<CoinSeq> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& w : pts) {
        bool want = member(w) || o.member(w);
        bool base = r.assign_[assignment_index(w, m)];
        if (want && !base) r.add_.insert(w);
        if (!want && base) r.rem_.insert(w);
    }
    r.canonicalize();
    return r;
}

CoinEvent CoinEvent::intersect(const CoinEvent& o) const {
    int m = std::max(window_, o.window_);
    CoinEvent a = widened(m), b = o.widened(m);
    CoinEvent r;
    r.window_ = m;
    r.assign_.resize((size_t)1 << m);
    for (size_t i = 0; i < r.assign_.size(); ++i) r.assign_[i] = a.assign_[i] && b.assign_[i];
    std::set<CoinSeq> pts;
    for (auto* s : {&add_, &rem_, &o.add_, &o.rem_}) pts.insert(s->begin(), s->end());
    for (auto& w : pts) {
        bool want = member(w) && o.member(w);
        bool base = r.assign_[assignment_index(w, m)];
        if (want && !base) r.add_.insert(w);
        if (!want && base) r.rem_.insert(w);
    }
    r.canonicalize();
    return r;
}

CoinEvent CoinEvent::complement() const {
    CoinEvent r = *this;
    for (size_t i = 0; i < r.assign_.size(); ++i) r.assign_[i] = !r.assign_[i];
    std::swap(r.add_, r.rem_);
    r.canonicalize();
    return r;
}

bool CoinEvent::is_empty() const {
    return add_.empty() &&
           std::none_of(assign_.begin(), assign_.end(), [](bool b) { return b; });
}

bool CoinEvent::is_full() const {
    return rem_.empty() &&
           std::all_of(assign_.begin(), assign_.end(), [](bool b) { return b; });
}

long long CoinEvent::assignment_count() const {
    return std::count(assign_.begin(), assign_.end(), true);
}

Int CoinEvent::count_at(int bigN, const std::vector<CoinSeq>& sigma) const {
    if (bigN < 0) throw DomainError("grid depth must be nonnegative");
    std::set<CoinSeq> sig(sigma.begin(), sigma.end());
    if (sig.size() != sigma.size()) throw DomainError("sigma elements must be distinct");
    Int total = 0;
    if (bigN >= window_) {
        // first `window_` symbols of b*c come from b alone
        total = Int(assignment_count()) * (Int(1) << (bigN - window_)) * (Int)sigma.size();
    } else {
        // count assignments consistent with each tail c
        for (auto& c : sigma) {
            for (size_t idx = 0; idx < assign_.size(); ++idx) {
                if (!assign_[idx]) continue;
                bool match = true;
                for (int j = bigN; j < window_ && match; ++j)
                    match = ((idx >> j) & 1) == (size_t)c.at((size_t)(j - bigN));
                if (match) ++total;
            }
        }
    }
    for (auto& w : add_)
        if (sig.count(w.shifted((size_t)bigN))) ++total;
    for (auto& w : rem_)
        if (sig.count(w.shifted((size_t)bigN))) --total;
    return total;
}

QuasiPoly CoinEvent::eventual_count() const {
    Poly hs = Poly::variable(kIdxH) * Poly::variable(kIdxS);
    Poly p = hs * Rat(assignment_count(), (Int(1) << window_));
    long long thr = std::max(1, window_);
    unsigned tails = 0;
    Rat delta(0);
    for (auto& w : add_) {
        delta += 1;
        tails |= w.tail ? kTailH : kTailT;
        thr = std::max(thr, (long long)w.prefix.size());
    }
    for (auto& w : rem_) {
        delta -= 1;
        tails |= w.tail ? kTailH : kTailT;
        thr = std::max(thr, (long long)w.prefix.size());
    }
    QuasiPoly qp = QuasiPoly::from_poly(p + Poly(delta), thr);
    qp.require_tails(tails);
    return qp;
}

std::string CoinEvent::to_string() const {
    if (is_empty()) return "empty";
    if (is_full()) return "all";
    std::string out = "coin-event{window=" + std::to_string(window_) +
                      ", assignments=" + std::to_string(assignment_count());
    if (!add_.empty()) out += ", +" + std::to_string(add_.size());
    if (!rem_.empty()) out += ", -" + std::to_string(rem_.size());
    return out + "}";
}

} // namespace nap
