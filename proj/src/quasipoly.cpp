// SPDX-License-Identifier: Apache-2.0
#include "nap/quasipoly.hpp"

#include <algorithm>
#include <numeric>

#include "nap/error.hpp"

namespace nap {

const char* family_name(Family f) {
    switch (f) {
        case Family::AllN: return "all";
        case Family::EvenN: return "even";
        case Family::OddN: return "odd";
        case Family::FactorialN: return "factorial";
        case Family::QGrid: return "grid(q)";
        case Family::RGrid: return "grid(r)";
        case Family::CoinCT: return "ct";
    }
    return "?";
}

std::vector<int> residues_hit(Family f, int period) {
    std::vector<int> out;
    switch (f) {
        case Family::AllN:
            for (int j = 0; j < period; ++j) out.push_back(j);
            break;
        case Family::EvenN:
            for (int j = 0; j < period; ++j)
                if (j % std::gcd(2, period) == 0) out.push_back(j);
            break;
        case Family::OddN:
            for (int j = 0; j < period; ++j)
                if (j % std::gcd(2, period) == 1 % std::gcd(2, period)) out.push_back(j);
            break;
        case Family::FactorialN:
        case Family::QGrid:
        case Family::RGrid:
        case Family::CoinCT:
            out.push_back(0);
            break;
    }
    return out;
}

QuasiPoly QuasiPoly::constant(const Rat& r) { return from_poly(Poly(r), 1); }

QuasiPoly QuasiPoly::from_poly(Poly p, long long threshold) {
    QuasiPoly q;
    q.period_ = 1;
    q.threshold_ = std::max(threshold, 1LL);
    q.branches_ = {std::move(p)};
    return q;
}

QuasiPoly QuasiPoly::periodic(const Poly& common, std::vector<Rat> corrections,
                              long long threshold) {
    if (corrections.empty()) throw UnsupportedError("empty correction table");
    QuasiPoly q;
    q.period_ = (int)corrections.size();
    q.threshold_ = std::max(threshold, 1LL);
    q.branches_.clear();
    for (auto& c : corrections) q.branches_.push_back(common + Poly(c));
    return q;
}

QuasiPoly QuasiPoly::from_branches(std::vector<Poly> branches, long long threshold) {
    if (branches.empty()) throw UnsupportedError("empty branch table");
    QuasiPoly q;
    q.period_ = (int)branches.size();
    q.threshold_ = std::max(threshold, 1LL);
    q.branches_ = std::move(branches);
    return q;
}

const Poly& QuasiPoly::branch_for(long long n) const {
    long long r = n % period_;
    if (r < 0) r += period_;
    return branches_[(size_t)r];
}

bool QuasiPoly::is_zero() const {
    return std::all_of(branches_.begin(), branches_.end(),
                       [](const Poly& p) { return p.is_zero(); });
}

Rat QuasiPoly::eval_nat(long long n) const {
    return branch_for(n).eval({Rat(n), Rat(0), Rat(0), Rat(0)});
}

Rat QuasiPoly::eval_rt(long long n, long long t) const {
    return branch_for(n).eval({Rat(n), Rat(t), Rat(0), Rat(0)});
}

Rat QuasiPoly::eval_coin(int bigN, long long sigma_size) const {
    Int h = Int(1) << bigN;
    return branches_[0].eval({Rat(0), Rat(0), Rat(h), Rat(sigma_size)});
}

bool QuasiPoly::is_standard_shape() const {
    const Poly base = branches_[0] - Poly(branches_[0].constant_term());
    for (auto& b : branches_)
        if (b - Poly(b.constant_term()) != base) return false;
    return true;
}

Poly QuasiPoly::polynomial_part() const {
    return branches_[0] - Poly(branches_[0].constant_term());
}

std::vector<Rat> QuasiPoly::corrections() const {
    std::vector<Rat> out;
    for (auto& b : branches_) out.push_back(b.constant_term());
    return out;
}

void QuasiPoly::reduce() {
    for (int d = 1; d < period_; ++d) {
        if (period_ % d != 0) continue;
        bool ok = true;
        for (int j = d; j < period_ && ok; ++j) ok = branches_[j] == branches_[j % d];
        if (ok) {
            branches_.resize(d);
            period_ = d;
            return;
        }
    }
}

QuasiPoly QuasiPoly::lifted(int new_period) const {
    QuasiPoly q = *this;
    q.period_ = new_period;
    q.branches_.resize(new_period);
    for (int j = 0; j < new_period; ++j) q.branches_[j] = branches_[j % period_];
    return q;
}

QuasiPoly qp_zip(const QuasiPoly& f, const QuasiPoly& g,
                 const std::function<Poly(const Poly&, const Poly&)>& op) {
    long long lp = std::lcm((long long)f.period_, (long long)g.period_);
    if (lp > 1000000) throw ResourceLimitError("quasi-polynomial period overflow");
    QuasiPoly a = f.lifted((int)lp), b = g.lifted((int)lp);
    QuasiPoly r;
    r.period_ = (int)lp;
    r.threshold_ = std::max(f.threshold_, g.threshold_);
    r.tails_ = f.tails_ | g.tails_;
    r.branches_.clear();
    for (int j = 0; j < (int)lp; ++j) r.branches_.push_back(op(a.branches_[j], b.branches_[j]));
    return r;
}

QuasiPoly qp_add(const QuasiPoly& f, const QuasiPoly& g) {
    return qp_zip(f, g, [](const Poly& a, const Poly& b) { return a + b; });
}

QuasiPoly qp_sub(const QuasiPoly& f, const QuasiPoly& g) {
    return qp_zip(f, g, [](const Poly& a, const Poly& b) { return a - b; });
}

QuasiPoly qp_mul(const QuasiPoly& f, const QuasiPoly& g) {
    return qp_zip(f, g, [](const Poly& a, const Poly& b) { return a * b; });
}

QuasiPoly qp_scale(const Rat& r, const QuasiPoly& f) {
    return qp_zip(f, f, [&r](const Poly& a, const Poly&) { return a * r; });
}

std::string QuasiPoly::to_string() const {
    std::string out;
    if (is_standard_shape()) {
        out = polynomial_part().to_string(kIndexNames);
        out += "; period=" + std::to_string(period_) + "; corr=[";
        bool first = true;
        for (auto& c : corrections()) {
            if (!first) out += ", ";
            first = false;
            out += rat_to_string(c);
        }
        out += "]";
    } else {
        for (int j = 0; j < period_; ++j) {
            if (j) out += "; ";
            out += "branch[" + std::to_string(j) + "]=" + branches_[j].to_string(kIndexNames);
        }
        out += "; period=" + std::to_string(period_);
    }
    out += "; n0=" + std::to_string(threshold_);
    if (tails_ & kTailH) out += "; tailH";
    if (tails_ & kTailT) out += "; tailT";
    return out;
}

// ---------------------------------------------------------------------

LimitResult::LimitResult(Family fam, int period,
                         std::vector<std::pair<int, HyperReal>> branches)
    : family_(fam), period_(period), branches_(std::move(branches)) {
    std::sort(branches_.begin(), branches_.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
}

LimitResult LimitResult::single(Family fam, HyperReal v) {
    return LimitResult(fam, 1, {{0, std::move(v)}});
}

bool LimitResult::determined() const {
    for (auto& [r, v] : branches_)
        if (!(v == branches_[0].second)) return false;
    return true;
}

const HyperReal& LimitResult::value() const {
    if (!determined())
        throw UndeterminedError("limit not determined by the family alone");
    return branches_[0].second;
}

std::vector<HyperReal> LimitResult::candidates() const {
    std::vector<HyperReal> vs;
    for (auto& [r, v] : branches_) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), HyperReal::repr_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

const HyperReal& LimitResult::value_at_residue(int r) const {
    for (auto& [res, v] : branches_)
        if (res == r % period_) return v;
    throw UndeterminedError("residue class not represented in limit");
}

LimitResult LimitResult::map(const std::function<HyperReal(const HyperReal&)>& fn) const {
    std::vector<std::pair<int, HyperReal>> out;
    for (auto& [r, v] : branches_) out.push_back({r, fn(v)});
    return LimitResult(family_, period_, std::move(out));
}

LimitResult LimitResult::combine(
    const LimitResult& a, const LimitResult& b,
    const std::function<HyperReal(const HyperReal&, const HyperReal&)>& fn) {
    if (a.family_ != b.family_)
        throw UnsupportedError("combining limits over distinct families");
    long long lp = std::lcm((long long)a.period_, (long long)b.period_);
    if (lp > 1000000) throw ResourceLimitError("limit period overflow");
    std::vector<std::pair<int, HyperReal>> out;
    for (int r : residues_hit(a.family_, (int)lp))
        out.push_back({r, fn(a.value_at_residue(r % a.period_),
                             b.value_at_residue(r % b.period_))});
    return LimitResult(a.family_, (int)lp, std::move(out));
}

bool same_limit(const LimitResult& a, const LimitResult& b) {
    if (a.family() != b.family()) return false;
    long long lp = std::lcm((long long)a.period(), (long long)b.period());
    for (int r : residues_hit(a.family(), (int)lp))
        if (!(a.value_at_residue(r % a.period()) == b.value_at_residue(r % b.period())))
            return false;
    return true;
}

// ---------------------------------------------------------------------

namespace {

unsigned allowed_vars(Family f) {
    switch (f) {
        case Family::AllN:
        case Family::EvenN:
        case Family::OddN:
        case Family::FactorialN:
        case Family::QGrid:
            return 1u << kIdxN;
        case Family::RGrid:
            return (1u << kIdxN) | (1u << kIdxT);
        case Family::CoinCT:
            return (1u << kIdxH) | (1u << kIdxS);
    }
    return 0;
}

// n -> alpha, t -> tau, (h s)^k -> gamma^k
HyperReal branch_value(const Poly& p, Family fam) {
    if (p.vars_mask() & ~allowed_vars(fam))
        throw UnsupportedError("index variables do not match family " +
                               std::string(family_name(fam)));
    std::vector<Poly::Term> terms;
    for (auto& [m, c] : p.terms()) {
        if (fam == Family::CoinCT && m.e[kIdxH] != m.e[kIdxS])
            throw UnsupportedError(
                "coin counting function is not a polynomial in 2^N*|sigma|");
        Monomial g;
        g.e[(int)Gen::Alpha] = m.e[kIdxN];
        g.e[(int)Gen::Tau] = m.e[kIdxT];
        g.e[(int)Gen::Gamma] = m.e[kIdxH];
        terms.push_back({g, c});
    }
    return HyperReal(Poly::from_terms(std::move(terms)), Poly(Rat(1)));
}

} // namespace

LimitResult limit(const QuasiPoly& f, Family fam) {
    if (f.required_tails() != 0 && fam != Family::CoinCT)
        throw UnsupportedError("tail requirements outside the coin family");
    std::vector<std::pair<int, HyperReal>> out;
    for (int r : residues_hit(fam, f.period()))
        out.push_back({r, branch_value(f.branches()[r], fam)});
    return LimitResult(fam, f.period(), std::move(out));
}

bool eventually_equal(const QuasiPoly& f, const QuasiPoly& g, Family fam) {
    QuasiPoly d = qp_sub(f, g);
    for (int r : residues_hit(fam, d.period()))
        if (!d.branches()[r].is_zero()) return false;
    return true;
}

bool eventually_different(const QuasiPoly& f, const QuasiPoly& g, Family fam) {
    QuasiPoly d = qp_sub(f, g);
    for (int r : residues_hit(fam, d.period())) {
        // determined nonzero sign of the limit-substituted difference
        // certifies eventual nonvanishing on this residue class
        HyperReal v = branch_value(d.branches()[r], fam);
        auto s = hyper_sign(v);
        if (!s || *s == 0) return false;
    }
    return true;
}

} // namespace nap
