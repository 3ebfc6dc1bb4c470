// SPDX-License-Identifier: Apache-2.0
#include "nap/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nap {

int grlex_cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

Poly::Poly(const Rat& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(int slot, uint32_t power) {
    Poly p;
    if (power == 0) return Poly(Rat(1));
    Monomial m;
    m.e[slot] = power;
    p.terms_.push_back({m, Rat(1)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return grlex_cmp(x.first, y.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    // a merge may zero an interior term only if inputs were unsorted
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.second == 0; }),
              out.end());
    terms_ = std::move(out);
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_[0].second;
}

Rat Poly::constant_term() const {
    if (terms_.empty() || !terms_.back().first.is_constant()) return Rat(0);
    return terms_.back().second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return (int)terms_[0].first.total_degree();
}

int Poly::degree_in(int slot) const {
    if (terms_.empty()) return -1;
    uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.e[slot]);
    return (int)d;
}

unsigned Poly::vars_mask() const {
    unsigned m = 0;
    for (auto& t : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (t.first.e[i] > 0) m |= 1u << i;
    return m;
}

bool Poly::is_univariate() const {
    unsigned m = vars_mask();
    return (m & (m - 1)) == 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    // merge two sorted term lists
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size())
            c = -1;
        else if (j == o.terms_.size())
            c = 1;
        else
            c = grlex_cmp(terms_[i].first, o.terms_[j].first);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (s != 0) r.terms_.push_back({terms_[i].first, s});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<Monomial, Rat, decltype([](const Monomial& a, const Monomial& b) {
                 return grlex_cmp(a, b) > 0;
             })>
        acc;
    for (auto& x : terms_)
        for (auto& y : o.terms_) acc[x.first * y.first] += x.second * y.second;
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::pow(uint32_t k) const {
    Poly r(Rat(1));
    Poly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Rat Poly::eval(const std::array<Rat, kNumVars>& v) const {
    Rat acc(0);
    for (auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < kNumVars; ++i)
            for (uint32_t k = 0; k < m.e[i]; ++k) term *= v[i];
        acc += term;
    }
    return acc;
}

Poly Poly::substitute(int slot, const Poly& value) const {
    Poly acc;
    for (auto& [m, c] : terms_) {
        Monomial rest = m;
        uint32_t k = rest.e[slot];
        rest.e[slot] = 0;
        Poly term = Poly::from_terms({{rest, c}});
        acc = acc + term * value.pow(k);
    }
    return acc;
}

Rat Poly::content() const {
    Rat g(0);
    for (auto& t : terms_) g = rat_gcd(g, t.second);
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    return *this * Rat(den(c), num(c));
}

std::string Poly::to_string(const VarNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
        }
        if (vars.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += vars;
        else
            out += rat_to_string(a) + "*" + vars;
    }
    return out;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    Poly rem = a;
    std::vector<Poly::Term> q;
    const auto& [lm, lc] = b.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!rm.divisible_by(lm)) return std::nullopt;
        Poly::Term t{rm / lm, rc / lc};
        q.push_back(t);
        rem = rem - b * Poly::from_terms({t});
    }
    return Poly::from_terms(std::move(q));
}

std::vector<Poly> coefficients_in(const Poly& p, int slot) {
    int d = std::max(p.degree_in(slot), 0);
    std::vector<std::vector<Poly::Term>> buckets(d + 1);
    for (auto& [m, c] : p.terms()) {
        Monomial rest = m;
        uint32_t k = rest.e[slot];
        rest.e[slot] = 0;
        buckets[k].push_back({rest, c});
    }
    std::vector<Poly> out(d + 1);
    for (int i = 0; i <= d; ++i) out[i] = Poly::from_terms(std::move(buckets[i]));
    return out;
}

namespace {

// Content of p viewed as univariate in slot: gcd of its coefficients.
Poly content_in(const Poly& p, int slot) {
    Poly g;
    for (auto& c : coefficients_in(p, slot)) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in `slot`: lc(b)^(da-db+1) * a = q*b + r.
Poly pseudo_rem(Poly a, const Poly& b, int slot) {
    int db = b.degree_in(slot);
    auto bc = coefficients_in(b, slot);
    const Poly& lb = bc[db];
    int da = a.degree_in(slot);
    while (!a.is_zero() && (da = a.degree_in(slot)) >= db) {
        auto ac = coefficients_in(a, slot);
        Poly shift = Poly::variable(slot, (uint32_t)(da - db));
        a = a * lb - b * shift * ac[da];
    }
    return a;
}

Poly normalize_gcd(Poly g) {
    if (g.is_zero()) return g;
    g = g.primitive_part();
    if (g.leading().second < 0) g = -g;
    return g;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

    // pick the lowest-index variable occurring in either operand
    unsigned mask = a.vars_mask() | b.vars_mask();
    int slot = 0;
    while (!(mask & (1u << slot))) ++slot;

    if (a.degree_in(slot) < 0) {
        // slot occurs only in b: gcd divides content of b in that slot
        return poly_gcd(a, content_in(b, slot));
    }
    if (b.degree_in(slot) < 0) return poly_gcd(content_in(a, slot), b);

    // primitive Euclidean PRS in `slot`
    Poly ca = content_in(a, slot), cb = content_in(b, slot);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = *exact_divide(a, ca), pb = *exact_divide(b, cb);
    if (pa.degree_in(slot) < pb.degree_in(slot)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, slot);
        pa = pb;
        if (r.is_zero()) {
            pb = Poly();
        } else {
            Poly c = content_in(r, slot);
            pb = *exact_divide(r, c);
        }
    }
    // strip content picked up by pseudo-division
    pa = *exact_divide(pa, content_in(pa, slot));
    return normalize_gcd(pa * cg);
}

} // namespace nap
