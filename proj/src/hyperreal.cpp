// SPDX-License-Identifier: Apache-2.0
#include "nap/hyperreal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

#include "nap/error.hpp"

namespace nap {

namespace {

// Shift rule: every generator exceeds any fixed rational B, so writing
// g_i = B + x_i with x_i > 0 is sound. If the shifted polynomial has
// uniformly nonnegative (nonpositive) coefficients it is positive
// (negative) wherever all generators exceed B.
std::optional<int> shift_rule_sign(const Poly& p) {
    for (long long b : {1LL, 2LL, 16LL, 256LL, 65536LL}) {
        Poly q = p;
        for (int slot = 0; slot < kNumVars; ++slot)
            if (p.vars_mask() & (1u << slot))
                q = q.substitute(slot, Poly(Rat(b)) + Poly::variable(slot));
        bool nonneg = true, nonpos = true;
        for (auto& [m, c] : q.terms()) {
            (void)m;
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
        }
        if (nonneg) return 1;
        if (nonpos) return -1;
    }
    return std::nullopt;
}

} // namespace

std::optional<int> poly_sign_at_infinity(const Poly& p) {
    if (p.is_zero()) return 0;
    if (p.is_constant()) return p.constant_value() > 0 ? 1 : -1;
    if (p.is_univariate()) {
        // a single positive infinite variable exceeds every real root,
        // so the leading coefficient decides
        return p.leading().second > 0 ? 1 : -1;
    }
    // split on one variable and require all coefficient polynomials to
    // agree in sign; monomial values are positive, so that sign decides
    for (int slot = 0; slot < kNumVars; ++slot) {
        if (!(p.vars_mask() & (1u << slot))) continue;
        int agreed = 0;
        bool ok = true;
        for (const Poly& c : coefficients_in(p, slot)) {
            if (c.is_zero()) continue;
            auto s = poly_sign_at_infinity(c);
            if (!s || *s == 0 || (agreed != 0 && *s != agreed)) {
                ok = false;
                break;
            }
            agreed = *s;
        }
        if (ok && agreed != 0) return agreed;
    }
    return shift_rule_sign(p);
}

HyperReal::HyperReal(const Rat& q)
    : num_(Rat(nap::num(q))), den_(Rat(nap::den(q))) {}

HyperReal::HyperReal(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

HyperReal HyperReal::generator(Gen g) {
    return HyperReal(Poly::variable((int)g), Poly(Rat(1)));
}

void HyperReal::canonicalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    // joint scalar normalization: integer coefficients, joint content 1
    Rat c = rat_gcd(num_.content(), den_.content());
    Rat inv(nap::den(c), nap::num(c));
    num_ = num_ * inv;
    den_ = den_ * inv;
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat HyperReal::as_rational() const {
    if (!is_rational()) throw DomainError("not a rational value: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

HyperReal HyperReal::operator-() const {
    HyperReal r = *this;
    r.num_ = -r.num_;
    return r;
}

HyperReal HyperReal::operator+(const HyperReal& o) const {
    return HyperReal(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

HyperReal HyperReal::operator-(const HyperReal& o) const { return *this + (-o); }

HyperReal HyperReal::operator*(const HyperReal& o) const {
    return HyperReal(num_ * o.num_, den_ * o.den_);
}

HyperReal HyperReal::operator/(const HyperReal& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return HyperReal(num_ * o.den_, den_ * o.num_);
}

HyperReal HyperReal::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return HyperReal(den_, num_);
}

bool HyperReal::repr_less(const HyperReal& a, const HyperReal& b) {
    auto poly_less = [](const Poly& p, const Poly& q) -> std::optional<bool> {
        const auto &tp = p.terms(), &tq = q.terms();
        for (size_t i = 0; i < tp.size() && i < tq.size(); ++i) {
            int c = grlex_cmp(tp[i].first, tq[i].first);
            if (c != 0) return c > 0;
            if (tp[i].second != tq[i].second) return tp[i].second < tq[i].second;
        }
        if (tp.size() != tq.size()) return tp.size() < tq.size();
        return std::nullopt;
    };
    if (auto r = poly_less(a.num_, b.num_)) return *r;
    if (auto r = poly_less(a.den_, b.den_)) return *r;
    return false;
}

Rat HyperReal::eval(const Rat& a, const Rat& t, const Rat& g) const {
    std::array<Rat, kNumVars> v{a, t, g, Rat(0)};
    Rat d = den_.eval(v);
    if (d == 0) throw DomainError("evaluation point annihilates denominator");
    return num_.eval(v) / d;
}

std::string HyperReal::to_string() const {
    return "(" + num_.to_string(kGeneratorNames) + ")/(" +
           den_.to_string(kGeneratorNames) + ")";
}

Cmp compare(const HyperReal& x, const HyperReal& y) {
    auto s = hyper_sign(x - y);
    if (!s) return Cmp::Undetermined;
    if (*s == 0) return Cmp::Equal;
    return *s > 0 ? Cmp::Greater : Cmp::Less;
}

std::optional<int> hyper_sign(const HyperReal& x) {
    auto sn = poly_sign_at_infinity(x.num());
    if (!sn) return std::nullopt;
    if (*sn == 0) return 0;
    auto sd = poly_sign_at_infinity(x.den());
    if (!sd) return std::nullopt;
    return *sn * *sd;
}

namespace {

// |x| < bound, certified through the conservative comparison?
bool certified_abs_below(const HyperReal& x, const Rat& bound) {
    return compare(x, HyperReal(bound)) == Cmp::Less &&
           compare(x, HyperReal(-bound)) == Cmp::Greater;
}

// search |x| <= C over a doubling ladder
bool certified_bounded(const HyperReal& x) {
    Rat c(1);
    for (int i = 0; i < 24; ++i, c *= 16)
        if (certified_abs_below(x, c)) return true;
    return false;
}

int single_gen(unsigned mask) {
    for (int i = 0; i < kNumVars; ++i)
        if (mask == (1u << i)) return i;
    return -1;
}

} // namespace

bool is_infinitesimal(const HyperReal& x) {
    if (x.is_zero()) return true;
    if (x.is_rational()) return false;
    unsigned mask = x.gens_mask();
    if (int g = single_gen(mask); g >= 0)
        return x.num().degree_in(g) < x.den().degree_in(g);
    // multivariate: |x| <= C/g for some generator makes x infinitesimal
    for (int g = 0; g < kNumVars; ++g) {
        if (!(mask & (1u << g))) continue;
        if (certified_bounded(x * HyperReal::generator((Gen)g))) return true;
    }
    // a certified gap |x| > c > 0 rules it out
    Rat c(1);
    for (int i = 0; i < 24; ++i, c /= 16) {
        if (compare(x, HyperReal(c)) == Cmp::Greater ||
            compare(x, HyperReal(-c)) == Cmp::Less)
            return false;
    }
    throw UndeterminedError("magnitude of " + x.to_string() + " not determined");
}

bool is_finite(const HyperReal& x) {
    if (x.is_rational()) return true;
    unsigned mask = x.gens_mask();
    if (int g = single_gen(mask); g >= 0)
        return x.num().degree_in(g) <= x.den().degree_in(g);
    if (certified_bounded(x)) return true;
    // certified |x| >= c*g for a generator g means x is infinite
    for (int g = 0; g < kNumVars; ++g) {
        if (!(mask & (1u << g))) continue;
        HyperReal y = x / HyperReal::generator((Gen)g);
        Rat c(1);
        for (int i = 0; i < 8; ++i, c /= 16)
            if (compare(y, HyperReal(c)) == Cmp::Greater ||
                compare(y, HyperReal(-c)) == Cmp::Less)
                return false;
    }
    throw UndeterminedError("magnitude of " + x.to_string() + " not determined");
}

namespace {

// Candidate rational near v: continued-fraction convergents, stopping at
// the first huge partial quotient (the "noise" contributed by 1/alpha
// scale corrections at the sampled points).
Rat reconstruct_candidate(const Rat& v) {
    const Int huge = 1000000;
    Int p0 = 1, q0 = 0; // h_{-1}
    Int p1 = 0, q1 = 1; // placeholder, fixed below
    Rat x = v;
    Int a = floor_int(x);
    p1 = a;
    q1 = 1;
    Rat frac = x - Rat(a);
    for (int i = 0; i < 64 && frac != 0; ++i) {
        x = Rat(1) / frac;
        a = floor_int(x);
        if (a >= huge) break; // previous convergent is the candidate
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = x - Rat(a);
    }
    return Rat(p1, q1);
}

} // namespace

Rat standard_part(const HyperReal& x) {
    if (x.is_rational()) return x.as_rational();
    unsigned mask = x.gens_mask();
    if (int g = single_gen(mask); g >= 0) {
        int dn = x.num().degree_in(g), dd = x.den().degree_in(g);
        if (dn > dd) throw DomainError("standard part of unbounded element " + x.to_string());
        if (dn < dd) return Rat(0);
        return coefficients_in(x.num(), g).back().constant_value() /
               coefficients_in(x.den(), g).back().constant_value();
    }
    if (!is_finite(x)) throw DomainError("standard part of unbounded element " + x.to_string());
    // heuristic candidate, exact certificate
    Rat a(1000003), t(10000019), g(100000007);
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            Rat v = x.eval(a, t, g);
            Rat cand = reconstruct_candidate(v);
            if (is_infinitesimal(x - HyperReal(cand))) return cand;
            break;
        } catch (const DomainError&) {
            a += 10;
            t += 10;
            g += 10; // denominator vanished at the sample point
        } catch (const UndeterminedError&) {
            break;
        }
    }
    if (is_infinitesimal(x)) return Rat(0);
    throw UndeterminedError("standard part of " + x.to_string() + " not determined");
}

bool infinitely_close(const HyperReal& x, const HyperReal& y) {
    return is_infinitesimal(x - y);
}

// ---------------------------------------------------------------------
// parsing of the rendering grammar

namespace {

struct HrParser {
    const std::string& s;
    size_t i = 0;

    explicit HrParser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("hyperreal: " + msg, 1, (int)i + 1);
    }

    HyperReal parse_expr() {
        HyperReal v = parse_term();
        for (;;) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }
    HyperReal parse_term() {
        HyperReal v = parse_factor();
        for (;;) {
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }
    HyperReal parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        HyperReal base = parse_atom();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            if (j == i) fail("exponent expected");
            unsigned long k = std::stoul(s.substr(i, j - i));
            i = j;
            HyperReal r(Rat(1));
            for (unsigned long c = 0; c < k; ++c) r = r * base;
            return r;
        }
        return base;
    }
    HyperReal parse_atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            HyperReal v = parse_expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (c == 'a' || c == 't' || c == 'g') {
            ++i;
            return HyperReal::generator(c == 'a' ? Gen::Alpha
                                                 : c == 't' ? Gen::Tau : Gen::Gamma);
        }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            Int v(s.substr(i, j - i));
            i = j;
            return HyperReal(Rat(v));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

HyperReal HyperReal::parse(const std::string& text) {
    HrParser p(text);
    HyperReal v = p.parse_expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

} // namespace nap
