// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nap/error.hpp"
#include "nap/hyperreal.hpp"

using namespace nap;

namespace {

const HyperReal A = HyperReal::alpha();
const HyperReal T = HyperReal::tau();

HyperReal rq(long long n, long long d = 1) { return HyperReal(Rat(n, d)); }

// random nonzero-ish rational function in alpha (and occasionally tau)
HyperReal random_hyper(std::mt19937& rng, bool allow_tau = false) {
    std::uniform_int_distribution<int> cd(-5, 5), ed(0, 3), pick(0, 3);
    auto rp = [&](bool var_tau) {
        Poly p;
        for (int k = 0; k < 3; ++k) {
            Monomial m;
            m.e[var_tau ? 1 : 0] = (uint32_t)ed(rng);
            p = p + Poly::from_terms({{m, Rat(cd(rng))}});
        }
        return p;
    };
    Poly n = rp(allow_tau && pick(rng) == 0);
    Poly d = rp(false);
    if (d.is_zero()) d = Poly(Rat(1));
    return HyperReal(n, d);
}

} // namespace

TEST_CASE("canonical form examples") {
    CHECK(rq(1, 2).to_string() == "(1)/(2)");
    CHECK((A / rq(2)).to_string() == "(a)/(2)");
    CHECK((A / (rq(2) * A * A + rq(1))).to_string() == "(a)/(2*a^2 + 1)");
    // joint scalar normalization keeps integer coefficients
    CHECK((A * rq(1, 2) / (A * A + rq(1, 2))).to_string() == "(a)/(2*a^2 + 1)");
    // sign lives in the numerator
    CHECK((rq(1) / -A).to_string() == "(-1)/(a)");
}

TEST_CASE("additive cancellation and identities") {
    CHECK(rq(1) / A + (rq(1) - rq(1) / A) == rq(1));
    CHECK(A / rq(2) + A / rq(2) == A);
    CHECK(A * A.inverse() == rq(1));
}

TEST_CASE("division example and errors") {
    HyperReal p = A / (rq(2) * A * A + rq(1));
    CHECK(p.num() == Poly::variable(0));
    CHECK_THROWS_AS(A / HyperReal(), DomainError);
    CHECK_THROWS_AS(HyperReal().inverse(), DomainError);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 50; ++it) {
        HyperReal x = random_hyper(rng), y = random_hyper(rng), z = random_hyper(rng);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + HyperReal() == x);
        CHECK(x * rq(1) == x);
        CHECK(-(-x) == x);
        CHECK(x - x == HyperReal());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == rq(1));
            CHECK(x / x == rq(1));
        }
    }
}

TEST_CASE("evaluation commutes with field operations") {
    std::mt19937 rng(99);
    for (Rat pt : {Rat(1000000), Rat(10000000)}) {
        for (int it = 0; it < 30; ++it) {
            HyperReal x = random_hyper(rng), y = random_hyper(rng);
            Rat vx, vy;
            try {
                vx = x.eval(pt, pt, pt);
                vy = y.eval(pt, pt, pt);
                CHECK((x + y).eval(pt, pt, pt) == vx + vy);
                CHECK((x * y).eval(pt, pt, pt) == vx * vy);
                if (vy != 0 && !y.is_zero()) CHECK((x / y).eval(pt, pt, pt) == vx / vy);
            } catch (const DomainError&) {
                // sampled a pole; irrelevant to the property
            }
        }
    }
}

TEST_CASE("comparison: univariate is total") {
    CHECK(compare(A, rq(1000000000)) == Cmp::Greater);
    CHECK(compare(A / rq(2), (A - rq(1)) / rq(2)) == Cmp::Greater);
    CHECK(compare(A, A) == Cmp::Equal);
    CHECK(compare(rq(1) / A, rq(0)) == Cmp::Greater);
    CHECK(compare(-A, rq(-5)) == Cmp::Less);
    CHECK(compare(A, HyperReal::tau()) == Cmp::Undetermined);
}

TEST_CASE("comparison: conservative multivariate rules") {
    // all-positive coefficients
    CHECK(compare(A * T + A + rq(1), rq(0)) == Cmp::Greater);
    // coefficient-wise rule: 2*a^2*t + 2*a^2 + 1 > a*t + a
    HyperReal big = rq(2) * A * A * T + rq(2) * A * A + rq(1);
    HyperReal small = A * T + A;
    CHECK(compare(big, small) == Cmp::Greater);
    // cross-generator domination of constants is certifiable
    CHECK(compare(A * T, rq(1000000)) == Cmp::Greater);
    // independent infinite quantities stay incomparable
    CHECK(compare(A * T, A * A) == Cmp::Undetermined);
}

TEST_CASE("comparison order-compatibility on univariate elements") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        HyperReal x = random_hyper(rng), y = random_hyper(rng), z = random_hyper(rng);
        Cmp xy = compare(x, y), yz = compare(y, z);
        REQUIRE(xy != Cmp::Undetermined);
        if (xy == Cmp::Greater && yz == Cmp::Greater) CHECK(compare(x, z) == Cmp::Greater);
        if (xy == Cmp::Greater) CHECK(compare(x + z, y + z) == Cmp::Greater);
        if (compare(x, HyperReal()) == Cmp::Greater && compare(y, HyperReal()) == Cmp::Greater)
            CHECK(compare(x * y, HyperReal()) == Cmp::Greater);
    }
}

TEST_CASE("comparison never contradicts large-point evaluation") {
    std::mt19937 rng(17);
    for (int it = 0; it < 150; ++it) {
        HyperReal x = random_hyper(rng, true), y = random_hyper(rng, true);
        Cmp c = compare(x, y);
        if (c == Cmp::Undetermined) continue;
        for (long long p : {1000LL, 10000LL, 100000LL, 1000000LL}) {
            Rat vx, vy;
            try {
                vx = x.eval(Rat(p), Rat(p), Rat(p));
                vy = y.eval(Rat(p), Rat(p), Rat(p));
            } catch (const DomainError&) {
                continue;
            }
            // at huge points a determined strict sign must agree
            if (p >= 100000) {
                if (c == Cmp::Greater) CHECK(vx >= vy);
                if (c == Cmp::Less) CHECK(vx <= vy);
                if (c == Cmp::Equal) CHECK(vx == vy);
            }
        }
    }
}

TEST_CASE("infinitesimal and finite classification") {
    CHECK(is_infinitesimal(rq(1) / A));
    CHECK(is_infinitesimal(A / (rq(2) * A * A + rq(1))));
    CHECK(!is_infinitesimal(rq(1, 2)));
    CHECK(!is_infinitesimal(A));
    CHECK(is_finite((rq(2) * A + rq(1)) / (A + rq(3))));
    CHECK(is_finite(rq(7)));
    CHECK(!is_finite(A));
    CHECK(!is_finite((A * A + rq(1)) / A));
}

TEST_CASE("multivariate magnitude via witnesses") {
    HyperReal omega_r = rq(2) * A * A * T + rq(2) * A * A + rq(1); // full real-grid size
    HyperReal p = (A * T + A) / omega_r;                           // ~ 1/(2a)
    CHECK(is_infinitesimal(p));
    CHECK(is_finite(p));
    CHECK(standard_part(p) == 0);
    HyperReal q = rq(1) - p;
    CHECK(!is_infinitesimal(q));
    CHECK(standard_part(q) == 1);
    // alpha*tau is neither finite nor infinitesimal
    CHECK(!is_finite(A * T));
    CHECK(!is_infinitesimal(A * T));
    // alpha/tau has genuinely undetermined magnitude
    CHECK_THROWS_AS(is_finite(A / T), UndeterminedError);
    CHECK_THROWS_AS(is_infinitesimal(A / T), UndeterminedError);
}

TEST_CASE("standard part") {
    // limit of (2n+1)/(n+3) at n -> oo, frozen from exact evaluation
    HyperReal x = (rq(2) * A + rq(1)) / (A + rq(3));
    for (long long n : {1000LL, 10000LL, 100000LL, 1000000LL}) {
        Rat v = x.eval(Rat(n), Rat(0), Rat(0));
        CHECK(abs(v - Rat(2)) < Rat(1, n / 100));
    }
    CHECK(standard_part(x) == 2);
    CHECK(standard_part(A / (rq(2) * A * A + rq(1))) == 0);
    CHECK(standard_part(rq(1, 2) - rq(1) / (rq(2) * A)) == Rat(1, 2));
    CHECK_THROWS_AS(standard_part(A), DomainError);
}

TEST_CASE("standard part is a ring homomorphism on finite elements") {
    std::mt19937 rng(31);
    int used = 0;
    while (used < 40) {
        HyperReal x = random_hyper(rng), y = random_hyper(rng);
        try {
            if (!is_finite(x) || !is_finite(y)) continue;
        } catch (const UndeterminedError&) {
            continue;
        }
        ++used;
        CHECK(standard_part(x + y) == standard_part(x) + standard_part(y));
        CHECK(standard_part(x * y) == standard_part(x) * standard_part(y));
    }
}

TEST_CASE("infinitely close") {
    CHECK(infinitely_close(rq(1, 2), rq(1, 2) - rq(1) / (rq(2) * A)));
    CHECK(!infinitely_close(A, A + rq(1)));
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        HyperReal x = random_hyper(rng);
        CHECK(infinitely_close(x, x));
    }
}

TEST_CASE("render/parse round-trip") {
    std::mt19937 rng(77);
    for (int it = 0; it < 40; ++it) {
        HyperReal x = random_hyper(rng, true);
        CHECK(HyperReal::parse(x.to_string()) == x);
    }
    CHECK(HyperReal::parse("(a)/(2*a^2 + 1)") == HyperReal::alpha() / (rq(2) * A * A + rq(1)));
    CHECK(HyperReal::parse("1/2 - 1/(2*a)") == rq(1, 2) - (rq(2) * A).inverse());
    CHECK(HyperReal::parse("a^3") == A * A * A);
    CHECK_THROWS_AS(HyperReal::parse("a +"), ParseError);
    CHECK_THROWS_AS(HyperReal::parse("(a"), ParseError);
    CHECK_THROWS_AS(HyperReal::parse("x"), ParseError);
}

TEST_CASE("deterministic representation order") {
    HyperReal x = A / rq(2), y = (A - rq(1)) / rq(2);
    CHECK(HyperReal::repr_less(y, x) != HyperReal::repr_less(x, y));
    CHECK(!HyperReal::repr_less(x, x));
}
