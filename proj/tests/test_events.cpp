// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nap/error.hpp"
#include "nap/events.hpp"

using namespace nap;

namespace {

NatEvent random_nat(std::mt19937& rng) {
    std::uniform_int_distribution<int> kd(1, 6), coin(0, 1), pd(1, 40), nd(0, 3);
    NatEvent e = coin(rng) ? NatEvent::empty() : NatEvent::progression(kd(rng), 0);
    int extra = nd(rng);
    for (int i = 0; i < extra; ++i) {
        int k = kd(rng);
        e = e.unite(NatEvent::progression(k, std::uniform_int_distribution<int>(0, k - 1)(rng)));
    }
    std::set<long long> pts;
    for (int i = nd(rng); i > 0; --i) pts.insert(pd(rng));
    if (coin(rng))
        e = e.unite(NatEvent::finite(pts));
    else if (!pts.empty())
        e = e.intersect(NatEvent::finite(pts).complement());
    return e;
}

} // namespace

TEST_CASE("nat: progression membership") {
    NatEvent e = NatEvent::progression(2, 0);  // evens
    NatEvent o = NatEvent::progression(2, 1);  // odds
    CHECK(e.member(14));
    CHECK(!e.member(7));
    CHECK(NatEvent::progression(3, 1).member(5)); // 5 = 2*3-1
    CHECK(o.member(1));
    CHECK_THROWS_AS(e.member(0), DomainError);
    CHECK_THROWS_AS(NatEvent::progression(3, 3), DomainError);
}

TEST_CASE("nat: boolean structure") {
    NatEvent e = NatEvent::progression(2, 0);
    CHECK(e.complement() == NatEvent::progression(2, 1));
    CHECK(e.unite(e.complement()) == NatEvent::full());
    CHECK(e.intersect(e.complement()) == NatEvent::empty());
    // CRT: evens meet multiples of 3 at multiples of 6
    NatEvent six = NatEvent::progression(2, 0).intersect(NatEvent::progression(3, 0));
    CHECK(six == NatEvent::progression(6, 0));
    for (long long x = 1; x <= 10000; ++x)
        CHECK(six.member(x) == (x % 6 == 0));
}

TEST_CASE("nat: random boolean identities against pointwise truth") {
    std::mt19937 rng(5);
    for (int it = 0; it < 40; ++it) {
        NatEvent a = random_nat(rng), b = random_nat(rng);
        NatEvent u = a.unite(b), i = a.intersect(b), c = a.complement();
        for (long long x = 1; x <= 200; ++x) {
            CHECK(u.member(x) == (a.member(x) || b.member(x)));
            CHECK(i.member(x) == (a.member(x) && b.member(x)));
            CHECK(c.member(x) == !a.member(x));
        }
        CHECK(a.intersect(b).subset_of(a));
        CHECK(a.subset_of(a.unite(b)));
    }
}

TEST_CASE("nat: counts against enumeration") {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        NatEvent a = random_nat(rng);
        QuasiPoly qp = a.eventual_count();
        for (long long n : {1LL, 2LL, 7LL, 24LL, 120LL, 720LL}) {
            Int brute = 0;
            for (long long x = 1; x <= n; ++x)
                if (a.member(x)) ++brute;
            CHECK(a.count_upto(n) == brute);
            if (n >= qp.threshold()) CHECK(qp.eval_nat(n) == Rat(brute));
        }
    }
    // the worked half-count
    NatEvent evens = NatEvent::progression(2, 0);
    CHECK(evens.count_upto(720) == 360);
    QuasiPoly qp = evens.eventual_count();
    CHECK(qp.period() == 2);
    CHECK(qp.polynomial_part() == Poly::variable(kIdxN) * Rat(1, 2));
    CHECK(qp.corrections() == std::vector<Rat>{Rat(0), Rat(-1, 2)});
}

TEST_CASE("nat: weighted counts") {
    WeightFn w;
    w.modulus = 2;
    w.class_weights = {Rat(2), Rat(1)}; // 2 on evens, 1 on odds
    w.validate();
    NatEvent evens = NatEvent::progression(2, 0);
    CHECK(weighted_count_upto(evens, w, 2) == 2);
    CHECK(weighted_count_upto(NatEvent::full(), w, 2) == 3);
    std::mt19937 rng(11);
    for (int it = 0; it < 15; ++it) {
        NatEvent a = random_nat(rng);
        WeightFn w2;
        w2.modulus = 3;
        w2.class_weights = {Rat(1, 2), Rat(2), Rat(5, 3)};
        w2.exceptions[7] = Rat(9);
        QuasiPoly qp = weighted_eventual_count(a, w2);
        for (long long n : {30LL, 121LL, 720LL}) {
            Rat brute(0);
            for (long long x = 1; x <= n; ++x)
                if (a.member(x)) brute += w2.weight(x);
            CHECK(weighted_count_upto(a, w2, n) == brute);
            if (n >= qp.threshold()) CHECK(qp.eval_nat(n) == brute);
        }
    }
    WeightFn bad;
    bad.class_weights = {Rat(0)};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("q: primitive counts against enumeration") {
    auto brute = [](const QEvent& a, long long n) {
        Int c = 0;
        for (long long p = -n * n; p <= n * n; ++p)
            if (a.member(Rat(p, n))) ++c;
        return c;
    };
    QEvent all = QEvent::full();
    QEvent nat = QEvent::nat_embed();
    QEvent zed = QEvent::int_embed();
    QEvent unit = QEvent::interval(Rat(0), Rat(1));
    QEvent neg = QEvent::interval(Rat(-3, 2), Rat(5, 4));
    for (long long n : {6LL, 24LL}) {
        CHECK(all.count_at(n) == 2 * n * n + 1);
        CHECK(all.count_at(n) == brute(all, n));
        CHECK(nat.count_at(n) == n);
        CHECK(nat.count_at(n) == brute(nat, n));
        CHECK(zed.count_at(n) == 2 * n + 1);
        CHECK(unit.count_at(n) == n);
        CHECK(unit.count_at(n) == brute(unit, n));
        CHECK(neg.count_at(n) == brute(neg, n));
    }
    // the {0, 1/24, ..., 23/24} example
    CHECK(unit.count_at(24) == 24);
    CHECK(QEvent::interval(Rat(1), Rat(1)).is_empty());
}

TEST_CASE("q: eventual counts at factorial indices") {
    QEvent all = QEvent::full();
    QuasiPoly qa = all.eventual_count();
    QEvent pos = QEvent::halfline(Rat(0)).intersect(QEvent::finite({Rat(0)}).complement());
    QuasiPoly qpos = pos.eventual_count();
    QEvent nat = QEvent::nat_embed();
    for (long long n : {24LL, 120LL, 720LL}) {
        CHECK(qa.eval_nat(n) == Rat(2 * n * n + 1));
        CHECK(qpos.eval_nat(n) == Rat(n * n));
        CHECK(nat.eventual_count().eval_nat(n) == Rat(n));
    }
    LimitResult r = limit(qpos, Family::QGrid);
    CHECK(r.determined());
    CHECK(r.value() == HyperReal::alpha() * HyperReal::alpha());
}

TEST_CASE("q: boolean ops against pointwise truth") {
    std::mt19937 rng(13);
    auto rand_q = [&](auto& self) -> QEvent {
        std::uniform_int_distribution<int> pick(0, 6), num(-8, 8), den(1, 4);
        switch (pick(rng)) {
            case 0: return QEvent::interval(Rat(num(rng), den(rng)), Rat(num(rng) + 9, den(rng)));
            case 1: return QEvent::halfline(Rat(num(rng), den(rng)));
            case 2: return QEvent::nat_embed();
            case 3: return QEvent::int_embed();
            case 4: return QEvent::finite({Rat(num(rng), den(rng)), Rat(num(rng))});
            case 5: return QEvent::from_nat(NatEvent::progression(den(rng) + 1, 1));
            default: return self(self).complement();
        }
    };
    std::vector<Rat> probes;
    for (int u = -30; u <= 30; ++u)
        for (int v : {1, 2, 3, 4})
            probes.emplace_back(u, v);
    for (int it = 0; it < 30; ++it) {
        QEvent a = rand_q(rand_q), b = rand_q(rand_q);
        QEvent u = a.unite(b), i = a.intersect(b), c = a.complement();
        for (auto& x : probes) {
            CHECK(u.member(x) == (a.member(x) || b.member(x)));
            CHECK(i.member(x) == (a.member(x) && b.member(x)));
            CHECK(c.member(x) == !a.member(x));
        }
        CHECK(u.count_at(12) == a.count_at(12) + b.count_at(12) - i.count_at(12));
        CHECK(a.unite(a.complement()).is_full());
        CHECK(a.intersect(a.complement()).is_empty());
        CHECK(a.same_set(a.complement().complement()));
    }
}

TEST_CASE("q: eventual count matches enumeration for random events") {
    std::mt19937 rng(17);
    auto rand_simple = [&]() {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 3), pick(0, 3);
        switch (pick(rng)) {
            case 0: {
                Rat a(num(rng), den(rng));
                return QEvent::interval(a, a + Rat(7, den(rng)));
            }
            case 1: return QEvent::from_nat(NatEvent::progression(2 + den(rng), 1));
            case 2: return QEvent::halfline(Rat(num(rng)));
            default: return QEvent::nat_embed();
        }
    };
    for (int it = 0; it < 20; ++it) {
        QEvent a = rand_simple();
        if (it % 3 == 0) a = a.complement();
        if (it % 4 == 0) a = a.unite(rand_simple());
        QuasiPoly qp = a.eventual_count();
        for (long long n : {24LL, 120LL}) {
            if (n < qp.threshold()) continue;
            Int brute = 0;
            for (long long p = -n * n; p <= n * n; ++p)
                if (a.member(Rat(p, n))) ++brute;
            CHECK(qp.eval_nat(n) == Rat(brute));
        }
    }
}

TEST_CASE("quadirr: exact ordering") {
    QuadIrr r2(Rat(0), Rat(1), 2); // sqrt(2)
    CHECK(r2.compare(Rat(1)) > 0);
    CHECK(r2.compare(Rat(3, 2)) < 0);
    CHECK(r2.compare(Rat(141421356, 100000000)) > 0);
    QuadIrr r8(Rat(0), Rat(1), 8); // 2*sqrt(2), canonicalized
    CHECK(r8.radicand() == 2);
    CHECK(r8.coef() == 2);
    CHECK(r2.compare(r8) < 0);
    CHECK((r2 * Rat(2)) == r8);
    QuadIrr r3(Rat(0), Rat(1), 3);
    CHECK(r2.compare(r3) < 0);
    CHECK(r3.compare(r2) > 0);
    QuadIrr x(Rat(1), Rat(-1), 2); // 1 - sqrt(2) < 0
    CHECK(x.compare(Rat(0)) < 0);
    CHECK(x.floor() == -1);
    CHECK(r2.floor() == 1);
    CHECK_THROWS_AS(QuadIrr(Rat(0), Rat(1), 4), DomainError);
    CHECK_THROWS_AS(QuadIrr(Rat(0), Rat(0), 2), DomainError);
}

TEST_CASE("r: counts against enumeration with quadratic clouds") {
    std::vector<QuadIrr> theta{QuadIrr(Rat(0), Rat(1, 2), 2),   // sqrt(2)/2
                               QuadIrr(Rat(0), Rat(1, 3), 3)};  // sqrt(3)/3
    auto brute = [&](const REvent& a, long long n) {
        Int c = 0;
        for (long long p = -n * n; p <= n * n; ++p) {
            if (a.member(Rat(p, n))) ++c;
            if (p < n * n)
                for (auto& th : theta)
                    if (a.member((th + Rat(p)) * Rat(1, n))) ++c;
        }
        return c;
    };
    REvent full = REvent::full();
    REvent unit = REvent::interval(Rat(0), Rat(1));
    REvent wide = REvent::interval(Rat(-2), Rat(5, 2));
    REvent irr = REvent::interval(Rat(0), QuadIrr(Rat(0), Rat(1), 2)); // [0, sqrt 2)
    for (long long n : {4LL, 6LL}) {
        long long t = (long long)theta.size();
        CHECK(full.count_at(n, theta) == (2 * n * n + 1) + 2 * n * n * t);
        CHECK(full.count_at(n, theta) == brute(full, n));
        CHECK(unit.count_at(n, theta) == n * (t + 1));
        CHECK(unit.count_at(n, theta) == brute(unit, n));
        CHECK(wide.count_at(n, theta) == brute(wide, n));
        CHECK(irr.count_at(n, theta) == brute(irr, n));
        REvent c = wide.complement();
        CHECK(c.count_at(n, theta) == brute(c, n));
    }
}

TEST_CASE("r: rational eventual counts are exact") {
    REvent unit = REvent::interval(Rat(0), Rat(1));
    CountBounds cb = unit.eventual_count();
    CHECK(cb.exact);
    CHECK(cb.lower == cb.upper);
    // n(b-a)(t+1)
    for (long long n : {24LL, 120LL})
        for (long long t : {0LL, 1LL, 3LL})
            CHECK(cb.lower.eval_rt(n, t) == Rat(n * (t + 1)));
    REvent full = REvent::full();
    CountBounds cf = full.eventual_count();
    CHECK(cf.exact);
    CHECK(cf.lower.eval_rt(24, 2) == Rat(2 * 24 * 24 * 3 + 1));
}

TEST_CASE("r: irrational endpoints produce a sandwich") {
    QuadIrr rt2(Rat(0), Rat(1), 2);
    REvent e = REvent::interval(Rat(0), rt2);
    CountBounds cb = e.eventual_count(120);
    CHECK(!cb.exact);
    std::vector<QuadIrr> theta{QuadIrr(Rat(0), Rat(1, 2), 3)};
    for (long long n : {120LL, 720LL}) {
        if (n < std::max(cb.lower.threshold(), cb.upper.threshold())) continue;
        Int brute = e.count_at(n, theta);
        CHECK(cb.lower.eval_rt(n, 1) <= Rat(brute));
        CHECK(Rat(brute) <= cb.upper.eval_rt(n, 1));
    }
}

TEST_CASE("coin: sequences and cylinders") {
    CoinSeq hh({true, true}, true); // canonical: constant H
    CHECK(hh.is_constant());
    CoinSeq thh({false}, true); // T then H forever
    CHECK(thh.prefix.size() == 1);
    CHECK(thh.shifted(1) == CoinSeq::constant(true));

    CoinEvent c1 = CoinEvent::cylinder({{1, true}});
    CHECK(c1.member(CoinSeq::constant(true)));
    CHECK(!c1.member(CoinSeq::constant(false)));
    CHECK(c1.member(CoinSeq({true, false, false}, false)));
    CHECK(!c1.member(thh));

    CoinEvent c13 = CoinEvent::cylinder({{1, true}, {3, false}});
    CHECK(c13.assignment_count() == 2); // positions 2 free within window 3
    CHECK(c13.window() == 3);
    CHECK_THROWS_AS(CoinEvent::cylinder({{1, true}, {1, false}}), DomainError);
}

TEST_CASE("coin: counts against enumeration") {
    std::vector<CoinSeq> sigma{CoinSeq::constant(true), CoinSeq::constant(false),
                               CoinSeq({true, false}, false)};
    auto brute = [&](const CoinEvent& a, int N) {
        Int c = 0;
        for (size_t b = 0; b < (size_t(1) << N); ++b) {
            for (auto& tail : sigma) {
                std::vector<bool> prefix;
                for (int j = 0; j < N; ++j) prefix.push_back((b >> j) & 1);
                for (bool v : tail.prefix) prefix.push_back(v);
                CoinSeq w(prefix, tail.tail);
                if (a.member(w)) ++c;
            }
        }
        return c;
    };
    CoinEvent full = CoinEvent::full();
    CoinEvent c1 = CoinEvent::cylinder({{1, true}});
    CoinEvent c123 = CoinEvent::cylinder({{1, true}, {2, true}, {3, true}});
    CoinEvent single = CoinEvent::finite({CoinSeq::constant(true)});
    for (int N : {0, 2, 4}) {
        CHECK(full.count_at(N, sigma) == (Int(1) << N) * 3);
        CHECK(full.count_at(N, sigma) == brute(full, N));
        CHECK(c1.count_at(N, sigma) == brute(c1, N));
        CHECK(c123.count_at(N, sigma) == brute(c123, N));
        CHECK(single.count_at(N, sigma) == brute(single, N));
        CoinEvent c = c123.complement();
        CHECK(c.count_at(N, sigma) == brute(c, N));
    }
    // 2^3 * 2 = 16 sequences in the N=3 grid over two tails
    std::vector<CoinSeq> two{CoinSeq::constant(true), CoinSeq::constant(false)};
    CHECK(full.count_at(3, two) == 16);
}

TEST_CASE("coin: eventual counts") {
    CoinEvent c123 = CoinEvent::cylinder({{1, true}, {2, true}, {3, true}});
    QuasiPoly qp = c123.eventual_count();
    CHECK(qp.eval_coin(3, 2) == Rat(2));   // 2^{3-3} * 2
    CHECK(qp.eval_coin(10, 8) == Rat(1024)); // 2^{10-3} * 8
    LimitResult r = limit(qp, Family::CoinCT);
    CHECK(r.determined());
    CHECK(r.value() == HyperReal::gamma() / 8);

    CoinEvent single = CoinEvent::finite({CoinSeq({false, false}, true)});
    QuasiPoly qs = single.eventual_count();
    CHECK(qs.required_tails() == kTailH);
    CHECK(limit(qs, Family::CoinCT).value() == HyperReal(Rat(1)));
}

TEST_CASE("coin: boolean ops against pointwise truth") {
    std::mt19937 rng(23);
    std::vector<CoinSeq> probes;
    for (int i = 0; i < 24; ++i) {
        std::vector<bool> pre;
        for (int j = std::uniform_int_distribution<int>(0, 4)(rng); j > 0; --j)
            pre.push_back(rng() & 1);
        probes.emplace_back(pre, rng() & 1);
    }
    auto rand_coin = [&]() {
        std::uniform_int_distribution<int> pick(0, 2), pos(1, 4);
        switch (pick(rng)) {
            case 0:
                return CoinEvent::cylinder({{pos(rng), (bool)(rng() & 1)}});
            case 1: {
                int p1 = pos(rng), p2 = p1 + pos(rng);
                return CoinEvent::cylinder({{p1, (bool)(rng() & 1)}, {p2, (bool)(rng() & 1)}});
            }
            default:
                return CoinEvent::finite({probes[rng() % probes.size()]});
        }
    };
    for (int it = 0; it < 30; ++it) {
        CoinEvent a = rand_coin(), b = rand_coin();
        CoinEvent u = a.unite(b), i = a.intersect(b), c = a.complement();
        for (auto& w : probes) {
            CHECK(u.member(w) == (a.member(w) || b.member(w)));
            CHECK(i.member(w) == (a.member(w) && b.member(w)));
            CHECK(c.member(w) == !a.member(w));
        }
        CHECK(a.unite(a.complement()).is_full());
        CHECK(a.intersect(a.complement()).is_empty());
    }
}

TEST_CASE("counting additivity for disjoint events") {
    std::mt19937 rng(29);
    for (int it = 0; it < 20; ++it) {
        NatEvent a = random_nat(rng);
        NatEvent b = random_nat(rng).intersect(a.complement());
        QuasiPoly qa = a.eventual_count(), qb = b.eventual_count();
        QuasiPoly qu = a.unite(b).eventual_count();
        QuasiPoly sum = qp_add(qa, qb);
        for (long long n = 1; n <= 60; ++n)
            CHECK(a.unite(b).count_upto(n) == a.count_upto(n) + b.count_upto(n));
        long long n0 = std::max(qu.threshold(), sum.threshold());
        for (long long n = n0; n < n0 + 12; ++n) CHECK(qu.eval_nat(n) == sum.eval_nat(n));
    }
}
