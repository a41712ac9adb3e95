#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/tl.hpp"

using namespace skein;

namespace {
Scalar qdim_formula(const TLContext& ctx, int n) {
    Scalar s = ctx.qint(n + 1);
    return (n % 2 == 0) ? s : -s;
}
} // namespace

TEST_CASE("pattern basics") {
    TLPattern id2 = TLPattern::id(2);
    int loops = 0;
    CHECK(id2.then(id2, loops) == id2);
    CHECK(loops == 0);
    TLPattern e = TLPattern::e(2, 0);
    CHECK(e.then(e, loops) == e);
    CHECK(loops == 1); // e*e = delta*e
    // cap then cup (0-strand middle closure): cup then cap makes one loop
    TLPattern cup = TLPattern::nested_cups(1);
    TLPattern cap = TLPattern::nested_caps(1);
    TLPattern res = cup.then(cap, loops);
    CHECK(loops == 1);
    CHECK(res.nbot() == 0);
    CHECK(res.ntop() == 0);
    // crossing-free planarity guard
    CHECK_THROWS(TLPattern(2, 2, std::vector<int>{3, 2, 1, 0})); // crossing pairs
    // nested cups are planar at any width
    CHECK(TLPattern::nested_cups(4).is_planar());
}

TEST_CASE("unknot and kinks via TL composition") {
    TLContext g; // generic
    // unknot: cup then cap = delta
    TLElement cup = TLElement::from_pattern(TLPattern::nested_cups(1));
    TLElement cap = TLElement::from_pattern(TLPattern::nested_caps(1));
    Scalar unknot = cup.then(cap, g).scalar_value();
    CHECK(unknot == g.delta());

    // trace closure of the positive crossing is the positive kink: -A^3 * delta
    Scalar kink = crossing_pos(g).closure(g);
    CHECK(kink == g.A(3) * g.delta() * Scalar(-1));
    Scalar kinkn = crossing_neg(g).closure(g);
    CHECK(kinkn == g.A(-3) * g.delta() * Scalar(-1));

    // R2: positive then negative crossing is the identity
    TLElement r2 = crossing_pos(g).then(crossing_neg(g), g);
    CHECK(r2 == TLElement::id(2));
}

TEST_CASE("Jones-Wenzl: idempotent, killed by cup-caps") {
    TLContext g;
    for (int n = 2; n <= 5; ++n) {
        const TLElement& f = jones_wenzl(g, n);
        CHECK(f.then(f, g) == f);
        for (int i = 0; i + 1 < n; ++i) {
            TLElement ei = TLElement::from_pattern(TLPattern::e(n, i));
            CHECK(ei.then(f, g).is_zero());
            CHECK(f.then(ei, g).is_zero());
        }
    }
}

TEST_CASE("Jones-Wenzl: f2 = id - delta^{-1} e1") {
    TLContext g;
    const TLElement& f2 = jones_wenzl(g, 2);
    TLElement expect = TLElement::id(2);
    expect.add_term(TLPattern::e(2, 0), -g.delta().inverse());
    CHECK(f2 == expect);
}

TEST_CASE("closures of Jones-Wenzl projectors") {
    TLContext g;
    // full closure is the quantum dimension: closure(f_n) = (-1)^n [n+1]
    for (int n = 0; n <= 4; ++n) {
        Scalar cl = (n == 0) ? Scalar(1) : jones_wenzl(g, n).closure(g);
        CHECK(cl == qdim_formula(g, n));
    }
}

TEST_CASE("partial closure of f_n is the dimension ratio times f_{n-1}") {
    TLContext g;
    // closing one strand multiplies by D_n/D_{n-1} = -[n+1]/[n]; frozen from
    // the diagrammatic partial-trace computation itself
    TLElement cl = jones_wenzl(g, 2).partial_closure(g);
    TLElement expect = TLElement::id(1).scale(-(g.qint(3) / g.qint(2)));
    CHECK(cl == expect);
    // consistency: the same ratio in delta-language is (delta^2-1)/delta
    Scalar d = g.delta();
    CHECK(-(g.qint(3) / g.qint(2)) == (d * d - Scalar(1)) / d);
    TLElement cl3 = jones_wenzl(g, 3).partial_closure(g);
    CHECK(cl3 == jones_wenzl(g, 2).scale(-(g.qint(4) / g.qint(3))));
}

TEST_CASE("JW at a root of unity: out-of-range color fails loudly") {
    TLContext at_level1(12, 1); // r = 3, colors 0..1 safe, [3] = 0
    CHECK_NOTHROW(jones_wenzl(at_level1, 2)); // f_2 needs [2] != 0
    CHECK_THROWS_WITH_AS(jones_wenzl(at_level1, 3), doctest::Contains("quantum integer vanishes"),
                         std::domain_error);
}

TEST_CASE("cabled crossing undoes itself") {
    TLContext g;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m) {
            TLElement pos = cabled_crossing(g, n, m, true);
            TLElement neg = cabled_crossing(g, m, n, false);
            CHECK(pos.then(neg, g) == TLElement::id(n + m));
        }
}
