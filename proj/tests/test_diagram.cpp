#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/diagram.hpp"
#include "skein/oracles.hpp"
#include "skein/su2.hpp"

using namespace skein;

TEST_CASE("parse the stated examples") {
    SlicedDiagram unknot = SlicedDiagram::parse("cup(1); cap(1)");
    CHECK(unknot.closed());
    CHECK(unknot.component_count() == 1);
    CHECK(unknot.component_color(0) == "1");

    SlicedDiagram clasp =
        SlicedDiagram::parse("cup(1) cup(1*); id(1) xpos(1*,1*) id(1); id(1) xpos(1*,1*) id(1); cap(1) cap(1*)");
    CHECK(clasp.closed());
    CHECK(clasp.component_count() == 2);

    CHECK_THROWS_AS(SlicedDiagram::parse("cup(1); cap(2)"), DiagramError);
    try {
        SlicedDiagram::parse("cup(1); cap(2)");
    } catch (const DiagramError& e) {
        CHECK(e.slice_index == 2);
        CHECK(std::string(e.what()).find("color mismatch") != std::string::npos);
    }
    CHECK_THROWS_AS(SlicedDiagram::parse("cup(1); blob(1)"), DiagramError);
    CHECK_THROWS_AS(SlicedDiagram::parse("cup(1) cup(1); cap(1)"), DiagramError);
}

TEST_CASE("print/parse round-trip is bit-exact") {
    const char* texts[] = {
        "cup(1); cap(1)",
        "cup(1) cup(1*); id(1) xpos(1*,1*) id(1); id(1) xpos(1*,1*) id(1); cap(1) cap(1*)",
        "cup(2); twpos(2) id(2*); cap(2)",
        "coupon(eta,,P1); coupon(eps,P1,)",
        "boundary(P1); coupon(f,P1,P1)",
    };
    for (const char* t : texts) {
        SlicedDiagram d = SlicedDiagram::parse(t);
        std::string printed = d.str();
        SlicedDiagram d2 = SlicedDiagram::parse(printed);
        CHECK(printed == d2.str());
        CHECK(d.component_count() == d2.component_count());
    }
}

TEST_CASE("components, writhe, linking") {
    // plat closure of one positive crossing between the two cups: positive kink
    SlicedDiagram kink = SlicedDiagram::parse(
        "cup(1) cup(1*); id(1) xpos(1*,1*) id(1); cap(1) cap(1*)");
    CHECK(kink.component_count() == 1);
    CHECK(kink.writhe(0) == 1); // plat kink: A*delta^2 state dominates, bracket -A^3*delta

    SlicedDiagram hopf = SlicedDiagram::parse(
        "cup(1) cup(1); id(1) xpos(1*,1) id(1*); id(1) xpos(1,1*) id(1*); cap(1) cap(1)");
    CHECK(hopf.component_count() == 2);
    long lk = hopf.linking(0, 1);
    CHECK((lk == 1 || lk == -1));
    CHECK(hopf.writhe(0) == 0);
    CHECK(hopf.writhe(1) == 0);

    // coupon components are flagged
    SlicedDiagram gamma0 = SlicedDiagram::parse("coupon(eta,,P1); coupon(eps,P1,)");
    CHECK(gamma0.component_count() == 1);
    CHECK(gamma0.component_has_coupon(0));
}

TEST_CASE("admissibility certificate") {
    SlicedDiagram two = SlicedDiagram::parse("cup(P1); cap(P1)");
    auto bad = two.inadmissible_components([](const std::string& c) { return c == "P1"; });
    CHECK(bad.empty());
    SlicedDiagram mixed = SlicedDiagram::parse("cup(P1) cup(X); cap(P1) cap(X)");
    bad = mixed.inadmissible_components([](const std::string& c) { return c == "P1"; });
    REQUIRE(bad.size() == 1);
    CHECK(mixed.component_color(bad[0]) == "X");
}

TEST_CASE("bracket stated examples, oracle-first") {
    TLContext g;
    Scalar dlt = g.delta();

    SlicedDiagram unknot = SlicedDiagram::parse("cup(1); cap(1)");
    CHECK(bracket_state_sum_oracle(unknot, g) == dlt);
    CHECK(kauffman_bracket(unknot, g) == dlt);

    // positive kink via the strand gadget: the oracle computes A*delta^2 + A^-1*delta
    SlicedDiagram pkink = SlicedDiagram::parse(
        "cup(1); id(1) cup(1) id(1*); xpos(1,1) id(1*) id(1*); id(1) cap(1) id(1*); cap(1)");
    Scalar expect = g.A(1) * dlt * dlt + g.A(-1) * dlt;
    CHECK(bracket_state_sum_oracle(pkink, g) == expect);
    CHECK(expect == -g.A(3) * dlt);
    CHECK(kauffman_bracket(pkink, g) == expect);
    CHECK(pkink.writhe(0) == 1);

    // Hopf link: enumerate all 4 states
    SlicedDiagram hopf = SlicedDiagram::parse(
        "cup(1) cup(1); id(1) xpos(1*,1) id(1*); id(1) xpos(1,1*) id(1*); cap(1) cap(1)");
    Scalar oracle = bracket_state_sum_oracle(hopf, g);
    CHECK(kauffman_bracket(hopf, g) == oracle);
    CHECK(oracle == (g.A(2) + g.A(-2)) * dlt * dlt + Scalar(2) * dlt);
}

TEST_CASE("mutation helpers preserve validity") {
    SlicedDiagram hopf = SlicedDiagram::parse(
        "cup(1) cup(1); id(1) xpos(1*,1) id(1*); id(1) xpos(1,1*) id(1*); cap(1) cap(1)");
    SlicedDiagram rec = hopf.recolored(0, "2");
    CHECK(rec.component_color(0) == "2");
    CHECK(rec.component_color(1) == "1");
    SlicedDiagram tw = hopf.with_twists(1, 2);
    CHECK(tw.component_count() == 2);
    SlicedDiagram both = hopf.beside(rec);
    CHECK(both.component_count() == 4);
}
