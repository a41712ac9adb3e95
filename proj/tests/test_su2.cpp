#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/oracles.hpp"
#include "skein/su2.hpp"

using namespace skein;

namespace {
SlicedDiagram colored_unknot(const std::string& c) {
    return SlicedDiagram::parse("cup(" + c + "); cap(" + c + ")");
}
SlicedDiagram colored_hopf(const std::string& a, const std::string& b) {
    std::vector<std::vector<Token>> s;
    s.push_back({tok_cup(a), tok_cup(b)});
    s.push_back({tok_id(a), tok_xpos(star_label(a), b), tok_id(star_label(b))});
    s.push_back({tok_id(a), tok_xpos(b, star_label(a)), tok_id(star_label(b))});
    s.push_back({tok_cap(a), tok_cap(b)});
    return SlicedDiagram(s);
}
} // namespace

TEST_CASE("su2 data: stated examples") {
    Su2Data k0 = su2_data(0);
    CHECK(k0.qdim.size() == 1);
    CHECK(k0.qdim[0] == Scalar(1));
    CHECK(k0.zeta == Scalar(1));

    Su2Data k1 = su2_data(1);
    CHECK(k1.order == 12);
    CHECK(k1.qdim[1] == Scalar(-1));
    CHECK(k1.zeta == Scalar(2));

    Su2Data k2 = su2_data(2);
    CHECK(k2.zeta == Scalar(4));

    CHECK_THROWS(su2_data(2, 2)); // gcd(2,16) != 1: not primitive
}

TEST_CASE("quantum dimensions and twists match the closed forms") {
    for (int k : {1, 2, 3}) {
        Su2Data d = su2_data(k);
        const TLContext& c = d.ctx;
        for (int n = 0; n <= k; ++n) {
            Scalar qd = c.qint(n + 1);
            if (n % 2 == 1) qd = -qd;
            CHECK(d.qdim[n] == qd);
            Scalar mu = c.A(static_cast<long>(n) * n + 2 * n);
            if (n % 2 == 1) mu = -mu;
            CHECK(d.twist[n] == mu);
        }
        // Gauss sums multiply to the global dimension (lambda = 1 data)
        CHECK(d.delta_plus * d.delta_minus == d.zeta);
    }
}

TEST_CASE("colored evaluation: stated examples") {
    Su2Data d = su2_data(2);
    CHECK(su2_colored_eval(SlicedDiagram(), d) == Scalar(1)); // empty diagram
    for (int n = 0; n <= 2; ++n)
        CHECK(su2_colored_eval(colored_unknot(std::to_string(n)), d) == d.qdim[n]);
    // color-1 unknot with an explicit twist token (blackboard framing 1)
    SlicedDiagram tw = SlicedDiagram::parse("cup(1); twpos(1) id(1*); cap(1)");
    CHECK(su2_colored_eval(tw, d) == d.twist[1] * d.qdim[1]);
    // out-of-range color
    CHECK_THROWS_AS(su2_colored_eval(colored_unknot("7"), d), std::domain_error);
}

TEST_CASE("explicit framings override the blackboard writhe") {
    Su2Data d = su2_data(2);
    SlicedDiagram plain = colored_unknot("1");
    // framing 3 on a flat unknot equals three twist tokens
    Scalar lhs = su2_colored_eval(plain, d, {{0, 3}});
    SlicedDiagram t3 = plain.with_twists(0, 3);
    CHECK(lhs == su2_colored_eval(t3, d));
    // a kinked diagram with framing equal to its writhe is corrected to flat
    SlicedDiagram pkink = SlicedDiagram::parse(
        "cup(1); id(1) cup(1) id(1*); xpos(1,1) id(1*) id(1*); id(1) cap(1) id(1*); cap(1)");
    REQUIRE(pkink.writhe(0) == 1);
    CHECK(su2_colored_eval(pkink, d, {{0, 0}}) == d.qdim[1]);
    CHECK(su2_colored_eval(pkink, d, {{0, 1}}) == d.twist[1] * d.qdim[1]);
}

TEST_CASE("bracket engine equals the state-sum oracle on kinked diagrams") {
    TLContext g;
    const char* fixtures[] = {
        "cup(1); cap(1)",
        "cup(1) cup(1*); id(1) xpos(1*,1*) id(1); cap(1) cap(1*)",
        "cup(1) cup(1); id(1) xpos(1*,1) id(1*); id(1) xpos(1,1*) id(1*); cap(1) cap(1)",
        "cup(1) cup(1*); id(1) xpos(1*,1*) id(1); id(1) xpos(1*,1*) id(1); id(1) xpos(1*,1*) id(1); cap(1) cap(1*)",
    };
    for (const char* t : fixtures) {
        SlicedDiagram dg = SlicedDiagram::parse(t);
        CHECK(kauffman_bracket(dg, g) == bracket_state_sum_oracle(dg, g));
    }
}

TEST_CASE("S-matrix is invertible for levels up to 3 and detects the Hopf pairing") {
    for (int k : {1, 2, 3}) {
        Su2Data d = su2_data(k);
        Mat S = su2_smatrix(d);
        CHECK(!det(S).is_zero());
        // row 0 is the quantum dimension vector
        for (int n = 0; n <= k; ++n) CHECK(S.at(0, n) == d.qdim[n]);
    }
}

TEST_CASE("Verlinde oracle sanity: genus-1 dimension is the number of colors") {
    for (int k : {1, 2, 3}) {
        Su2Data d = su2_data(k);
        CHECK(verlinde_dimension_oracle(d, 1) == k + 1);
        CHECK(verlinde_dimension_oracle(d, 0) == 1);
    }
}

TEST_CASE("category data report is deterministic") {
    Su2Data d = su2_data(1);
    CHECK(su2_report(d) == su2_report(d));
    CHECK(su2_report(d).find("zeta=") != std::string::npos);
}
