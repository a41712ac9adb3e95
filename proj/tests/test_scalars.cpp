#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/scalar.hpp"

#include <cmath>
#include <random>

using namespace skein;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-6, 6), numd(-9, 9), dend(1, 5);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.set(expd(rng), p.coeff(expd(rng)) + rat_frac(numd(rng), dend(rng)));
    return p;
}

Cyclotomic random_cyclo(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> numd(-9, 9), dend(1, 5);
    std::vector<Rat> coords(euler_phi(order));
    for (auto& c : coords) c = rat_frac(numd(rng), dend(rng));
    return Cyclotomic::from_poly(order, coords);
}

// independent oracle: evaluate a Laurent polynomial at exp(2*pi*i*k/n) with
// doubles and compare against the exact result's own numeric rendering
void check_against_complex(const LaurentPoly& p, long n, long k) {
    const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    double re = 0, im = 0;
    for (const auto& [e, c] : p.terms()) {
        re += c.get_d() * std::cos(ang * static_cast<double>(e));
        im += c.get_d() * std::sin(ang * static_cast<double>(e));
    }
    double xre, xim;
    specialize(p, n, k).approx(xre, xim);
    CHECK(std::abs(re - xre) < 1e-8);
    CHECK(std::abs(im - xim) < 1e-8);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    // Phi_8 = x^4 + 1
    const auto& p8 = cyclotomic_polynomial(8);
    REQUIRE(p8.size() == 5);
    CHECK(p8[0] == 1);
    CHECK(p8[1] == 0);
    CHECK(p8[4] == 1);
    // Phi_1 = x - 1, Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(1) == std::vector<Rat>({Rat(-1), Rat(1)}));
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Rat>({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
}

TEST_CASE("specialize: stated examples") {
    // A^4 at the primitive 8th root is -1
    LaurentPoly a4 = LaurentPoly::variable(4);
    CHECK(specialize(a4, 8, 1) == Cyclotomic(Rat(-1), 8));
    // constants are untouched
    CHECK(specialize(LaurentPoly(Rat(1)), 5, 2) == Cyclotomic(Rat(1), 5));
    CHECK(specialize(LaurentPoly(Rat(1)), 7, 1) == Cyclotomic(Rat(1), 7));
    // -A^2 - A^-2 vanishes at the primitive 8th root (loop value at level 0)
    LaurentPoly d = LaurentPoly(Rat(-1), 2) + LaurentPoly(Rat(-1), -2);
    CHECK(specialize(d, 8, 1).is_zero());
    check_against_complex(d, 8, 1);
}

TEST_CASE("invert: stated examples") {
    Cyclotomic two(Rat(2), 1);
    CHECK(two.inverse() == Cyclotomic(rat_frac(1, 2), 1));
    // zeta_4^-1 = -zeta_4
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i.inverse() == -i);
    CHECK((i * i.inverse()) == Cyclotomic(Rat(1), 4));
    // 1 + zeta_3, inverse verified by multiplying back
    Cyclotomic w = Cyclotomic(Rat(1), 3) + Cyclotomic::root_of_unity(3, 1);
    CHECK((w * w.inverse()) == Cyclotomic(Rat(1), 3));
    CHECK_THROWS_AS(Cyclotomic(Rat(0), 5).inverse(), std::domain_error);
}

TEST_CASE("specialization is a ring homomorphism (random)") {
    std::mt19937 rng(20240811);
    const long fields[][2] = {{8, 1}, {12, 5}, {16, 3}, {7, 2}};
    for (auto [n, k] : fields) {
        for (int trial = 0; trial < 50; ++trial) {
            LaurentPoly p = random_laurent(rng), q = random_laurent(rng);
            CHECK(specialize(p * q, n, k) == specialize(p, n, k) * specialize(q, n, k));
            CHECK(specialize(p + q, n, k) == specialize(p, n, k) + specialize(q, n, k));
        }
    }
}

TEST_CASE("invert is a two-sided inverse on 200 random nonzero elements per field") {
    std::mt19937 rng(987123);
    for (long order : {4L, 8L, 12L, 9L}) {
        int done = 0;
        while (done < 200) {
            Cyclotomic c = random_cyclo(rng, order);
            if (c.is_zero()) continue;
            Cyclotomic inv = c.inverse();
            CHECK((c * inv) == Cyclotomic(Rat(1), order));
            CHECK((inv * c) == Cyclotomic(Rat(1), order));
            ++done;
        }
    }
}

TEST_CASE("canonical form: serialize/parse round-trip is exact") {
    std::mt19937 rng(5551);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_laurent(rng);
        CHECK(LaurentPoly::parse(p.str()) == p);
        Cyclotomic c = random_cyclo(rng, 12);
        CHECK(Cyclotomic::parse(c.str()) == c);
        Scalar s1{p}, s2{c};
        CHECK(Scalar::parse(s1.str()) == s1);
        CHECK(Scalar::parse(s2.str()) == s2);
    }
    // rational functions round-trip too
    RatFunc f(LaurentPoly::parse("1*A^2 + 1*A^0"), LaurentPoly::parse("1*A^1 + 2*A^0"));
    CHECK(RatFunc::parse(f.str()) == f);
}

TEST_CASE("rational function arithmetic and reduction") {
    LaurentPoly A = LaurentPoly::variable(1);
    LaurentPoly one(Rat(1));
    // (A^2-1)/(A-1) reduces to A+1
    RatFunc f(A * A - one, A - one);
    CHECK(f.is_polynomial());
    CHECK(f.num() == A + one);
    RatFunc g = RatFunc(one, A);          // A^-1 is a unit: stays polynomial
    CHECK(g.is_polynomial());
    CHECK(g.num() == LaurentPoly::variable(-1));
    RatFunc h = RatFunc(one, A - one);
    CHECK((h * RatFunc(A - one)) == RatFunc(one));
    CHECK((h + (-h)).is_zero());
}

TEST_CASE("specializing a vanishing denominator reports the quantum integer") {
    LaurentPoly A2 = LaurentPoly::variable(2);
    LaurentPoly q2 = A2 + A2.bar(); // [2] up to sign
    RatFunc f(LaurentPoly(Rat(1)), q2);
    // [2] = A^2 + A^-2 vanishes at the primitive 8th root
    CHECK_THROWS_WITH_AS(specialize(f, 8, 1), doctest::Contains("quantum integer vanishes"),
                         std::domain_error);
    CHECK(specialize(f, 12, 1) == Cyclotomic(Rat(1), 12) / specialize(q2, 12, 1));
}

TEST_CASE("cyclotomic embeddings are canonical") {
    Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic i12 = Cyclotomic::root_of_unity(12, 3);
    CHECK(i4 == i12);
    CHECK(i4.embedded(12) == i12);
    // arithmetic across orders promotes to the lcm
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic sum = i4 + z3;
    CHECK(sum.order() == 12);
    CHECK(sum - z3 == i4);
}

TEST_CASE("scalar variant mixing rules") {
    Scalar r(rat_frac(3, 2));
    Scalar gen = Scalar::variableA();
    Scalar cyc{Cyclotomic::root_of_unity(8, 1)};
    CHECK((r * gen).is_generic());
    CHECK((r + cyc).is_cyclotomic());
    CHECK_THROWS_AS(gen + cyc, std::logic_error);
    CHECK((gen * gen.inverse()).is_one());
    CHECK(cyc.pow(8).is_one());
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}
