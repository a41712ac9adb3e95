#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/linalg.hpp"

#include <random>

using namespace skein;

namespace {
Mat random_mat(std::mt19937& rng, size_t r, size_t c) {
    std::uniform_int_distribution<int> d(-4, 4);
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(d(rng));
    return m;
}
} // namespace

TEST_CASE("rref, rank, nullspace") {
    Mat m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    CHECK(rank(m) == 1);
    auto ker = nullspace(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Scalar s(0);
        for (size_t j = 0; j < 3; ++j) s += m.at(0, j) * v[j];
        CHECK(s.is_zero());
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937 rng(42);
    for (int t = 0; t < 20; ++t) {
        Mat m = random_mat(rng, 4, 4);
        if (det(m).is_zero()) continue;
        Mat inv = inverse(m);
        CHECK(m * inv == Mat::identity(4));
        std::vector<Scalar> b{Scalar(1), Scalar(2), Scalar(-1), Scalar(0)}, x;
        REQUIRE(solve(m, b, x));
        for (size_t i = 0; i < 4; ++i) {
            Scalar s(0);
            for (size_t j = 0; j < 4; ++j) s += m.at(i, j) * x[j];
            CHECK(s == b[i]);
        }
    }
}

TEST_CASE("kron and trace") {
    Mat a = Mat::identity(2), b(2, 2);
    b.at(0, 1) = Scalar(1);
    b.at(1, 0) = Scalar(1);
    Mat k = a.kron(b);
    CHECK(k.rows() == 4);
    CHECK(k.trace().is_zero());
    CHECK((a.kron(a)) == Mat::identity(4));
}

TEST_CASE("signature of symmetric matrices") {
    Mat one(1, 1);
    one.at(0, 0) = Scalar(1);
    CHECK(signature_symmetric(one) == 1);

    Mat hopf(2, 2); // [[0,1],[1,0]] -> eigenvalues +-1
    hopf.at(0, 1) = Scalar(1);
    hopf.at(1, 0) = Scalar(1);
    CHECK(signature_symmetric(hopf) == 0);

    Mat mixed(2, 2); // diag(1,-1)
    mixed.at(0, 0) = Scalar(1);
    mixed.at(1, 1) = Scalar(-1);
    CHECK(signature_symmetric(mixed) == 0);

    Mat e8(8, 8); // E8 plumbing matrix has signature 8 (up to sign convention)
    for (int i = 0; i < 8; ++i) e8.at(i, i) = Scalar(2);
    int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (auto [i, j] : edges) {
        e8.at(i, j) = Scalar(1);
        e8.at(j, i) = Scalar(1);
    }
    CHECK(signature_symmetric(e8) == 8);

    // signature is a congruence invariant: conjugating by random unimodular
    // integer matrices preserves it
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-2, 2);
    Mat s(3, 3);
    s.at(0, 0) = Scalar(2); s.at(1, 1) = Scalar(-3); s.at(2, 2) = Scalar(0);
    s.at(0, 2) = s.at(2, 0) = Scalar(1);
    long base = signature_symmetric(s);
    for (int t = 0; t < 10; ++t) {
        Mat u = Mat::identity(3);
        u.at(0, 1) = Scalar(d(rng));
        u.at(1, 2) = Scalar(d(rng));
        Mat conj = u.transpose() * s * u;
        CHECK(signature_symmetric(conj) == base);
    }
}
