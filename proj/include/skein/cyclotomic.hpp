#pragma once

#include "skein/laurent.hpp"
#include "skein/rational.hpp"

#include <string>
#include <vector>

namespace skein {

long euler_phi(long n);
// coefficients of the n-th cyclotomic polynomial, ascending degree
const std::vector<Rat>& cyclotomic_polynomial(long n);

// Element of the n-th cyclotomic field in the power basis 1, z, ..., z^(phi(n)-1)
// modulo the n-th cyclotomic polynomial. Reduction is canonical: equal values
// have identical coords. Order 1 is the rational field itself.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coords_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& c, long order = 1);
    // z_order^power, reduced
    static Cyclotomic root_of_unity(long order, long power);
    // from polynomial coefficients in z (any length), reduced mod Phi_n
    static Cyclotomic from_poly(long order, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long n) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    bool operator<(const Cyclotomic& o) const;

    // canonical embedding into the N-th cyclotomic field, n | N
    Cyclotomic embedded(long N) const;

    // complex value at the standard embedding z -> exp(2*pi*i/n); display only
    void approx(double& re, double& im) const;

    // canonical text form cyclo(n)[c_0, c_1, ...]
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

private:
    long order_;
    std::vector<Rat> coords_; // length phi(order_)
};

// all roots of unity contained in Q(zeta_n): powers of zeta_M for
// M = n (n even) or 2n (n odd)
long roots_of_unity_order(long n);

} // namespace skein
