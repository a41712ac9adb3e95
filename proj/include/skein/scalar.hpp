#pragma once

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/rational.hpp"

#include <string>
#include <variant>

namespace skein {

// The one scalar type the rest of the engine computes with. A value is
// either a plain rational, a rational function in the framing variable A
// (generic mode), or a cyclotomic field element (specialized mode).
// Rationals mix freely with both modes; mixing the two non-rational modes
// is a logic error and throws.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(int n) : v_(Rat(n)) {}
    Scalar(const Rat& r) : v_(r) {}
    Scalar(const RatFunc& f) : v_(f) {}
    Scalar(const LaurentPoly& p) : v_(RatFunc(p)) {}
    Scalar(const Cyclotomic& c) : v_(c) {}

    static Scalar variableA(long exp = 1) { return Scalar(LaurentPoly::variable(exp)); }

    bool is_rational() const;
    bool is_generic() const { return std::holds_alternative<RatFunc>(v_); }
    bool is_cyclotomic() const { return std::holds_alternative<Cyclotomic>(v_); }
    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }

    Rat as_rational() const;
    RatFunc as_ratfunc() const;
    Cyclotomic as_cyclotomic(long order = 1) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long n) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    // canonical serialization; round-trips bit-exactly
    std::string str() const;
    static Scalar parse(const std::string& text);

    // display-only numeric rendering
    std::string approx_str() const;

private:
    std::variant<Rat, RatFunc, Cyclotomic> v_;
};

// Evaluate a Laurent polynomial at the primitive n-th root of unity z_n^k,
// reduced canonically. Total on valid inputs (n >= 1, gcd(k, n) arbitrary for
// the evaluation itself; primitivity matters to callers that need it).
Cyclotomic specialize(const LaurentPoly& p, long n, long k);
// Specialize a rational function; throws domain_error mentioning the vanishing
// denominator when the denominator specializes to zero.
Cyclotomic specialize(const RatFunc& f, long n, long k);
Scalar specialize(const Scalar& s, long n, long k);

} // namespace skein
