#pragma once

#include "skein/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

// Laurent polynomial in the formal framing variable A with rational
// coefficients. Zero coefficients are never stored, so equal values have
// identical representations.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (!skein::is_zero(c)) coeff_[0] = c;
    }
    LaurentPoly(const Rat& c, long exp) {
        if (!skein::is_zero(c)) coeff_[exp] = c;
    }
    static LaurentPoly variable(long exp = 1) { return LaurentPoly(Rat(1), exp); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    bool is_constant() const {
        return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
    }
    Rat constant_value() const;

    long min_exp() const;
    long max_exp() const;
    Rat coeff(long exp) const;
    const std::map<long, Rat>& terms() const { return coeff_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeff_ < o.coeff_; }

    // Multiply by A^k.
    LaurentPoly shifted(long k) const;
    LaurentPoly pow(long n) const;
    // A -> A^-1
    LaurentPoly bar() const;

    // Canonical text form: terms with descending exponents, every term
    // written as c*A^e. Round-trips bit-exactly through parse().
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

    void set(long exp, const Rat& c) {
        if (skein::is_zero(c)) coeff_.erase(exp); else coeff_[exp] = c;
    }

private:
    std::map<long, Rat> coeff_;
};

// Quotient of Laurent polynomials, kept in lowest terms with a canonical
// denominator (an honest polynomial with zero valuation and leading
// coefficient one). The Temperley-Lieb layer works generically over this
// field so that vanishing quantum integers only surface at specialization.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    explicit RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RatFunc(const LaurentPoly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    std::string str() const;
    static RatFunc parse(const std::string& text);

private:
    void normalize();
    LaurentPoly num_, den_;
};

// gcd of two ordinary polynomials given as coefficient vectors (used by both
// RatFunc reduction and cyclotomic inversion).
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b);
std::vector<Rat> poly_divmod(std::vector<Rat>& rem, const std::vector<Rat>& den);

} // namespace skein
