#include "skein/scalar.hpp"

#include <sstream>

namespace skein {

bool Scalar::is_rational() const {
    if (std::holds_alternative<Rat>(v_)) return true;
    if (auto* f = std::get_if<RatFunc>(&v_)) return f->is_polynomial() && f->num().is_constant();
    return std::get<Cyclotomic>(v_).is_rational();
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Rat>(&v_)) return skein::is_zero(*r);
    if (auto* f = std::get_if<RatFunc>(&v_)) return f->is_zero();
    return std::get<Cyclotomic>(v_).is_zero();
}

Rat Scalar::as_rational() const {
    if (auto* r = std::get_if<Rat>(&v_)) return *r;
    if (auto* f = std::get_if<RatFunc>(&v_)) {
        if (!f->is_polynomial() || !f->num().is_constant())
            throw std::logic_error("scalar is not rational: " + str());
        return f->num().constant_value();
    }
    return std::get<Cyclotomic>(v_).rational_value();
}

RatFunc Scalar::as_ratfunc() const {
    if (auto* r = std::get_if<Rat>(&v_)) return RatFunc(*r);
    if (auto* f = std::get_if<RatFunc>(&v_)) return *f;
    throw std::logic_error("cyclotomic scalar used in generic context");
}

Cyclotomic Scalar::as_cyclotomic(long order) const {
    if (auto* r = std::get_if<Rat>(&v_)) return Cyclotomic(*r, order);
    if (auto* c = std::get_if<Cyclotomic>(&v_)) return *c;
    throw std::logic_error("generic scalar used in cyclotomic context: " + str());
}

namespace {
enum class Mode { Rational, Generic, Cyclo };

Mode join_mode(const Scalar& a, const Scalar& b) {
    bool ga = a.is_generic(), gb = b.is_generic();
    bool ca = a.is_cyclotomic(), cb = b.is_cyclotomic();
    if ((ga && cb) || (ca && gb))
        throw std::logic_error("cannot mix generic and cyclotomic scalars");
    if (ga || gb) return Mode::Generic;
    if (ca || cb) return Mode::Cyclo;
    return Mode::Rational;
}
} // namespace

#define SKEIN_SCALAR_BINOP(OP)                                              \
    Scalar Scalar::operator OP(const Scalar& o) const {                     \
        switch (join_mode(*this, o)) {                                      \
            case Mode::Rational: return Scalar(as_rational() OP o.as_rational()); \
            case Mode::Generic: return Scalar(as_ratfunc() OP o.as_ratfunc());    \
            case Mode::Cyclo: return Scalar(as_cyclotomic() OP o.as_cyclotomic()); \
        }                                                                    \
        throw std::logic_error("unreachable");                               \
    }

SKEIN_SCALAR_BINOP(+)
SKEIN_SCALAR_BINOP(-)
SKEIN_SCALAR_BINOP(*)
#undef SKEIN_SCALAR_BINOP

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    switch (join_mode(*this, o)) {
        case Mode::Rational: return Scalar(as_rational() / o.as_rational());
        case Mode::Generic: return Scalar(as_ratfunc() / o.as_ratfunc());
        case Mode::Cyclo: return Scalar(as_cyclotomic() / o.as_cyclotomic());
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator-() const {
    if (auto* r = std::get_if<Rat>(&v_)) return Scalar(-*r);
    if (auto* f = std::get_if<RatFunc>(&v_)) return Scalar(-*f);
    return Scalar(-std::get<Cyclotomic>(v_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (auto* r = std::get_if<Rat>(&v_)) return Scalar(Rat(1) / *r);
    if (auto* f = std::get_if<RatFunc>(&v_)) return Scalar(f->inverse());
    return Scalar(std::get<Cyclotomic>(v_).inverse());
}

Scalar Scalar::pow(long n) const {
    Scalar base = *this;
    if (n < 0) {
        base = base.inverse();
        n = -n;
    }
    Scalar r(1);
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    switch (join_mode(*this, o)) {
        case Mode::Rational: return as_rational() == o.as_rational();
        case Mode::Generic: return as_ratfunc() == o.as_ratfunc();
        case Mode::Cyclo: return as_cyclotomic() == o.as_cyclotomic();
    }
    throw std::logic_error("unreachable");
}

bool Scalar::operator<(const Scalar& o) const {
    // total order for container keys only
    auto rank = [](const Scalar& s) { return s.is_generic() ? 1 : (s.is_cyclotomic() ? 2 : 0); };
    if (rank(*this) != rank(o)) return rank(*this) < rank(o);
    if (is_generic()) return as_ratfunc() < o.as_ratfunc();
    if (is_cyclotomic()) return as_cyclotomic() < o.as_cyclotomic();
    return as_rational() < o.as_rational();
}

std::string Scalar::str() const {
    if (auto* r = std::get_if<Rat>(&v_)) return rat_str(*r);
    if (auto* f = std::get_if<RatFunc>(&v_)) return f->str();
    return std::get<Cyclotomic>(v_).str();
}

Scalar Scalar::parse(const std::string& text) {
    if (text.find("cyclo(") != std::string::npos) return Scalar(Cyclotomic::parse(text));
    if (text.find('A') != std::string::npos || text.find('(') != std::string::npos)
        return Scalar(RatFunc::parse(text));
    return Scalar(rat_parse(text));
}

std::string Scalar::approx_str() const {
    std::ostringstream os;
    os.precision(10);
    if (is_cyclotomic()) {
        double re, im;
        as_cyclotomic().approx(re, im);
        os << re;
        if (im > 1e-12 || im < -1e-12) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    } else if (is_generic()) {
        os << str();
    } else {
        os << as_rational().get_d();
    }
    return os.str();
}

Cyclotomic specialize(const LaurentPoly& p, long n, long k) {
    if (n < 1) throw std::invalid_argument("root order must be positive");
    Cyclotomic z = Cyclotomic::root_of_unity(n, k);
    Cyclotomic acc(Rat(0), n);
    for (const auto& [e, c] : p.terms())
        acc = acc + Cyclotomic(c, n) * z.pow(e);
    return acc;
}

Cyclotomic specialize(const RatFunc& f, long n, long k) {
    Cyclotomic den = specialize(f.den(), n, k);
    if (den.is_zero())
        throw std::domain_error("quantum integer vanishes: denominator (" + f.den().str() +
                                ") is zero at the chosen root of unity");
    return specialize(f.num(), n, k) / den;
}

Scalar specialize(const Scalar& s, long n, long k) {
    if (s.is_cyclotomic()) return s;
    if (s.is_generic()) return Scalar(specialize(s.as_ratfunc(), n, k));
    return Scalar(Cyclotomic(s.as_rational(), n));
}

} // namespace skein
