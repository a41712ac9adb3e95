#include "skein/laurent.hpp"

#include <sstream>

namespace skein {

bool LaurentPoly::is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

Rat LaurentPoly::constant_value() const {
    if (coeff_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("Laurent polynomial is not constant");
    return coeff_.begin()->second;
}

long LaurentPoly::min_exp() const {
    if (coeff_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return coeff_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeff_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return coeff_.rbegin()->first;
}

Rat LaurentPoly::coeff(long exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeff_)
        for (const auto& [e2, c2] : o.coeff_)
            r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(long n) const {
    if (n < 0) throw std::logic_error("negative power of a Laurent polynomial");
    LaurentPoly r(Rat(1));
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        if (!first) os << " + ";
        os << rat_str(it->second) << "*A^" << it->first;
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly r;
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "0") return r;
    // split on '+' at term boundaries; a leading '-' belongs to the coefficient
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+' && !cur.empty() && cur.back() != '^' && cur.back() != '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += s[i];
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (const auto& term : parts) {
        auto star = term.find("*A^");
        Rat c;
        long e = 0;
        if (star != std::string::npos) {
            c = rat_parse(term.substr(0, star));
            e = std::stol(term.substr(star + 3));
        } else if (term.rfind("A^", 0) == 0) {
            c = 1;
            e = std::stol(term.substr(2));
        } else if (term.rfind("-A^", 0) == 0) {
            c = -1;
            e = std::stol(term.substr(3));
        } else if (term == "A") {
            c = 1; e = 1;
        } else if (term == "-A") {
            c = -1; e = 1;
        } else {
            c = rat_parse(term);
            e = 0;
        }
        r.set(e, r.coeff(e) + c);
    }
    return r;
}

// ---- ordinary polynomial helpers (dense, index = degree) ----

static void poly_trim(std::vector<Rat>& p) {
    while (!p.empty() && skein::is_zero(p.back())) p.pop_back();
}

// divides rem by den in place, returns quotient; rem becomes the remainder
std::vector<Rat> poly_divmod(std::vector<Rat>& rem, const std::vector<Rat>& den) {
    poly_trim(rem);
    if (den.empty()) throw std::logic_error("polynomial division by zero");
    std::vector<Rat> q;
    if (rem.size() < den.size()) return q;
    q.assign(rem.size() - den.size() + 1, Rat(0));
    const Rat& lead = den.back();
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        if (skein::is_zero(rem[i])) continue;
        Rat f = rem[i] / lead;
        q[i - (den.size() - 1)] = f;
        for (size_t j = 0; j < den.size(); ++j)
            rem[i - (den.size() - 1) + j] -= f * den[j];
    }
    poly_trim(rem);
    return q;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly_divmod(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

static std::vector<Rat> to_dense(const LaurentPoly& p, long shift) {
    std::vector<Rat> v;
    if (p.is_zero()) return v;
    v.assign(p.max_exp() + shift + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) v[e + shift] = c;
    return v;
}

static LaurentPoly from_dense(const std::vector<Rat>& v, long shift) {
    LaurentPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        p.set(static_cast<long>(i) - shift, v[i]);
    return p;
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    // clear A-valuations: units of the Laurent ring go to the numerator
    long vn = num_.min_exp(), vd = den_.min_exp();
    num_ = num_.shifted(-vd);   // move den's unit part across
    den_ = den_.shifted(-vd);
    std::vector<Rat> dn = to_dense(num_.shifted(-vn + vd), 0); // honest polynomial copy
    std::vector<Rat> dd = to_dense(den_, 0);
    std::vector<Rat> g = poly_gcd(dn, dd);
    if (g.size() > 1) {
        std::vector<Rat> rn = dn, rd = dd;
        std::vector<Rat> qn = poly_divmod(rn, g);
        std::vector<Rat> qd = poly_divmod(rd, g);
        num_ = from_dense(qn, 0).shifted(vn - vd);
        den_ = from_dense(qd, 0);
    }
    // leading coefficient of the denominator fixed to 1
    Rat lead = den_.coeff(den_.max_exp());
    if (lead != 1) {
        LaurentPoly inv(Rat(1) / lead);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::parse(const std::string& text) {
    auto split = text.find(")/(");
    if (text.size() > 1 && text.front() == '(' && split != std::string::npos &&
        text.back() == ')') {
        LaurentPoly n = LaurentPoly::parse(text.substr(1, split - 1));
        LaurentPoly d = LaurentPoly::parse(text.substr(split + 3, text.size() - split - 4));
        return RatFunc(n, d);
    }
    return RatFunc(LaurentPoly::parse(text));
}

} // namespace skein
