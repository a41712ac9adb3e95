#include "skein/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skein {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Phi_n via repeated division of x^n - 1 by Phi_d for proper divisors d.
const std::vector<Rat>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<std::vector<Rat>(long)> compute = [&](long m) -> std::vector<Rat> {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Rat> num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1; // x^m - 1
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            std::vector<Rat> phi_d = compute(d);
            std::vector<Rat> rem = num;
            num = poly_divmod(rem, phi_d);
            if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
        }
        cache[m] = num;
        return num;
    };
    compute(n);
    return cache[n];
}

long roots_of_unity_order(long n) { return n % 2 == 0 ? n : 2 * n; }

Cyclotomic::Cyclotomic(const Rat& c, long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    coords_.assign(euler_phi(order), Rat(0));
    coords_[0] = c;
}

Cyclotomic Cyclotomic::from_poly(long order, std::vector<Rat> coeffs) {
    const std::vector<Rat>& phi = cyclotomic_polynomial(order);
    poly_divmod(coeffs, phi); // coeffs becomes the remainder
    Cyclotomic r(Rat(0), order);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coords_[i] = coeffs[i];
    return r;
}

Cyclotomic Cyclotomic::root_of_unity(long order, long power) {
    power %= order;
    if (power < 0) power += order;
    std::vector<Rat> p(power + 1, Rat(0));
    p[power] = 1;
    return from_poly(order, std::move(p));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coords_)
        if (!skein::is_zero(c)) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!skein::is_zero(coords_[i])) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("cyclotomic element is not rational");
    return coords_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        long N = std::lcm(order_, o.order_);
        return embedded(N) + o.embedded(N);
    }
    Cyclotomic r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        long N = std::lcm(order_, o.order_);
        return embedded(N) * o.embedded(N);
    }
    std::vector<Rat> prod(2 * coords_.size(), Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (skein::is_zero(coords_[i])) continue;
        for (size_t j = 0; j < o.coords_.size(); ++j) {
            if (skein::is_zero(o.coords_[j])) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    return from_poly(order_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic element");
    // extended euclid: a*this + b*Phi_n = 1 in Q[x]
    std::vector<Rat> r0 = cyclotomic_polynomial(order_);
    std::vector<Rat> r1(coords_.begin(), coords_.end());
    while (!r1.empty() && skein::is_zero(r1.back())) r1.pop_back();
    std::vector<Rat> s0, s1{Rat(1)}; // coefficients of `this`
    while (true) {
        // r1 nonzero here
        std::vector<Rat> rem = r0;
        std::vector<Rat> q = poly_divmod(rem, r1);
        // s2 = s0 - q*s1
        std::vector<Rat> s2 = s0;
        size_t need = q.size() + s1.size();
        if (s2.size() < need) s2.resize(need, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= q[i] * s1[j];
        while (!s2.empty() && skein::is_zero(s2.back())) s2.pop_back();
        if (rem.empty()) {
            // r1 is the gcd; it must be a nonzero constant (Phi_n has no
            // rational roots shared with a nonzero reduced element)
            if (r1.size() != 1)
                throw std::logic_error("cyclotomic inverse: gcd not constant");
            Rat g = r1[0];
            std::vector<Rat> inv = s1;
            for (auto& c : inv) c /= g;
            return from_poly(order_, std::move(inv));
        }
        r0 = r1; r1 = rem;
        s0 = s1; s1 = s2;
    }
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long n) const {
    Cyclotomic base = *this;
    if (n < 0) {
        base = base.inverse();
        n = -n;
    }
    Cyclotomic r(Rat(1), order_);
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return coords_ == o.coords_;
    long N = std::lcm(order_, o.order_);
    return embedded(N).coords_ == o.embedded(N).coords_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    return coords_ < o.coords_;
}

Cyclotomic Cyclotomic::embedded(long N) const {
    if (N == order_) return *this;
    if (N % order_ != 0) throw std::logic_error("embedding order must be a multiple");
    long step = N / order_;
    std::vector<Rat> p(static_cast<size_t>(step) * (coords_.size() ? coords_.size() - 1 : 0) + 1,
                       Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i) p[i * step] = coords_[i];
    return from_poly(N, std::move(p));
}

void Cyclotomic::approx(double& re, double& im) const {
    re = im = 0.0;
    for (size_t i = 0; i < coords_.size(); ++i) {
        double c = coords_[i].get_d();
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(order_);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "cyclo(" << order_ << ")[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(coords_[i]);
    }
    os << "]";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    auto open = text.find("cyclo(");
    auto close = text.find(')', open);
    auto lb = text.find('[', close);
    auto rb = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos ||
        lb == std::string::npos || rb == std::string::npos)
        throw std::invalid_argument("bad cyclotomic literal: " + text);
    long n = std::stol(text.substr(open + 6, close - open - 6));
    Cyclotomic r(Rat(0), n);
    std::string body = text.substr(lb + 1, rb - lb - 1);
    size_t idx = 0;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char ch : item)
            if (!isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) continue;
        if (idx >= r.coords_.size())
            throw std::invalid_argument("too many coordinates in cyclotomic literal");
        r.coords_[idx++] = rat_parse(t);
    }
    if (idx != r.coords_.size())
        throw std::invalid_argument("wrong coordinate count in cyclotomic literal");
    return r;
}

} // namespace skein
