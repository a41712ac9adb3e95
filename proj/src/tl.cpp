#include "skein/tl.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace skein {

TLPattern::TLPattern(int nbot, int ntop, std::vector<int> mate)
    : nbot_(nbot), ntop_(ntop), mate_(std::move(mate)) {
    if ((nbot_ + ntop_) % 2 != 0 || static_cast<int>(mate_.size()) != nbot_ + ntop_)
        throw std::logic_error("bad matching size");
    for (int i = 0; i < nbot_ + ntop_; ++i)
        if (mate_[i] == i || mate_[mate_[i]] != i)
            throw std::logic_error("matching is not an involution");
    if (!is_planar()) throw std::logic_error("matching is not planar");
}

TLPattern TLPattern::id(int n) {
    std::vector<int> m(2 * n);
    for (int i = 0; i < n; ++i) {
        m[i] = n + i;
        m[n + i] = i;
    }
    return TLPattern(n, n, std::move(m));
}

TLPattern TLPattern::e(int n, int i) {
    std::vector<int> m(2 * n);
    for (int j = 0; j < n; ++j) {
        m[j] = n + j;
        m[n + j] = j;
    }
    m[i] = i + 1;
    m[i + 1] = i;
    m[n + i] = n + i + 1;
    m[n + i + 1] = n + i;
    return TLPattern(n, n, std::move(m));
}

TLPattern TLPattern::nested_cups(int k) {
    std::vector<int> m(2 * k);
    for (int i = 0; i < k; ++i) {
        m[i] = 2 * k - 1 - i;
        m[2 * k - 1 - i] = i;
    }
    return TLPattern(0, 2 * k, std::move(m));
}

TLPattern TLPattern::nested_caps(int k) { return nested_cups(k).flipped(); }

bool TLPattern::operator<(const TLPattern& o) const {
    if (nbot_ != o.nbot_) return nbot_ < o.nbot_;
    if (ntop_ != o.ntop_) return ntop_ < o.ntop_;
    return mate_ < o.mate_;
}

// boundary order for planarity: bottom left->right, then top right->left
bool TLPattern::is_planar() const {
    int n = nbot_ + ntop_;
    std::vector<int> circ(n); // circ[pos] = point index
    for (int i = 0; i < nbot_; ++i) circ[i] = i;
    for (int i = 0; i < ntop_; ++i) circ[nbot_ + i] = n - 1 - i;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[circ[i]] = i;
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
        int point = circ[p];
        int m = mate_[point];
        if (!stack.empty() && stack.back() == m)
            stack.pop_back();
        else if (pos[m] > p)
            stack.push_back(point);
        else
            return false;
    }
    return stack.empty();
}

// Stack `upper` on top of *this. Middle points are the shared boundary;
// strands are traced through, closed middle cycles are counted as loops.
TLPattern TLPattern::then(const TLPattern& upper, int& loops) const {
    if (ntop_ != upper.nbot_) throw std::logic_error("TL composition width mismatch");
    const int mid = ntop_;
    const int nb = nbot_, nt = upper.ntop_;

    // unified node space: 0..nb-1 bottom boundary, nb..nb+nt-1 top boundary
    // middle point j has code nb+nt+j
    auto lower_decode = [&](int node) { return node < nb ? node : nbot_ + (node - nb - nt); };
    auto lower_encode = [&](int pt) { return pt < nbot_ ? pt : nb + nt + (pt - nbot_); };
    auto upper_decode = [&](int node) { return node >= nb + nt ? node - nb - nt : mid + (node - nb); };
    auto upper_encode = [&](int pt) { return pt < mid ? nb + nt + pt : nb + (pt - mid); };

    std::vector<int> result(nb + nt, -1);
    std::vector<bool> mid_seen(mid, false);

    for (int b = 0; b < nb + nt; ++b) {
        if (result[b] != -1) continue;
        bool in_lower = b < nb;
        int node = b;
        while (true) {
            int next;
            if (in_lower)
                next = lower_encode(mate_[lower_decode(node)]);
            else
                next = upper_encode(upper.mate_[upper_decode(node)]);
            if (next < nb + nt) {
                result[b] = next;
                result[next] = b;
                break;
            }
            mid_seen[next - nb - nt] = true;
            node = next;
            in_lower = !in_lower;
        }
    }
    loops = 0;
    for (int j = 0; j < mid; ++j) {
        if (mid_seen[j]) continue;
        ++loops;
        // walk the loop: alternate lower/upper mates through middle points
        int node = j;
        bool in_lower = true;
        while (true) {
            mid_seen[node] = true;
            int pt = in_lower ? mate_[nbot_ + node] - nbot_ : upper.mate_[node];
            node = pt;
            in_lower = !in_lower;
            if (node == j && in_lower) break;
            mid_seen[node] = true;
        }
    }
    return TLPattern(nb, nt, std::move(result));
}

TLPattern TLPattern::tensor(const TLPattern& right) const {
    int nb = nbot_ + right.nbot_, nt = ntop_ + right.ntop_;
    std::vector<int> m(nb + nt);
    auto remap_left = [&](int i) { return i < nbot_ ? i : nb + (i - nbot_); };
    auto remap_right = [&](int i) {
        return i < right.nbot_ ? nbot_ + i : nb + ntop_ + (i - right.nbot_);
    };
    for (int i = 0; i < nbot_ + ntop_; ++i) m[remap_left(i)] = remap_left(mate_[i]);
    for (int i = 0; i < right.nbot_ + right.ntop_; ++i)
        m[remap_right(i)] = remap_right(right.mate_[i]);
    return TLPattern(nb, nt, std::move(m));
}

TLPattern TLPattern::flipped() const {
    std::vector<int> m(nbot_ + ntop_);
    auto remap = [&](int i) { return i < nbot_ ? ntop_ + i : i - nbot_; };
    for (int i = 0; i < nbot_ + ntop_; ++i) m[remap(i)] = remap(mate_[i]);
    return TLPattern(ntop_, nbot_, std::move(m));
}

TLContext::TLContext(long order, long exp) : order_(order), exp_(exp) {
    if (order < 1) throw std::invalid_argument("root order must be positive");
    long e = ((exp % order) + order) % order;
    if (std::gcd(order, e == 0 ? order : e) != 1)
        throw std::invalid_argument("root choice is not primitive");
}

Scalar TLContext::A(long power) const {
    if (!specialized()) return Scalar(LaurentPoly::variable(power));
    return Scalar(Cyclotomic::root_of_unity(order_, exp_ * power));
}

Scalar TLContext::delta() const { return -A(2) - A(-2); }

Scalar TLContext::qint(long m) const {
    Scalar s(0);
    for (long i = 0; i < m; ++i) s += A(2 * (m - 1 - 2 * i));
    return s;
}

Scalar TLContext::qint_factorial(long m) const {
    Scalar s(1);
    for (long i = 1; i <= m; ++i) s *= qint(i);
    return s;
}

TLElement TLElement::id(int n) { return from_pattern(TLPattern::id(n)); }

TLElement TLElement::from_pattern(const TLPattern& p, const Scalar& c) {
    TLElement e(p.nbot(), p.ntop());
    e.add_term(p, c);
    return e;
}

void TLElement::add_term(const TLPattern& p, const Scalar& c) {
    if (p.nbot() != nbot_ || p.ntop() != ntop_)
        throw std::logic_error("TL term width mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (nbot_ != o.nbot_ || ntop_ != o.ntop_) throw std::logic_error("TL sum width mismatch");
    TLElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

TLElement TLElement::operator-(const TLElement& o) const { return *this + o.scale(Scalar(-1)); }

TLElement TLElement::scale(const Scalar& s) const {
    TLElement r(nbot_, ntop_);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : terms_) {
        Scalar v = c * s;
        if (!v.is_zero()) r.terms_.emplace(p, v);
    }
    return r;
}

TLElement TLElement::then(const TLElement& upper, const TLContext& ctx) const {
    if (ntop_ != upper.nbot_) throw std::logic_error("TL composition width mismatch");
    TLElement r(nbot_, upper.ntop());
    Scalar d = ctx.delta();
    for (const auto& [p, c] : terms_)
        for (const auto& [q, e] : upper.terms_) {
            int loops = 0;
            TLPattern comp = p.then(q, loops);
            Scalar coeff = c * e;
            for (int i = 0; i < loops; ++i) coeff *= d;
            r.add_term(comp, coeff);
        }
    return r;
}

TLElement TLElement::tensor(const TLElement& right) const {
    TLElement r(nbot_ + right.nbot_, ntop_ + right.ntop_);
    for (const auto& [p, c] : terms_)
        for (const auto& [q, e] : right.terms_) r.add_term(p.tensor(q), c * e);
    return r;
}

TLElement TLElement::flipped() const {
    TLElement r(ntop_, nbot_);
    for (const auto& [p, c] : terms_) r.add_term(p.flipped(), c);
    return r;
}

Scalar TLElement::closure(const TLContext& ctx) const {
    if (nbot_ != ntop_) throw std::logic_error("closure needs an endomorphism");
    int n = nbot_;
    if (n == 0) return scalar_value();
    TLElement cur = *this;
    for (int i = 0; i < n; ++i) cur = cur.partial_closure(ctx);
    return cur.scalar_value();
}

TLElement TLElement::partial_closure(const TLContext& ctx) const {
    if (nbot_ != ntop_ || nbot_ == 0) throw std::logic_error("partial closure needs strands");
    int n = nbot_;
    TLElement cup = TLElement::id(n - 1).tensor(from_pattern(TLPattern::nested_cups(1)));
    TLElement cap = TLElement::id(n - 1).tensor(from_pattern(TLPattern::nested_caps(1)));
    TLElement mid = this->tensor(TLElement::id(1)); // n+1 wide
    return cup.then(mid, ctx).then(cap, ctx);
}

Scalar TLElement::scalar_value() const {
    if (nbot_ != 0 || ntop_ != 0) throw std::logic_error("element is not a scalar");
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
}

TLElement crossing_pos(const TLContext& ctx) {
    TLElement r(2, 2);
    r.add_term(TLPattern::id(2), ctx.A(1));
    r.add_term(TLPattern::e(2, 0), ctx.A(-1));
    return r;
}

TLElement crossing_neg(const TLContext& ctx) {
    TLElement r(2, 2);
    r.add_term(TLPattern::id(2), ctx.A(-1));
    r.add_term(TLPattern::e(2, 0), ctx.A(1));
    return r;
}

TLElement cabled_crossing(const TLContext& ctx, int n, int m, bool positive) {
    int w = n + m;
    TLElement result = TLElement::id(w);
    TLElement x = positive ? crossing_pos(ctx) : crossing_neg(ctx);
    for (int s = n - 1; s >= 0; --s) {
        for (int stepm = 0; stepm < m; ++stepm) {
            int pos = s + stepm;
            TLElement layer =
                TLElement::id(pos).tensor(x).tensor(TLElement::id(w - pos - 2));
            result = result.then(layer, ctx);
        }
    }
    return result;
}

namespace {
struct JWCache {
    std::mutex mu;
    std::map<std::pair<long, long>, std::map<int, TLElement>> cache;
};
JWCache& jw_cache() {
    static JWCache c;
    return c;
}
} // namespace

const TLElement& jones_wenzl(const TLContext& ctx, int n) {
    if (n < 0) throw std::invalid_argument("Jones-Wenzl index must be nonnegative");
    auto key = std::make_pair(ctx.order(), ctx.root_exp());
    JWCache& c = jw_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto& table = c.cache[key];
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    if (table.count(0) == 0) table.emplace(0, TLElement(0, 0));
    if (table.count(1) == 0) table.emplace(1, TLElement::id(1));
    if (n <= 1) return table.at(n);
    int have = 1;
    for (auto& [k, v] : table)
        if (k > have && k <= n) have = k;
    TLElement f = table.at(have);
    for (int k = have + 1; k <= n; ++k) {
        Scalar num = ctx.qint(k - 1), den = ctx.qint(k);
        if (den.is_zero())
            throw std::domain_error("quantum integer vanishes: [" + std::to_string(k) +
                                    "] = 0 at the chosen root; color out of range");
        TLElement fx = f.tensor(TLElement::id(1));
        TLElement e_last = TLElement::from_pattern(TLPattern::e(k, k - 2));
        // coefficient is the closure-dimension ratio D_{k-2}/D_{k-1} with
        // D_n = (-1)^n [n+1], i.e. -[k-1]/[k]
        TLElement correction = fx.then(e_last, ctx).then(fx, ctx).scale(num / den);
        f = fx + correction;
        table.emplace(k, f);
    }
    return table.at(n);
}

} // namespace skein
