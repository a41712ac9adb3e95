#include "skein/su2.hpp"

#include <sstream>

namespace skein {

namespace {

// uncolored token semantics on single wires
TLElement bracket_token(const Token& tok, const TLContext& ctx) {
    switch (tok.kind) {
        case Token::Id: return TLElement::id(1);
        case Token::Cup: return TLElement::from_pattern(TLPattern::nested_cups(1));
        case Token::Cap: return TLElement::from_pattern(TLPattern::nested_caps(1));
        case Token::XPos: return crossing_pos(ctx);
        case Token::XNeg: return crossing_neg(ctx);
        case Token::TwPos: return TLElement::id(1).scale(-ctx.A(3));
        case Token::TwNeg: return TLElement::id(1).scale(-ctx.A(-3));
        case Token::Coupon: throw std::logic_error("bracket does not evaluate coupons");
    }
    throw std::logic_error("unreachable");
}

} // namespace

Scalar kauffman_bracket(const SlicedDiagram& d, const TLContext& ctx) {
    if (!d.closed()) throw std::logic_error("bracket needs a closed diagram");
    TLElement state(0, 0);
    state.add_term(TLPattern(0, 0, {}), Scalar(1));
    for (const auto& slice : d.slices()) {
        TLElement layer(0, 0);
        layer.add_term(TLPattern(0, 0, {}), Scalar(1));
        for (const auto& tok : slice) layer = layer.tensor(bracket_token(tok, ctx));
        state = state.then(layer, ctx);
    }
    return state.scalar_value();
}

TLElement cabled_kink(const TLContext& ctx, int n, bool positive) {
    // (id_n x caps_n) o (X_{n,n} x id_n) o (id_n x cups_n) acting on n wires
    TLElement cups = TLElement::id(n).tensor(TLElement::from_pattern(TLPattern::nested_cups(n)));
    TLElement cross = cabled_crossing(ctx, n, n, positive).tensor(TLElement::id(n));
    TLElement caps = TLElement::id(n).tensor(TLElement::from_pattern(TLPattern::nested_caps(n)));
    return cups.then(cross, ctx).then(caps, ctx);
}

int Su2Data::color_of(const std::string& label) const {
    const std::string b = base_label(label);
    for (char ch : b)
        if (!isdigit(static_cast<unsigned char>(ch)))
            throw std::domain_error("unknown color '" + label + "' for the su2 backend");
    int n = std::stoi(b);
    if (n < 0 || n > level)
        throw std::domain_error("color " + b + " out of range for level " +
                                std::to_string(level));
    return n;
}

bool Su2Data::valid_color(const std::string& label) const {
    const std::string b = base_label(label);
    if (b.empty()) return false;
    for (char ch : b)
        if (!isdigit(static_cast<unsigned char>(ch))) return false;
    int n = std::stoi(b);
    return n >= 0 && n <= level;
}

Su2Data su2_data(int level, long root_exp) {
    if (level < 0) throw std::invalid_argument("level must be nonnegative");
    Su2Data s;
    s.level = level;
    s.r = level + 2;
    s.order = 4 * s.r;
    s.root_exp = root_exp;
    s.ctx = TLContext(s.order, root_exp); // throws if not primitive
    const TLContext& c = s.ctx;
    for (int n = 0; n <= level; ++n) {
        Scalar dim = (n == 0) ? Scalar(1) : jones_wenzl(c, n).closure(c);
        s.qdim.push_back(dim);
        Scalar tw(1);
        if (n > 0) {
            TLElement k = jones_wenzl(c, n).then(cabled_kink(c, n, true), c);
            tw = k.closure(c) / dim;
        }
        s.twist.push_back(tw);
        s.kirby.push_back(dim);
    }
    s.zeta = Scalar(0);
    s.delta_plus = Scalar(0);
    s.delta_minus = Scalar(0);
    for (int n = 0; n <= level; ++n) {
        s.zeta += s.qdim[n] * s.qdim[n];
        s.delta_plus += s.twist[n] * s.qdim[n] * s.qdim[n];
        s.delta_minus += s.twist[n].inverse() * s.qdim[n] * s.qdim[n];
    }
    return s;
}

namespace {

struct CabledState {
    TLElement elem; // nbot = total bottom cable width (usually 0)
};

TLElement colored_token(const Token& tok, const Su2Data& data, const TLCouponTable* coupons,
                        Scalar& twist_factor) {
    const TLContext& ctx = data.ctx;
    switch (tok.kind) {
        case Token::Id: {
            int n = data.color_of(tok.colors[0]);
            return TLElement::id(n);
        }
        case Token::Cup: {
            int n = data.color_of(tok.colors[0]);
            if (n == 0) return TLElement::id(0);
            TLElement cups = TLElement::from_pattern(TLPattern::nested_cups(n));
            TLElement ff = jones_wenzl(ctx, n).tensor(jones_wenzl(ctx, n));
            return cups.then(ff, ctx);
        }
        case Token::Cap: {
            int n = data.color_of(tok.colors[0]);
            if (n == 0) return TLElement::id(0);
            return TLElement::from_pattern(TLPattern::nested_caps(n));
        }
        case Token::XPos: case Token::XNeg: {
            int n = data.color_of(tok.colors[0]);
            int m = data.color_of(tok.colors[1]);
            if (n == 0 || m == 0) return TLElement::id(n + m);
            return cabled_crossing(ctx, n, m, tok.kind == Token::XPos);
        }
        case Token::TwPos: case Token::TwNeg: {
            int n = data.color_of(tok.colors[0]);
            Scalar mu = data.twist[n];
            twist_factor *= (tok.kind == Token::TwPos) ? mu : mu.inverse();
            return TLElement::id(n);
        }
        case Token::Coupon: {
            if (!coupons) throw std::domain_error("unknown coupon '" + tok.coupon_name + "'");
            auto it = coupons->entries.find(tok.coupon_name);
            if (it == coupons->entries.end())
                throw std::domain_error("unknown coupon '" + tok.coupon_name + "'");
            int win = 0, wout = 0;
            for (const auto& l : tok.coupon_in) win += data.color_of(l);
            for (const auto& l : tok.coupon_out) wout += data.color_of(l);
            if (it->second.nbot() != win || it->second.ntop() != wout)
                throw std::domain_error("coupon '" + tok.coupon_name + "' has wrong width");
            return it->second;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace

TLElement su2_eval_open(const SlicedDiagram& d, const Su2Data& data,
                        const std::map<int, long>& framings, const TLCouponTable* coupons) {
    const TLContext& ctx = data.ctx;
    int wbot = 0;
    for (const auto& l : d.wires_at(0)) wbot += data.color_of(l);
    TLElement state = TLElement::id(wbot);
    // bottom-boundary strands run through their projectors
    if (wbot > 0) {
        TLElement proj(0, 0);
        proj.add_term(TLPattern(0, 0, {}), Scalar(1));
        for (const auto& l : d.wires_at(0)) {
            int n = data.color_of(l);
            proj = proj.tensor(n == 0 ? TLElement::id(0) : jones_wenzl(ctx, n));
        }
        state = proj;
    }
    Scalar twist_factor(1);
    for (const auto& slice : d.slices()) {
        TLElement layer(0, 0);
        layer.add_term(TLPattern(0, 0, {}), Scalar(1));
        for (const auto& tok : slice)
            layer = layer.tensor(colored_token(tok, data, coupons, twist_factor));
        state = state.then(layer, ctx);
    }
    // framing corrections: explicit framing f multiplies by twist^(f - writhe)
    for (int comp = 0; comp < d.component_count(); ++comp) {
        auto it = framings.find(comp);
        if (it == framings.end()) continue;
        if (!d.component_is_closed(comp) || d.component_has_coupon(comp))
            throw std::domain_error("framing declared on a non-circle component");
        long w = d.writhe(comp);
        long excess = it->second - w;
        if (excess == 0) continue;
        int n = data.color_of(d.component_color(comp));
        twist_factor *= data.twist[n].pow(excess);
    }
    return state.scale(twist_factor);
}

Scalar su2_colored_eval(const SlicedDiagram& d, const Su2Data& data,
                        const std::map<int, long>& framings, const TLCouponTable* coupons) {
    if (!d.closed()) throw std::logic_error("colored evaluation needs a closed diagram");
    return su2_eval_open(d, data, framings, coupons).scalar_value();
}

Mat su2_smatrix(const Su2Data& data) {
    int n = data.level + 1;
    Mat S(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // Hopf link colored (a, b)
            std::string ca = std::to_string(a), cb = std::to_string(b);
            std::vector<std::vector<Token>> slices;
            slices.push_back({tok_cup(ca), tok_cup(cb)});
            slices.push_back({tok_id(ca), tok_xpos(star_label(ca), cb), tok_id(star_label(cb))});
            slices.push_back({tok_id(ca), tok_xpos(cb, star_label(ca)), tok_id(star_label(cb))});
            slices.push_back({tok_cap(ca), tok_cap(cb)});
            SlicedDiagram hopf(slices);
            S.at(a, b) = su2_colored_eval(hopf, data);
        }
    return S;
}

std::string su2_report(const Su2Data& data) {
    std::ostringstream os;
    os << "backend su2 level=" << data.level << " r=" << data.r << " root=z_" << data.order
       << "^" << data.root_exp << "\n";
    for (int n = 0; n <= data.level; ++n)
        os << "color " << n << ": qdim=" << data.qdim[n].str() << " twist="
           << data.twist[n].str() << " kirby=" << data.kirby[n].str() << "\n";
    os << "zeta=" << data.zeta.str() << "\n";
    os << "deltaPlus=" << data.delta_plus.str() << "\n";
    os << "deltaMinus=" << data.delta_minus.str() << "\n";
    Mat S = su2_smatrix(data);
    os << "smatrix:\n";
    for (size_t i = 0; i < S.rows(); ++i) {
        for (size_t j = 0; j < S.cols(); ++j) os << (j ? " | " : "  ") << S.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

} // namespace skein
