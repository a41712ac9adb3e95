#include "skein/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace skein {

Scalar bracket_state_sum_oracle(const SlicedDiagram& d, const TLContext& ctx) {
    if (!d.closed()) throw std::logic_error("oracle needs a closed diagram");
    // index crossings and wire slots
    struct Cross { size_t slice, in_pos, out_pos; bool positive; };
    std::vector<Cross> crossings;
    Scalar twist_factor(1);
    {
        for (size_t s = 0; s < d.slices().size(); ++s) {
            size_t ib = 0, ob = 0;
            for (const auto& tok : d.slices()[s]) {
                if (tok.kind == Token::XPos || tok.kind == Token::XNeg)
                    crossings.push_back({s, ib, ob, tok.kind == Token::XPos});
                if (tok.kind == Token::TwPos) twist_factor *= -ctx.A(3);
                if (tok.kind == Token::TwNeg) twist_factor *= -ctx.A(-3);
                if (tok.kind == Token::Coupon)
                    throw std::logic_error("oracle does not evaluate coupons");
                ib += tok.in_width();
                ob += tok.out_width();
            }
        }
    }
    if (crossings.size() > 24) throw std::domain_error("state sum too large");

    // slot ids per gap
    std::vector<size_t> offset;
    offset.push_back(0);
    for (size_t g = 0; g < d.gap_count(); ++g)
        offset.push_back(offset.back() + d.wires_at(g).size());
    size_t nslots = offset.back();

    Scalar total(0);
    Scalar dlt = ctx.delta();
    for (size_t mask = 0; mask < (size_t(1) << crossings.size()); ++mask) {
        std::vector<int> parent(nslots);
        for (size_t i = 0; i < nslots; ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](size_t g1, size_t p1, size_t g2, size_t p2) {
            int a = static_cast<int>(offset[g1] + p1), b = static_cast<int>(offset[g2] + p2);
            parent[find(a)] = find(b);
        };
        Scalar weight = twist_factor;
        size_t ci = 0;
        for (size_t s = 0; s < d.slices().size(); ++s) {
            size_t ib = 0, ob = 0;
            for (const auto& tok : d.slices()[s]) {
                switch (tok.kind) {
                    case Token::Id: case Token::TwPos: case Token::TwNeg:
                        unite(s, ib, s + 1, ob);
                        break;
                    case Token::Cup:
                        unite(s + 1, ob, s + 1, ob + 1);
                        break;
                    case Token::Cap:
                        unite(s, ib, s, ib + 1);
                        break;
                    case Token::XPos: case Token::XNeg: {
                        bool a_smoothing = ((mask >> ci) & 1) == 0;
                        ++ci;
                        // our crossing convention: xpos = A*id + A^-1*e
                        bool id_smoothing;
                        if (tok.kind == Token::XPos) {
                            weight *= a_smoothing ? ctx.A(1) : ctx.A(-1);
                            id_smoothing = a_smoothing;
                        } else {
                            weight *= a_smoothing ? ctx.A(-1) : ctx.A(1);
                            id_smoothing = a_smoothing;
                        }
                        if (id_smoothing) {
                            unite(s, ib, s + 1, ob);
                            unite(s, ib + 1, s + 1, ob + 1);
                        } else {
                            unite(s, ib, s, ib + 1);
                            unite(s + 1, ob, s + 1, ob + 1);
                        }
                        break;
                    }
                    case Token::Coupon: break;
                }
                ib += tok.in_width();
                ob += tok.out_width();
            }
        }
        // loops = distinct roots
        long loops = 0;
        for (size_t i = 0; i < nslots; ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++loops;
        Scalar term = weight;
        for (long l = 0; l < loops; ++l) term *= dlt;
        total += term;
    }
    return total;
}

long verlinde_dimension_oracle(const Su2Data& data, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (genus == 0) return 1;
    Scalar sum(0);
    for (int i = 0; i <= data.level; ++i)
        sum += data.qdim[i].pow(2 - 2 * genus);
    Scalar dim = data.zeta.pow(genus - 1) * sum;
    // the result must be a nonnegative rational integer
    Cyclotomic c = dim.as_cyclotomic(data.order);
    if (!c.is_rational()) throw std::logic_error("Verlinde sum is not rational");
    Rat r = c.rational_value();
    if (r.get_den() != 1 || r < 0) throw std::logic_error("Verlinde sum is not a nonnegative integer");
    return static_cast<long>(r.get_num().get_si());
}

} // namespace skein
