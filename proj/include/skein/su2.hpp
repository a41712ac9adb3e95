#pragma once

#include "skein/diagram.hpp"
#include "skein/linalg.hpp"
#include "skein/tl.hpp"

#include <map>
#include <optional>
#include <string>

namespace skein {

// Kauffman bracket of a closed diagram, every strand a single unlabeled
// wire: loops contribute delta, crossings resolve by the two planar
// smoothings with weights A and A^-1. Twist tokens contribute the kink
// factor -A^(+-3). Throws DiagramError on coupons or open boundaries.
Scalar kauffman_bracket(const SlicedDiagram& d, const TLContext& ctx);

// Modular data of the Kauffman-bracket model at level k: A is specialized
// to a primitive 4r-th root of unity, r = k+2. Every scalar is computed
// diagrammatically from the TL engine, not from closed forms.
struct Su2Data {
    int level = 0;
    long r = 2;
    long order = 8;     // 4r
    long root_exp = 1;  // A = z_order^root_exp
    TLContext ctx;      // specialized context
    std::vector<Scalar> qdim;   // quantum dimensions per color
    std::vector<Scalar> twist;  // twist scalars per color
    std::vector<Scalar> kirby;  // Kirby weights per color (lambda = 1)
    Scalar delta_plus, delta_minus, zeta; // lambda = 1 normalization

    int color_of(const std::string& label) const; // validates range
    bool valid_color(const std::string& label) const;
};

Su2Data su2_data(int level, long root_exp = 1);

// Cabled evaluation of a colored diagram: each color-n strand runs through
// the n-strand Jones-Wenzl projector. Framing integers per component default
// to the blackboard framing (the diagram's own writhe); explicit framings
// multiply by twist^(framing - writhe).
struct TLCouponTable {
    std::map<std::string, TLElement> entries;
};

TLElement su2_eval_open(const SlicedDiagram& d, const Su2Data& data,
                        const std::map<int, long>& framings = {},
                        const TLCouponTable* coupons = nullptr);
Scalar su2_colored_eval(const SlicedDiagram& d, const Su2Data& data,
                        const std::map<int, long>& framings = {},
                        const TLCouponTable* coupons = nullptr);

// S-matrix: (n,m) entry is the colored evaluation of the Hopf link
Mat su2_smatrix(const Su2Data& data);

// category data report: colors, dimensions, twists, Gauss sums, S-matrix
std::string su2_report(const Su2Data& data);

// the positive-kink endomorphism on an n-strand cable (no projector)
TLElement cabled_kink(const TLContext& ctx, int n, bool positive);

} // namespace skein
