#pragma once

#include "skein/diagram.hpp"
#include "skein/su2.hpp"

namespace skein {

// Independent bracket oracle: enumerate all 2^c Kauffman smoothings of the
// crossings and count loops combinatorially. Shares no code with the TL
// composition engine it checks.
Scalar bracket_state_sum_oracle(const SlicedDiagram& d, const TLContext& ctx);

// Verlinde-style dimension oracle: zeta^(g-1) * sum_i qdim(S_i)^(2-2g),
// evaluated in exact cyclotomic arithmetic. Must land on a nonnegative
// integer for a genuine modular datum.
long verlinde_dimension_oracle(const Su2Data& data, int genus);

} // namespace skein
