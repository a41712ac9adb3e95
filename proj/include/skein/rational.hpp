#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace skein {

// Exact rational scalars. All coefficient arithmetic in the project goes
// through mpq_class so intermediate results never overflow or round.
using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(n, d) does not canonicalize; comparisons assume canonical form,
// so fractions must be built through this helper.
inline Rat rat_frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace skein
