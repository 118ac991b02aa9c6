#pragma once

#include "pasg/padic.hpp"

namespace pasg {

// The Teichmuller representative: the unique (p-1)-th root of unity congruent
// to the given unit mod p. For p = 2 this is always 1.
PAdicNumber teichmuller(const PAdicNumber& x);

// exp(x) for |x|_p < r_p, with exact precision tracking.
PAdicNumber padic_exp(const PAdicNumber& x);

// log(1+t) for |t|_p < 1.
PAdicNumber padic_log1p(const PAdicNumber& t);

// The Iwasawa logarithm on units: writes x = zeta * u with zeta the torsion
// part (Teichmuller root, times a sign for p = 2) and |u - 1|_p < 1, and
// returns log(u). The result vanishes to the working precision exactly when
// x agrees with a root of unity to that precision.
PAdicNumber iwasawa_log(const PAdicNumber& x);

// Torsion part of a unit: zeta as above, together with its exact order
// (divides p - 1 for odd p; 1 or 2 for p = 2).
struct UnitDecomposition {
    PAdicNumber zeta;
    long zeta_order;
    PAdicNumber principal;  // u = x / zeta, congruent to 1 mod p (mod 4 for p=2)
};
UnitDecomposition unit_decomposition(const PAdicNumber& x);

}  // namespace pasg
