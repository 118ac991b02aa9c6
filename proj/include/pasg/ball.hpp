#pragma once

#include "pasg/padic.hpp"

#include <vector>

namespace pasg {

// Exact membership of a coordinate vector in the ball of the given radius
// (strict: |x_i| < r for all i; otherwise |x_i| <= r). A coordinate that is
// zero at its precision is accepted when its norm upper bound already
// certifies membership; if the precision cannot decide, this rejects the
// query rather than guessing.
inline bool in_ball(const std::vector<PAdicNumber>& xs, const PNorm& radius, bool strict) {
    for (const PAdicNumber& x : xs) {
        if (x.is_exact_zero() || x.provably_nonzero()) {
            PNorm n = x.norm();
            if (strict ? !(n < radius) : !(n <= radius)) return false;
            continue;
        }
        PNorm ub = x.norm_upper_bound();
        bool ok = strict ? (ub < radius) : (ub <= radius);
        PASG_REQUIRE(ok, "ball membership undetermined at this precision");
    }
    return true;
}

}  // namespace pasg
