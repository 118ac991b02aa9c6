#pragma once

#include "pasg/algebraic.hpp"
#include "pasg/heights.hpp"
#include "pasg/lattice.hpp"
#include "pasg/padic.hpp"
#include "pasg/padic_functions.hpp"

#include <optional>
#include <vector>

namespace pasg {

// G = G_a^a x G_m^b, a split commutative algebraic group of dimension a + b.
struct SplitGroup {
    long additive_rank = 0;
    long multiplicative_rank = 0;

    SplitGroup(long a, long b) : additive_rank(a), multiplicative_rank(b) {
        PASG_REQUIRE(a >= 0 && b >= 0 && a + b >= 1, "group dimension must be positive");
    }
    long dim() const { return additive_rank + multiplicative_rank; }
    bool operator==(const SplitGroup& o) const {
        return additive_rank == o.additive_rank && multiplicative_rank == o.multiplicative_rank;
    }
};

// A point of G over Q-bar: exact algebraic coordinates.
class GroupPoint {
public:
    GroupPoint(SplitGroup g, std::vector<AlgebraicNumber> additive,
               std::vector<AlgebraicNumber> multiplicative);

    static GroupPoint identity(const SplitGroup& g);

    const SplitGroup& group() const { return group_; }
    const std::vector<AlgebraicNumber>& additive() const { return additive_; }
    const std::vector<AlgebraicNumber>& multiplicative() const { return multiplicative_; }

    // every multiplicative coordinate a p-adic unit (the G(F)_f condition)
    bool in_finite_type_subgroup() const;

    GroupPoint mul(const GroupPoint& o) const;  // group law
    GroupPoint pow(long s) const;

    // max of the coordinate heights
    HeightValue height() const;

private:
    SplitGroup group_;
    std::vector<AlgebraicNumber> additive_;
    std::vector<AlgebraicNumber> multiplicative_;
};

// A point of G over Q_p.
struct PadicPoint {
    SplitGroup group;
    std::vector<PAdicNumber> additive;
    std::vector<PAdicNumber> multiplicative;

    PadicPoint mul(const PadicPoint& o) const;
    PadicPoint pow(long s) const;
};

// log of the group: identity on additive coordinates, Iwasawa log on
// multiplicative ones. Vanishes exactly on torsion (to precision).
std::vector<PAdicNumber> group_log(const PadicPoint& x);
std::vector<PAdicNumber> group_log(const GroupPoint& x);  // via the p-adic selectors

// Inverse on the polydisk |u_i| < r_p.
PadicPoint group_exp(const SplitGroup& g, const std::vector<PAdicNumber>& u);

struct TorsionVerdict {
    bool torsion = false;
    long order = 0;  // exact order when torsion
};
// Exact torsion test on algebraic points: additive part zero and every
// multiplicative coordinate a root of unity, orders combined by lcm.
TorsionVerdict is_torsion(const GroupPoint& x);
// Precision-bounded torsion test on p-adic points.
TorsionVerdict is_torsion_at_precision(const PadicPoint& x);

// Block-respecting homomorphism: linear on the additive part, monomial on
// the multiplicative part (no mixing).
struct GroupHom {
    SplitGroup from;
    SplitGroup to;
    lat::ZMat additive;        // to.additive_rank x from.additive_rank
    lat::ZMat multiplicative;  // to.multiplicative_rank x from.multiplicative_rank

    GroupHom(SplitGroup f, SplitGroup t, lat::ZMat add, lat::ZMat mult);
};

GroupPoint hom_apply(const GroupHom& phi, const GroupPoint& x);
PadicPoint hom_apply(const GroupHom& phi, const PadicPoint& x);
// Tangent map as an integer block matrix (to.dim x from.dim).
lat::ZMat hom_tangent(const GroupHom& phi);

}  // namespace pasg
