#pragma once

#include "pasg/group.hpp"
#include "pasg/heights.hpp"
#include "pasg/number_field.hpp"

#include <optional>

namespace pasg {

// A K-linear subspace of Lie(G) = K^n, given by an exact basis matrix. A
// shared number field carries irrational entries; absent field = rational.
class LieSubspace {
public:
    // rational subspace from integer rows
    LieSubspace(long ambient_dim, lat::ZMat rows);
    // subspace over a number field
    LieSubspace(long ambient_dim, std::optional<NumberField> field,
                std::vector<std::vector<poly::QPoly>> rows);

    long ambient_dim() const { return ambient_; }
    long dim() const { return static_cast<long>(rows_.size()); }
    const std::optional<NumberField>& field() const { return field_; }
    const std::vector<std::vector<poly::QPoly>>& rows() const { return rows_; }

    bool is_rational() const;
    // rational rows as integer matrix (requires is_rational)
    lat::ZMat rational_rows() const;

    // the largest rational subspace contained in this one
    lat::ZMat maximal_rational_subspace() const;

    // max height of the basis entries (the paper's b)
    HeightValue entry_height_bound() const;
    // all entries algebraic integers?
    bool entries_integral() const;

    // membership of a rational vector
    bool contains(const lat::ZVec& v) const;

private:
    long ambient_;
    std::optional<NumberField> field_;
    std::vector<std::vector<poly::QPoly>> rows_;  // k x n, entries reduced
};

// rank of a matrix with number-field entries (exact Gaussian elimination)
long rank_nf(const std::optional<NumberField>& field,
             std::vector<std::vector<poly::QPoly>> m);

// An algebraic subgroup H of G = G_a^a x G_m^b cut out by integer data:
// linear forms annihilating the additive part and characters whose values on
// H are roots of unity (the toric part). Both blocks saturated.
struct SubgroupLattice {
    SplitGroup group;
    lat::ZMat additive_forms;  // rows in Z^a
    lat::ZMat characters;      // rows in Z^b

    SubgroupLattice(SplitGroup g, lat::ZMat add_forms, lat::ZMat chars);

    long dim() const;  // dim H
    // Lie(H): rational subspace annihilated by both blocks
    LieSubspace lie_algebra() const;
};

// gamma in H: additive forms vanish exactly, characters land on roots of
// unity (verified by exact algebraic arithmetic, never by approximation).
bool subgroup_membership(const GroupPoint& x, const SubgroupLattice& h);

// Exact: is prod alpha_j^{m_j} a root of unity? Returns its order, 0 if not.
long character_torsion_order(const std::vector<AlgebraicNumber>& alpha, const lat::ZVec& m);

}  // namespace pasg
