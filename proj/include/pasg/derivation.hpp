#pragma once

#include "pasg/group.hpp"
#include "pasg/heights.hpp"
#include "pasg/multipoly.hpp"

namespace pasg {

// The derivation calculus for a split group in identity-vanishing affine
// coordinates (xi = x on additive factors, xi = t - 1 on multiplicative
// ones). A basis L of Lie(G) is an invertible integer matrix over the
// standard invariant fields; then
//   L(j) xi_i = M[j][i]            (additive i)
//   L(j) xi_i = M[j][i] (xi_i + 1) (multiplicative i)
// and the derived constants are
//   C1 = max deg P_{i,L(j)},  C2 = max h(P_{i,L(j)}),  delta_L = 1,
//   e_L = v(delta_L),  omega_L = max{1,e_L} (C2 + log delta_L + log C1)
// with the convention log C1 = 0 when C1 = 0.
struct DerivationData {
    SplitGroup group;
    lat::ZMat basis;                      // L, invertible n x n
    std::vector<std::vector<MultiPoly>> p;  // p[j][i] = P_{i,L(j)}
    long c1 = 0;
    HeightValue c2 = HeightValue::exact_zero();
    Z delta_l = 1;
    HeightValue omega_l = HeightValue::exact_zero();

    long e_l(const Prime& p) const;  // v_p(delta_l)
};

DerivationData derivation_data(const SplitGroup& g, const lat::ZMat& basis);

// One application of the direction-j derivation: P -> sum_i P_{i,L(j)} dP/dT_i.
MultiPoly apply_derivation(const MultiPoly& p, long direction, const DerivationData& data);

// Derivation along an integer tangent vector w (sum_i w_i * standard_i),
// for the Delta_i = x_{i1} d_1 + ... + x_{in} d_n operators of a subspace
// basis row. Same chain rule, with the row replacing a basis row of L.
MultiPoly apply_direction(const MultiPoly& p, const lat::ZVec& w, const SplitGroup& g);

// Checks |f_i(x)|_p < 1 for the normalized coordinate functions
// f_i = xi_i o Exp at every sample point strictly inside the ball of radius
// |delta_L|_p * r_p (Lemma 3.11 shape).
bool coordinate_smallness_check(const SplitGroup& g, const DerivationData& data,
                                const std::vector<std::vector<PAdicNumber>>& samples);

}  // namespace pasg
