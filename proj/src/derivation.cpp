#include "pasg/derivation.hpp"

namespace pasg {

long DerivationData::e_l(const Prime& prime) const {
    if (delta_l == 1) return 0;
    return valuation_z(delta_l, prime.value());
}

DerivationData derivation_data(const SplitGroup& g, const lat::ZMat& basis) {
    long n = g.dim();
    PASG_REQUIRE(static_cast<long>(basis.size()) == n, "basis must be n x n");
    for (const auto& row : basis)
        PASG_REQUIRE(static_cast<long>(row.size()) == n, "basis must be n x n");
    PASG_REQUIRE(lat::det(basis) != 0, "singular basis matrix");

    DerivationData data{g, basis, {}, 0, HeightValue::exact_zero(), Z(1),
                        HeightValue::exact_zero()};
    data.p.assign(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    long c1 = 0;
    HeightValue c2 = HeightValue::exact_zero();
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) {
            const Z& m = basis[j][i];
            MultiPoly pij(n);
            if (m != 0) {
                bool multiplicative = (i >= g.additive_rank);
                if (multiplicative) {
                    pij = (MultiPoly::variable(n, i) + MultiPoly::constant(n, Q(1)))
                              .scale(Q(m));
                } else {
                    pij = MultiPoly::constant(n, Q(m));
                }
                c1 = std::max(c1, pij.total_degree());
                c2 = HeightValue::max(c2, poly_height(pij.coefficient_vector()));
            }
            data.p[j][i] = pij;
        }
    }
    data.c1 = c1;
    data.c2 = c2;
    // delta_L = 1 for integer bases: every P has integral coefficients
    data.delta_l = 1;
    // omega_L = max{1, e_L}(C2 + log delta_L + log C1); log C1 = 0 by
    // convention when C1 = 0 (and C1 <= 1 here, so the term always drops)
    data.omega_l = c2;
    return data;
}

MultiPoly apply_derivation(const MultiPoly& p, long direction, const DerivationData& data) {
    long n = data.group.dim();
    PASG_REQUIRE(direction >= 0 && direction < n, "derivation direction out of range");
    MultiPoly out(n);
    for (long i = 0; i < n; ++i) {
        if (data.p[direction][i].is_zero()) continue;
        out = out + data.p[direction][i] * p.derivative(i);
    }
    return out;
}

MultiPoly apply_direction(const MultiPoly& p, const lat::ZVec& w, const SplitGroup& g) {
    long n = g.dim();
    PASG_REQUIRE(static_cast<long>(w.size()) == n, "direction vector length mismatch");
    MultiPoly out(n);
    for (long i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        MultiPoly coeff = (i >= g.additive_rank)
                              ? (MultiPoly::variable(n, i) + MultiPoly::constant(n, Q(1)))
                                    .scale(Q(w[i]))
                              : MultiPoly::constant(n, Q(w[i]));
        out = out + coeff * p.derivative(i);
    }
    return out;
}

bool coordinate_smallness_check(const SplitGroup& g, const DerivationData& data,
                                const std::vector<std::vector<PAdicNumber>>& samples) {
    for (const auto& x : samples) {
        PASG_REQUIRE(static_cast<long>(x.size()) == g.dim(), "sample dimension mismatch");
        const Prime& p = x[0].prime();
        PNorm ball = PNorm::exp_radius(p);
        if (data.delta_l != 1) {
            ball = ball * PNorm::power(p, -valuation_z(data.delta_l, p.value()));
        }
        std::vector<PAdicNumber> coords;
        for (long i = 0; i < g.dim(); ++i) {
            PASG_REQUIRE(x[i].norm_upper_bound() < ball, "point outside the stated ball");
            if (i < g.additive_rank) {
                coords.push_back(x[i]);  // f_i = x_i
            } else {
                // f_i = exp(x_i) - 1
                PAdicNumber e = padic_exp(x[i]);
                PAdicNumber one = PAdicNumber::make(p, 1, 0, e.working_digits(4));
                coords.push_back(e - one);
            }
        }
        for (const PAdicNumber& f : coords) {
            if (!(f.norm_upper_bound() < PNorm::one(p))) return false;
        }
    }
    return true;
}

}  // namespace pasg
