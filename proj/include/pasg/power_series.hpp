#pragma once

#include "pasg/padic.hpp"
#include "pasg/pnorm.hpp"

#include <vector>

namespace pasg {

// One-variable power series over Q_p, truncated at a finite degree with a
// certified tail bound: on the closed disk of the stated radius,
// |a_n|_p * radius^n <= tail_bound for every omitted index n. Coefficients
// are exact rationals, never floats.
class PowerSeries {
public:
    PowerSeries(Prime p, std::vector<Q> coeffs, PNorm radius, PNorm tail_bound);

    // Polynomial: zero tail on every disk; radius records intended validity.
    static PowerSeries polynomial(const Prime& p, std::vector<Q> coeffs, const PNorm& radius);

    const Prime& prime() const { return p_; }
    const std::vector<Q>& coefficients() const { return coeff_; }
    long truncation_degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const PNorm& radius() const { return radius_; }
    const PNorm& tail_bound() const { return tail_; }

    // Tail bound rescaled to a smaller disk r <= radius.
    PNorm tail_bound_at(const PNorm& r) const;

    PowerSeries derivative() const;
    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scale(const Q& c) const;

    // Truncation value at an exact rational point plus the tail bound there.
    struct RationalEval {
        Q truncation_value;
        PNorm tail;
    };
    RationalEval evaluate(const Q& x) const;

    // Precision-tracked evaluation at a p-adic point; the tail contribution
    // is returned as a norm bound to be combined by the caller.
    struct PAdicEval {
        PAdicNumber truncation_value;
        PNorm tail;
    };
    PAdicEval evaluate(const PAdicNumber& x) const;

private:
    // Exact sup over the represented coefficients: max_{n<=M} |a_n|_p r^n.
    friend PNorm truncation_sup(const PowerSeries& f, const PNorm& r);

    Prime p_;
    std::vector<Q> coeff_;
    PNorm radius_;
    PNorm tail_;
};

PNorm truncation_sup(const PowerSeries& f, const PNorm& r);

// |f|_r = max_n |a_n|_p r^n, certified exact. Rejects radii beyond the
// validity disk and inputs whose tail bound exceeds the represented maximum
// (the sup would then not be determined by the truncation).
struct DiskNorm {
    PNorm radius;
    PNorm value;
};
DiskNorm disk_sup_norm(const PowerSeries& f, const PNorm& r);

// Taylor series of exp, certified on the closed disk of the given radius
// (must be strictly inside r_p). Default radius: p^{-1}, resp. 2^{-2}.
PowerSeries exp_series(const Prime& p, long truncation);
PowerSeries exp_series(const Prime& p, long truncation, const PNorm& radius);

// Series of log(1+x), certified on a closed disk of radius p^{-a}, a > 0.
PowerSeries log_series(const Prime& p, long truncation);
PowerSeries log_series(const Prime& p, long truncation, const PNorm& radius);

}  // namespace pasg
