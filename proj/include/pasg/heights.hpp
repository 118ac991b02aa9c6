#pragma once

#include "pasg/algebraic.hpp"
#include "pasg/pnorm.hpp"

#include <string>
#include <vector>

namespace pasg {

// A nonnegative real given by a certified rational enclosure [lo, hi]
// (endpoints are exact dyadic/rational numbers). Heights that are exactly
// zero carry the degenerate enclosure [0, 0].
class HeightValue {
public:
    HeightValue(Q lo, Q hi, std::string form = "");
    static HeightValue exact_zero() { return HeightValue(Q(0), Q(0), "0"); }

    const Q& lower() const { return lo_; }
    const Q& upper() const { return hi_; }
    Q width() const { return hi_ - lo_; }
    double approx() const;
    const std::string& closed_form() const { return form_; }

    HeightValue operator+(const HeightValue& o) const;
    HeightValue scale(const Q& c) const;  // c >= 0
    static HeightValue max(const HeightValue& a, const HeightValue& b);

    // certified comparisons: true only when the enclosures prove it
    bool certainly_le(const HeightValue& o) const { return hi_ <= o.lo_; }
    bool certainly_ge(const HeightValue& o) const { return lo_ >= o.hi_; }

    std::string to_string() const;

private:
    Q lo_, hi_;
    std::string form_;
};

// Certified enclosure of (num/den) * log(m), m >= 1.
HeightValue log_of_integer(const Z& m, long num = 1, long den = 1);
// Certified enclosure of log of a positive rational.
HeightValue log_of_rational(const Q& x);

// Absolute logarithmic Weil height. Exact 0 for zero and roots of unity;
// exact closed forms for rationals; otherwise a Graeffe-iteration enclosure
// of (1/d) log M(minpoly) with relative width below 1e-15.
HeightValue weil_height(const AlgebraicNumber& a);
HeightValue weil_height_q(const Q& x);

// Projective height of a coefficient vector over Q: the max-norm at every
// place of the gcd-reduced integer vector, i.e. log max|n_i|.
HeightValue poly_height(const std::vector<Q>& coeffs);
HeightValue poly_height(const std::vector<Z>& coeffs);
// Rational coefficients only (the pipelines only ever need those); rejects
// genuinely irrational coefficient vectors.
HeightValue poly_height(const std::vector<AlgebraicNumber>& coeffs);

// Liouville: log|a|_p >= -deg(a) * h(a) for nonzero a. Returns a certified
// norm bound B with |a|_p >= B.
PNorm liouville_lower_bound(const AlgebraicNumber& a, const Prime& p);

}  // namespace pasg
