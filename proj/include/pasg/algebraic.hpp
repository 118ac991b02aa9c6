#pragma once

#include "pasg/intpoly.hpp"
#include "pasg/number_field.hpp"
#include "pasg/padic.hpp"

#include <optional>
#include <string>

namespace pasg {

// Maximum degree for derived algebraic numbers (resultant arithmetic).
inline constexpr long kAlgebraicDegreeCap = 16;

// An exact algebraic number: primitive irreducible minimal polynomial with
// positive leading coefficient, plus (optionally) a distinguished p-adic root
// given by an approximation satisfying the Hensel uniqueness condition
// |f(r)|_p < |f'(r)|_p^2.
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Q& x);
    static AlgebraicNumber from_rational(const Q& x, const Prime& p, long digits = kDefaultDigits);

    // The unique p-adic root of `minpoly` lifting the given simple root mod p
    // (Newton iteration, quadratic convergence).
    static AlgebraicNumber hensel_embed(const poly::ZPoly& minpoly, const Prime& p,
                                        const Z& seed_residue, long digits = kDefaultDigits);

    // Trusted constructor for internally derived numbers; verifies invariants.
    AlgebraicNumber(poly::ZPoly minpoly, std::optional<PAdicNumber> root, bool verify_irreducible);

    const poly::ZPoly& minpoly() const { return minpoly_; }
    long degree() const { return poly::deg(minpoly_); }

    bool is_rational() const { return degree() == 1; }
    Q rational_value() const;
    bool is_zero() const;
    bool is_one() const;

    bool has_padic_embedding() const { return root_.has_value(); }
    const PAdicNumber& padic_root() const;

    // Same number with the root selector refined to at least `digits`.
    AlgebraicNumber with_precision(long digits) const;

    AlgebraicNumber negate() const;
    AlgebraicNumber inv() const;
    AlgebraicNumber pow(long n) const;               // no factoring needed
    AlgebraicNumber add(const AlgebraicNumber& o) const;   // resultant route
    AlgebraicNumber mul(const AlgebraicNumber& o) const;   // resultant route

    // Exact equality (via subtraction).
    bool equals(const AlgebraicNumber& o) const;

    // Order as a root of unity (0 if not one). Exact, degree-bounded.
    long root_of_unity_order() const;

    std::string to_string() const;

private:
    poly::ZPoly minpoly_;
    std::optional<PAdicNumber> root_;
};

// Newton-lift a simple root of f mod p to precision p^digits.
PAdicNumber hensel_lift_root(const poly::ZPoly& f, const Prime& p, const Z& seed, long digits);

}  // namespace pasg
