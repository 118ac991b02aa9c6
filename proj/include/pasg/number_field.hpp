#pragma once

#include "pasg/intpoly.hpp"

#include <vector>

namespace pasg {

// Q[x]/(f) for an irreducible primitive f. Elements are rational polynomials
// reduced mod f. Rationals embed as degree-0 elements, so a single field
// context covers mixed rational/irrational linear algebra.
class NumberField {
public:
    // Verifies irreducibility unless the caller vouches for it.
    explicit NumberField(poly::ZPoly defining, bool verify = true);

    long degree() const { return poly::deg(defining_); }
    const poly::ZPoly& defining_polynomial() const { return defining_; }

    poly::QPoly reduce(const poly::QPoly& a) const;
    poly::QPoly add(const poly::QPoly& a, const poly::QPoly& b) const;
    poly::QPoly sub(const poly::QPoly& a, const poly::QPoly& b) const;
    poly::QPoly mul(const poly::QPoly& a, const poly::QPoly& b) const;
    poly::QPoly inv(const poly::QPoly& a) const;
    poly::QPoly pow(const poly::QPoly& a, long e) const;
    static bool is_zero(const poly::QPoly& a) { return a.empty(); }
    static bool is_rational(const poly::QPoly& a) { return a.size() <= 1; }
    static Q rational_value(const poly::QPoly& a) { return a.empty() ? Q(0) : a[0]; }

    // Characteristic polynomial of the multiplication-by-a map (monic, degree
    // = field degree), computed by exact interpolation of det(yI - M).
    poly::QPoly characteristic_polynomial(const poly::QPoly& a) const;

    // Minimal polynomial of a over Q, primitive with positive leading
    // coefficient. The characteristic polynomial is a power of it, so only a
    // squarefree part is needed; no factoring.
    poly::ZPoly minimal_polynomial(const poly::QPoly& a) const;

    bool operator==(const NumberField& o) const { return defining_ == o.defining_; }

private:
    poly::ZPoly defining_;
    poly::QPoly defining_q_;
};

// Exact determinant of a rational matrix (Gaussian elimination).
Q det_q(std::vector<std::vector<Q>> m);

}  // namespace pasg
