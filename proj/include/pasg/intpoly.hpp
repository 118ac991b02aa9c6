#pragma once

#include "pasg/util.hpp"

#include <utility>
#include <vector>

namespace pasg::poly {

// Dense univariate polynomials, coeff[i] multiplying x^i; empty vector = 0.
using ZPoly = std::vector<Z>;
using QPoly = std::vector<Q>;

long deg(const ZPoly& f);
long deg(const QPoly& f);
void strip(ZPoly& f);
void strip(QPoly& f);

QPoly to_q(const ZPoly& f);
// Clear denominators and divide by content; sign normalized to positive lc.
ZPoly primitive_from_q(const QPoly& f);
Z content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Q& c);

Q eval(const QPoly& f, const Q& x);
Z eval(const ZPoly& f, const Z& x);

// Quotient and remainder over Q; divisor nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
// Monic gcd over Q.
QPoly gcd(const QPoly& a, const QPoly& b);
// a^e mod m over Q.
QPoly powmod(const QPoly& a, const Z& e, const QPoly& m);

// Exact resultant of two rational polynomials.
Q resultant(const QPoly& a, const QPoly& b);

// f / gcd(f, f') as a primitive integer polynomial.
ZPoly squarefree_part(const ZPoly& f);

// Irreducible factors (primitive, positive lc) with multiplicities.
// Exact: big-prime Cantor-Zassenhaus plus subset recombination; the product
// of the output is checked to reconstruct the input.
std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f);
bool is_irreducible(const ZPoly& f);

// If f is the minimal polynomial of a root of unity, returns its order
// (the least n with f | x^n - 1); otherwise 0.
long root_of_unity_order(const ZPoly& f);

std::string to_string(const ZPoly& f);

}  // namespace pasg::poly
