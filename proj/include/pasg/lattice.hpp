#pragma once

#include "pasg/util.hpp"

#include <vector>

namespace pasg::lat {

using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;  // rows are lattice vectors
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

ZMat identity(size_t n);
ZVec matvec(const ZMat& a, const ZVec& x);     // A x
ZMat matmul(const ZMat& a, const ZMat& b);
Z dot(const ZVec& a, const ZVec& b);
Z inf_norm(const ZVec& v);
Z det(ZMat a);                                 // exact, fraction-free
long rank(const ZMat& a);                      // rank over Q

// Row Hermite normal form H = U A with U unimodular; zero rows dropped from h.
struct HnfResult {
    ZMat h;
    ZMat u;  // full square transform, det +-1
};
HnfResult hnf(const ZMat& a);

// Basis of {x in Z^n : A x = 0}.
ZMat kernel_basis(const ZMat& a, size_t ncols);

// Saturation of the row lattice: span_Q(rows) intersected with Z^n.
ZMat saturate(const ZMat& rows, size_t ncols);

// Is v in the row lattice of basis (exact)?
bool lattice_contains(const ZMat& basis, const ZVec& v);

// Exact LLL reduction with rational Gram-Schmidt; delta in (1/4, 1].
struct LllResult {
    ZMat basis;
    ZMat transform;  // basis = transform * input
};
LllResult lll_reduce(const ZMat& input, const Q& delta = Q(3, 4));

// All nonzero lattice vectors v (up to sign) with ||v||_2^2 <= radius2,
// by exact Fincke-Pohst enumeration over the given basis (rows independent).
std::vector<ZVec> enumerate_short_vectors(const ZMat& basis, const Z& radius2);

// Canonical sign: first nonzero entry positive.
void canonicalize_sign(ZVec& v);
bool lex_less(const ZVec& a, const ZVec& b);

}  // namespace pasg::lat
