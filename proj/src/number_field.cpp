#include "pasg/number_field.hpp"

namespace pasg {

using poly::QPoly;
using poly::ZPoly;

NumberField::NumberField(ZPoly defining, bool verify) : defining_(poly::primitive_part(defining)) {
    PASG_REQUIRE(poly::deg(defining_) >= 1, "defining polynomial must be non-constant");
    if (verify) {
        PASG_REQUIRE(poly::is_irreducible(defining_), "defining polynomial is reducible");
    }
    defining_q_ = poly::to_q(defining_);
}

QPoly NumberField::reduce(const QPoly& a) const {
    return poly::divrem(a, defining_q_).second;
}

QPoly NumberField::add(const QPoly& a, const QPoly& b) const { return poly::add(a, b); }
QPoly NumberField::sub(const QPoly& a, const QPoly& b) const { return poly::sub(a, b); }

QPoly NumberField::mul(const QPoly& a, const QPoly& b) const {
    return reduce(poly::mul(a, b));
}

QPoly NumberField::inv(const QPoly& a) const {
    PASG_REQUIRE(!a.empty(), "inverse of zero field element");
    // extended Euclid: s*a + t*f = gcd = c (a unit in Q)
    QPoly r0 = defining_q_, r1 = reduce(a);
    QPoly s0{}, s1{Q(1)};
    while (poly::deg(r1) > 0) {
        auto [q, r] = poly::divrem(r0, r1);
        QPoly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    PASG_CHECK(!r1.empty(), "element not invertible: defining polynomial reducible?");
    return reduce(poly::scale(s1, 1 / r1[0]));
}

QPoly NumberField::pow(const QPoly& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    QPoly acc{Q(1)};
    QPoly base = reduce(a);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

Q det_q(std::vector<std::vector<Q>> m) {
    size_t n = m.size();
    Q det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Q(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Q inv = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Q f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

QPoly NumberField::characteristic_polynomial(const QPoly& a) const {
    long d = degree();
    QPoly ar = reduce(a);
    // multiplication matrix: column j = coordinates of a * x^j
    std::vector<std::vector<Q>> M(d, std::vector<Q>(d, Q(0)));
    QPoly cur = ar;
    for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i) M[i][j] = (i < poly::deg(cur) + 1) ? cur[i] : Q(0);
        cur = reduce(poly::mul(cur, QPoly{Q(0), Q(1)}));
    }
    // interpolate det(yI - M) at y = 0..d
    std::vector<Q> ys, vals;
    for (long y = 0; y <= d; ++y) {
        auto m = M;
        for (long i = 0; i < d; ++i) {
            for (long j = 0; j < d; ++j) m[i][j] = -m[i][j];
            m[i][i] += y;
        }
        ys.emplace_back(y);
        vals.push_back(det_q(m));
    }
    // Lagrange interpolation
    QPoly result;
    for (size_t i = 0; i < ys.size(); ++i) {
        QPoly basis{Q(1)};
        Q denom(1);
        for (size_t j = 0; j < ys.size(); ++j) {
            if (i == j) continue;
            basis = poly::mul(basis, QPoly{-ys[j], Q(1)});
            denom *= ys[i] - ys[j];
        }
        result = poly::add(result, poly::scale(basis, vals[i] / denom));
    }
    PASG_CHECK(poly::deg(result) == d && result.back() == 1, "characteristic polynomial not monic");
    return result;
}

ZPoly NumberField::minimal_polynomial(const QPoly& a) const {
    QPoly chi = characteristic_polynomial(a);
    ZPoly chi_z = poly::primitive_from_q(chi);
    return poly::squarefree_part(chi_z);
}

}  // namespace pasg
