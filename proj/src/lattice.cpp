#include "pasg/lattice.hpp"

#include <functional>
#include <algorithm>

namespace pasg::lat {

ZMat identity(size_t n) {
    ZMat m(n, ZVec(n, Z(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZVec matvec(const ZMat& a, const ZVec& x) {
    ZVec y(a.size(), Z(0));
    for (size_t i = 0; i < a.size(); ++i) {
        PASG_CHECK(a[i].size() == x.size(), "dimension mismatch");
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

ZMat matmul(const ZMat& a, const ZMat& b) {
    PASG_CHECK(!b.empty(), "empty matrix");
    ZMat c(a.size(), ZVec(b[0].size(), Z(0)));
    for (size_t i = 0; i < a.size(); ++i) {
        PASG_CHECK(a[i].size() == b.size(), "dimension mismatch");
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
    return c;
}

Z dot(const ZVec& a, const ZVec& b) {
    PASG_CHECK(a.size() == b.size(), "dimension mismatch");
    Z s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Z inf_norm(const ZVec& v) {
    Z m(0);
    for (const Z& x : v) m = std::max(m, Z(abs(x)));
    return m;
}

Z det(ZMat a) {
    size_t n = a.size();
    for (const auto& r : a) PASG_CHECK(r.size() == n, "determinant of non-square matrix");
    // Bareiss fraction-free elimination
    Z prev(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return Z(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Z(-a[n - 1][n - 1]);
}

long rank(const ZMat& a) {
    if (a.empty()) return 0;
    QMat m(a.size(), QVec(a[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) m[i][j] = Q(a[i][j]);
    long r = 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[pr]);
        Q inv = 1 / m[pr][c];
        for (size_t i = pr + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] * inv;
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[pr][j];
        }
        ++pr;
        ++r;
    }
    return r;
}

HnfResult hnf(const ZMat& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    ZMat h = a;
    ZMat u = identity(rows);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction in column c among rows >= r
        for (;;) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                if (best == rows || abs(h[i][c]) < abs(h[best][c])) best = i;
            }
            if (best == rows) break;
            std::swap(h[best], h[r]);
            std::swap(u[best], u[r]);
            bool done = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
                    for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                }
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
            for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
        }
        // reduce rows above
        for (size_t i = 0; i < r; ++i) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
                for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
            }
        }
        ++r;
    }
    h.resize(r);
    return {h, u};
}

ZMat kernel_basis(const ZMat& a, size_t ncols) {
    size_t m = a.size();
    // rows of [A^T | I]: HNF rows with zero left block give the kernel
    ZMat work(ncols, ZVec(m + ncols, Z(0)));
    for (size_t j = 0; j < ncols; ++j) {
        for (size_t i = 0; i < m; ++i) {
            PASG_CHECK(a[i].size() == ncols, "dimension mismatch");
            work[j][i] = a[i][j];
        }
        work[j][m + j] = 1;
    }
    HnfResult res = hnf(work);
    ZMat kernel;
    for (const ZVec& row : res.h) {
        bool left_zero = true;
        for (size_t i = 0; i < m; ++i)
            if (row[i] != 0) left_zero = false;
        if (!left_zero) continue;
        kernel.emplace_back(row.begin() + m, row.end());
    }
    // rows produced by HNF with zero left block may appear in any order
    return kernel;
}

ZMat saturate(const ZMat& rows, size_t ncols) {
    if (rows.empty()) return {};
    ZMat orth = kernel_basis(rows, ncols);
    if (orth.empty()) return hnf(identity(ncols)).h;
    ZMat sat = kernel_basis(orth, ncols);
    return hnf(sat).h;
}

bool lattice_contains(const ZMat& basis, const ZVec& v) {
    if (basis.empty()) {
        for (const Z& x : v)
            if (x != 0) return false;
        return true;
    }
    // solve y * H = v over Z against the HNF of the basis
    ZMat h = hnf(basis).h;
    ZVec rem = v;
    size_t cols = v.size();
    for (const ZVec& row : h) {
        size_t lead = 0;
        while (lead < cols && row[lead] == 0) ++lead;
        PASG_CHECK(lead < cols, "zero row in HNF");
        if (rem[lead] % row[lead] != 0) {
            // leading entry not divisible: try continuing, the echelon shape
            // means no later row can fix this coordinate
            return false;
        }
        Z q = rem[lead] / row[lead];
        for (size_t j = 0; j < cols; ++j) rem[j] -= q * row[j];
    }
    for (const Z& x : rem)
        if (x != 0) return false;
    return true;
}

namespace {

// rational Gram-Schmidt data for LLL
struct Gso {
    QMat mu;
    QVec b2;  // squared norms of orthogonalized vectors
};

Gso compute_gso(const ZMat& b) {
    size_t k = b.size();
    Gso g;
    g.mu.assign(k, QVec(k, Q(0)));
    g.b2.assign(k, Q(0));
    QMat star(k, QVec(b[0].size(), Q(0)));
    for (size_t i = 0; i < k; ++i) {
        QVec v(b[i].size());
        for (size_t j = 0; j < b[i].size(); ++j) v[j] = Q(b[i][j]);
        for (size_t j = 0; j < i; ++j) {
            Q num(0);
            for (size_t t = 0; t < v.size(); ++t) num += Q(b[i][t]) * star[j][t];
            PASG_CHECK(g.b2[j] != 0, "dependent rows in LLL input");
            Q m = num / g.b2[j];
            g.mu[i][j] = m;
            for (size_t t = 0; t < v.size(); ++t) v[t] -= m * star[j][t];
        }
        star[i] = v;
        Q n2(0);
        for (const Q& x : v) n2 += x * x;
        g.b2[i] = n2;
        PASG_REQUIRE(n2 != 0, "dependent rows");
    }
    return g;
}

}  // namespace

LllResult lll_reduce(const ZMat& input, const Q& delta) {
    PASG_REQUIRE(delta > Q(1, 4) && delta <= 1, "LLL delta must be in (1/4, 1]");
    PASG_REQUIRE(!input.empty(), "empty basis");
    ZMat b = input;
    ZMat u = identity(b.size());
    Gso g = compute_gso(b);
    size_t k = 1;
    size_t n = b.size();
    auto size_reduce = [&](size_t i, size_t j) {
        Q m = g.mu[i][j];
        Z r;
        // nearest integer to m
        Q half_up = m + Q(1, 2);
        mpz_fdiv_q(r.get_mpz_t(), half_up.get_num().get_mpz_t(), half_up.get_den().get_mpz_t());
        if (r == 0) return;
        for (size_t t = 0; t < b[i].size(); ++t) b[i][t] -= r * b[j][t];
        for (size_t t = 0; t < n; ++t) u[i][t] -= r * u[j][t];
        for (size_t t = 0; t < j; ++t) g.mu[i][t] -= Q(r) * g.mu[j][t];
        g.mu[i][j] -= Q(r);
    };
    while (k < n) {
        for (size_t j = k; j-- > 0;) size_reduce(k, j);
        Q lhs = g.b2[k] + g.mu[k][k - 1] * g.mu[k][k - 1] * g.b2[k - 1];
        if (lhs >= delta * g.b2[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            g = compute_gso(b);  // small bases: recomputing keeps this exact and simple
            if (k > 1) --k;
        }
    }
    return {b, u};
}

std::vector<ZVec> enumerate_short_vectors(const ZMat& basis, const Z& radius2) {
    Gso g = compute_gso(basis);
    size_t k = basis.size();
    std::vector<ZVec> found;
    std::vector<Q> centers(k, Q(0));
    std::vector<Z> coeff(k, Z(0));
    // depth-first from the last coordinate; exact rational bounds
    std::function<void(size_t, Q)> rec = [&](size_t level, Q remaining) {
        if (level == 0 && remaining >= 0) {
            // assemble
            ZVec v(basis[0].size(), Z(0));
            bool nonzero = false;
            for (size_t i = 0; i < k; ++i) {
                if (coeff[i] == 0) continue;
                nonzero = true;
                for (size_t j = 0; j < v.size(); ++j) v[j] += coeff[i] * basis[i][j];
            }
            if (nonzero) {
                canonicalize_sign(v);
                found.push_back(v);
            }
            return;
        }
        size_t i = level - 1;
        // center = -sum_{j>i} c_j mu_{j,i}
        Q center(0);
        for (size_t j = i + 1; j < k; ++j) center -= Q(coeff[j]) * g.mu[j][i];
        // |c - center|^2 * b2[i] <= remaining
        PASG_CHECK(g.b2[i] > 0, "GSO degenerate");
        Q bound2 = remaining / g.b2[i];
        // integer range around center with (c-center)^2 <= bound2
        Z lo, hi;
        {
            // floor(center - sqrt(bound2)), ceil(center + sqrt): conservative via
            // integer sqrt on ceil(bound2)
            Z bc;
            Z num = bound2.get_num(), den = bound2.get_den();
            Z q = num / den + 1;
            mpz_sqrt(bc.get_mpz_t(), q.get_mpz_t());
            bc += 1;
            Q clo = center - bc, chi = center + bc;
            mpz_fdiv_q(lo.get_mpz_t(), clo.get_num().get_mpz_t(), clo.get_den().get_mpz_t());
            mpz_cdiv_q(hi.get_mpz_t(), chi.get_num().get_mpz_t(), chi.get_den().get_mpz_t());
        }
        for (Z c = lo; c <= hi; ++c) {
            Q d = Q(c) - center;
            Q used = d * d * g.b2[i];
            if (used > remaining) continue;
            coeff[i] = c;
            rec(i, remaining - used);
        }
        coeff[i] = 0;
    };
    rec(k, Q(radius2));
    // dedupe (sign canonicalization may produce duplicates)
    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

void canonicalize_sign(ZVec& v) {
    for (const Z& x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (Z& y : v) y = -y;
            return;
        }
    }
}

bool lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace pasg::lat
