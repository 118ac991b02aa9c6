#include "doctest.h"

#include "pasg/lattice.hpp"
#include "pasg/siegel.hpp"

#include <random>

using namespace pasg;
using lat::ZMat;
using lat::ZVec;

namespace {

Z norm2(const ZVec& v) { return lat::dot(v, v); }

// brute-force shortest nonzero vector (L2) over a coefficient box
Z brute_lambda1(const ZMat& basis, long box) {
    size_t k = basis.size();
    std::vector<long> c(k, -box);
    Z best(-1);
    for (;;) {
        ZVec v(basis[0].size(), Z(0));
        bool nonzero = false;
        for (size_t i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            nonzero = true;
            for (size_t j = 0; j < v.size(); ++j) v[j] += Z(c[i]) * basis[i][j];
        }
        if (nonzero) {
            Z n = norm2(v);
            if (best < 0 || n < best) best = n;
        }
        size_t i = 0;
        while (i < k && c[i] == box) c[i++] = -box;
        if (i == k) break;
        ++c[i];
    }
    return best;
}

}  // namespace

TEST_CASE("hnf, kernel, saturation") {
    ZMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    auto res = lat::hnf(a);
    // transform is unimodular and reproduces h
    CHECK(abs(lat::det(res.u)) == 1);
    ZMat check = lat::matmul(res.u, a);
    for (size_t i = 0; i < res.h.size(); ++i) CHECK(check[i] == res.h[i]);

    // kernel of [1 2 3]
    ZMat k = lat::kernel_basis(ZMat{{1, 2, 3}}, 3);
    CHECK(k.size() == 2);
    for (const ZVec& v : k) CHECK(lat::matvec(ZMat{{1, 2, 3}}, v)[0] == 0);

    // saturation of 2*Z^2 diagonal row
    ZMat s = lat::saturate(ZMat{{2, 2}}, 2);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == ZVec{1, 1});

    CHECK(lat::lattice_contains(ZMat{{1, 3}}, ZVec{2, 6}));
    CHECK(!lat::lattice_contains(ZMat{{2, 6}}, ZVec{1, 3}));
}

TEST_CASE("lll basics") {
    ZMat id = lat::identity(3);
    auto r = lat::lll_reduce(id);
    CHECK(r.basis == id);

    ZMat a{{1, 0}, {4, 1}};
    auto red = lat::lll_reduce(a);
    CHECK(abs(lat::det(red.transform)) == 1);
    Z shortest = std::min(norm2(red.basis[0]), norm2(red.basis[1]));
    CHECK(shortest <= norm2(a[0]));
    CHECK(shortest <= norm2(a[1]));
    // same lattice: HNFs agree
    CHECK(lat::hnf(red.basis).h == lat::hnf(a).h);

    CHECK_THROWS_AS(lat::lll_reduce(ZMat{{1, 1}, {2, 2}}), precondition_error);
}

TEST_CASE("lll recovers scrambled identity profile") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 10; ++it) {
        ZMat u = lat::identity(5);
        // random unimodular scramble: elementary row operations
        std::uniform_int_distribution<int> rd(0, 4), cd(-3, 3);
        for (int step = 0; step < 25; ++step) {
            int i = rd(rng), j = rd(rng);
            if (i == j) continue;
            long c = cd(rng);
            for (int t = 0; t < 5; ++t) u[i][t] += Z(c) * u[j][t];
        }
        auto red = lat::lll_reduce(u, Q(99, 100));
        CHECK(abs(lat::det(red.transform)) == 1);
        CHECK(abs(lat::det(red.basis)) == 1);
        // independent oracle: the scramble is unimodular, so the lattice is
        // Z^5; exhaust all vectors of norm 1 and confirm membership
        Z l1(-1);
        for (int i = 0; i < 5; ++i) {
            ZVec e(5, Z(0));
            e[i] = 1;
            if (lat::lattice_contains(u, e)) l1 = 1;
        }
        REQUIRE(l1 == 1);
        CHECK(norm2(red.basis[0]) == l1);
        for (const ZVec& row : red.basis) CHECK(norm2(row) == 1);
    }
}

TEST_CASE("short vector enumeration agrees with brute force") {
    ZMat b{{3, 1, 0}, {1, 2, 1}, {0, 1, 4}};
    auto shorts = lat::enumerate_short_vectors(b, Z(12));
    CHECK(!shorts.empty());
    for (const ZVec& v : shorts) CHECK(norm2(v) <= 12);
    Z l1 = brute_lambda1(b, 4);
    Z found_min = norm2(shorts[0]);
    for (const ZVec& v : shorts) found_min = std::min(found_min, norm2(v));
    CHECK(found_min == l1);
}

TEST_CASE("siegel: stated examples") {
    SiegelSolution s1 = siegel_solve(LinearSystem{{{1, 1}}});
    CHECK(s1.x == ZVec{1, -1});
    CHECK(s1.inf_norm == 1);

    SiegelSolution s2 = siegel_solve(LinearSystem{{{1, 2, 3}}});
    CHECK(lat::matvec(ZMat{{1, 2, 3}}, s2.x)[0] == 0);
    CHECK(s2.within_bound);
    // brute force over the box ||x||_inf <= 2 finds inf-norm 1 (e.g. (1,1,-1))
    CHECK(s2.inf_norm == 1);

    CHECK_THROWS_AS(siegel_solve(LinearSystem{{{0, 0}}}), precondition_error);
    CHECK_THROWS_AS(siegel_solve(LinearSystem{{{1, 2}, {3, 4}}}), precondition_error);
}

TEST_CASE("siegel: random 2x4 systems satisfy bound and quasi-minimality") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> ed(-3, 3);
    int done = 0;
    while (done < 150) {
        ZMat a(2, ZVec(4));
        bool nz = false;
        for (auto& row : a)
            for (auto& x : row) {
                x = ed(rng);
                if (x != 0) nz = true;
            }
        if (!nz) continue;
        ++done;
        SiegelSolution s = siegel_solve(LinearSystem{a});
        ZVec img = lat::matvec(a, s.x);
        CHECK(img[0] == 0);
        CHECK(img[1] == 0);
        CHECK(s.within_bound);
        // brute-force minimal inf-norm, widening boxes (the bound caps at 12)
        long arow[2][4];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) arow[i][j] = a[i][j].get_si();
        Z best(-1);
        for (long box = 1; box <= 12 && best < 0; ++box) {
            long c[4];
            for (c[0] = -box; c[0] <= box; ++c[0])
                for (c[1] = -box; c[1] <= box; ++c[1])
                    for (c[2] = -box; c[2] <= box; ++c[2])
                        for (c[3] = -box; c[3] <= box; ++c[3]) {
                            if (!c[0] && !c[1] && !c[2] && !c[3]) continue;
                            long m = std::max({std::abs(c[0]), std::abs(c[1]),
                                               std::abs(c[2]), std::abs(c[3])});
                            if (m != box) continue;  // only the new shell
                            long i0 = 0, i1 = 0;
                            for (int j = 0; j < 4; ++j) {
                                i0 += arow[0][j] * c[j];
                                i1 += arow[1][j] * c[j];
                            }
                            if (i0 == 0 && i1 == 0) best = box;
                        }
        }
        REQUIRE(best > 0);
        // solver height <= 4x brute-force minimal height (log scale):
        // inf-norm <= best^4
        CHECK(s.inf_norm <= best * best * best * best);
        CHECK(s.inf_norm <= 12);
    }
}
