#include "pasg/siegel.hpp"

#include <algorithm>

namespace pasg {

using lat::ZMat;
using lat::ZVec;

Z LinearSystem::max_entry() const {
    Z m(0);
    for (const auto& row : a)
        for (const Z& x : row) m = std::max(m, Z(abs(x)));
    return m;
}

namespace {

// prefer smaller inf norm, then lexicographically smallest canonical vector
bool better(const ZVec& cand, const ZVec& best) {
    Z cn = lat::inf_norm(cand), bn = lat::inf_norm(best);
    if (cn != bn) return cn < bn;
    return lat::lex_less(cand, best);
}

}  // namespace

SiegelSolution siegel_solve(const LinearSystem& system) {
    size_t m = system.rows(), n = system.cols();
    PASG_REQUIRE(m >= 1 && m < n, "Siegel system needs 1 <= m < n");
    Z max_a = system.max_entry();
    PASG_REQUIRE(max_a > 0, "Siegel system must be nonzero");

    ZMat kernel = lat::kernel_basis(system.a, n);
    PASG_CHECK(!kernel.empty(), "kernel unexpectedly trivial with m < n");
    ZMat reduced = lat::lll_reduce(kernel, Q(99, 100)).basis;

    // candidate pool: reduced vectors and pairwise combinations
    std::vector<ZVec> pool;
    for (const ZVec& v : reduced) {
        ZVec c = v;
        lat::canonicalize_sign(c);
        pool.push_back(c);
    }
    for (size_t i = 0; i < reduced.size(); ++i)
        for (size_t j = 0; j < reduced.size(); ++j) {
            if (i == j) continue;
            ZVec c(n, Z(0));
            for (size_t t = 0; t < n; ++t) c[t] = reduced[i][t] + reduced[j][t];
            lat::canonicalize_sign(c);
            bool zero = true;
            for (const Z& x : c)
                if (x != 0) zero = false;
            if (!zero) pool.push_back(c);
        }
    ZVec best = pool.front();
    for (const ZVec& c : pool)
        if (better(c, best)) best = c;

    // Siegel bound, exact: ||x||_inf^{n-m} <= (n max|a|)^m
    Z rhs = pow_z(Z(n) * max_a, static_cast<unsigned long>(m));
    auto within = [&](const Z& nrm) {
        return pow_z(nrm, static_cast<unsigned long>(n - m)) <= rhs;
    };
    if (!within(lat::inf_norm(best))) {
        // complete enumeration inside the guaranteed box: a solution with
        // ||x||_inf <= (n max|a|)^{m/(n-m)} exists, so this cannot come back empty
        Z box;
        mpz_root(box.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(n - m));
        Z radius2 = Z(n) * box * box;
        std::vector<ZVec> all = lat::enumerate_short_vectors(reduced, radius2);
        bool found = false;
        for (const ZVec& c : all) {
            if (!within(lat::inf_norm(c))) continue;
            if (!found || better(c, best)) best = c;
            found = true;
        }
        PASG_CHECK(found, "no kernel vector within the Siegel bound (bound violated?)");
    }

    // exact verification A x = 0
    ZVec image = lat::matvec(system.a, best);
    for (const Z& v : image) PASG_CHECK(v == 0, "Siegel solution does not solve the system");

    Z nrm = lat::inf_norm(best);
    SiegelSolution sol{
        best, nrm, log_of_integer(nrm),
        log_of_integer(Z(n) * max_a, static_cast<long>(m), static_cast<long>(n - m)),
        within(nrm)};
    PASG_CHECK(sol.within_bound, "selected solution exceeds the Siegel bound");
    return sol;
}

}  // namespace pasg
