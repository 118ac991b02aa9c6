#include "doctest.h"

#include "pasg/relations.hpp"

#include <random>

using namespace pasg;
using lat::ZMat;
using lat::ZVec;

namespace {

AlgebraicNumber unit(const Q& x, const Prime& p, long digits = 512) {
    return AlgebraicNumber::from_rational(x, p, digits);
}

}  // namespace

TEST_CASE("planted relation (3, -1)") {
    Prime p5(5);
    Q a(6);  // 1 + p
    std::vector<AlgebraicNumber> alpha{unit(a, p5), unit(pow_q(a, 3), p5)};
    long guard = relation_guard_precision(alpha, 10);
    auto res = detect_log_relations(alpha, 10, guard + 8);
    REQUIRE(res.certificates.size() == 1);
    CHECK(res.certificates[0].exponents == ZVec{3, -1});
    CHECK(res.certificates[0].torsion_order == 1);
    CHECK(lat::lattice_contains(res.lattice, ZVec{3, -1}));
}

TEST_CASE("torsion input yields the full relation line") {
    Prime p3(3);
    std::vector<AlgebraicNumber> alpha{unit(Q(-1), p3)};
    auto res = detect_log_relations(alpha, 10, relation_guard_precision(alpha, 10) + 8);
    REQUIRE(res.certificates.size() == 1);
    CHECK(res.certificates[0].exponents == ZVec{1});
    CHECK(res.certificates[0].torsion_order == 2);
    // (2) generates an index-two sublattice of the certified relations
    CHECK(lat::lattice_contains(res.lattice, ZVec{2}));
}

TEST_CASE("independent units give no relations") {
    Prime p5(5);
    std::vector<AlgebraicNumber> alpha{unit(Q(6), p5), unit(Q(26), p5)};
    auto res = detect_log_relations(alpha, 10, relation_guard_precision(alpha, 10) + 8);
    CHECK(res.certificates.empty());
    CHECK(res.lattice.empty());

    // oracle: exhaustive exponent check over the box
    for (long m1 = -10; m1 <= 10; ++m1)
        for (long m2 = -10; m2 <= 10; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            Q v = pow_q(Q(6), m1) * pow_q(Q(26), m2);
            CHECK(v != 1);
            CHECK(v != -1);
        }
}

TEST_CASE("guard precision is enforced") {
    Prime p5(5);
    std::vector<AlgebraicNumber> alpha{unit(Q(6), p5)};
    long guard = relation_guard_precision(alpha, 10);
    CHECK_THROWS_AS(detect_log_relations(alpha, 10, guard - 1), precondition_error);
    CHECK_THROWS_AS(detect_log_relations({unit(Q(5), p5)}, 10, 512), precondition_error);
}

TEST_CASE("planted relations recovered across primes and shapes") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> bd(2, 80), ed(1, 6);
    int recovered = 0;
    for (int it = 0; it < 30; ++it) {
        Prime p(std::vector<long>{3, 5, 7}[it % 3]);
        // base unit of height <= log 100
        Q base(bd(rng));
        while (base.get_num() % p.value() == 0) base = Q(bd(rng));
        long e1 = ed(rng), e2 = ed(rng);
        // plant alpha = (base^{e1}, base^{e2}): relation (e2, -e1)/gcd
        std::vector<AlgebraicNumber> alpha{unit(pow_q(base, e1), p, 2048),
                                           unit(pow_q(base, e2), p, 2048)};
        auto res = detect_log_relations(alpha, 10, relation_guard_precision(alpha, 10) + 8);
        long g = std::gcd(e1, e2);
        ZVec expect{Z(e2 / g), Z(-e1 / g)};
        lat::canonicalize_sign(expect);
        REQUIRE(!res.lattice.empty());
        CHECK(lat::lattice_contains(res.lattice, expect));
        ++recovered;
    }
    CHECK(recovered == 30);
}

TEST_CASE("asg_find_subgroup on the worked example") {
    Prime p5(5);
    SplitGroup gm2(0, 2);
    Q a(6);
    GroupPoint gamma(gm2, {}, {unit(a, p5), unit(pow_q(a, 3), p5)});
    LieSubspace v(2, ZMat{{1, 3}});
    auto res = asg_find_subgroup(gm2, gamma, v, 10, 512);
    REQUIRE(res.kind == AsgResult::Kind::SubgroupFound);
    REQUIRE(res.subgroup.has_value());
    CHECK(res.subgroup->characters == ZMat{{3, -1}});
    CHECK(subgroup_membership(gamma, *res.subgroup));
    LieSubspace lie = res.subgroup->lie_algebra();
    CHECK(lie.dim() == 1);
    CHECK(lie.contains(ZVec{1, 3}));
}

TEST_CASE("asg_find_subgroup: torsion and full-space cases") {
    Prime p5(5);
    SplitGroup gm2(0, 2);
    GroupPoint torsion(gm2, {}, {unit(Q(-1), p5), unit(Q(1), p5)});
    auto r1 = asg_find_subgroup(gm2, torsion, LieSubspace(2, lat::identity(2)), 10, 512);
    CHECK(r1.kind == AsgResult::Kind::Torsion);
    CHECK(r1.torsion.order == 2);

    // independent units with V = Lie(G): H = G
    GroupPoint indep(gm2, {}, {unit(Q(6), p5), unit(Q(26), p5)});
    auto r2 = asg_find_subgroup(gm2, indep, LieSubspace(2, lat::identity(2)), 10, 512);
    REQUIRE(r2.kind == AsgResult::Kind::SubgroupFound);
    CHECK(r2.subgroup->characters.empty());
    CHECK(r2.subgroup->dim() == 2);

    // hypothesis violation: log(gamma) notin V
    LieSubspace w(2, ZMat{{1, 1}});
    CHECK_THROWS_AS(asg_find_subgroup(gm2, indep, w, 10, 512), precondition_error);
}

TEST_CASE("padic span checks") {
    Prime p5(5);
    LieSubspace v(2, ZMat{{1, 3}});
    PAdicNumber l = iwasawa_log(PAdicNumber::from_integer(p5, 6, 128));
    PAdicNumber l3 = l * PAdicNumber::from_integer(p5, 3, 200);
    CHECK(padic_in_span(v, p5, {l, l3}, 100));
    PAdicNumber other = iwasawa_log(PAdicNumber::from_integer(p5, 26, 128));
    CHECK(!padic_in_span(v, p5, {l, other}, 100));
}
