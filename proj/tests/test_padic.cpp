#include "doctest.h"

#include "pasg/ball.hpp"
#include "pasg/padic.hpp"

#include <random>

using namespace pasg;

namespace {

PAdicNumber random_nonzero(std::mt19937_64& rng, const Prime& p, long digits = 24) {
    std::uniform_int_distribution<long> vdist(-3, 6);
    Z mant = 0;
    Z pz = p.value();
    std::uniform_int_distribution<long> ddist(0, p.value_long() - 1);
    for (long i = 0; i < digits; ++i) mant = mant * pz + ddist(rng);
    if (mant == 0) mant = 1;
    return PAdicNumber::make(p, mant, vdist(rng), vdist(rng) + digits);
}

}  // namespace

TEST_CASE("addition: basic and ultrametric equality cases") {
    Prime p3(3);
    PAdicNumber x = PAdicNumber::from_integer(p3, 3);
    PAdicNumber y = PAdicNumber::from_integer(p3, 6);
    PAdicNumber s = x + y;
    CHECK(s.valuation() == 2);
    CHECK(s.integer_rep() % 27 == 9);

    // x + (-x) vanishes up to the tracked precision
    PAdicNumber z = x + (-x);
    CHECK(z.is_zero_at_precision());
    CHECK(!z.is_exact_zero());
    CHECK(z.valuation_lower_bound() == x.abs_precision());

    // v(x)=1, v(y)=2 -> v(x+y)=1
    PAdicNumber a = PAdicNumber::from_integer(p3, 3);
    PAdicNumber b = PAdicNumber::from_integer(p3, 9);
    CHECK((a + b).valuation() == 1);
}

TEST_CASE("prime mismatch rejected") {
    PAdicNumber x = PAdicNumber::from_integer(Prime(3), 1);
    PAdicNumber y = PAdicNumber::from_integer(Prime(5), 1);
    CHECK_THROWS_AS(x + y, precondition_error);
}

TEST_CASE("mul, inv, pow") {
    Prime p5(5), p7(7);
    PAdicNumber five = PAdicNumber::from_integer(p5, 5);
    PAdicNumber i = five.inv();
    CHECK(i.valuation() == -1);
    CHECK(i.unit_part() == 1);

    PAdicNumber u = PAdicNumber::from_integer(p5, 6);
    PAdicNumber one = u.pow(0);
    CHECK(one.provably_nonzero());
    CHECK(one.valuation() == 0);
    CHECK(one.unit_part() == 1);

    PAdicNumber m = PAdicNumber::from_integer(p7, 7) * PAdicNumber::from_integer(p7, 49);
    CHECK(m.valuation() == 3);

    PAdicNumber zp = PAdicNumber::zero_at_precision(p5, 10);
    CHECK_THROWS_AS(zp.inv(), precondition_error);
}

TEST_CASE("norms") {
    Prime p5(5), p2(2);
    CHECK(PAdicNumber::from_integer(p5, 5).norm() == PNorm::power(p5, -1));
    CHECK(PAdicNumber::from_integer(p5, 6).norm() == PNorm::one(p5));
    // r_p at p=2 equals 2^{-1}
    CHECK(PNorm::exp_radius(p2) == PNorm::power(p2, -1));
    CHECK(PAdicNumber::exact_zero(p5).norm().is_zero());
    CHECK_THROWS_AS(PAdicNumber::zero_at_precision(p5, 4).norm(), precondition_error);
}

TEST_CASE("ball membership") {
    Prime p3(3), p2(2);
    std::vector<PAdicNumber> v{PAdicNumber::from_integer(p3, 3)};
    CHECK(in_ball(v, PNorm::power(p3, Q(-1, 2)), true));

    std::vector<PAdicNumber> w{PAdicNumber::from_integer(p3, 1)};
    CHECK(!in_ball(w, PNorm::one(p3), true));
    CHECK(in_ball(w, PNorm::one(p3), false));

    // |2|_2 = r_2 exactly: strict membership fails on the boundary
    std::vector<PAdicNumber> b{PAdicNumber::from_integer(p2, 2)};
    CHECK(!in_ball(b, PNorm::exp_radius(p2), true));
}

TEST_CASE("ultrametric and multiplicativity on random samples") {
    std::mt19937_64 rng(12345);
    for (long pl : {2L, 3L, 5L, 7L, 11L}) {
        Prime p(pl);
        for (int it = 0; it < 200; ++it) {
            PAdicNumber x = random_nonzero(rng, p);
            PAdicNumber y = random_nonzero(rng, p);
            PAdicNumber s = x + y;
            PNorm bound = max(x.norm(), y.norm());
            CHECK(s.norm_upper_bound() <= bound);
            if (x.norm() != y.norm()) {
                CHECK(s.provably_nonzero());
                CHECK(s.norm() == bound);
            }
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("precision soundness: chains agree across working precisions") {
    std::mt19937_64 rng(99);
    Prime p(5);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<long> cdist(-50, 50);
        Q a(cdist(rng), 1 + std::abs(cdist(rng)));
        Q b(cdist(rng), 1 + std::abs(cdist(rng)));
        if (a == 0 || b == 0) continue;
        auto chain = [&](long digits) {
            PAdicNumber x = PAdicNumber::from_rational(p, a, digits);
            PAdicNumber y = PAdicNumber::from_rational(p, b, digits);
            return x * y + x - y.pow(3);
        };
        PAdicNumber lo = chain(20);
        PAdicNumber hi = chain(60);
        CHECK(lo.congruent(hi));
    }
}

TEST_CASE("norm comparisons are total and exact") {
    Prime p(3);
    PNorm a = PNorm::power(p, Q(-1, 2));
    PNorm b = PNorm::power(p, -1);
    CHECK(b < a);
    CHECK(a < PNorm::one(p));
    CHECK(PNorm::zero(p) < b);
    CHECK(a * b == PNorm::power(p, Q(-3, 2)));
    CHECK(a.pow(2) == b);
}
