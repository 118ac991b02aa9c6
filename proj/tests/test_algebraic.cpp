#include "doctest.h"

#include "pasg/algebraic.hpp"
#include "pasg/heights.hpp"
#include "pasg/intpoly.hpp"
#include "pasg/number_field.hpp"

#include <random>

using namespace pasg;
using poly::QPoly;
using poly::ZPoly;

TEST_CASE("integer polynomial factorization") {
    auto f1 = poly::factor(ZPoly{-1, 0, 1});  // x^2 - 1
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].first == ZPoly{-1, 1});
    CHECK(f1[1].first == ZPoly{1, 1});

    auto f2 = poly::factor(ZPoly{-4, 0, 0, 0, 1});  // x^4 - 4
    REQUIRE(f2.size() == 2);
    CHECK(poly::mul(f2[0].first, f2[1].first) == ZPoly{-4, 0, 0, 0, 1});

    CHECK(poly::is_irreducible(ZPoly{-2, 0, 1}));
    CHECK(!poly::is_irreducible(ZPoly{-1, 0, 1}));
    CHECK(poly::is_irreducible(ZPoly{1, 1, 1, 1, 1, 1, 1}));  // Phi_7

    // multiplicities: (x-1)^2 (x+2)
    ZPoly g = poly::mul(poly::mul(ZPoly{-1, 1}, ZPoly{-1, 1}), ZPoly{2, 1});
    auto f3 = poly::factor(g);
    REQUIRE(f3.size() == 2);
    for (auto& [h, m] : f3) {
        if (h == ZPoly{-1, 1}) CHECK(m == 2);
        if (h == ZPoly{2, 1}) CHECK(m == 1);
    }
}

TEST_CASE("factorization on random products of small irreducibles") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> cd(-6, 6);
    std::vector<ZPoly> pool = {
        {-2, 0, 1}, {1, 1, 1}, {3, 1}, {-1, 3}, {1, -1, 0, 1}, {2, 0, 0, 1}, {-1, 1}, {7, 2, 1}};
    for (int it = 0; it < 30; ++it) {
        ZPoly f{1};
        int parts = 2 + static_cast<int>(rng() % 3);
        long expect_deg = 0;
        for (int i = 0; i < parts; ++i) {
            const ZPoly& g = pool[rng() % pool.size()];
            f = poly::mul(f, g);
            expect_deg += poly::deg(g);
        }
        auto fac = poly::factor(f);
        ZPoly re{1};
        long got_deg = 0;
        for (auto& [h, m] : fac) {
            CHECK(poly::is_irreducible(h));
            for (int j = 0; j < m; ++j) {
                re = poly::mul(re, h);
                got_deg += poly::deg(h);
            }
        }
        CHECK(got_deg == expect_deg);
        CHECK(poly::primitive_part(re) == poly::primitive_part(f));
    }
}

TEST_CASE("root of unity orders from minimal polynomials") {
    CHECK(poly::root_of_unity_order(ZPoly{-1, 1}) == 1);
    CHECK(poly::root_of_unity_order(ZPoly{1, 1}) == 2);
    CHECK(poly::root_of_unity_order(ZPoly{1, 1, 1}) == 3);
    CHECK(poly::root_of_unity_order(ZPoly{1, 0, 1}) == 4);
    CHECK(poly::root_of_unity_order(ZPoly{1, -1, 1}) == 6);
    CHECK(poly::root_of_unity_order(ZPoly{-2, 1}) == 0);
    CHECK(poly::root_of_unity_order(ZPoly{-2, 0, 1}) == 0);
}

TEST_CASE("number field arithmetic in Q(sqrt 2)") {
    NumberField K(ZPoly{-2, 0, 1});
    QPoly theta{Q(0), Q(1)};
    CHECK(K.minimal_polynomial(theta) == ZPoly{-2, 0, 1});
    // theta^2 = 2
    CHECK(K.mul(theta, theta) == QPoly{Q(2)});
    // 1/theta = theta/2
    CHECK(K.inv(theta) == QPoly{Q(0), Q(1, 2)});
    // minimal polynomial of 1 + theta: x^2 - 2x - 1
    CHECK(K.minimal_polynomial(QPoly{Q(1), Q(1)}) == ZPoly{-1, -2, 1});
    // rational element has degree-1 minimal polynomial
    CHECK(K.minimal_polynomial(QPoly{Q(3, 2)}) == ZPoly{-3, 2});
}

TEST_CASE("hensel embedding") {
    Prime p7(7), p5(5);
    AlgebraicNumber five = AlgebraicNumber::hensel_embed(ZPoly{-5, 1}, p7, 5);
    CHECK(five.is_rational());
    CHECK(five.rational_value() == 5);

    AlgebraicNumber r2 = AlgebraicNumber::hensel_embed(ZPoly{-2, 0, 1}, p7, 3);
    CHECK(r2.degree() == 2);
    CHECK(r2.padic_root().integer_rep() % 7 == 3);
    // root^2 = 2 to full precision
    PAdicNumber sq = r2.padic_root() * r2.padic_root();
    CHECK(sq.congruent(PAdicNumber::from_integer(p7, 2)));

    // 2 is not a QR mod 5: every seed fails
    for (long s = 0; s < 5; ++s) {
        CHECK_THROWS_AS(AlgebraicNumber::hensel_embed(ZPoly{-2, 0, 1}, p5, s),
                        precondition_error);
    }

    // non-simple seed rejected: x^2 - 7 at p=7, seed 0
    CHECK_THROWS_AS(AlgebraicNumber::hensel_embed(ZPoly{-7, 0, 1}, Prime(7), 0),
                    precondition_error);
}

TEST_CASE("weil heights") {
    HeightValue h_half = weil_height(AlgebraicNumber::from_rational(Q(1, 2)));
    HeightValue l2 = log_of_integer(2);
    CHECK(h_half.lower() <= l2.upper());
    CHECK(h_half.upper() >= l2.lower());

    // roots of unity have height exactly 0
    AlgebraicNumber zeta6(ZPoly{1, -1, 1}, std::nullopt, true);
    CHECK(weil_height(zeta6).upper() == 0);

    // h(sqrt 2) = (1/2) log 2, via the Graeffe enclosure
    AlgebraicNumber r2(ZPoly{-2, 0, 1}, std::nullopt, true);
    HeightValue h = weil_height(r2);
    HeightValue expect = log_of_integer(2, 1, 2);
    CHECK(h.lower() <= expect.upper());
    CHECK(h.upper() >= expect.lower());
    CHECK(h.width() <= Q(1, Z(1) << 40));
}

TEST_CASE("height of powers and products") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> nd(2, 9), dd(2, 9);
    for (int it = 0; it < 20; ++it) {
        Q a(nd(rng), dd(rng));
        AlgebraicNumber x = AlgebraicNumber::from_rational(a);
        for (long n : {2L, 3L, 5L}) {
            HeightValue hn = weil_height(x.pow(n));
            HeightValue hs = weil_height(x).scale(Q(n));
            CHECK(hn.lower() <= hs.upper() + Q(1, 1000000));
            CHECK(hn.upper() + Q(1, 1000000) >= hs.lower());
        }
        Q b(nd(rng), dd(rng));
        AlgebraicNumber y = AlgebraicNumber::from_rational(b);
        HeightValue hxy = weil_height(x.mul(y));
        HeightValue sum = weil_height(x) + weil_height(y);
        CHECK(hxy.lower() <= sum.upper() + Q(1, 1000000));
    }
    // an irrational case: h(sqrt2^3) = 3 h(sqrt2)
    AlgebraicNumber r2(ZPoly{-2, 0, 1}, std::nullopt, false);
    HeightValue h3 = weil_height(r2.pow(3));
    HeightValue hs = weil_height(r2).scale(Q(3));
    CHECK(h3.lower() <= hs.upper());
    CHECK(h3.upper() >= hs.lower());
}

TEST_CASE("polynomial heights") {
    CHECK(poly_height(std::vector<Q>{Q(1), Q(1)}).upper() == 0);
    // gcd removed: (2,4) reduces to (1,2), height log 2
    HeightValue h24 = poly_height(std::vector<Q>{Q(2), Q(4)});
    HeightValue l2 = log_of_integer(2);
    CHECK(h24.lower() <= l2.upper());
    CHECK(h24.upper() >= l2.lower());
    HeightValue h13 = poly_height(std::vector<Q>{Q(1), Q(3)});
    HeightValue l3 = log_of_integer(3);
    CHECK(h13.lower() <= l3.upper());
    CHECK(h13.upper() >= l3.lower());
    CHECK_THROWS_AS(poly_height(std::vector<Q>{Q(0), Q(0)}), precondition_error);
}

TEST_CASE("product formula for sampled rationals") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(1, 400);
    for (int it = 0; it < 50; ++it) {
        Q x(d(rng), d(rng));
        // sum over finite places of v_p(x) log p telescopes against log|x|
        // exactly when |num/den| = prod p^{v_p}: check multiplicatively
        Z num = abs(x.get_num()), den = x.get_den();
        Z reconstructed_num(1), reconstructed_den(1);
        Z m = num * den;
        for (Z p(2); p * p <= m; p = (p == 2) ? Z(3) : p + 2) {
            if (m % p != 0) continue;
            long v = valuation_q(x, p);
            if (v > 0) reconstructed_num *= pow_z(p, v);
            if (v < 0) reconstructed_den *= pow_z(p, -v);
            while (m % p == 0) m /= p;
        }
        if (m > 1) {
            long v = valuation_q(x, m);
            if (v > 0) reconstructed_num *= pow_z(m, v);
            if (v < 0) reconstructed_den *= pow_z(m, -v);
        }
        CHECK(reconstructed_num == num / gcd(num, den));
        CHECK(reconstructed_den == den / gcd(num, den));
    }
}

TEST_CASE("liouville lower bound") {
    Prime p5(5);
    AlgebraicNumber five = AlgebraicNumber::from_rational(Q(5), p5);
    PNorm b = liouville_lower_bound(five, p5);
    CHECK(five.padic_root().norm() >= b);
    CHECK(b.exponent() <= Q(-1));
    CHECK(b.exponent() >= Q(-1) - Q(1, 1000000));

    Prime p2(2);
    AlgebraicNumber half = AlgebraicNumber::from_rational(Q(1, 2), p2);
    CHECK(half.padic_root().norm() >= liouville_lower_bound(half, p2));

    AlgebraicNumber r2 = AlgebraicNumber::hensel_embed(poly::ZPoly{-2, 0, 1}, Prime(7), 3);
    PNorm br = liouville_lower_bound(r2, Prime(7));
    CHECK(r2.padic_root().norm() == PNorm::one(Prime(7)));
    CHECK(r2.padic_root().norm() >= br);

    CHECK_THROWS_AS(liouville_lower_bound(AlgebraicNumber::from_rational(Q(0)), p5),
                    precondition_error);
}

TEST_CASE("liouville on a randomized suite of algebraic numbers") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> cd(-50, 50);
    int done = 0;
    for (long pl : {3L, 5L, 7L}) {
        Prime p(pl);
        while (done % 40 != 39) {
            ++done;
            // random polynomial of degree <= 4; keep the irreducible ones that
            // have a simple root mod p
            long deg = 2 + static_cast<long>(rng() % 3);
            ZPoly f(deg + 1);
            for (long i = 0; i <= deg; ++i) f[i] = cd(rng);
            if (f[deg] == 0) f[deg] = 1;
            f = poly::primitive_part(f);
            if (poly::deg(f) != deg || !poly::is_irreducible(f)) continue;
            for (long seed = 0; seed < pl; ++seed) {
                Z fv = poly::eval(f, seed) % pl;
                Z dv = poly::eval(poly::derivative(f), seed) % pl;
                if (fv == 0 && dv != 0) {
                    AlgebraicNumber a = AlgebraicNumber::hensel_embed(f, p, seed);
                    CHECK(a.padic_root().norm() >= liouville_lower_bound(a, p));
                    break;
                }
            }
        }
        ++done;
    }
}

TEST_CASE("algebraic arithmetic with selectors") {
    Prime p7(7);
    AlgebraicNumber r2 = AlgebraicNumber::hensel_embed(ZPoly{-2, 0, 1}, p7, 3);
    AlgebraicNumber sum = r2.add(AlgebraicNumber::from_rational(Q(1), p7));
    CHECK(sum.minpoly() == ZPoly{-1, -2, 1});  // x^2 - 2x - 1
    AlgebraicNumber prod = r2.mul(r2);
    CHECK(prod.is_rational());
    CHECK(prod.rational_value() == 2);
    // (sqrt2 + 1)(sqrt2 - 1) = 1
    AlgebraicNumber other = r2.add(AlgebraicNumber::from_rational(Q(-1), p7));
    CHECK(sum.mul(other).is_one());
    CHECK(r2.pow(2).rational_value() == 2);
    CHECK(r2.pow(3).degree() == 2);
    CHECK(r2.equals(r2));
    CHECK(!r2.equals(r2.negate()));
    CHECK(r2.root_of_unity_order() == 0);
    AlgebraicNumber m1 = AlgebraicNumber::from_rational(Q(-1));
    CHECK(m1.root_of_unity_order() == 2);
}
