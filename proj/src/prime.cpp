#include "pasg/prime.hpp"

namespace pasg {

namespace {

bool is_prime_exact(const Z& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    Z d(3);
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

}  // namespace

Prime::Prime(const Z& p) : p_(p) {
    if (p.fits_slong_p() && p < Z(1) << 40) {
        PASG_REQUIRE(is_prime_exact(p), "not a prime: " + p.get_str());
    } else {
        PASG_REQUIRE(mpz_probab_prime_p(p.get_mpz_t(), 64) > 0,
                     "not a prime: " + p.get_str());
    }
}

Z Prime::power(long k) const {
    PASG_CHECK(k >= 0, "negative prime power exponent");
    return pow_z(p_, static_cast<unsigned long>(k));
}

}  // namespace pasg
