#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace pasg {

using Z = mpz_class;
using Q = mpq_class;

// Input/precondition violations; the CLI maps these to exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariants; the CLI maps these to exit code 1.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define PASG_CHECK(cond, msg) \
    do { \
        if (!(cond)) throw ::pasg::internal_error(std::string("invariant failed: ") + (msg)); \
    } while (0)

#define PASG_REQUIRE(cond, msg) \
    do { \
        if (!(cond)) throw ::pasg::precondition_error(msg); \
    } while (0)

// Sentinel for "+infinity" precisions/valuations.
inline constexpr long kInfinity = std::numeric_limits<long>::max();

inline Z pow_z(const Z& base, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Z pow_ui(unsigned long base, unsigned long e) {
    Z r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Q pow_q(const Q& base, long e) {
    if (e == 0) return Q(1);
    Q b = base;
    if (e < 0) {
        PASG_REQUIRE(b != 0, "zero raised to a negative power");
        b = 1 / b;
        e = -e;
    }
    Q r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact p-adic valuation of a nonzero integer.
inline long valuation_z(const Z& n, const Z& p) {
    PASG_CHECK(n != 0, "valuation of zero integer");
    Z m = abs(n);
    long v = 0;
    Z q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

inline long valuation_q(const Q& x, const Z& p) {
    PASG_CHECK(x != 0, "valuation of zero rational");
    return valuation_z(x.get_num(), p) - valuation_z(x.get_den(), p);
}

inline long to_long(const Z& n) {
    PASG_CHECK(n.fits_slong_p(), "integer out of long range");
    return n.get_si();
}

// floor(log_p(n)) for n >= 1.
inline long floor_log(const Z& n, const Z& p) {
    PASG_CHECK(n >= 1, "floor_log needs n >= 1");
    long k = 0;
    Z pw = p;
    while (pw <= n) {
        pw *= p;
        ++k;
    }
    return k;
}

inline std::string q_to_string(const Q& q) {
    return q.get_str();
}

}  // namespace pasg
