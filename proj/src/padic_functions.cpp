#include "pasg/padic_functions.hpp"

namespace pasg {

namespace {

void require_unit(const PAdicNumber& x) {
    PASG_REQUIRE(x.provably_nonzero() && x.valuation() == 0, "non-unit input");
}

// Multiplicative order of the residue of u modulo p among divisors of p-1.
long residue_order(const Z& u, const Z& p) {
    Z r = u % p;
    if (r < 0) r += p;
    Z acc = r;
    long pm1 = to_long(p) - 1;
    for (long k = 1; k <= pm1; ++k) {
        if (acc == 1) return k;
        acc = (acc * r) % p;
    }
    throw internal_error("residue has no order dividing p-1");
}

}  // namespace

PAdicNumber teichmuller(const PAdicNumber& x) {
    require_unit(x);
    const Prime& p = x.prime();
    long n = x.abs_precision();
    if (p.value() == 2) return PAdicNumber::make(p, 1, 0, n);
    Z mod = p.power(n);
    Z y = x.integer_rep() % mod;
    // y <- y^p stabilizes at the Teichmuller lift, one digit per step
    for (long i = 0; i < n + 1; ++i) {
        Z y2;
        mpz_powm(y2.get_mpz_t(), y.get_mpz_t(), p.value().get_mpz_t(), mod.get_mpz_t());
        if (y2 == y) break;
        y = y2;
    }
    return PAdicNumber::make(p, y, 0, n);
}

UnitDecomposition unit_decomposition(const PAdicNumber& x) {
    require_unit(x);
    const Prime& p = x.prime();
    if (p.value() == 2) {
        PASG_REQUIRE(x.abs_precision() >= 2, "need two digits to split the sign in Q_2");
        bool minus = (x.integer_rep() % 4) == 3;
        PAdicNumber zeta = minus ? -PAdicNumber::make(p, 1, 0, x.abs_precision())
                                 : PAdicNumber::make(p, 1, 0, x.abs_precision());
        return UnitDecomposition{zeta, minus ? 2 : 1, x * zeta.inv()};
    }
    PAdicNumber zeta = teichmuller(x);
    long order = residue_order(zeta.unit_part(), p.value());
    return UnitDecomposition{zeta, order, x * zeta.inv()};
}

PAdicNumber padic_exp(const PAdicNumber& x) {
    const Prime& p = x.prime();
    if (x.is_exact_zero()) return PAdicNumber::one(p);
    PNorm rp = PNorm::exp_radius(p);
    PASG_REQUIRE(x.norm_upper_bound() < rp, "exp argument outside convergence disk");
    if (x.is_zero_at_precision()) {
        // exp(x) = 1 + O(p^N)
        return PAdicNumber::make(p, 1, 0, x.working_digits()) + x;
    }
    long v = x.valuation();
    long n_target = x.abs_precision();
    // v(x^n/n!) >= n(v - 1/(p-1)) + 1/(p-1); stop once the tail clears p^N
    long pm1 = to_long(p.value()) - 1;
    long n_stop = 2 + (n_target * pm1) / (v * pm1 - 1);
    PAdicNumber sum = PAdicNumber::make(p, 1, 0, n_target + 8);
    PAdicNumber term = PAdicNumber::make(p, 1, 0, n_target + 8);
    Z fact(1);
    for (long n = 1; n <= n_stop; ++n) {
        term = term * x;
        fact = fact * n;
        PAdicNumber f = PAdicNumber::from_rational(p, Q(1, fact), n_target + 8);
        sum = sum + term * f;
    }
    return sum.truncate(n_target);
}

PAdicNumber padic_log1p(const PAdicNumber& t) {
    const Prime& p = t.prime();
    if (t.is_exact_zero()) return t;
    PASG_REQUIRE(t.norm_upper_bound() < PNorm::one(p), "log(1+t) requires |t| < 1");
    if (t.is_zero_at_precision()) return t;  // log(1+t) = t + O(t^2)
    long n_target = t.abs_precision();
    // v(t^n/n) >= n - log_p(n): find the cutoff exactly
    long n_stop = n_target;
    while (n_stop - floor_log(Z(n_stop), p.value()) < n_target) ++n_stop;
    ++n_stop;
    PAdicNumber sum = PAdicNumber::exact_zero(p);
    PAdicNumber pw = PAdicNumber::make(p, 1, 0, n_target + 8);
    for (long n = 1; n <= n_stop; ++n) {
        pw = pw * t;
        PAdicNumber c = PAdicNumber::from_rational(p, Q((n % 2) ? 1 : -1, n), n_target + 8);
        sum = sum + pw * c;
    }
    return sum.truncate(n_target);
}

PAdicNumber iwasawa_log(const PAdicNumber& x) {
    UnitDecomposition d = unit_decomposition(x);
    PAdicNumber one = PAdicNumber::make(x.prime(), 1, 0, d.principal.working_digits());
    return padic_log1p(d.principal - one);
}

}  // namespace pasg
