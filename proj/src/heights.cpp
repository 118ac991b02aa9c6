#include "pasg/heights.hpp"

#include <mpfr.h>

#include <sstream>

namespace pasg {

namespace {

constexpr mpfr_prec_t kPrec = 384;

// Minimal directed-rounding interval, just enough for the Graeffe loop.
struct RIv {
    mpfr_t lo, hi;
    RIv() {
        mpfr_init2(lo, kPrec);
        mpfr_init2(hi, kPrec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    RIv(const RIv& o) : RIv() {
        mpfr_set(lo, o.lo, MPFR_RNDD);
        mpfr_set(hi, o.hi, MPFR_RNDU);
    }
    RIv& operator=(const RIv& o) {
        mpfr_set(lo, o.lo, MPFR_RNDD);
        mpfr_set(hi, o.hi, MPFR_RNDU);
        return *this;
    }
    ~RIv() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    void set_z(const Z& z) {
        mpfr_set_z(lo, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi, z.get_mpz_t(), MPFR_RNDU);
    }
};

RIv iv_add(const RIv& a, const RIv& b) {
    RIv r;
    mpfr_add(r.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_add(r.hi, a.hi, b.hi, MPFR_RNDU);
    return r;
}

RIv iv_mul(const RIv& a, const RIv& b) {
    RIv r;
    mpfr_t c, best_lo, best_hi;
    mpfr_init2(c, kPrec);
    mpfr_init2(best_lo, kPrec);
    mpfr_init2(best_hi, kPrec);
    bool first = true;
    const mpfr_t* as[2] = {&a.lo, &a.hi};
    const mpfr_t* bs[2] = {&b.lo, &b.hi};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(c, *as[i], *bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
            mpfr_mul(c, *as[i], *bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo, best_lo, MPFR_RNDD);
    mpfr_set(r.hi, best_hi, MPFR_RNDU);
    mpfr_clear(c);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

// |x| as an interval
RIv iv_abs(const RIv& a) {
    RIv r;
    if (mpfr_sgn(a.lo) >= 0) {
        mpfr_set(r.lo, a.lo, MPFR_RNDD);
        mpfr_set(r.hi, a.hi, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi) <= 0) {
        mpfr_neg(r.lo, a.hi, MPFR_RNDD);
        mpfr_neg(r.hi, a.lo, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo, 1);
        mpfr_neg(r.hi, a.lo, MPFR_RNDU);
        if (mpfr_cmp(a.hi, r.hi) > 0) mpfr_set(r.hi, a.hi, MPFR_RNDU);
    }
    return r;
}

Q mpfr_to_q(const mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Q result(q);
    mpq_clear(q);
    return result;
}

// certified enclosure of log(x) for an interval with lo > 0
void iv_log(const RIv& a, Q& out_lo, Q& out_hi) {
    PASG_CHECK(mpfr_sgn(a.lo) > 0, "log of non-positive enclosure");
    mpfr_t t;
    mpfr_init2(t, kPrec);
    mpfr_log(t, a.lo, MPFR_RNDD);
    out_lo = mpfr_to_q(t);
    mpfr_log(t, a.hi, MPFR_RNDU);
    out_hi = mpfr_to_q(t);
    mpfr_clear(t);
}

Z binom(long n, long k) {
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// log(2) enclosure, cached
void log2_enclosure(Q& lo, Q& hi) {
    static Q clo, chi;
    static bool ready = false;
    if (!ready) {
        mpfr_t t;
        mpfr_init2(t, kPrec);
        mpfr_const_log2(t, MPFR_RNDD);
        clo = mpfr_to_q(t);
        mpfr_const_log2(t, MPFR_RNDU);
        chi = mpfr_to_q(t);
        mpfr_clear(t);
        ready = true;
    }
    lo = clo;
    hi = chi;
}

// Certified enclosure of log M(f) for a nonzero integer polynomial, via
// Graeffe root-squaring with power-of-two renormalization:
//   M(g_{k+1}) = M(g_k)^2 * 2^{-e_k},   log M(f) = log M(g_k)/2^k + S_k log 2
// with S_k = sum e_j / 2^{j+1} exact. The sandwich at step k is
//   ||g||_inf / binom(d, d/2) <= M(g) <= ||g||_2.
void log_mahler_enclosure(const poly::ZPoly& f, Q& out_lo, Q& out_hi) {
    long d = poly::deg(f);
    PASG_CHECK(d >= 1, "Mahler measure needs positive degree");
    std::vector<RIv> g(d + 1);
    for (long i = 0; i <= d; ++i) g[i].set_z(f[i]);

    Q scale_log2(0);  // S_k, exact dyadic
    Q two_pow_k(1);   // 2^k
    Q log_binom_lo, log_binom_hi;
    {
        RIv b;
        b.set_z(binom(d, d / 2));
        iv_log(b, log_binom_lo, log_binom_hi);
    }
    Q l2lo, l2hi;
    log2_enclosure(l2lo, l2hi);

    const Q rel_tol(1, Z(1000000000000000));  // width < 1e-15 of the value
    const Q abs_floor(1, Z(1) << 64);         // termination safety near zero
    Q lo(0), hi(0);
    for (long k = 0; k <= 64; ++k) {
        // sandwich at the current iterate
        RIv linf, l2sq;
        for (long i = 0; i <= d; ++i) {
            RIv a = iv_abs(g[i]);
            if (i == 0) {
                linf = a;
            } else {
                // max as an interval: max of lowers, max of uppers
                if (mpfr_cmp(a.lo, linf.lo) > 0) mpfr_set(linf.lo, a.lo, MPFR_RNDD);
                if (mpfr_cmp(a.hi, linf.hi) > 0) mpfr_set(linf.hi, a.hi, MPFR_RNDU);
            }
            l2sq = iv_add(l2sq, iv_mul(a, a));
        }
        PASG_CHECK(mpfr_sgn(linf.lo) > 0, "interval widths swamped the Graeffe iterate");
        Q linf_log_lo, linf_log_hi;
        iv_log(linf, linf_log_lo, linf_log_hi);
        RIv l2;
        mpfr_sqrt(l2.lo, l2sq.lo, MPFR_RNDD);
        mpfr_sqrt(l2.hi, l2sq.hi, MPFR_RNDU);
        Q l2_log_lo, l2_log_hi;
        iv_log(l2, l2_log_lo, l2_log_hi);

        lo = (linf_log_lo - log_binom_hi) / two_pow_k + scale_log2 * l2lo;
        hi = l2_log_hi / two_pow_k + scale_log2 * l2hi;
        if (scale_log2 < 0) {
            lo = (linf_log_lo - log_binom_hi) / two_pow_k + scale_log2 * l2hi;
            hi = l2_log_hi / two_pow_k + scale_log2 * l2lo;
        }
        if (lo < 0) lo = 0;  // M(f) >= 1 for integer polynomials
        if (hi < lo) hi = lo;
        if (hi - lo <= lo * rel_tol || hi - lo <= abs_floor) break;

        // Graeffe step: even part of f(x) f(-x), then renormalize by 2^{-e}
        std::vector<RIv> prod(2 * d + 1);
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                RIv term = iv_mul(g[i], g[j]);
                if (j % 2) {
                    RIv neg;
                    mpfr_neg(neg.lo, term.hi, MPFR_RNDD);
                    mpfr_neg(neg.hi, term.lo, MPFR_RNDU);
                    term = neg;
                }
                prod[i + j] = iv_add(prod[i + j], term);
            }
        for (long i = 0; i <= d; ++i) g[i] = prod[2 * i];
        // renormalize so the largest coefficient magnitude sits in [1/2, 1)
        bool have_e = false;
        long e = 0;
        for (long i = 0; i <= d; ++i) {
            RIv a = iv_abs(g[i]);
            if (mpfr_sgn(a.hi) > 0) {
                long ei = static_cast<long>(mpfr_get_exp(a.hi));
                e = have_e ? std::max(e, ei) : ei;
                have_e = true;
            }
        }
        PASG_CHECK(have_e, "Graeffe iterate vanished");
        if (e != 0) {
            for (long i = 0; i <= d; ++i) {
                mpfr_mul_2si(g[i].lo, g[i].lo, -e, MPFR_RNDD);
                mpfr_mul_2si(g[i].hi, g[i].hi, -e, MPFR_RNDU);
            }
        }
        two_pow_k *= 2;
        scale_log2 += Q(e) / two_pow_k;
    }
    out_lo = lo;
    out_hi = hi;
}

}  // namespace

HeightValue::HeightValue(Q lo, Q hi, std::string form)
    : lo_(std::move(lo)), hi_(std::move(hi)), form_(std::move(form)) {
    lo_.canonicalize();
    hi_.canonicalize();
    PASG_CHECK(lo_ <= hi_, "inverted height enclosure");
    PASG_CHECK(lo_ >= 0, "heights are nonnegative");
}

double HeightValue::approx() const {
    return (lo_.get_d() + hi_.get_d()) / 2;
}

HeightValue HeightValue::operator+(const HeightValue& o) const {
    return HeightValue(lo_ + o.lo_, hi_ + o.hi_);
}

HeightValue HeightValue::scale(const Q& c) const {
    PASG_CHECK(c >= 0, "negative height scale");
    return HeightValue(lo_ * c, hi_ * c);
}

HeightValue HeightValue::max(const HeightValue& a, const HeightValue& b) {
    return HeightValue(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::string HeightValue::to_string() const {
    if (!form_.empty()) return form_;
    std::ostringstream os;
    os << approx() << " (certified width " << width().get_d() << ")";
    return os.str();
}

HeightValue log_of_integer(const Z& m, long num, long den) {
    PASG_REQUIRE(m >= 1 && den >= 1 && num >= 0, "log_of_integer needs m >= 1, num/den >= 0");
    if (m == 1 || num == 0) return HeightValue::exact_zero();
    RIv iv;
    iv.set_z(m);
    Q lo, hi;
    iv_log(iv, lo, hi);
    std::ostringstream form;
    if (num != den) {
        form << "(" << num << "/" << den << ")*";
    }
    form << "log(" << m.get_str() << ")";
    return HeightValue(lo * num / den, hi * num / den, form.str());
}

HeightValue log_of_rational(const Q& x) {
    PASG_REQUIRE(x >= 1, "log_of_rational expects x >= 1 for height use");
    if (x == 1) return HeightValue::exact_zero();
    HeightValue n = log_of_integer(x.get_num());
    HeightValue d = log_of_integer(x.get_den());
    return HeightValue(n.lower() - d.upper(), n.upper() - d.lower());
}

HeightValue weil_height_q(const Q& x) {
    if (x == 0) return HeightValue::exact_zero();
    Z m = std::max(Z(abs(x.get_num())), x.get_den());
    return log_of_integer(m);
}

HeightValue weil_height(const AlgebraicNumber& a) {
    if (a.is_rational()) return weil_height_q(a.rational_value());
    if (a.root_of_unity_order() > 0) return HeightValue::exact_zero();
    Q lo, hi;
    log_mahler_enclosure(a.minpoly(), lo, hi);
    long d = a.degree();
    return HeightValue(lo / d, hi / d);
}

HeightValue poly_height(const std::vector<Q>& coeffs) {
    bool all_zero = true;
    for (const Q& c : coeffs)
        if (c != 0) all_zero = false;
    PASG_REQUIRE(!all_zero && !coeffs.empty(), "zero polynomial has no projective height");
    Z den(1);
    for (const Q& c : coeffs) {
        Z l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = l;
    }
    std::vector<Z> ints;
    for (const Q& c : coeffs) {
        Q v = c * den;
        ints.push_back(v.get_num());
    }
    return poly_height(ints);
}

HeightValue poly_height(const std::vector<Z>& coeffs) {
    Z g(0), m(0);
    bool any = false;
    for (const Z& c : coeffs) {
        Z gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = gg;
        m = std::max(m, Z(abs(c)));
        if (c != 0) any = true;
    }
    PASG_REQUIRE(any, "zero polynomial has no projective height");
    return log_of_integer(m / g);
}

HeightValue poly_height(const std::vector<AlgebraicNumber>& coeffs) {
    std::vector<Q> qs;
    for (const AlgebraicNumber& c : coeffs) {
        PASG_REQUIRE(c.is_rational(),
                     "projective heights are implemented for rational coefficient vectors");
        qs.push_back(c.rational_value());
    }
    return poly_height(qs);
}

PNorm liouville_lower_bound(const AlgebraicNumber& a, const Prime& p) {
    PASG_REQUIRE(!a.is_zero(), "Liouville bound needs a nonzero number");
    HeightValue h = weil_height(a);
    Q dh = h.upper() * a.degree();
    if (dh == 0) return PNorm::one(p);  // roots of unity: |a|_p = 1
    // exponent q <= -d*h/log p, certified via a lower bound on log p
    RIv lp;
    lp.set_z(p.value());
    Q lp_lo, lp_hi;
    iv_log(lp, lp_lo, lp_hi);
    Q exponent = -(dh / lp_lo);
    return PNorm::power(p, exponent);
}

}  // namespace pasg
