#include "pasg/schedule.hpp"

#include "pasg/heights.hpp"

#include <mpfr.h>

#include <sstream>

namespace pasg {

namespace {

// directed enclosure of base^{num/den} for a nonnegative rational enclosure
void pow_enclosure(const Q& base_lo, const Q& base_hi, const Q& expo, Q& out_lo, Q& out_hi) {
    PASG_CHECK(base_lo >= 0, "negative base in schedule power");
    constexpr mpfr_prec_t prec = 256;
    mpfr_t b, e, r;
    mpfr_init2(b, prec);
    mpfr_init2(e, prec);
    mpfr_init2(r, prec);
    // bases are >= 1 after the max(1, .) normalizations, so the power is
    // monotone in both arguments and directed rounding of each is sound
    PASG_CHECK(base_lo >= 1, "schedule powers expect base >= 1");
    auto powq = [&](const Q& bq, mpfr_rnd_t rnd) {
        mpfr_set_q(b, bq.get_mpq_t(), rnd);
        mpfr_set_q(e, expo.get_mpq_t(), rnd);
        mpfr_pow(r, b, e, rnd);
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, r);
        Q res(q);
        mpq_clear(q);
        return res;
    };
    out_lo = powq(base_lo, MPFR_RNDD);
    out_hi = powq(base_hi, MPFR_RNDU);
    mpfr_clear(b);
    mpfr_clear(e);
    mpfr_clear(r);
}

long floor_from_enclosure(const Q& lo, const Q& hi, const char* what) {
    Z fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    PASG_REQUIRE(fl == fh, std::string("schedule floor straddles an integer for ") + what +
                               "; supply overrides");
    return to_long(fl);
}

}  // namespace

bool schedule_hypothesis(const ParameterSchedule& sched, long n, long k, long c1) {
    Z lhs = pow_z(Z(sched.d), static_cast<unsigned long>(n));
    Z rhs = Z(c1) * Z(sched.s0) * pow_z(Z(sched.t), static_cast<unsigned long>(k));
    return lhs >= rhs;
}

ParameterSchedule derive_schedule(const SplitGroup& g, const LieSubspace& v,
                                  const GroupPoint& gamma, const PipelineConstants& constants,
                                  const ScheduleOverrides& overrides) {
    long n = g.dim();
    long k = v.dim();
    PASG_REQUIRE(k >= 1, "V must be non-trivial");
    TorsionVerdict tv = is_torsion(gamma);
    PASG_REQUIRE(!tv.torsion, "schedule derivation requires a non-torsion point");

    PASG_REQUIRE(constants.c >= 1, "schedule constant c must be >= 1");
    ParameterSchedule sched;
    sched.c1_value = constants.c1(k);

    bool all_overridden = overrides.s0 && overrides.s && overrides.d && overrides.t;
    if (all_overridden) {
        sched.s0 = *overrides.s0;
        sched.s = *overrides.s;
        sched.d = *overrides.d;
        sched.t = *overrides.t;
        sched.from_overrides = true;
        sched.provenance = "manual overrides";
        PASG_REQUIRE(sched.s0 >= 1 && sched.t >= 1 && sched.d >= 1 && sched.s >= sched.s0 + 1,
                     "overridden schedule violates the parameter floors");
        sched.hypothesis_ok = schedule_hypothesis(sched, n, k, sched.c1_value);
        return sched;
    }

    // field degree: rational data only at this scale
    for (const AlgebraicNumber& a : gamma.multiplicative())
        PASG_REQUIRE(a.is_rational(), "formula schedules support rational points here");
    for (const AlgebraicNumber& a : gamma.additive())
        PASG_REQUIRE(a.is_rational(), "formula schedules support rational points here");
    long d_field = 1;
    PASG_REQUIRE(n > d_field,
                 "n <= d leaves the displayed schedule exponents undefined; "
                 "manual override required");

    // omega_L for the standard basis; b and h through enclosures
    DerivationData data = derivation_data(g, lat::identity(n));
    HeightValue b = v.entry_height_bound();
    HeightValue hg = gamma.height();
    HeightValue h = HeightValue::max(hg, HeightValue(Q(1), Q(1), "1"));
    // log h enclosure: log of a value >= 1
    Q log_h_lo, log_h_hi;
    {
        constexpr mpfr_prec_t prec = 256;
        mpfr_t x, r;
        mpfr_init2(x, prec);
        mpfr_init2(r, prec);
        mpfr_set_q(x, h.lower().get_mpq_t(), MPFR_RNDD);
        mpfr_log(r, x, MPFR_RNDD);
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, r);
        log_h_lo = Q(q);
        mpfr_set_q(x, h.upper().get_mpq_t(), MPFR_RNDU);
        mpfr_log(r, x, MPFR_RNDU);
        mpfr_get_q(q, r);
        log_h_hi = Q(q);
        mpq_clear(q);
        mpfr_clear(x);
        mpfr_clear(r);
        if (log_h_lo < 0) log_h_lo = 0;
        if (log_h_hi < 0) log_h_hi = 0;
    }

    // S0 = [c w_L b log h]
    Q s0_lo = constants.c * data.omega_l.lower() * b.lower() * log_h_lo;
    Q s0_hi = constants.c * data.omega_l.upper() * b.upper() * log_h_hi;
    long s0_raw = (s0_lo == 0 && s0_hi == 0) ? 0 : floor_from_enclosure(s0_lo, s0_hi, "S0");
    sched.s0 = std::max(1L, s0_raw);
    if (s0_raw < 1) {
        sched.degenerate = true;
    }

    // S = [c^2 S0]
    Q s_val = constants.c * constants.c * Q(sched.s0);
    Z s_floor;
    mpz_fdiv_q(s_floor.get_mpz_t(), s_val.get_num().get_mpz_t(), s_val.get_den().get_mpz_t());
    sched.s = std::max(sched.s0 + 1, to_long(s_floor));

    // D and T from the displayed exponents
    Q nd(n - d_field);
    Q exp_d_c = Q(5 * d_field + 1) / nd;
    Q exp_dt_s0 = Q(n + 1) / nd;
    Q exp_d_h = Q(d_field) / nd;
    Q exp_t_c = Q(4 * d_field + n + 1) / nd;
    Q exp_t_h = Q(n) / nd;

    auto formula = [&](const Q& ec, const Q& es0, const Q& eh, const char* what) {
        Q c_lo, c_hi, s0p_lo, s0p_hi, h_lo, h_hi;
        pow_enclosure(constants.c, constants.c, ec, c_lo, c_hi);
        pow_enclosure(Q(sched.s0), Q(sched.s0), es0, s0p_lo, s0p_hi);
        pow_enclosure(h.lower(), h.upper(), eh, h_lo, h_hi);
        Q lo = c_lo * s0p_lo * h_lo;
        Q hi = c_hi * s0p_hi * h_hi;
        return floor_from_enclosure(lo, hi, what);
    };
    long d_raw = formula(exp_d_c, exp_dt_s0, exp_d_h, "D");
    long t_raw = formula(exp_t_c, exp_dt_s0, exp_t_h, "T");
    sched.d = std::max(n + 1, d_raw);
    sched.t = std::max(1L, t_raw);
    if (d_raw < n + 1 || t_raw < 1) sched.degenerate = true;

    std::ostringstream prov;
    prov << "formulas with c = " << constants.c.get_str() << ", omega_L = "
         << data.omega_l.to_string() << ", floors" << (sched.degenerate ? " engaged" : " idle");
    sched.provenance = prov.str();
    sched.hypothesis_ok = schedule_hypothesis(sched, n, k, sched.c1_value);
    return sched;
}

}  // namespace pasg
