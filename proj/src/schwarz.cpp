#include "pasg/schwarz.hpp"
#include <functional>

namespace pasg {

namespace {

// Enclosure of |f(x)| from a precision-tracked truncation value and a tail bound.
NormInterval value_norm(const PAdicNumber& v, const PNorm& tail) {
    const Prime& p = v.prime();
    if (v.is_exact_zero()) return {PNorm::zero(p), tail};
    if (v.is_zero_at_precision()) return {PNorm::zero(p), max(v.norm_upper_bound(), tail)};
    PNorm n = v.norm();
    if (n > tail) return {n, n};  // truncation dominates: exact by ultrametricity
    return {PNorm::zero(p), tail};
}

NormInterval value_norm(const Prime& p, const Q& v, const PNorm& tail) {
    PNorm n = (v == 0) ? PNorm::zero(p) : PNorm::power(p, Q(-valuation_q(v, p.value())));
    if (n > tail) return {n, n};
    if (v == 0 && tail.is_zero()) return {PNorm::zero(p), PNorm::zero(p)};
    return {PNorm::zero(p), max(n, tail)};
}

NormInterval mul(const NormInterval& a, const PNorm& c) {
    return {a.lo * c, a.hi * c};
}

struct PointSet {
    // norm upper bound per point, exactness of pairwise distances,
    // and per-derivative norm enclosures
    std::vector<PNorm> bounds;
    PNorm delta;
    PointSet(const Prime& p) : delta(PNorm::one(p)) {}
};

SchwarzReport schwarz_core(const PowerSeries& f, const PNorm& s, const PNorm& t, long q,
                           size_t npts, const PNorm& delta,
                           const std::function<NormInterval(const PowerSeries&, size_t)>& eval) {
    const Prime& p = f.prime();
    SchwarzReport rep(p);
    rep.s = s;
    rep.t = t;
    rep.q = q;
    rep.l = static_cast<long>(npts);
    PASG_REQUIRE(delta <= PNorm::one(p), "delta > 1 is outside the lemma's hypotheses");
    rep.delta = delta;

    NormInterval mu{PNorm::zero(p), PNorm::zero(p)};
    PowerSeries der = f;
    for (long m = 0; m < q; ++m) {
        for (size_t i = 0; i < npts; ++i) {
            NormInterval n = eval(der, i);
            mu.lo = max(mu.lo, n.lo);
            mu.hi = max(mu.hi, n.hi);
        }
        if (m + 1 < q) der = der.derivative();
    }
    rep.mu = mu;

    auto sup_interval = [&](const PNorm& r) -> NormInterval {
        PNorm trunc = truncation_sup(f, r);
        PNorm tail = f.tail_bound_at(r);
        if (tail <= trunc) return {trunc, trunc};
        return {trunc, tail};
    };
    rep.lhs = sup_interval(s);
    NormInterval ft = sup_interval(t);

    long ql = q * rep.l;
    rep.rhs_growth = mul(ft, (s / t).pow(ql));
    PNorm point_factor = (s / delta).pow(ql - 1) * PNorm::exp_radius(p).pow(-(q - 1));
    rep.rhs_points = mul(mu, point_factor);

    PNorm rhs_lo = max(rep.rhs_growth.lo, rep.rhs_points.lo);
    PNorm rhs_hi = max(rep.rhs_growth.hi, rep.rhs_points.hi);
    if (rep.lhs.hi <= rhs_lo) {
        rep.verdict = SchwarzVerdict::Holds;
    } else if (rep.lhs.lo > rhs_hi) {
        rep.verdict = SchwarzVerdict::Violated;
    } else {
        rep.verdict = SchwarzVerdict::Indeterminate;
    }
    return rep;
}

void check_shape(const PowerSeries& f, const PNorm& s, const PNorm& t, long q, size_t l) {
    PASG_REQUIRE(q >= 1, "q must be a positive integer");
    PASG_REQUIRE(!s.is_zero() && s <= t, "need radii t >= s > 0");
    PASG_REQUIRE(t <= f.radius(), "f is not certified on the closed ball of radius t");
    PASG_REQUIRE(l >= 2, "Gamma must contain at least two points");
}

}  // namespace

SchwarzReport schwarz_check(const PowerSeries& f, const PNorm& s, const PNorm& t, long q,
                            const std::vector<PAdicNumber>& gamma) {
    const Prime& p = f.prime();
    check_shape(f, s, t, q, gamma.size());
    for (const PAdicNumber& g : gamma) {
        require_same_prime(p, g.prime());
        PASG_REQUIRE(g.norm_upper_bound() <= s, "Gamma point outside the closed ball of radius s");
    }
    PNorm delta = PNorm::one(p);
    bool first = true;
    for (size_t i = 0; i < gamma.size(); ++i)
        for (size_t j = i + 1; j < gamma.size(); ++j) {
            PAdicNumber d = gamma[i] - gamma[j];
            PASG_REQUIRE(d.provably_nonzero(), "Gamma points not separated at this precision");
            delta = first ? d.norm() : std::min(delta, d.norm());
            first = false;
        }
    auto eval = [&gamma](const PowerSeries& g, size_t i) {
        auto ev = g.evaluate(gamma[i]);
        return value_norm(ev.truncation_value, ev.tail);
    };
    return schwarz_core(f, s, t, q, gamma.size(), delta, eval);
}

SchwarzReport schwarz_check(const PowerSeries& f, const PNorm& s, const PNorm& t, long q,
                            const std::vector<Q>& gamma) {
    const Prime& p = f.prime();
    check_shape(f, s, t, q, gamma.size());
    for (const Q& g : gamma) {
        PNorm n = (g == 0) ? PNorm::zero(p) : PNorm::power(p, Q(-valuation_q(g, p.value())));
        PASG_REQUIRE(n <= s, "Gamma point outside the closed ball of radius s");
    }
    PNorm delta = PNorm::one(p);
    bool first = true;
    for (size_t i = 0; i < gamma.size(); ++i)
        for (size_t j = i + 1; j < gamma.size(); ++j) {
            Q d = gamma[i] - gamma[j];
            PASG_REQUIRE(d != 0, "Gamma points must be pairwise distinct");
            PNorm nd = PNorm::power(p, Q(-valuation_q(d, p.value())));
            delta = first ? nd : std::min(delta, nd);
            first = false;
        }
    auto eval = [&gamma, &p](const PowerSeries& g, size_t i) {
        auto ev = g.evaluate(gamma[i]);
        return value_norm(p, ev.truncation_value, ev.tail);
    };
    return schwarz_core(f, s, t, q, gamma.size(), delta, eval);
}

}  // namespace pasg
