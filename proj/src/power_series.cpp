#include "pasg/power_series.hpp"

#include <algorithm>

namespace pasg {

namespace {

PNorm coeff_norm(const Prime& p, const Q& c) {
    if (c == 0) return PNorm::zero(p);
    return PNorm::power(p, Q(-valuation_q(c, p.value())));
}

}  // namespace

PowerSeries::PowerSeries(Prime p, std::vector<Q> coeffs, PNorm radius, PNorm tail_bound)
    : p_(std::move(p)), coeff_(std::move(coeffs)), radius_(std::move(radius)), tail_(std::move(tail_bound)) {
    PASG_REQUIRE(!radius_.is_zero(), "validity disk must have positive radius");
    if (coeff_.empty()) coeff_.push_back(Q(0));
}

PowerSeries PowerSeries::polynomial(const Prime& p, std::vector<Q> coeffs, const PNorm& radius) {
    return PowerSeries(p, std::move(coeffs), radius, PNorm::zero(p));
}

PNorm PowerSeries::tail_bound_at(const PNorm& r) const {
    PASG_REQUIRE(r <= radius_, "radius beyond certified validity disk");
    if (tail_.is_zero() || r == radius_) return tail_;
    // |a_n| r^n = |a_n| R^n (r/R)^n <= tail * (r/R)^{M+1} for n > M
    return tail_ * (r / radius_).pow(truncation_degree() + 1);
}

PowerSeries PowerSeries::derivative() const {
    std::vector<Q> d;
    for (size_t n = 1; n < coeff_.size(); ++n) d.push_back(coeff_[n] * static_cast<long>(n));
    if (d.empty()) d.push_back(Q(0));
    PNorm tail = tail_.is_zero() ? tail_ : tail_ / radius_;
    return PowerSeries(p_, std::move(d), radius_, tail);
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    require_same_prime(p_, o.p_);
    PNorm radius = std::min(radius_, o.radius_);
    std::vector<Q> c(std::max(coeff_.size(), o.coeff_.size()), Q(0));
    for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    // unequal truncation degrees: the shorter series' omitted range is covered
    // by its tail bound already; the longer one's explicit terms stay exact
    PNorm tail = max(tail_bound_at(radius), o.tail_bound_at(radius));
    return PowerSeries(p_, std::move(c), radius, tail);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    return *this + o.scale(Q(-1));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    require_same_prime(p_, o.p_);
    PNorm radius = std::min(radius_, o.radius_);
    std::vector<Q> c(coeff_.size() + o.coeff_.size() - 1, Q(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
        for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    PNorm ta = tail_bound_at(radius);
    PNorm tb = o.tail_bound_at(radius);
    PNorm fa = truncation_sup(*this, radius);
    PNorm fb = truncation_sup(o, radius);
    // (T_f+E_f)(T_g+E_g): cross terms bounded by sup * tail, plus E_f E_g
    PNorm tail = max(max(fa * tb, fb * ta), ta * tb);
    return PowerSeries(p_, std::move(c), radius, tail);
}

PowerSeries PowerSeries::scale(const Q& c) const {
    std::vector<Q> cs = coeff_;
    for (Q& a : cs) a *= c;
    PNorm tail = (c == 0) ? PNorm::zero(p_) : tail_ * coeff_norm(p_, c);
    return PowerSeries(p_, std::move(cs), radius_, tail);
}

PowerSeries::RationalEval PowerSeries::evaluate(const Q& x) const {
    PNorm ax = (x == 0) ? PNorm::zero(p_) : PNorm::power(p_, Q(-valuation_q(x, p_.value())));
    PASG_REQUIRE(ax <= radius_, "evaluation requested outside certified disk");
    Q v(0);
    for (size_t i = coeff_.size(); i-- > 0;) v = v * x + coeff_[i];
    return RationalEval{v, tail_bound_at(max(ax, PNorm::zero(p_)))};
}

PowerSeries::PAdicEval PowerSeries::evaluate(const PAdicNumber& x) const {
    require_same_prime(p_, x.prime());
    PNorm ax = x.norm_upper_bound();
    PASG_REQUIRE(ax <= radius_, "evaluation requested outside certified disk");
    long digits = x.abs_precision() == kInfinity ? 2 * kDefaultDigits
                                                 : x.abs_precision() + kDefaultDigits;
    PAdicNumber v = PAdicNumber::exact_zero(p_);
    for (size_t i = coeff_.size(); i-- > 0;) {
        PAdicNumber ci = coeff_[i] == 0 ? PAdicNumber::exact_zero(p_)
                                        : PAdicNumber::from_rational(p_, coeff_[i], digits);
        v = v * x + ci;
    }
    return PAdicEval{v, tail_bound_at(ax)};
}

PNorm truncation_sup(const PowerSeries& f, const PNorm& r) {
    PNorm best = PNorm::zero(f.p_);
    for (size_t n = 0; n < f.coeff_.size(); ++n) {
        if (f.coeff_[n] == 0) continue;
        PNorm term = coeff_norm(f.p_, f.coeff_[n]) * r.pow(static_cast<long>(n));
        best = max(best, term);
    }
    return best;
}

DiskNorm disk_sup_norm(const PowerSeries& f, const PNorm& r) {
    PASG_REQUIRE(r <= f.radius(), "radius beyond certified validity disk");
    PNorm trunc = truncation_sup(f, r);
    PNorm tail = f.tail_bound_at(r);
    PASG_REQUIRE(tail <= trunc,
                 "sup norm not determined by the truncation (tail bound dominates)");
    return DiskNorm{r, trunc};
}

PowerSeries exp_series(const Prime& p, long truncation) {
    long a = (p.value() == 2) ? 2 : 1;
    return exp_series(p, truncation, PNorm::power(p, -a));
}

PowerSeries exp_series(const Prime& p, long truncation, const PNorm& radius) {
    PASG_REQUIRE(truncation >= 1, "truncation must be >= 1");
    PASG_REQUIRE(radius < PNorm::exp_radius(p), "exp requires radius < r_p");
    std::vector<Q> c(truncation + 1);
    Q fact(1);
    c[0] = 1;
    for (long n = 1; n <= truncation; ++n) {
        fact *= n;
        c[n] = 1 / fact;
    }
    // |x^n/n!| <= p^{e n + (n-1)/(p-1)} on |x| <= p^e; slope e + 1/(p-1) < 0,
    // so the omitted terms peak at n = M+1
    const Q& e = radius.exponent();
    Q peak = e * (truncation + 1) + Q(truncation) / Q(p.value() - 1);
    return PowerSeries(p, std::move(c), radius, PNorm::power(p, peak));
}

PowerSeries log_series(const Prime& p, long truncation) {
    return log_series(p, truncation, PNorm::power(p, -1));
}

PowerSeries log_series(const Prime& p, long truncation, const PNorm& radius) {
    PASG_REQUIRE(truncation >= 1, "truncation must be >= 1");
    PASG_REQUIRE(radius < PNorm::one(p), "log(1+x) requires radius < 1");
    std::vector<Q> c(truncation + 1);
    c[0] = 0;
    for (long n = 1; n <= truncation; ++n) c[n] = Q((n % 2) ? 1 : -1, n);
    // |x^n/n| <= p^{-a n + v_p(n)}; maximize -a n + j over n > M with
    // v_p(n) = j (forcing n >= p^j). Terms decay once a*p^j(p-1) > 1.
    Q a = -radius.exponent();
    PASG_CHECK(a > 0, "log radius must be < 1");
    Q best = a * Q(-(truncation + 1));  // j = 0 candidate
    Z pj(1);
    for (long j = 1;; ++j) {
        pj *= p.value();
        Z floor_n = std::max(Z(truncation + 1), pj);
        Q cand = -a * Q(floor_n) + j;
        best = std::max(best, cand);
        if (pj > truncation + 1 && a * Q(pj) * Q(p.value() - 1) > 1) break;
        PASG_CHECK(j < 4096, "log tail-bound loop did not terminate");
    }
    return PowerSeries(p, std::move(c), radius, PNorm::power(p, best));
}

}  // namespace pasg
