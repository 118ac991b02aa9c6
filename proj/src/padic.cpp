#include "pasg/padic.hpp"

#include <algorithm>

namespace pasg {

namespace {

Z mod_pow_prec(const Z& x, const Prime& p, long digits) {
    PASG_CHECK(digits >= 0, "negative digit count");
    Z m = p.power(digits);
    Z r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

PAdicNumber PAdicNumber::exact_zero(const Prime& p) {
    return PAdicNumber(p);
}

PAdicNumber PAdicNumber::zero_at_precision(const Prime& p, long abs_prec) {
    PAdicNumber x(p);
    x.kind_ = Kind::ZeroAtPrecision;
    x.abs_prec_ = abs_prec;
    return x;
}

PAdicNumber PAdicNumber::one(const Prime& p) {
    return from_integer(p, 1);
}

PAdicNumber PAdicNumber::make(const Prime& p, const Z& mantissa, long v, long abs_prec) {
    PAdicNumber x(p);
    Z m = mod_pow_prec(mantissa, p, abs_prec - v > 0 ? abs_prec - v : 0);
    if (m == 0) {
        if (abs_prec <= v) {
            // no digits visible at all; nothing is known below p^abs_prec
            x.kind_ = Kind::ZeroAtPrecision;
            x.abs_prec_ = abs_prec;
            return x;
        }
        x.kind_ = Kind::ZeroAtPrecision;
        x.abs_prec_ = abs_prec;
        return x;
    }
    long extra = valuation_z(m, p.value());
    v += extra;
    PASG_CHECK(abs_prec > v, "nonzero p-adic number needs abs_precision > valuation");
    x.kind_ = Kind::Nonzero;
    x.val_ = v;
    x.abs_prec_ = abs_prec;
    Z unit = m / p.power(extra);
    x.unit_ = mod_pow_prec(unit, p, abs_prec - v);
    PASG_CHECK(x.unit_ % p.value() != 0, "unit part divisible by p");
    return x;
}

PAdicNumber PAdicNumber::from_integer(const Prime& p, const Z& n, long rel_digits) {
    PASG_REQUIRE(rel_digits >= 1, "need at least one digit of precision");
    if (n == 0) return exact_zero(p);
    long v = valuation_z(n, p.value());
    return make(p, n, 0, v + rel_digits);
}

PAdicNumber PAdicNumber::from_rational(const Prime& p, const Q& x, long rel_digits) {
    PASG_REQUIRE(rel_digits >= 1, "need at least one digit of precision");
    if (x == 0) return exact_zero(p);
    const Z& num = x.get_num();
    const Z& den = x.get_den();
    long vn = valuation_z(num, p.value());
    long vd = valuation_z(den, p.value());
    long v = vn - vd;
    Z nu = num / p.power(vn);
    Z du = den / p.power(vd);
    Z mod = p.power(rel_digits);
    Z dinv;
    int ok = mpz_invert(dinv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t());
    PASG_CHECK(ok != 0, "denominator unit not invertible");
    return make(p, nu * dinv, v, v + rel_digits);
}

long PAdicNumber::valuation() const {
    if (kind_ == Kind::ExactZero) return kInfinity;
    PASG_REQUIRE(kind_ == Kind::Nonzero,
                 "valuation indeterminate: number is zero at its precision");
    return val_;
}

long PAdicNumber::valuation_lower_bound() const {
    switch (kind_) {
        case Kind::ExactZero: return kInfinity;
        case Kind::ZeroAtPrecision: return abs_prec_;
        default: return val_;
    }
}

const Z& PAdicNumber::unit_part() const {
    PASG_REQUIRE(kind_ == Kind::Nonzero, "no unit part: number not provably nonzero");
    return unit_;
}

Z PAdicNumber::integer_rep() const {
    if (kind_ != Kind::Nonzero) return Z(0);
    PASG_REQUIRE(val_ >= 0, "integer_rep needs non-negative valuation");
    return unit_ * prime_.power(val_);
}

PNorm PAdicNumber::norm() const {
    if (kind_ == Kind::ExactZero) return PNorm::zero(prime_);
    PASG_REQUIRE(kind_ == Kind::Nonzero,
                 "norm undetermined: number is zero at its precision but not exactly");
    return PNorm::power(prime_, -val_);
}

PNorm PAdicNumber::norm_upper_bound() const {
    if (kind_ == Kind::ExactZero) return PNorm::zero(prime_);
    return PNorm::power(prime_, -valuation_lower_bound());
}

PAdicNumber PAdicNumber::operator-() const {
    if (kind_ != Kind::Nonzero) return *this;
    Z m = prime_.power(abs_prec_ - val_);
    PAdicNumber x = *this;
    x.unit_ = m - unit_;
    return x;
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& o) const {
    require_same_prime(prime_, o.prime_);
    if (kind_ == Kind::ExactZero) return o;
    if (o.kind_ == Kind::ExactZero) return *this;

    if (kind_ == Kind::ZeroAtPrecision || o.kind_ == Kind::ZeroAtPrecision) {
        long na = (kind_ == Kind::ZeroAtPrecision) ? abs_prec_ : abs_prec_;
        long nb = (o.kind_ == Kind::ZeroAtPrecision) ? o.abs_prec_ : o.abs_prec_;
        long n = std::min(na, nb);
        // one side has visible digits below the other's zero horizon
        if (kind_ == Kind::Nonzero && val_ < n) return make(prime_, unit_, val_, n);
        if (o.kind_ == Kind::Nonzero && o.val_ < n) return make(prime_, o.unit_, o.val_, n);
        return zero_at_precision(prime_, n);
    }

    long n = std::min(abs_prec_, o.abs_prec_);
    long v = std::min(val_, o.val_);
    if (n <= v) return zero_at_precision(prime_, n);
    Z a = unit_ * prime_.power(val_ - v);
    Z b = o.unit_ * prime_.power(o.val_ - v);
    return make(prime_, a + b, v, n);
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& o) const {
    return *this + (-o);
}

PAdicNumber PAdicNumber::operator*(const PAdicNumber& o) const {
    require_same_prime(prime_, o.prime_);
    if (kind_ == Kind::ExactZero || o.kind_ == Kind::ExactZero) return exact_zero(prime_);
    if (kind_ == Kind::ZeroAtPrecision || o.kind_ == Kind::ZeroAtPrecision) {
        // product of the visibility horizons: x = O(p^N1), y = p^v2*u + ...
        long h1 = valuation_lower_bound();
        long h2 = o.valuation_lower_bound();
        PASG_CHECK(h1 != kInfinity && h2 != kInfinity, "unexpected exact zero");
        return zero_at_precision(prime_, h1 + h2);
    }
    long v = val_ + o.val_;
    long n = std::min(abs_prec_ + o.val_, o.abs_prec_ + val_);
    return make(prime_, unit_ * o.unit_, v, n);
}

PAdicNumber PAdicNumber::inv() const {
    PASG_REQUIRE(kind_ == Kind::Nonzero,
                 "division by a number not provably nonzero");
    long rel = abs_prec_ - val_;
    Z mod = prime_.power(rel);
    Z uinv;
    int ok = mpz_invert(uinv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
    PASG_CHECK(ok != 0, "unit not invertible");
    return make(prime_, uinv, -val_, -val_ + rel);
}

PAdicNumber PAdicNumber::pow(long e) const {
    if (e == 0) return one(prime_);
    if (e < 0) return inv().pow(-e);
    if (kind_ == Kind::ExactZero) return *this;
    if (kind_ == Kind::ZeroAtPrecision) {
        // x = O(p^N) => x^e = O(p^{eN}); clamp against overflow
        long horizon = (abs_prec_ > (1L << 40) / e) ? (1L << 40) : abs_prec_ * e;
        return zero_at_precision(prime_, horizon);
    }
    PAdicNumber base = *this;
    // seed with relative headroom so precision tracking is governed by the base
    PAdicNumber acc = make(prime_, 1, 0, abs_prec_ - val_ + 8);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

PAdicNumber PAdicNumber::shift(long k) const {
    if (kind_ == Kind::ExactZero) return *this;
    if (kind_ == Kind::ZeroAtPrecision) return zero_at_precision(prime_, abs_prec_ + k);
    return make(prime_, unit_, val_ + k, abs_prec_ + k);
}

PAdicNumber PAdicNumber::truncate(long abs_prec) const {
    if (kind_ == Kind::ExactZero) return zero_at_precision(prime_, abs_prec);
    long n = std::min(abs_precision(), abs_prec);
    if (kind_ == Kind::ZeroAtPrecision || val_ >= n) return zero_at_precision(prime_, n);
    return make(prime_, unit_, val_, n);
}

bool PAdicNumber::congruent(const PAdicNumber& o) const {
    PAdicNumber d = *this - o;
    return d.is_zero_at_precision();
}

std::string PAdicNumber::to_string() const {
    switch (kind_) {
        case Kind::ExactZero: return "0";
        case Kind::ZeroAtPrecision:
            return "O(" + prime_.value().get_str() + "^" + std::to_string(abs_prec_) + ")";
        default: break;
    }
    std::string s;
    if (val_ == 0) {
        s = unit_.get_str();
    } else {
        s = prime_.value().get_str() + "^" + std::to_string(val_) + "*" + unit_.get_str();
    }
    return s + " + O(" + prime_.value().get_str() + "^" + std::to_string(abs_prec_) + ")";
}

}  // namespace pasg
