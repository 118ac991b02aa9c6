#pragma once

#include "pasg/pnorm.hpp"
#include "pasg/prime.hpp"
#include "pasg/util.hpp"

#include <string>

namespace pasg {

// Default relative working precision, in p-adic digits.
inline constexpr long kDefaultDigits = 64;

// An element of Q_p known to a certified absolute precision.
//
// Three states:
//   - exact zero:          the literal 0, known to infinite precision;
//   - zero at precision N: all digits below p^N vanish, nothing is known
//     beyond (the valuation is only known to be >= N);
//   - nonzero:             x = p^v * u with exact valuation v, unit part u
//     known modulo p^{N-v}, N > v.
//
// Every arithmetic operation propagates the tightest provable absolute
// precision; nothing here is best-effort.
class PAdicNumber {
public:
    static PAdicNumber exact_zero(const Prime& p);
    static PAdicNumber zero_at_precision(const Prime& p, long abs_prec);
    static PAdicNumber one(const Prime& p);

    // p^v * unit known mod p^{abs_prec}; unit may carry extra powers of p,
    // which are folded into the valuation.
    static PAdicNumber make(const Prime& p, const Z& mantissa, long v, long abs_prec);

    // Exact rational input, known to `rel_digits` digits beyond its valuation.
    static PAdicNumber from_integer(const Prime& p, const Z& n, long rel_digits = kDefaultDigits);
    static PAdicNumber from_rational(const Prime& p, const Q& x, long rel_digits = kDefaultDigits);

    const Prime& prime() const { return prime_; }

    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    bool is_zero_at_precision() const { return kind_ != Kind::Nonzero; }
    bool provably_nonzero() const { return kind_ == Kind::Nonzero; }

    // Exact valuation; rejects numbers whose valuation is not determined.
    long valuation() const;
    // Valuation lower bound (= N for zeros at precision, kInfinity for 0).
    long valuation_lower_bound() const;

    long abs_precision() const { return kind_ == Kind::ExactZero ? kInfinity : abs_prec_; }

    // Unit part u in [1, p^{N-v}), u not divisible by p.
    const Z& unit_part() const;

    // Canonical representative of x mod p^N (requires v >= 0 or exact zero).
    Z integer_rep() const;

    PNorm norm() const;              // exact; rejects zero-at-precision inputs
    PNorm norm_upper_bound() const;  // always available: p^{-valuation_lower_bound}

    PAdicNumber operator-() const;
    PAdicNumber operator+(const PAdicNumber& o) const;
    PAdicNumber operator-(const PAdicNumber& o) const;
    PAdicNumber operator*(const PAdicNumber& o) const;
    PAdicNumber inv() const;
    PAdicNumber pow(long e) const;

    // Scale by p^k (exact, precision shifts along).
    PAdicNumber shift(long k) const;

    // Forget precision beyond p^{abs_prec}.
    PAdicNumber truncate(long abs_prec) const;

    // x == y modulo p^{min(prec x, prec y)}.
    bool congruent(const PAdicNumber& o) const;

    // abs precision plus a margin, with the infinite sentinel mapped to a
    // finite working default
    long working_digits(long margin = 8) const {
        return abs_precision() == kInfinity ? 2 * kDefaultDigits + margin
                                            : abs_precision() + margin;
    }

    std::string to_string() const;

private:
    enum class Kind { ExactZero, ZeroAtPrecision, Nonzero };

    explicit PAdicNumber(const Prime& p) : prime_(p), kind_(Kind::ExactZero) {}

    Prime prime_;
    Kind kind_;
    long val_ = 0;       // exact valuation (Nonzero only)
    long abs_prec_ = 0;  // value known modulo p^{abs_prec_}
    Z unit_;             // unit part mod p^{abs_prec_ - val_}
};

}  // namespace pasg
