#pragma once

#include "pasg/prime.hpp"
#include "pasg/util.hpp"

#include <string>

namespace pasg {

// A value of the p-adic absolute value: either 0 or p^e with e an exact
// rational. All comparisons go through the exponent, never through floats.
class PNorm {
public:
    static PNorm zero(const Prime& p) { return PNorm(p, Q(0), true); }
    static PNorm one(const Prime& p) { return PNorm(p, Q(0), false); }
    static PNorm power(const Prime& p, const Q& e) { return PNorm(p, e, false); }
    static PNorm power(const Prime& p, long e) { return PNorm(p, Q(e), false); }

    // r_p = p^{-1/(p-1)}, the convergence radius of the p-adic exponential.
    static PNorm exp_radius(const Prime& p) {
        return power(p, Q(-1) / Q(p.value() - 1));
    }

    const Prime& prime() const { return p_; }
    bool is_zero() const { return zero_; }

    const Q& exponent() const {
        PASG_REQUIRE(!zero_, "zero norm has no exponent");
        return e_;
    }

    PNorm operator*(const PNorm& o) const {
        require_same_prime(p_, o.p_);
        if (zero_ || o.zero_) return zero(p_);
        return power(p_, e_ + o.e_);
    }

    PNorm operator/(const PNorm& o) const {
        require_same_prime(p_, o.p_);
        PASG_REQUIRE(!o.zero_, "division by zero norm");
        if (zero_) return zero(p_);
        return power(p_, e_ - o.e_);
    }

    // Integer powers; k < 0 requires a nonzero norm.
    PNorm pow(long k) const {
        if (zero_) {
            PASG_REQUIRE(k > 0, "zero norm to non-positive power");
            return *this;
        }
        return power(p_, e_ * k);
    }

    bool operator==(const PNorm& o) const { return cmp(o) == 0; }
    bool operator!=(const PNorm& o) const { return cmp(o) != 0; }
    bool operator<(const PNorm& o) const { return cmp(o) < 0; }
    bool operator<=(const PNorm& o) const { return cmp(o) <= 0; }
    bool operator>(const PNorm& o) const { return cmp(o) > 0; }
    bool operator>=(const PNorm& o) const { return cmp(o) >= 0; }

    std::string to_string() const {
        if (zero_) return "0";
        if (e_ == 0) return "1";
        return p_.value().get_str() + "^(" + e_.get_str() + ")";
    }

private:
    PNorm(const Prime& p, Q e, bool zero) : p_(p), e_(std::move(e)), zero_(zero) {
        e_.canonicalize();
    }

    int cmp(const PNorm& o) const {
        require_same_prime(p_, o.p_);
        if (zero_ && o.zero_) return 0;
        if (zero_) return -1;
        if (o.zero_) return 1;
        return ::cmp(e_, o.e_);
    }

    Prime p_;
    Q e_;
    bool zero_;
};

inline PNorm max(const PNorm& a, const PNorm& b) { return a < b ? b : a; }

}  // namespace pasg
