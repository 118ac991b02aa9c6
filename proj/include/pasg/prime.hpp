#pragma once

#include "pasg/util.hpp"

namespace pasg {

// A verified prime. Construction checks primality exactly (trial division)
// for word-sized inputs and falls back to a strong probable-prime test with
// many rounds beyond that; desk-scale inputs are always in the exact range.
class Prime {
public:
    explicit Prime(const Z& p);
    explicit Prime(long p) : Prime(Z(p)) {}

    const Z& value() const { return p_; }
    long value_long() const { return to_long(p_); }

    bool operator==(const Prime& o) const { return p_ == o.p_; }
    bool operator!=(const Prime& o) const { return p_ != o.p_; }

    Z power(long k) const;  // p^k, k >= 0

private:
    Z p_;
};

inline void require_same_prime(const Prime& a, const Prime& b) {
    PASG_REQUIRE(a == b, "prime mismatch");
}

}  // namespace pasg
