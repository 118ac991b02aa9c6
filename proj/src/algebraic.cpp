#include "pasg/algebraic.hpp"

#include <sstream>

namespace pasg {

using poly::QPoly;
using poly::ZPoly;

namespace {

ZPoly rational_minpoly(const Q& x) {
    // b*x - a, primitive with positive lc
    return poly::primitive_part(ZPoly{-x.get_num(), x.get_den()});
}

// Evaluate an integer polynomial at a p-adic point.
PAdicNumber eval_padic(const ZPoly& f, const PAdicNumber& x) {
    const Prime& p = x.prime();
    long digits = x.abs_precision() == kInfinity ? 2 * kDefaultDigits : x.working_digits();
    PAdicNumber v = PAdicNumber::exact_zero(p);
    for (size_t i = f.size(); i-- > 0;) {
        v = v * x + (f[i] == 0 ? PAdicNumber::exact_zero(p)
                               : PAdicNumber::from_integer(p, f[i], digits));
    }
    return v;
}

// Hensel uniqueness: |f(r)| < |f'(r)|^2 certifies one root in the ball.
void check_hensel_condition(const ZPoly& f, const PAdicNumber& r) {
    PAdicNumber fr = eval_padic(f, r);
    PAdicNumber dfr = eval_padic(poly::derivative(f), r);
    PASG_REQUIRE(dfr.provably_nonzero(), "root selector: derivative vanishes at this precision");
    PASG_REQUIRE(fr.norm_upper_bound() < dfr.norm() * dfr.norm(),
                 "root selector does not satisfy the Hensel uniqueness condition");
}

// Pick the irreducible factor of `candidates` vanishing at the p-adic value.
ZPoly select_factor(const std::vector<std::pair<ZPoly, int>>& factors, const PAdicNumber& value) {
    const ZPoly* chosen = nullptr;
    for (const auto& [g, mult] : factors) {
        PAdicNumber gv = eval_padic(g, value);
        if (!gv.provably_nonzero()) {
            PASG_CHECK(chosen == nullptr,
                       "p-adic precision cannot separate candidate minimal polynomials");
            chosen = &g;
        }
    }
    PASG_CHECK(chosen != nullptr, "no candidate factor vanishes at the selected root");
    return *chosen;
}

}  // namespace

PAdicNumber hensel_lift_root(const ZPoly& f, const Prime& p, const Z& seed, long digits) {
    Z fp = poly::eval(f, seed) % p.value();
    PASG_REQUIRE(fp == 0, "seed is not a root of the polynomial mod p");
    Z dfp = poly::eval(poly::derivative(f), seed) % p.value();
    PASG_REQUIRE(dfp != 0, "seed is not a simple root mod p (no unique lift)");

    long prec = 1;
    Z x = seed % p.value();
    if (x < 0) x += p.value();
    while (prec < digits) {
        prec = std::min(2 * prec, digits);
        Z mod = p.power(prec);
        Z fx = poly::eval(f, x) % mod;
        Z dfx = poly::eval(poly::derivative(f), x) % mod;
        Z dinv;
        // f'(x) is a unit mod p, hence invertible mod p^k
        Z unit = dfx / p.power(0);
        int ok = mpz_invert(dinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        PASG_CHECK(ok != 0, "derivative not invertible during Newton lift");
        x = (x - fx * dinv) % mod;
        if (x < 0) x += mod;
    }
    PASG_CHECK((poly::eval(f, x) % p.power(digits)) == 0, "Newton lift failed to converge");
    return PAdicNumber::make(p, x, 0, digits);
}

AlgebraicNumber::AlgebraicNumber(ZPoly minpoly, std::optional<PAdicNumber> root,
                                 bool verify_irreducible)
    : minpoly_(poly::primitive_part(minpoly)), root_(std::move(root)) {
    PASG_REQUIRE(poly::deg(minpoly_) >= 1, "minimal polynomial must be non-constant");
    if (verify_irreducible) {
        PASG_REQUIRE(poly::is_irreducible(minpoly_), "minimal polynomial is reducible");
    }
    if (root_) {
        PASG_CHECK(poly::deg(minpoly_) == 1 || !root_->is_zero_at_precision(),
                   "irrational root selector must be provably nonzero");
        check_hensel_condition(minpoly_, *root_);
    }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Q& x) {
    return AlgebraicNumber(rational_minpoly(x), std::nullopt, false);
}

AlgebraicNumber AlgebraicNumber::from_rational(const Q& x, const Prime& p, long digits) {
    if (x == 0) return AlgebraicNumber(rational_minpoly(x), PAdicNumber::exact_zero(p), false);
    return AlgebraicNumber(rational_minpoly(x), PAdicNumber::from_rational(p, x, digits), false);
}

AlgebraicNumber AlgebraicNumber::hensel_embed(const ZPoly& minpoly, const Prime& p,
                                              const Z& seed_residue, long digits) {
    ZPoly f = poly::primitive_part(minpoly);
    PASG_REQUIRE(poly::is_irreducible(f), "minimal polynomial is reducible");
    PAdicNumber r = hensel_lift_root(f, p, seed_residue, digits);
    return AlgebraicNumber(f, r, false);
}

Q AlgebraicNumber::rational_value() const {
    PASG_REQUIRE(is_rational(), "not a rational number");
    return Q(-minpoly_[0], minpoly_[1]);
}

bool AlgebraicNumber::is_zero() const { return is_rational() && rational_value() == 0; }
bool AlgebraicNumber::is_one() const { return is_rational() && rational_value() == 1; }

const PAdicNumber& AlgebraicNumber::padic_root() const {
    PASG_REQUIRE(root_.has_value(), "no p-adic embedding attached");
    return *root_;
}

AlgebraicNumber AlgebraicNumber::with_precision(long digits) const {
    PASG_REQUIRE(root_.has_value(), "no p-adic embedding attached");
    if (root_->abs_precision() >= digits) return *this;
    const Prime& p = root_->prime();
    if (is_rational()) return from_rational(rational_value(), p, digits);
    // Newton from the residue reproduces the same distinguished root
    PASG_REQUIRE(root_->valuation() == 0, "refinement needs a unit root selector");
    Z seed = root_->integer_rep() % p.value();
    return AlgebraicNumber(minpoly_, hensel_lift_root(minpoly_, p, seed, digits), false);
}

AlgebraicNumber AlgebraicNumber::negate() const {
    ZPoly f = minpoly_;
    for (size_t i = 0; i < f.size(); ++i)
        if ((poly::deg(f) - static_cast<long>(i)) % 2) f[i] = -f[i];
    std::optional<PAdicNumber> r;
    if (root_) r = -*root_;
    return AlgebraicNumber(f, r, false);
}

AlgebraicNumber AlgebraicNumber::inv() const {
    PASG_REQUIRE(!is_zero(), "inverse of zero");
    ZPoly f(minpoly_.rbegin(), minpoly_.rend());
    std::optional<PAdicNumber> r;
    if (root_) r = root_->inv();
    return AlgebraicNumber(f, r, false);
}

AlgebraicNumber AlgebraicNumber::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    if (n == 0) return from_rational(Q(1));
    if (is_rational()) {
        Q v = pow_q(rational_value(), n);
        return root_ ? from_rational(v, root_->prime(), root_->abs_precision())
                     : from_rational(v);
    }
    NumberField K(minpoly_, false);
    ZPoly m = K.minimal_polynomial(K.pow(QPoly{Q(0), Q(1)}, n));
    std::optional<PAdicNumber> r;
    if (root_) r = root_->pow(n);
    return AlgebraicNumber(m, r, false);
}

AlgebraicNumber AlgebraicNumber::add(const AlgebraicNumber& o) const {
    if (is_rational() && o.is_rational()) {
        Q v = rational_value() + o.rational_value();
        if (root_ && o.root_) return from_rational(v, root_->prime(), root_->abs_precision());
        return from_rational(v);
    }
    if (is_rational() || o.is_rational()) {
        // shift the irrational side by the exact rational: f(x - r)
        const AlgebraicNumber& alg = is_rational() ? o : *this;
        Q r = is_rational() ? rational_value() : o.rational_value();
        QPoly shifted{Q(1)};
        QPoly x_minus_r{-r, Q(1)};
        QPoly acc{Q(1)};
        QPoly out;
        QPoly fq = poly::to_q(alg.minpoly_);
        for (size_t i = 0; i < fq.size(); ++i) {
            out = poly::add(out, poly::scale(acc, fq[i]));
            acc = poly::mul(acc, x_minus_r);
        }
        std::optional<PAdicNumber> root;
        if (alg.root_ && (root_ || o.root_)) {
            const Prime& p = alg.root_->prime();
            root = *alg.root_ + PAdicNumber::from_rational(p, r, alg.root_->working_digits());
        }
        return AlgebraicNumber(poly::primitive_from_q(out), root, false);
    }
    PASG_REQUIRE(root_ && o.root_,
                 "sum of two irrational algebraic numbers needs p-adic selectors");
    PASG_REQUIRE(degree() * o.degree() <= kAlgebraicDegreeCap,
                 "degree cap exceeded in algebraic addition");
    // Res_y(f(y), g(x - y)) vanishes at all alpha_i + beta_j
    long dg = o.degree();
    QPoly g = poly::to_q(o.minpoly_);
    std::vector<Q> xs, vals;
    long dres = degree() * o.degree();
    QPoly fq = poly::to_q(minpoly_);
    for (long k = 0; k <= dres; ++k) {
        Q x0(k);
        // g(x0 - y) as polynomial in y
        QPoly gy;
        QPoly pw{Q(1)};
        QPoly lin{x0, Q(-1)};
        for (long i = 0; i <= dg; ++i) {
            gy = poly::add(gy, poly::scale(pw, g[i]));
            pw = poly::mul(pw, lin);
        }
        xs.push_back(x0);
        vals.push_back(poly::resultant(fq, gy));
    }
    QPoly res;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly basis{Q(1)};
        Q denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = poly::mul(basis, QPoly{-xs[j], Q(1)});
            denom *= xs[i] - xs[j];
        }
        res = poly::add(res, poly::scale(basis, vals[i] / denom));
    }
    ZPoly rz = poly::squarefree_part(poly::primitive_from_q(res));
    PAdicNumber sum = *root_ + *o.root_;
    ZPoly m = select_factor(poly::factor(rz), sum);
    return AlgebraicNumber(m, sum, false);
}

AlgebraicNumber AlgebraicNumber::mul(const AlgebraicNumber& o) const {
    if (is_rational() && o.is_rational()) {
        Q v = rational_value() * o.rational_value();
        if (root_ && o.root_) return from_rational(v, root_->prime(), root_->abs_precision());
        return from_rational(v);
    }
    if (is_rational() || o.is_rational()) {
        const AlgebraicNumber& alg = is_rational() ? o : *this;
        Q r = is_rational() ? rational_value() : o.rational_value();
        if (r == 0) return root_ || o.root_ ? from_rational(Q(0), alg.root_->prime())
                                            : from_rational(Q(0));
        // minpoly of r*alpha: f(x/r) cleared
        QPoly fq = poly::to_q(alg.minpoly_);
        QPoly out(fq.size());
        Q rpow(1);
        for (size_t i = fq.size(); i-- > 0;) {
            out[i] = fq[i] * rpow;
            rpow *= r;
        }
        std::optional<PAdicNumber> root;
        if (alg.root_ && (root_ || o.root_)) {
            const Prime& p = alg.root_->prime();
            root = *alg.root_ * PAdicNumber::from_rational(p, r, alg.root_->working_digits());
        }
        return AlgebraicNumber(poly::primitive_from_q(out), root, false);
    }
    PASG_REQUIRE(root_ && o.root_,
                 "product of two irrational algebraic numbers needs p-adic selectors");
    PASG_REQUIRE(degree() * o.degree() <= kAlgebraicDegreeCap,
                 "degree cap exceeded in algebraic multiplication");
    // Res_y(f(y), y^dg g(x/y)) vanishes at all alpha_i * beta_j
    long dg = o.degree();
    QPoly g = poly::to_q(o.minpoly_);
    QPoly fq = poly::to_q(minpoly_);
    long dres = degree() * o.degree();
    std::vector<Q> xs, vals;
    for (long k = 1; k <= dres + 1; ++k) {
        Q x0(k);
        // y^dg * g(x0/y) = sum_i g_i x0^i y^{dg-i}
        QPoly gy(dg + 1, Q(0));
        Q xp(1);
        for (long i = 0; i <= dg; ++i) {
            gy[dg - i] = g[i] * xp;
            xp *= x0;
        }
        poly::strip(gy);
        xs.push_back(x0);
        vals.push_back(poly::resultant(fq, gy));
    }
    QPoly res;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly basis{Q(1)};
        Q denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = poly::mul(basis, QPoly{-xs[j], Q(1)});
            denom *= xs[i] - xs[j];
        }
        res = poly::add(res, poly::scale(basis, vals[i] / denom));
    }
    ZPoly rz = poly::squarefree_part(poly::primitive_from_q(res));
    PAdicNumber prod = *root_ * *o.root_;
    ZPoly m = select_factor(poly::factor(rz), prod);
    return AlgebraicNumber(m, prod, false);
}

bool AlgebraicNumber::equals(const AlgebraicNumber& o) const {
    if (minpoly_ != o.minpoly_) return false;
    if (is_rational()) return true;
    AlgebraicNumber d = add(o.negate());
    return d.is_zero();
}

long AlgebraicNumber::root_of_unity_order() const {
    return poly::root_of_unity_order(minpoly_);
}

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return q_to_string(rational_value());
    std::ostringstream os;
    os << "root of " << poly::to_string(minpoly_);
    if (root_) os << " near " << root_->to_string();
    return os.str();
}

}  // namespace pasg
