#include "pasg/group.hpp"

#include "pasg/heights.hpp"

#include <numeric>

namespace pasg {

GroupPoint::GroupPoint(SplitGroup g, std::vector<AlgebraicNumber> additive,
                       std::vector<AlgebraicNumber> multiplicative)
    : group_(g), additive_(std::move(additive)), multiplicative_(std::move(multiplicative)) {
    PASG_REQUIRE(static_cast<long>(additive_.size()) == g.additive_rank,
                 "additive coordinate count mismatch");
    PASG_REQUIRE(static_cast<long>(multiplicative_.size()) == g.multiplicative_rank,
                 "multiplicative coordinate count mismatch");
    for (const AlgebraicNumber& t : multiplicative_) {
        PASG_REQUIRE(!t.is_zero(), "multiplicative coordinates must be invertible");
    }
}

GroupPoint GroupPoint::identity(const SplitGroup& g) {
    std::vector<AlgebraicNumber> add(g.additive_rank, AlgebraicNumber::from_rational(Q(0)));
    std::vector<AlgebraicNumber> mult(g.multiplicative_rank, AlgebraicNumber::from_rational(Q(1)));
    return GroupPoint(g, add, mult);
}

bool GroupPoint::in_finite_type_subgroup() const {
    for (const AlgebraicNumber& t : multiplicative_) {
        const PAdicNumber& r = t.padic_root();  // requires an embedding
        if (!(r.provably_nonzero() && r.valuation() == 0)) return false;
    }
    return true;
}

GroupPoint GroupPoint::mul(const GroupPoint& o) const {
    PASG_REQUIRE(group_ == o.group_, "points of different groups");
    std::vector<AlgebraicNumber> add, mult;
    for (long i = 0; i < group_.additive_rank; ++i) add.push_back(additive_[i].add(o.additive_[i]));
    for (long i = 0; i < group_.multiplicative_rank; ++i)
        mult.push_back(multiplicative_[i].mul(o.multiplicative_[i]));
    return GroupPoint(group_, add, mult);
}

GroupPoint GroupPoint::pow(long s) const {
    std::vector<AlgebraicNumber> add, mult;
    for (const AlgebraicNumber& x : additive_) {
        AlgebraicNumber sx = x.mul(x.has_padic_embedding()
                                       ? AlgebraicNumber::from_rational(Q(s), x.padic_root().prime())
                                       : AlgebraicNumber::from_rational(Q(s)));
        add.push_back(sx);
    }
    for (const AlgebraicNumber& t : multiplicative_) mult.push_back(t.pow(s));
    return GroupPoint(group_, add, mult);
}

HeightValue GroupPoint::height() const {
    HeightValue h = HeightValue::exact_zero();
    for (const AlgebraicNumber& x : additive_) h = HeightValue::max(h, weil_height(x));
    for (const AlgebraicNumber& t : multiplicative_) h = HeightValue::max(h, weil_height(t));
    return h;
}

PadicPoint PadicPoint::mul(const PadicPoint& o) const {
    PASG_REQUIRE(group == o.group, "points of different groups");
    PadicPoint r{group, {}, {}};
    for (size_t i = 0; i < additive.size(); ++i) r.additive.push_back(additive[i] + o.additive[i]);
    for (size_t i = 0; i < multiplicative.size(); ++i)
        r.multiplicative.push_back(multiplicative[i] * o.multiplicative[i]);
    return r;
}

PadicPoint PadicPoint::pow(long s) const {
    PadicPoint r{group, {}, {}};
    for (const PAdicNumber& x : additive) {
        PAdicNumber sx = x * PAdicNumber::from_integer(x.prime(), s, x.working_digits());
        r.additive.push_back(s == 0 ? PAdicNumber::exact_zero(x.prime()) : sx);
    }
    for (const PAdicNumber& t : multiplicative) r.multiplicative.push_back(t.pow(s));
    return r;
}

std::vector<PAdicNumber> group_log(const PadicPoint& x) {
    std::vector<PAdicNumber> u;
    for (const PAdicNumber& a : x.additive) u.push_back(a);
    for (const PAdicNumber& t : x.multiplicative) {
        PASG_REQUIRE(t.provably_nonzero() && t.valuation() == 0,
                     "group log needs unit multiplicative coordinates");
        u.push_back(iwasawa_log(t));
    }
    return u;
}

std::vector<PAdicNumber> group_log(const GroupPoint& x) {
    PadicPoint p{x.group(), {}, {}};
    for (const AlgebraicNumber& a : x.additive()) p.additive.push_back(a.padic_root());
    for (const AlgebraicNumber& t : x.multiplicative()) p.multiplicative.push_back(t.padic_root());
    return group_log(p);
}

PadicPoint group_exp(const SplitGroup& g, const std::vector<PAdicNumber>& u) {
    PASG_REQUIRE(static_cast<long>(u.size()) == g.dim(), "tangent vector dimension mismatch");
    PadicPoint x{g, {}, {}};
    for (long i = 0; i < g.additive_rank; ++i) x.additive.push_back(u[i]);
    for (long i = 0; i < g.multiplicative_rank; ++i) {
        const PAdicNumber& ui = u[g.additive_rank + i];
        PASG_REQUIRE(ui.norm_upper_bound() < PNorm::exp_radius(ui.prime()),
                     "tangent coordinate outside the certified exp disk");
        x.multiplicative.push_back(padic_exp(ui));
    }
    return x;
}

TorsionVerdict is_torsion(const GroupPoint& x) {
    for (const AlgebraicNumber& a : x.additive()) {
        if (!a.is_zero()) return {false, 0};
    }
    long order = 1;
    for (const AlgebraicNumber& t : x.multiplicative()) {
        long o = t.root_of_unity_order();
        if (o == 0) return {false, 0};
        order = std::lcm(order, o);
    }
    return {true, order};
}

TorsionVerdict is_torsion_at_precision(const PadicPoint& x) {
    for (const PAdicNumber& a : x.additive) {
        if (a.provably_nonzero()) return {false, 0};
    }
    long order = 1;
    for (const PAdicNumber& t : x.multiplicative) {
        UnitDecomposition d = unit_decomposition(t);
        PAdicNumber one = PAdicNumber::make(t.prime(), 1, 0, d.principal.working_digits(4));
        if ((d.principal - one).provably_nonzero()) return {false, 0};
        order = std::lcm(order, d.zeta_order);
    }
    return {true, order};
}

GroupHom::GroupHom(SplitGroup f, SplitGroup t, lat::ZMat add, lat::ZMat mult)
    : from(f), to(t), additive(std::move(add)), multiplicative(std::move(mult)) {
    PASG_REQUIRE(static_cast<long>(additive.size()) == to.additive_rank,
                 "additive block shape mismatch");
    for (const auto& row : additive)
        PASG_REQUIRE(static_cast<long>(row.size()) == from.additive_rank,
                     "additive block shape mismatch");
    PASG_REQUIRE(static_cast<long>(multiplicative.size()) == to.multiplicative_rank,
                 "multiplicative block shape mismatch");
    for (const auto& row : multiplicative)
        PASG_REQUIRE(static_cast<long>(row.size()) == from.multiplicative_rank,
                     "multiplicative block shape mismatch");
}

GroupPoint hom_apply(const GroupHom& phi, const GroupPoint& x) {
    PASG_REQUIRE(x.group() == phi.from, "point not in the domain group");
    std::vector<AlgebraicNumber> add, mult;
    for (long i = 0; i < phi.to.additive_rank; ++i) {
        AlgebraicNumber s = AlgebraicNumber::from_rational(Q(0));
        bool have = false;
        for (long j = 0; j < phi.from.additive_rank; ++j) {
            if (phi.additive[i][j] == 0) continue;
            Q c(phi.additive[i][j]);
            AlgebraicNumber term = x.additive()[j].mul(
                x.additive()[j].has_padic_embedding()
                    ? AlgebraicNumber::from_rational(c, x.additive()[j].padic_root().prime())
                    : AlgebraicNumber::from_rational(c));
            s = have ? s.add(term) : term;
            have = true;
        }
        add.push_back(s);
    }
    for (long i = 0; i < phi.to.multiplicative_rank; ++i) {
        AlgebraicNumber prod = AlgebraicNumber::from_rational(Q(1));
        bool have = false;
        for (long j = 0; j < phi.from.multiplicative_rank; ++j) {
            long e = to_long(phi.multiplicative[i][j]);
            if (e == 0) continue;
            AlgebraicNumber term = x.multiplicative()[j].pow(e);
            prod = have ? prod.mul(term) : term;
            have = true;
        }
        if (!have && !x.multiplicative().empty() && x.multiplicative()[0].has_padic_embedding()) {
            prod = AlgebraicNumber::from_rational(Q(1),
                                                  x.multiplicative()[0].padic_root().prime());
        }
        mult.push_back(prod);
    }
    return GroupPoint(phi.to, add, mult);
}

PadicPoint hom_apply(const GroupHom& phi, const PadicPoint& x) {
    PASG_REQUIRE(x.group == phi.from, "point not in the domain group");
    PadicPoint r{phi.to, {}, {}};
    for (long i = 0; i < phi.to.additive_rank; ++i) {
        PAdicNumber s = PAdicNumber::exact_zero(x.additive.empty() ? x.multiplicative[0].prime()
                                                                   : x.additive[0].prime());
        for (long j = 0; j < phi.from.additive_rank; ++j) {
            if (phi.additive[i][j] == 0) continue;
            s = s + x.additive[j] * PAdicNumber::from_integer(x.additive[j].prime(),
                                                              phi.additive[i][j],
                                                              x.additive[j].working_digits());
        }
        r.additive.push_back(s);
    }
    for (long i = 0; i < phi.to.multiplicative_rank; ++i) {
        PAdicNumber prod = PAdicNumber::make(x.multiplicative[0].prime(), 1, 0,
                                             x.multiplicative[0].working_digits());
        for (long j = 0; j < phi.from.multiplicative_rank; ++j) {
            long e = to_long(phi.multiplicative[i][j]);
            if (e == 0) continue;
            prod = prod * x.multiplicative[j].pow(e);
        }
        r.multiplicative.push_back(prod);
    }
    return r;
}

lat::ZMat hom_tangent(const GroupHom& phi) {
    long n_from = phi.from.dim(), n_to = phi.to.dim();
    lat::ZMat m(n_to, lat::ZVec(n_from, Z(0)));
    for (long i = 0; i < phi.to.additive_rank; ++i)
        for (long j = 0; j < phi.from.additive_rank; ++j) m[i][j] = phi.additive[i][j];
    for (long i = 0; i < phi.to.multiplicative_rank; ++i)
        for (long j = 0; j < phi.from.multiplicative_rank; ++j)
            m[phi.to.additive_rank + i][phi.from.additive_rank + j] = phi.multiplicative[i][j];
    return m;
}

}  // namespace pasg
