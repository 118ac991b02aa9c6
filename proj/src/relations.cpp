#include "pasg/relations.hpp"

#include "pasg/heights.hpp"

#include <sstream>

namespace pasg {

using lat::ZMat;
using lat::ZVec;

namespace {

const Prime& common_prime(const std::vector<AlgebraicNumber>& alpha) {
    PASG_REQUIRE(!alpha.empty(), "need at least one unit");
    for (const AlgebraicNumber& a : alpha) {
        PASG_REQUIRE(a.has_padic_embedding(), "every input needs a p-adic embedding");
        require_same_prime(alpha[0].padic_root().prime(), a.padic_root().prime());
        PASG_REQUIRE(a.padic_root().provably_nonzero() && a.padic_root().valuation() == 0,
                     "non-unit input");
    }
    return alpha[0].padic_root().prime();
}

std::string certificate_transcript(const std::vector<AlgebraicNumber>& alpha, const ZVec& m,
                                   long order) {
    AlgebraicNumber prod = AlgebraicNumber::from_rational(Q(1));
    bool have = false;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (m[i] == 0) continue;
        AlgebraicNumber t = alpha[i].pow(to_long(m[i]));
        prod = have ? prod.mul(t) : t;
        have = true;
    }
    std::ostringstream os;
    os << "prod alpha_i^{m_i} = " << (have ? prod.to_string() : std::string("1"))
       << "; exact torsion order " << order;
    return os.str();
}

}  // namespace

long relation_guard_precision(const std::vector<AlgebraicNumber>& alpha, long exponent_bound) {
    const Prime& p = common_prime(alpha);
    Q hmax(0);
    for (const AlgebraicNumber& a : alpha) {
        Q h = weil_height(a).upper() * a.degree();
        hmax = std::max(hmax, h);
    }
    // N' = ceil(M n hmax / log p) + 32, with a certified lower bound on log p
    HeightValue lp = log_of_integer(p.value());
    Q needed = Q(exponent_bound) * Q(static_cast<long>(alpha.size())) * hmax / lp.lower();
    Z ceilv;
    mpz_cdiv_q(ceilv.get_mpz_t(), needed.get_num().get_mpz_t(), needed.get_den().get_mpz_t());
    return to_long(ceilv) + 32;
}

RelationSearchResult detect_log_relations(const std::vector<AlgebraicNumber>& alpha,
                                          long exponent_bound, long precision) {
    PASG_REQUIRE(exponent_bound >= 1, "exponent bound must be >= 1");
    const Prime& p = common_prime(alpha);
    long n = static_cast<long>(alpha.size());
    long guard = relation_guard_precision(alpha, exponent_bound);
    PASG_REQUIRE(precision >= guard, "insufficient precision: below the recorded guard");

    RelationSearchResult out{{}, {}, guard, ""};
    {
        std::ostringstream os;
        os << "guard: p^-N' separation with N' = " << guard << " (M = " << exponent_bound
           << ", n = " << n << ", margin 32)";
        out.guard_note = os.str();
    }

    // logs at working precision
    Z modulus = p.power(precision);
    ZMat basis;
    for (long i = 0; i < n; ++i) {
        PAdicNumber root = alpha[i].with_precision(precision + 8).padic_root();
        PAdicNumber li = iwasawa_log(root).truncate(precision);
        Z rep(0);
        if (li.provably_nonzero()) {
            PASG_CHECK(li.valuation() >= 1, "unit logarithm has positive valuation");
            rep = li.integer_rep() % modulus;
        }
        ZVec row(n + 1, Z(0));
        row[i] = 1;
        row[n] = rep;
        basis.push_back(row);
    }
    {
        ZVec row(n + 1, Z(0));
        row[n] = modulus;
        basis.push_back(row);
    }

    ZMat reduced = lat::lll_reduce(basis, Q(99, 100)).basis;
    // complete enumeration: every true relation (m, 0) has squared norm
    // <= n M^2, and any vector with a nonzero last coordinate is far larger
    Z radius2 = Z(n) * Z(exponent_bound) * Z(exponent_bound);
    std::vector<ZVec> shorts = lat::enumerate_short_vectors(reduced, radius2);

    ZMat verified;
    for (const ZVec& v : shorts) {
        ZVec m(v.begin(), v.begin() + n);
        if (v[n] != 0) continue;
        bool nonzero = false;
        for (const Z& x : m)
            if (x != 0) nonzero = true;
        if (!nonzero) continue;
        if (lat::inf_norm(m) > exponent_bound) continue;
        if (!verified.empty() && lat::lattice_contains(verified, m)) continue;
        long order = character_torsion_order(alpha, m);
        if (order == 0) continue;  // near-miss: discard
        verified.push_back(m);
    }

    if (!verified.empty()) {
        ZMat sat = lat::saturate(verified, n);
        for (const ZVec& m : sat) {
            ZVec mm = m;
            lat::canonicalize_sign(mm);
            long order = character_torsion_order(alpha, mm);
            PASG_CHECK(order > 0, "saturated generator failed exact re-verification");
            out.certificates.push_back(
                RelationCertificate{mm, order, certificate_transcript(alpha, mm, order)});
            out.lattice.push_back(mm);
        }
    }
    return out;
}

namespace {

// p-adic embedding of the field generator, if one exists
std::optional<PAdicNumber> embed_field(const NumberField& k, const Prime& p, long digits) {
    const poly::ZPoly& f = k.defining_polynomial();
    for (Z seed(0); seed < p.value(); ++seed) {
        Z fv = poly::eval(f, seed) % p.value();
        Z dv = poly::eval(poly::derivative(f), seed) % p.value();
        if (fv == 0 && dv != 0) return hensel_lift_root(f, p, seed, digits);
    }
    return std::nullopt;
}

PAdicNumber eval_entry(const poly::QPoly& e, const std::optional<PAdicNumber>& theta,
                       const Prime& p, long digits) {
    if (e.empty()) return PAdicNumber::exact_zero(p);
    if (NumberField::is_rational(e)) return PAdicNumber::from_rational(p, e[0], digits);
    PASG_CHECK(theta.has_value(), "irrational entry without an embedded generator");
    PAdicNumber acc = PAdicNumber::exact_zero(p);
    for (size_t i = e.size(); i-- > 0;) {
        PAdicNumber c = e[i] == 0 ? PAdicNumber::exact_zero(p)
                                  : PAdicNumber::from_rational(p, e[i], digits);
        acc = acc * *theta + c;
    }
    return acc;
}

// precision-aware row reduction: returns true if u reduces to zero at
// precision against the span of the rows
bool reduces_to_zero(std::vector<std::vector<PAdicNumber>> rows, std::vector<PAdicNumber> u) {
    size_t cols = u.size();
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows.size(); ++c) {
        // pivot of maximal norm
        size_t best = rows.size();
        for (size_t i = pr; i < rows.size(); ++i) {
            if (!rows[i][c].provably_nonzero()) continue;
            if (best == rows.size() ||
                rows[i][c].norm() > rows[best][c].norm())
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[best], rows[pr]);
        PAdicNumber inv = rows[pr][c].inv();
        PAdicNumber f = u[c] * inv;
        for (size_t j = 0; j < cols; ++j) u[j] = u[j] - f * rows[pr][j];
        for (size_t i = pr + 1; i < rows.size(); ++i) {
            PAdicNumber f = rows[i][c] * inv;
            for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[pr][j];
        }
        ++pr;
    }
    for (const PAdicNumber& x : u)
        if (x.provably_nonzero()) return false;
    return true;
}

}  // namespace

bool padic_in_span(const LieSubspace& v, const Prime& p, const std::vector<PAdicNumber>& u,
                   long digits) {
    PASG_REQUIRE(static_cast<long>(u.size()) == v.ambient_dim(), "vector dimension mismatch");
    std::optional<PAdicNumber> theta;
    if (v.field()) {
        theta = embed_field(*v.field(), p, digits);
        PASG_REQUIRE(theta.has_value(),
                     "subspace entries have no p-adic embedding at this prime");
    }
    std::vector<std::vector<PAdicNumber>> rows;
    for (const auto& row : v.rows()) {
        std::vector<PAdicNumber> r;
        for (const auto& e : row) r.push_back(eval_entry(e, theta, p, digits));
        rows.push_back(std::move(r));
    }
    return reduces_to_zero(rows, u);
}

AsgResult asg_find_subgroup(const SplitGroup& torus, const GroupPoint& gamma,
                            const LieSubspace& v, long exponent_bound, long precision) {
    PASG_REQUIRE(torus.additive_rank == 0, "the decision procedure runs on tori");
    PASG_REQUIRE(gamma.group() == torus, "point group mismatch");
    PASG_REQUIRE(v.ambient_dim() == torus.dim(), "subspace dimension mismatch");
    PASG_REQUIRE(gamma.in_finite_type_subgroup(), "gamma is not in G(F)_f (non-unit coordinate)");

    const Prime& p = gamma.multiplicative()[0].padic_root().prime();

    AsgResult res{AsgResult::Kind::NotFoundUpToBound, std::nullopt, {}, std::nullopt, ""};

    TorsionVerdict tv = is_torsion(gamma);
    if (tv.torsion) {
        res.kind = AsgResult::Kind::Torsion;
        res.torsion = tv;
        res.note = "gamma is torsion; log = 0 and the hypothesis excludes it";
        return res;
    }

    // hypothesis: log(gamma) in V (x) Q_p at the working precision
    std::vector<PAdicNumber> u = group_log(gamma);
    PASG_REQUIRE(padic_in_span(v, p, u, precision),
                 "hypothesis violated at precision: log(gamma) not in V (x) Q_p");

    RelationSearchResult rel = detect_log_relations(gamma.multiplicative(), exponent_bound,
                                                    precision);
    res.relations = rel;

    SubgroupLattice h(torus, {}, rel.lattice);
    if (h.dim() <= 0) {
        res.note = "relation lattice has full rank, contradicting non-torsion gamma";
        return res;
    }
    if (!subgroup_membership(gamma, h)) {
        res.note = "membership re-verification failed (unexpected)";
        return res;
    }
    // Lie(H) inside V, exactly
    LieSubspace lie = h.lie_algebra();
    for (const auto& row : lie.rows()) {
        lat::ZVec iv;
        bool ok = true;
        for (const auto& e : row) {
            if (e.empty()) {
                iv.push_back(Z(0));
            } else if (NumberField::is_rational(e) && e[0].get_den() == 1) {
                iv.push_back(e[0].get_num());
            } else {
                ok = false;
                break;
            }
        }
        PASG_CHECK(ok, "Lie algebra basis not integral");
        if (!v.contains(iv)) {
            res.kind = AsgResult::Kind::NotFoundUpToBound;
            res.note =
                "Lie(H) is not contained in V: the relation search horizon was too small "
                "(raise the exponent bound)";
            return res;
        }
    }
    res.kind = AsgResult::Kind::SubgroupFound;
    res.subgroup = h;
    res.note = "subgroup verified: membership and Lie inclusion exact";
    return res;
}

}  // namespace pasg
