#include "pasg/subgroup.hpp"

#include <numeric>

namespace pasg {

using poly::QPoly;

namespace {

std::vector<std::vector<QPoly>> from_integer_rows(const lat::ZMat& rows) {
    std::vector<std::vector<QPoly>> out;
    for (const auto& r : rows) {
        std::vector<QPoly> row;
        for (const Z& x : r) row.push_back(x == 0 ? QPoly{} : QPoly{Q(x)});
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

long rank_nf(const std::optional<NumberField>& field, std::vector<std::vector<QPoly>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    auto mul = [&](const QPoly& a, const QPoly& b) {
        return field ? field->mul(a, b) : (a.empty() || b.empty() ? QPoly{} : poly::mul(a, b));
    };
    auto inv = [&](const QPoly& a) {
        if (field) return field->inv(a);
        PASG_CHECK(a.size() == 1, "rational inverse of non-constant");
        return QPoly{1 / a[0]};
    };
    long r = 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && m[piv][c].empty()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[pr]);
        QPoly pinv = inv(m[pr][c]);
        for (size_t i = pr + 1; i < rows; ++i) {
            if (m[i][c].empty()) continue;
            QPoly f = mul(m[i][c], pinv);
            for (size_t j = c; j < cols; ++j) {
                QPoly t = mul(f, m[pr][j]);
                m[i][j] = poly::sub(m[i][j], t);
            }
        }
        ++pr;
        ++r;
    }
    return r;
}

LieSubspace::LieSubspace(long ambient_dim, lat::ZMat rows)
    : LieSubspace(ambient_dim, std::nullopt, from_integer_rows(rows)) {}

LieSubspace::LieSubspace(long ambient_dim, std::optional<NumberField> field,
                         std::vector<std::vector<QPoly>> rows)
    : ambient_(ambient_dim), field_(std::move(field)), rows_(std::move(rows)) {
    PASG_REQUIRE(ambient_ >= 1, "ambient dimension must be positive");
    for (auto& row : rows_) {
        PASG_REQUIRE(static_cast<long>(row.size()) == ambient_, "basis row length mismatch");
        if (field_)
            for (auto& e : row) e = field_->reduce(e);
    }
    PASG_REQUIRE(rank_nf(field_, rows_) == static_cast<long>(rows_.size()),
                 "basis rows must be linearly independent");
}

bool LieSubspace::is_rational() const {
    for (const auto& row : rows_)
        for (const auto& e : row)
            if (!NumberField::is_rational(e)) return false;
    return true;
}

lat::ZMat LieSubspace::rational_rows() const {
    PASG_REQUIRE(is_rational(), "subspace is not rational");
    lat::ZMat out;
    for (const auto& row : rows_) {
        Z den(1);
        for (const auto& e : row)
            if (!e.empty()) {
                Z l;
                mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), e[0].get_den().get_mpz_t());
                den = l;
            }
        lat::ZVec r;
        for (const auto& e : row) {
            Q v = NumberField::rational_value(e) * den;
            r.push_back(v.get_num());
        }
        out.push_back(std::move(r));
    }
    return lat::saturate(out, ambient_);
}

lat::ZMat LieSubspace::maximal_rational_subspace() const {
    if (is_rational()) return rational_rows();
    PASG_CHECK(field_.has_value(), "irrational entries without a field context");
    long d = field_->degree();
    // echelonize the basis over K, then parametrize V by the pivot
    // coordinates and impose rationality of every ambient coordinate
    std::vector<std::vector<QPoly>> m = rows_;
    size_t rows = m.size(), cols = static_cast<size_t>(ambient_);
    auto mulf = [&](const QPoly& a, const QPoly& b) { return field_->mul(a, b); };
    auto invf = [&](const QPoly& a) { return field_->inv(a); };
    std::vector<long> pivot_col;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && m[piv][c].empty()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[pr]);
        QPoly pinv = invf(m[pr][c]);
        for (size_t j = 0; j < cols; ++j) m[pr][j] = mulf(m[pr][j], pinv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || m[i][c].empty()) continue;
            QPoly f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] = poly::sub(m[i][j], mulf(f, m[pr][j]));
        }
        pivot_col.push_back(static_cast<long>(c));
        ++pr;
    }
    // unknowns: the K-coefficients c_i of a vector sum c_i m_i, split over
    // the power basis of K; rationality of coordinate j kills the theta^1..
    // theta^{d-1} components of sum_i c_i m[i][j]
    long k = static_cast<long>(pr);
    if (k == 0) return {};
    long unknowns = k * d;
    std::vector<std::vector<Q>> eqs;  // over Q, each row length = unknowns
    for (long j = 0; j < ambient_; ++j) {
        for (long comp = 1; comp < d; ++comp) {
            std::vector<Q> eq(unknowns, Q(0));
            for (long i = 0; i < k; ++i) {
                for (long t = 0; t < d; ++t) {
                    // c_i = sum_t c_{i,t} theta^t; entry m[i][j] in K:
                    // contribution of c_{i,t} to component `comp` is the
                    // comp-coordinate of theta^t * m[i][j]
                    QPoly basis_elem(static_cast<size_t>(t) + 1, Q(0));
                    basis_elem[t] = 1;
                    QPoly prod = field_->mul(basis_elem, m[i][j]);
                    Q coeff = (static_cast<long>(prod.size()) > comp) ? prod[comp] : Q(0);
                    eq[i * d + t] = coeff;
                }
            }
            eqs.push_back(std::move(eq));
        }
    }
    // rational kernel of eqs: integer kernel of the cleared matrix
    lat::ZMat eqs_z;
    for (auto& eq : eqs) {
        Z den(1);
        for (const Q& q : eq) {
            Z l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
            den = l;
        }
        lat::ZVec row;
        for (const Q& q : eq) row.push_back(Q(q * den).get_num());
        eqs_z.push_back(std::move(row));
    }
    lat::ZMat sols = eqs_z.empty() ? lat::identity(unknowns)
                                   : lat::kernel_basis(eqs_z, static_cast<size_t>(unknowns));
    // map each solution back to the ambient vector (must come out rational)
    lat::ZMat out;
    for (const auto& s : sols) {
        std::vector<Q> w(ambient_, Q(0));
        for (long j = 0; j < ambient_; ++j) {
            QPoly acc;
            for (long i = 0; i < k; ++i) {
                QPoly ci(static_cast<size_t>(d), Q(0));
                for (long t = 0; t < d; ++t) ci[t] = Q(s[i * d + t]);
                poly::strip(ci);
                QPoly prod = field_->mul(ci, m[i][j]);
                acc = poly::add(acc, prod);
            }
            PASG_CHECK(NumberField::is_rational(acc), "rationality constraints failed");
            w[j] = NumberField::rational_value(acc);
        }
        Z den(1);
        for (const Q& q : w) {
            Z l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
            den = l;
        }
        lat::ZVec row;
        bool nonzero = false;
        for (const Q& q : w) {
            Z v = Q(q * den).get_num();
            if (v != 0) nonzero = true;
            row.push_back(v);
        }
        if (nonzero) out.push_back(std::move(row));
    }
    if (out.empty()) return {};
    return lat::saturate(out, ambient_);
}

HeightValue LieSubspace::entry_height_bound() const {
    HeightValue b = HeightValue::exact_zero();
    for (const auto& row : rows_) {
        for (const auto& e : row) {
            if (e.empty()) continue;
            if (NumberField::is_rational(e)) {
                b = HeightValue::max(b, weil_height_q(e[0]));
            } else {
                AlgebraicNumber a(field_->minimal_polynomial(e), std::nullopt, false);
                b = HeightValue::max(b, weil_height(a));
            }
        }
    }
    return b;
}

bool LieSubspace::entries_integral() const {
    for (const auto& row : rows_) {
        for (const auto& e : row) {
            if (e.empty()) continue;
            if (NumberField::is_rational(e)) {
                if (e[0].get_den() != 1) return false;
            } else {
                poly::ZPoly m = field_->minimal_polynomial(e);
                if (m.back() != 1) return false;
            }
        }
    }
    return true;
}

bool LieSubspace::contains(const lat::ZVec& v) const {
    std::vector<std::vector<QPoly>> stacked = rows_;
    std::vector<QPoly> vr;
    for (const Z& x : v) vr.push_back(x == 0 ? QPoly{} : QPoly{Q(x)});
    stacked.push_back(vr);
    return rank_nf(field_, stacked) == dim();
}

SubgroupLattice::SubgroupLattice(SplitGroup g, lat::ZMat add_forms, lat::ZMat chars)
    : group(g), additive_forms(std::move(add_forms)), characters(std::move(chars)) {
    for (const auto& r : additive_forms)
        PASG_REQUIRE(static_cast<long>(r.size()) == group.additive_rank,
                     "additive form length mismatch");
    for (const auto& r : characters)
        PASG_REQUIRE(static_cast<long>(r.size()) == group.multiplicative_rank,
                     "character length mismatch");
    if (!additive_forms.empty())
        additive_forms = lat::saturate(additive_forms, group.additive_rank);
    if (!characters.empty()) characters = lat::saturate(characters, group.multiplicative_rank);
}

long SubgroupLattice::dim() const {
    return group.dim() - static_cast<long>(additive_forms.size()) -
           static_cast<long>(characters.size());
}

LieSubspace SubgroupLattice::lie_algebra() const {
    // block-diagonal annihilator
    long n = group.dim();
    lat::ZMat constraints;
    for (const auto& r : additive_forms) {
        lat::ZVec row(n, Z(0));
        for (long j = 0; j < group.additive_rank; ++j) row[j] = r[j];
        constraints.push_back(row);
    }
    for (const auto& r : characters) {
        lat::ZVec row(n, Z(0));
        for (long j = 0; j < group.multiplicative_rank; ++j) row[group.additive_rank + j] = r[j];
        constraints.push_back(row);
    }
    lat::ZMat basis = constraints.empty() ? lat::identity(n)
                                          : lat::kernel_basis(constraints, n);
    return LieSubspace(n, basis);
}

long character_torsion_order(const std::vector<AlgebraicNumber>& alpha, const lat::ZVec& m) {
    PASG_REQUIRE(alpha.size() == m.size(), "character length mismatch");
    AlgebraicNumber prod = AlgebraicNumber::from_rational(Q(1));
    bool have = false;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (m[i] == 0) continue;
        AlgebraicNumber term = alpha[i].pow(to_long(m[i]));
        prod = have ? prod.mul(term) : term;
        have = true;
    }
    if (!have) return 1;
    return prod.root_of_unity_order();
}

bool subgroup_membership(const GroupPoint& x, const SubgroupLattice& h) {
    PASG_REQUIRE(x.group() == h.group, "point and subgroup live in different groups");
    for (const auto& form : h.additive_forms) {
        AlgebraicNumber s = AlgebraicNumber::from_rational(Q(0));
        bool have = false;
        for (long j = 0; j < h.group.additive_rank; ++j) {
            if (form[j] == 0) continue;
            AlgebraicNumber term =
                x.additive()[j].mul(AlgebraicNumber::from_rational(Q(form[j])));
            s = have ? s.add(term) : term;
            have = true;
        }
        if (have && !s.is_zero()) return false;
    }
    for (const auto& chi : h.characters) {
        if (character_torsion_order(x.multiplicative(), chi) == 0) return false;
    }
    return true;
}

}  // namespace pasg
