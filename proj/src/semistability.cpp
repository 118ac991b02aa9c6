#include "pasg/semistability.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace pasg {

using lat::ZMat;
using lat::ZVec;
using poly::QPoly;

KernelSubspace::KernelSubspace(SplitGroup g, ZMat add, ZMat mult)
    : group(g), additive_rows(std::move(add)), multiplicative_rows(std::move(mult)) {
    for (const auto& r : additive_rows)
        PASG_REQUIRE(static_cast<long>(r.size()) == group.additive_rank,
                     "additive kernel row length mismatch");
    for (const auto& r : multiplicative_rows)
        PASG_REQUIRE(static_cast<long>(r.size()) == group.multiplicative_rank,
                     "multiplicative kernel row length mismatch");
    if (!additive_rows.empty())
        additive_rows = lat::saturate(additive_rows, group.additive_rank);
    if (!multiplicative_rows.empty())
        multiplicative_rows = lat::saturate(multiplicative_rows, group.multiplicative_rank);
}

std::vector<Z> KernelSubspace::flat() const {
    std::vector<Z> f;
    f.push_back(Z(dim()));
    for (const auto& r : additive_rows) f.insert(f.end(), r.begin(), r.end());
    f.push_back(Z(-7));  // block separator
    for (const auto& r : multiplicative_rows) f.insert(f.end(), r.begin(), r.end());
    return f;
}

std::string KernelSubspace::to_string() const {
    std::ostringstream os;
    os << "W(add={";
    for (const auto& r : additive_rows) {
        os << "[";
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
        os << "]";
    }
    os << "}, mult={";
    for (const auto& r : multiplicative_rows) {
        os << "[";
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
        os << "]";
    }
    os << "})";
    return os.str();
}

Q tau(const SplitGroup& g, const LieSubspace& v) {
    PASG_REQUIRE(v.ambient_dim() == g.dim(), "subspace ambient dimension mismatch");
    Q t(v.dim(), g.dim());
    t.canonicalize();
    return t;
}

namespace {

// embed block rows into K^n coordinates as QPoly entries
std::vector<std::vector<QPoly>> embed_kernel(const SplitGroup& g, const KernelSubspace& w) {
    std::vector<std::vector<QPoly>> rows;
    long n = g.dim();
    for (const auto& r : w.additive_rows) {
        std::vector<QPoly> row(n);
        for (long j = 0; j < g.additive_rank; ++j)
            if (r[j] != 0) row[j] = QPoly{Q(r[j])};
        rows.push_back(std::move(row));
    }
    for (const auto& r : w.multiplicative_rows) {
        std::vector<QPoly> row(n);
        for (long j = 0; j < g.multiplicative_rank; ++j)
            if (r[j] != 0) row[g.additive_rank + j] = QPoly{Q(r[j])};
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Q quotient_tau(const SplitGroup& g, const LieSubspace& v, const KernelSubspace& w) {
    PASG_REQUIRE(v.ambient_dim() == g.dim(), "subspace ambient dimension mismatch");
    PASG_REQUIRE(w.group == g, "kernel of a different group");
    PASG_REQUIRE(w.dim() >= 1 && w.dim() <= g.dim(), "kernel must be a proper nontrivial datum");
    long nq = g.dim() - w.dim();
    if (nq == 0) return Q(1);
    // dim(V cap W) = dim V + dim W - rank(stacked)
    std::vector<std::vector<QPoly>> stacked = v.rows();
    for (auto& row : embed_kernel(g, w)) stacked.push_back(std::move(row));
    long r = rank_nf(v.field(), stacked);
    long cap = v.dim() + w.dim() - r;
    long pushed = v.dim() - cap;
    Q t(pushed, nq);
    t.canonicalize();
    return t;
}

std::vector<KernelSubspace> kernel_family(const SplitGroup& g, long bound) {
    PASG_REQUIRE(bound >= 1, "search bound must be >= 1");
    static std::mutex cache_mutex;
    static std::map<std::tuple<long, long, long>, std::vector<KernelSubspace>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({g.additive_rank, g.multiplicative_rank, bound});
        if (it != cache.end()) return it->second;
    }

    auto primitive_vectors = [&](long dim) {
        std::vector<ZVec> out;
        if (dim == 0) return out;
        ZVec v(dim, Z(-bound));
        for (;;) {
            // first nonzero entry positive, content 1
            bool zero = true, lead_pos = false;
            for (const Z& x : v)
                if (x != 0) {
                    zero = false;
                    lead_pos = (x > 0);
                    break;
                }
            if (!zero && lead_pos) {
                Z c(0);
                for (const Z& x : v) {
                    Z t;
                    mpz_gcd(t.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
                    c = t;
                }
                if (c == 1) out.push_back(v);
            }
            long i = 0;
            while (i < dim && v[i] == bound) v[i++] = -bound;
            if (i == dim) break;
            v[i] += 1;
        }
        return out;
    };

    // per block: canonical saturated bases of the generated subspaces keyed
    // by their HNF, for generator subsets of each size
    auto block_subspaces = [&](long dim) {
        std::vector<ZMat> out{ZMat{}};  // the zero subspace
        if (dim == 0) return out;
        std::vector<ZVec> prim = primitive_vectors(dim);
        std::map<std::vector<Z>, ZMat> seen;
        auto key_of = [](const ZMat& m) {
            std::vector<Z> k;
            for (const auto& r : m) k.insert(k.end(), r.begin(), r.end());
            return k;
        };
        // size-1 subsets
        for (const ZVec& v : prim) {
            ZMat basis = lat::hnf(ZMat{v}).h;
            seen.emplace(key_of(basis), basis);
        }
        // proper subsets of larger size
        for (long s = 2; s < dim; ++s) {
            PASG_REQUIRE(s <= 2, "search bound too coarse for blocks of dimension > 3");
            for (size_t i = 0; i < prim.size(); ++i) {
                for (size_t j = i + 1; j < prim.size(); ++j) {
                    ZMat m{prim[i], prim[j]};
                    if (lat::rank(m) < 2) continue;
                    ZMat basis = lat::hnf(lat::saturate(m, dim)).h;
                    seen.emplace(key_of(basis), basis);
                }
            }
        }
        // the full block
        ZMat full = lat::identity(dim);
        seen.emplace(key_of(full), full);
        for (auto& [k, m] : seen) out.push_back(m);
        return out;
    };

    std::vector<ZMat> add_spaces = block_subspaces(g.additive_rank);
    std::vector<ZMat> mult_spaces = block_subspaces(g.multiplicative_rank);
    std::vector<KernelSubspace> family;
    for (const ZMat& wa : add_spaces)
        for (const ZMat& wm : mult_spaces) {
            if (wa.empty() && wm.empty()) continue;
            family.emplace_back(g, wa, wm);
        }
    std::sort(family.begin(), family.end(), [](const KernelSubspace& a, const KernelSubspace& b) {
        return a.flat() < b.flat();
    });

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[{g.additive_rank, g.multiplicative_rank, bound}] = family;
    return family;
}

namespace {

// decompose a saturated rational subspace into block pieces if possible
std::optional<KernelSubspace> block_decompose(const SplitGroup& g, const ZMat& rows) {
    if (rows.empty()) return std::nullopt;
    long a = g.additive_rank, b = g.multiplicative_rank;
    long n = g.dim();
    // S cap (Q^a + 0): x = c * rows with the multiplicative block zero
    ZMat mult_cols(rows.size(), ZVec(b, Z(0)));
    ZMat add_cols(rows.size(), ZVec(a, Z(0)));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (long j = 0; j < a; ++j) add_cols[i][j] = rows[i][j];
        for (long j = 0; j < b; ++j) mult_cols[i][j] = rows[i][a + j];
    }
    auto intersect_block = [&](const ZMat& other_cols, const ZMat& this_cols, long this_dim) {
        ZMat combos = other_cols.empty() || other_cols[0].empty()
                          ? lat::identity(rows.size())
                          : [&] {
                                ZMat t(other_cols[0].size(), ZVec(rows.size()));
                                for (size_t i = 0; i < rows.size(); ++i)
                                    for (size_t j = 0; j < other_cols[0].size(); ++j)
                                        t[j][i] = other_cols[i][j];
                                return lat::kernel_basis(t, rows.size());
                            }();
        ZMat basis;
        for (const auto& c : combos) {
            ZVec v(this_dim, Z(0));
            for (size_t i = 0; i < rows.size(); ++i)
                for (long j = 0; j < this_dim; ++j) v[j] += c[i] * this_cols[i][j];
            bool nz = false;
            for (const Z& x : v)
                if (x != 0) nz = true;
            if (nz) basis.push_back(v);
        }
        if (basis.empty()) return basis;
        return lat::saturate(basis, this_dim);
    };
    ZMat wa = a > 0 ? intersect_block(mult_cols, add_cols, a) : ZMat{};
    ZMat wm = b > 0 ? intersect_block(add_cols, mult_cols, b) : ZMat{};
    if (static_cast<long>(wa.size() + wm.size()) != static_cast<long>(rows.size()))
        return std::nullopt;  // not block-decomposable
    (void)n;
    return KernelSubspace(g, wa, wm);
}

}  // namespace

SemistabilityReport is_semistable(const SplitGroup& g, const LieSubspace& v, long search_bound) {
    PASG_REQUIRE(search_bound >= 1, "search bound must be >= 1");
    Q t = tau(g, v);
    SemistabilityReport rep{SemistabilityKind::SemistableUpToBound, t, std::nullopt, Q(0), "",
                            search_bound, {}};

    long k = v.dim(), n = g.dim();
    if (k == 0) {
        rep.kind = SemistabilityKind::SemistableCertified;
        rep.reason = "tau = 0 is minimal over every quotient";
        return rep;
    }
    if (k == n) {
        rep.kind = SemistabilityKind::SemistableCertified;
        rep.reason = "V = Lie(G): every quotient image is the full Lie algebra";
        return rep;
    }

    std::vector<Q> taus;
    auto consider = [&](const KernelSubspace& w) -> bool {
        Q qt = quotient_tau(g, v, w);
        taus.push_back(qt);
        if (qt < t) {
            rep.kind = SemistabilityKind::NotSemistable;
            rep.witness = w;
            rep.witness_tau = qt;
            return true;
        }
        return false;
    };

    auto finish = [&]() {
        std::sort(taus.begin(), taus.end());
        taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
        rep.taus_encountered = taus;
        return rep;
    };

    // structured candidates first: V itself (when rational and a valid
    // block kernel), then the maximal rational subspace inside V
    lat::ZMat vrat = v.maximal_rational_subspace();
    if (static_cast<long>(vrat.size()) == k) {
        auto wv = block_decompose(g, vrat);
        if (wv && consider(*wv)) return finish();
    }
    if (!vrat.empty() && static_cast<long>(vrat.size()) < k) {
        auto wv = block_decompose(g, vrat);
        if (wv && consider(*wv)) return finish();
    }

    // exact certification: an irrational line in dimension <= 2 meets every
    // rational proper kernel trivially
    if (n <= 2 && k == 1 && vrat.empty()) {
        // the only proper quotients have 1-dimensional rational kernels W;
        // V cap W_Kbar nonzero would force V = W_Kbar, i.e. V rational
        rep.kind = SemistabilityKind::SemistableCertified;
        rep.reason = "irrational line in a 2-dimensional group";
        return rep;
    }

    for (const KernelSubspace& w : kernel_family(g, search_bound)) {
        if (consider(w)) return finish();
    }

    // blocks of dimension <= 1 admit only the enumerated kernels, so the
    // search was exhaustive
    if (g.additive_rank <= 1 && g.multiplicative_rank <= 1) {
        rep.kind = SemistabilityKind::SemistableCertified;
        rep.reason = "all quotient kernels enumerated (blocks of dimension <= 1)";
        return finish();
    }

    rep.kind = SemistabilityKind::SemistableUpToBound;
    std::ostringstream os;
    os << "no tau-decreasing quotient among kernels with entries <= " << search_bound;
    rep.reason = os.str();
    return finish();
}

std::pair<SplitGroup, LieSubspace> push_forward(const SplitGroup& g, const LieSubspace& v,
                                                const KernelSubspace& w) {
    long a = g.additive_rank, b = g.multiplicative_rank;
    long wa = static_cast<long>(w.additive_rows.size());
    long wm = static_cast<long>(w.multiplicative_rows.size());
    PASG_REQUIRE(w.dim() < g.dim(), "push forward needs a proper quotient");
    // quotient coordinates: saturated annihilator lattices of the blocks
    ZMat proj_a = w.additive_rows.empty() ? lat::identity(a)
                                          : lat::kernel_basis(w.additive_rows, a);
    ZMat proj_m = w.multiplicative_rows.empty() ? lat::identity(b)
                                                : lat::kernel_basis(w.multiplicative_rows, b);
    if (a == 0) proj_a.clear();
    if (b == 0) proj_m.clear();
    SplitGroup quotient(a - wa, b - wm);
    // map V rows
    std::vector<std::vector<QPoly>> images;
    for (const auto& row : v.rows()) {
        std::vector<QPoly> img;
        for (const auto& lam : proj_a) {
            QPoly s;
            for (long j = 0; j < a; ++j) {
                if (lam[j] == 0 || row[j].empty()) continue;
                s = poly::add(s, poly::scale(row[j], Q(lam[j])));
            }
            img.push_back(s);
        }
        for (const auto& lam : proj_m) {
            QPoly s;
            for (long j = 0; j < b; ++j) {
                if (lam[j] == 0 || row[a + j].empty()) continue;
                s = poly::add(s, poly::scale(row[a + j], Q(lam[j])));
            }
            img.push_back(s);
        }
        images.push_back(std::move(img));
    }
    // independent subset
    std::vector<std::vector<QPoly>> basis;
    for (const auto& img : images) {
        auto trial = basis;
        trial.push_back(img);
        if (rank_nf(v.field(), trial) == static_cast<long>(trial.size())) basis = trial;
    }
    return {quotient, LieSubspace(quotient.dim(), v.field(), basis)};
}

namespace {

// tau-minimizing kernel of the searched family keeping the quotient
// positive-dimensional; lexicographically smallest on ties
KernelSubspace minimizing_kernel(const SplitGroup& g, const LieSubspace& v, long bound,
                                 Q& out_tau) {
    std::optional<KernelSubspace> best;
    Q best_tau(0);
    auto consider = [&](const KernelSubspace& w) {
        if (w.dim() >= g.dim()) return;
        Q qt = quotient_tau(g, v, w);
        if (!best || qt < best_tau || (qt == best_tau && w.flat() < best->flat())) {
            best = w;
            best_tau = qt;
        }
    };
    lat::ZMat vrat = v.maximal_rational_subspace();
    if (!vrat.empty()) {
        auto wv = block_decompose(g, vrat);
        if (wv) consider(*wv);
    }
    for (const KernelSubspace& w : kernel_family(g, bound)) consider(w);
    PASG_CHECK(best.has_value(), "no quotient available for reduction");
    out_tau = best_tau;
    return *best;
}

}  // namespace

ReductionResult semistable_reduction(const SplitGroup& g, const LieSubspace& v,
                                     long search_bound) {
    SemistabilityReport first = is_semistable(g, v, search_bound);
    PASG_REQUIRE(first.kind == SemistabilityKind::NotSemistable,
                 "semistable reduction called on a pair not known unstable");

    // descent: pass to the tau-minimizing quotient; if the result is still
    // unstable within the bound, compose with a further quotient (the
    // Lemma's argument, dimension strictly decreasing)
    SplitGroup cur_g = g;
    LieSubspace cur_v = v;
    // composed projections from the original coordinates
    lat::ZMat proj_a = lat::identity(g.additive_rank);
    lat::ZMat proj_m = lat::identity(g.multiplicative_rank);
    Q first_tau(0);
    bool have_first = false;
    for (;;) {
        Q step_tau(0);
        KernelSubspace w = minimizing_kernel(cur_g, cur_v, search_bound, step_tau);
        if (!have_first) {
            first_tau = step_tau;
            have_first = true;
        }
        lat::ZMat lam_a = w.additive_rows.empty()
                              ? lat::identity(cur_g.additive_rank)
                              : lat::kernel_basis(w.additive_rows, cur_g.additive_rank);
        lat::ZMat lam_m = w.multiplicative_rows.empty()
                              ? lat::identity(cur_g.multiplicative_rank)
                              : lat::kernel_basis(w.multiplicative_rows,
                                                  cur_g.multiplicative_rank);
        if (cur_g.additive_rank == 0) lam_a.clear();
        if (cur_g.multiplicative_rank == 0) lam_m.clear();
        proj_a = proj_a.empty() ? proj_a : (lam_a.empty() ? lat::ZMat{} : lat::matmul(lam_a, proj_a));
        proj_m = proj_m.empty() ? proj_m : (lam_m.empty() ? lat::ZMat{} : lat::matmul(lam_m, proj_m));
        auto [qg, qv] = push_forward(cur_g, cur_v, w);
        cur_g = qg;
        cur_v = qv;
        SemistabilityReport recheck = is_semistable(cur_g, cur_v, search_bound);
        if (recheck.kind != SemistabilityKind::NotSemistable) {
            // total kernel in the original coordinates
            lat::ZMat ker_a = (g.additive_rank == 0 || proj_a.empty())
                                  ? lat::ZMat{}
                                  : lat::kernel_basis(proj_a, g.additive_rank);
            lat::ZMat ker_m = (g.multiplicative_rank == 0 || proj_m.empty())
                                  ? lat::ZMat{}
                                  : lat::kernel_basis(proj_m, g.multiplicative_rank);
            if (g.additive_rank > 0 && proj_a.empty()) ker_a = lat::identity(g.additive_rank);
            if (g.multiplicative_rank > 0 && proj_m.empty())
                ker_m = lat::identity(g.multiplicative_rank);
            KernelSubspace total(g, ker_a, ker_m);
            return ReductionResult{total, first_tau, cur_g, cur_v, recheck};
        }
        PASG_CHECK(cur_g.dim() >= 1, "reduction descended past dimension one");
    }
}

}  // namespace pasg
