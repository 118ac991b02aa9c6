#include "pasg/intpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pasg::poly {

long deg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }
long deg(const QPoly& f) { return static_cast<long>(f.size()) - 1; }

void strip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
void strip(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly to_q(const ZPoly& f) {
    QPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = Q(f[i]);
    return g;
}

ZPoly primitive_from_q(const QPoly& f) {
    QPoly g = f;
    strip(g);
    if (g.empty()) return {};
    Z den(1);
    for (const Q& c : g) {
        Z d;
        mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = d;
    }
    ZPoly h(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        Q c = g[i] * den;
        PASG_CHECK(c.get_den() == 1, "denominator clearing failed");
        h[i] = c.get_num();
    }
    return primitive_part(h);
}

Z content(const ZPoly& f) {
    Z c(0);
    for (const Z& a : f) {
        Z g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        c = g;
    }
    return c;
}

ZPoly primitive_part(const ZPoly& f) {
    ZPoly g = f;
    strip(g);
    if (g.empty()) return g;
    Z c = content(g);
    if (g.back() < 0) c = -c;
    for (Z& a : g) a /= c;
    return g;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Z(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    strip(c);
    return c;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Z(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    strip(c);
    return c;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    strip(c);
    return c;
}

ZPoly derivative(const ZPoly& f) {
    ZPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    strip(d);
    return d;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()), Q(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    strip(c);
    return c;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    return add(a, scale(b, Q(-1)));
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Q(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    strip(c);
    return c;
}

QPoly scale(const QPoly& a, const Q& c) {
    if (c == 0) return {};
    QPoly b = a;
    for (Q& x : b) x *= c;
    return b;
}

Q eval(const QPoly& f, const Q& x) {
    Q v(0);
    for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
    return v;
}

Z eval(const ZPoly& f, const Z& x) {
    Z v(0);
    for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
    return v;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    PASG_REQUIRE(!b.empty(), "polynomial division by zero");
    QPoly r = a;
    strip(r);
    QPoly q;
    long db = deg(b);
    if (deg(r) >= db) q.assign(deg(r) - db + 1, Q(0));
    while (deg(r) >= db) {
        long k = deg(r) - db;
        Q c = r.back() / b.back();
        q[k] = c;
        for (long i = 0; i <= db; ++i) r[k + i] -= c * b[i];
        strip(r);
    }
    return {q, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    strip(f);
    strip(g);
    while (!g.empty()) {
        QPoly r = divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.empty()) return f;
    return scale(f, 1 / f.back());
}

QPoly powmod(const QPoly& a, const Z& e, const QPoly& m) {
    PASG_CHECK(e >= 0, "powmod needs non-negative exponent");
    QPoly base = divrem(a, m).second;
    QPoly acc{Q(1)};
    Z k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = divrem(mul(acc, base), m).second;
        k >>= 1;
        if (k > 0) base = divrem(mul(base, base), m).second;
    }
    return acc;
}

Q resultant(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    strip(f);
    strip(g);
    if (f.empty() || g.empty()) return Q(0);
    Q res(1);
    // res(f,g) = lc(g)^{df-dr} (-1)^{df dg} res(g, f mod g)
    while (deg(g) > 0) {
        QPoly r = divrem(f, g).second;
        long df = deg(f), dg = deg(g), dr = deg(r);
        if ((df % 2) && (dg % 2)) res = -res;
        res *= pow_q(g.back(), df - (r.empty() ? 0 : dr));
        if (r.empty()) return Q(0);
        f = std::move(g);
        g = std::move(r);
    }
    res *= pow_q(g.back(), deg(f));
    return res;
}

ZPoly squarefree_part(const ZPoly& f) {
    ZPoly g = primitive_part(f);
    if (deg(g) <= 0) return g;
    QPoly d = gcd(to_q(g), to_q(derivative(g)));
    if (deg(d) == 0) return g;
    QPoly q = divrem(to_q(g), d).first;
    return primitive_from_q(q);
}

namespace {

// ---- arithmetic in F_q[x] for a big prime q -------------------------------

struct Fq {
    Z q;
    Z norm(const Z& a) const {
        Z r = a % q;
        if (r < 0) r += q;
        return r;
    }
    Z inv(const Z& a) const {
        Z r;
        int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        PASG_CHECK(ok != 0, "non-invertible residue");
        return r;
    }
};

using FqPoly = std::vector<Z>;

void fq_strip(FqPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FqPoly fq_from(const Fq& F, const ZPoly& f) {
    FqPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = F.norm(f[i]);
    fq_strip(g);
    return g;
}

FqPoly fq_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.norm(c[i + j] + a[i] * b[j]);
    fq_strip(c);
    return c;
}

FqPoly fq_rem(const Fq& F, FqPoly a, const FqPoly& b) {
    fq_strip(a);
    long db = static_cast<long>(b.size()) - 1;
    PASG_CHECK(db >= 0, "mod by zero polynomial");
    Z lcinv = F.inv(b.back());
    while (static_cast<long>(a.size()) - 1 >= db) {
        long k = static_cast<long>(a.size()) - 1 - db;
        Z c = F.norm(a.back() * lcinv);
        for (long i = 0; i <= db; ++i) a[k + i] = F.norm(a[k + i] - c * b[i]);
        fq_strip(a);
    }
    return a;
}

FqPoly fq_gcd(const Fq& F, FqPoly a, FqPoly b) {
    fq_strip(a);
    fq_strip(b);
    while (!b.empty()) {
        FqPoly r = fq_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Z inv = F.inv(a.back());
        for (Z& c : a) c = F.norm(c * inv);
    }
    return a;
}

FqPoly fq_powmod(const Fq& F, FqPoly base, Z e, const FqPoly& m) {
    FqPoly acc{Z(1)};
    base = fq_rem(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fq_rem(F, fq_mul(F, acc, base), m);
        e >>= 1;
        if (e > 0) base = fq_rem(F, fq_mul(F, base, base), m);
    }
    return acc;
}

FqPoly fq_sub(const Fq& F, FqPoly a, const FqPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Z(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.norm(a[i] - b[i]);
    fq_strip(a);
    return a;
}

FqPoly fq_divexact(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r = a, q;
    fq_strip(r);
    long db = static_cast<long>(b.size()) - 1;
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Z(0));
    Z lcinv = F.inv(b.back());
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        long k = static_cast<long>(r.size()) - 1 - db;
        Z c = F.norm(r.back() * lcinv);
        q[k] = c;
        for (long i = 0; i <= db; ++i) r[k + i] = F.norm(r[k + i] - c * b[i]);
        fq_strip(r);
    }
    PASG_CHECK(r.empty(), "division was not exact in F_q[x]");
    return q;
}

// Cantor-Zassenhaus equal-degree splitting; q odd.
void equal_degree_split(const Fq& F, const FqPoly& f, long d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
    long n = static_cast<long>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Z exponent = (pow_z(F.q, static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        FqPoly r(n, Z(0));
        for (long i = 0; i < n; ++i) {
            Z v(rng());
            r[i] = F.norm(v);
        }
        fq_strip(r);
        if (r.empty()) continue;
        FqPoly s = fq_powmod(F, r, exponent, f);
        s = fq_sub(F, s, FqPoly{Z(1)});
        if (s.empty()) continue;
        FqPoly g = fq_gcd(F, f, s);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg <= 0 || dg >= n) continue;
        equal_degree_split(F, g, d, rng, out);
        equal_degree_split(F, fq_divexact(F, f, g), d, rng, out);
        return;
    }
}

// Monic irreducible factors of a squarefree monic f over F_q.
std::vector<FqPoly> fq_factor_squarefree(const Fq& F, FqPoly f) {
    std::vector<FqPoly> out;
    std::mt19937_64 rng(0x5eed1234abcdULL);  // fixed seed: deterministic output
    FqPoly x{Z(0), Z(1)};
    FqPoly h = x;
    long d = 0;
    while (static_cast<long>(f.size()) - 1 >= 2 * (d + 1)) {
        ++d;
        h = fq_powmod(F, h, F.q, f);  // h = x^{q^d} mod f
        FqPoly g = fq_gcd(F, f, fq_sub(F, h, x));
        if (static_cast<long>(g.size()) - 1 > 0) {
            equal_degree_split(F, g, d, rng, out);
            f = fq_divexact(F, f, g);
            h = fq_rem(F, h, f);
        }
    }
    if (static_cast<long>(f.size()) - 1 > 0) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

// Exact division over Z; returns empty if not divisible.
bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) return false;
    QPoly q, r;
    std::tie(q, r) = divrem(to_q(a), to_q(b));
    if (!r.empty()) return false;
    ZPoly qz(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return false;
        qz[i] = q[i].get_num();
    }
    quotient = qz;
    return true;
}

Z mignotte_bound(const ZPoly& f) {
    // any factor h of f: ||h||_inf <= 2^deg f * ||f||_2; multiply by |lc(f)|
    // to cover the leading-coefficient-scaled candidates
    Z s(0);
    for (const Z& c : f) s += c * c;
    Z norm2;
    mpz_sqrt(norm2.get_mpz_t(), s.get_mpz_t());
    norm2 += 1;
    return (Z(1) << static_cast<unsigned long>(deg(f))) * norm2 * abs(f.back());
}

Z next_prime(const Z& n) {
    Z p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

Z centered(const Z& a, const Z& q) {
    Z r = a % q;
    if (r < 0) r += q;
    if (2 * r > q) r -= q;
    return r;
}

// Irreducible factors of a primitive squarefree polynomial with positive lc.
std::vector<ZPoly> factor_primitive_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    if (deg(f) <= 1) {
        out.push_back(f);
        return out;
    }
    // big single prime: factor candidates are read off directly from the
    // centered residues, no Hensel lifting needed at these degrees
    Z q = next_prime(2 * mignotte_bound(f) + 3);
    Fq F{q};
    for (;;) {
        FqPoly fb = fq_from(F, f);
        if (static_cast<long>(fb.size()) - 1 == deg(f)) {
            FqPoly d = fq_gcd(F, fb, fq_from(F, derivative(f)));
            if (static_cast<long>(d.size()) - 1 == 0) break;
        }
        q = next_prime(q);
        F.q = q;
    }
    // make monic mod q
    FqPoly fb = fq_from(F, f);
    Z lcinv = F.inv(fb.back());
    for (Z& c : fb) c = F.norm(c * lcinv);
    std::vector<FqPoly> modular = fq_factor_squarefree(F, fb);

    // subset recombination
    std::vector<int> alive(modular.size(), 1);
    ZPoly current = f;
    size_t alive_count = modular.size();
    for (size_t take = 1; take <= alive_count && 2 * take <= alive_count + 1; ++take) {
        bool found = true;
        while (found && 2 * take <= alive_count) {
            found = false;
            std::vector<size_t> idx;
            for (size_t i = 0; i < modular.size(); ++i)
                if (alive[i]) idx.push_back(i);
            // iterate over combinations of `idx` of size `take`
            std::vector<size_t> c(take);
            for (size_t i = 0; i < take; ++i) c[i] = i;
            while (true) {
                FqPoly raw{F.norm(current.back())};
                for (size_t i = 0; i < take; ++i) raw = fq_mul(F, raw, modular[idx[c[i]]]);
                ZPoly cand(raw.size());
                for (size_t i = 0; i < raw.size(); ++i) cand[i] = centered(raw[i], q);
                cand = primitive_part(cand);
                ZPoly quot;
                if (deg(cand) >= 1 && try_divexact(current, cand, quot)) {
                    out.push_back(cand);
                    current = primitive_part(quot);
                    for (size_t i = 0; i < take; ++i) alive[idx[c[i]]] = 0;
                    alive_count -= take;
                    found = true;
                    break;
                }
                // next combination
                long pos = static_cast<long>(take) - 1;
                while (pos >= 0 && c[pos] == idx.size() - take + pos) --pos;
                if (pos < 0) break;
                ++c[pos];
                for (size_t i = pos + 1; i < take; ++i) c[i] = c[i - 1] + 1;
            }
        }
    }
    if (deg(current) >= 1) out.push_back(current);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly g = primitive_part(f);
    PASG_REQUIRE(!g.empty(), "cannot factor the zero polynomial");
    if (deg(g) == 0) return out;
    ZPoly sf = squarefree_part(g);
    std::vector<ZPoly> irred = factor_primitive_squarefree(sf);
    ZPoly check{Z(1)};
    for (const ZPoly& h : irred) {
        int mult = 0;
        ZPoly quot;
        while (try_divexact(g, h, quot)) {
            g = quot;
            ++mult;
        }
        PASG_CHECK(mult >= 1, "factor does not divide input");
        out.emplace_back(h, mult);
        for (int i = 0; i < mult; ++i) check = mul(check, h);
    }
    PASG_CHECK(deg(g) == 0, "factorization incomplete");
    check = primitive_part(check);
    PASG_CHECK(check == primitive_part(f), "factorization reconstruction failed");
    return out;
}

bool is_irreducible(const ZPoly& f) {
    ZPoly g = primitive_part(f);
    if (deg(g) < 1) return false;
    auto fac = factor(g);
    return fac.size() == 1 && fac[0].second == 1;
}

long root_of_unity_order(const ZPoly& f) {
    long d = deg(f);
    if (d < 1) return 0;
    if (f.back() != 1) return 0;  // cyclotomic polynomials are monic
    QPoly fq = to_q(f);
    // phi(n) = d forces n <= 2 d^2 comfortably at these degrees
    for (long n = 1; n <= 2 * d * d + 2; ++n) {
        QPoly xn = powmod(QPoly{Q(0), Q(1)}, Z(n), fq);
        if (xn.size() == 1 && xn[0] == 1) return n;
    }
    return 0;
}

std::string to_string(const ZPoly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << (f[i] > 0 ? " + " : " - ");
        else if (f[i] < 0) os << "-";
        Z a = abs(f[i]);
        first = false;
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace pasg::poly
