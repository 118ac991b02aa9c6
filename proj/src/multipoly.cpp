#include "pasg/multipoly.hpp"

#include <sstream>

namespace pasg {

MultiPoly MultiPoly::constant(long nvars, const Q& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(long nvars, long i) {
    PASG_CHECK(i >= 0 && i < nvars, "variable index out of range");
    MultiPoly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::set(const Expo& e, const Q& c) {
    PASG_CHECK(static_cast<long>(e.size()) == nvars_, "exponent arity mismatch");
    if (c == 0) {
        terms_.erase(e);
    } else {
        terms_[e] = c;
    }
}

Q MultiPoly::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Q(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    PASG_CHECK(nvars_ == o.nvars_, "arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        Q v = r.coefficient(e) + c;
        r.set(e, v);
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + o.scale(Q(-1));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    PASG_CHECK(nvars_ == o.nvars_, "arity mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (long i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            Q v = r.coefficient(e) + c1 * c2;
            r.set(e, v);
        }
    }
    return r;
}

MultiPoly MultiPoly::scale(const Q& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MultiPoly MultiPoly::derivative(long var) const {
    PASG_CHECK(var >= 0 && var < nvars_, "variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.set(d, r.coefficient(d) + c * static_cast<long>(e[var]));
    }
    return r;
}

Q MultiPoly::evaluate(const std::vector<Q>& x) const {
    PASG_CHECK(static_cast<long>(x.size()) == nvars_, "arity mismatch");
    Q s(0);
    for (const auto& [e, c] : terms_) {
        Q t = c;
        for (long i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

poly::QPoly MultiPoly::evaluate(const NumberField& k, const std::vector<poly::QPoly>& x) const {
    PASG_CHECK(static_cast<long>(x.size()) == nvars_, "arity mismatch");
    poly::QPoly s;
    for (const auto& [e, c] : terms_) {
        poly::QPoly t{c};
        for (long i = 0; i < nvars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t = k.mul(t, x[i]);
        s = k.add(s, t);
    }
    return s;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
    PASG_CHECK(static_cast<long>(args.size()) == nvars_, "arity mismatch");
    long out_vars = args.empty() ? nvars_ : args[0].nvars();
    MultiPoly s(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_vars, c);
        for (long i = 0; i < nvars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t = t * args[i];
        s = s + t;
    }
    return s;
}

std::vector<Q> MultiPoly::coefficient_vector() const {
    std::vector<Q> v;
    for (const auto& [e, c] : terms_) v.push_back(c);
    return v;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (long i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (static_cast<size_t>(i) < names.size()) {
                os << names[i];
            } else {
                os << "T" << i + 1;
            }
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace pasg
