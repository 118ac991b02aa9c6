#pragma once

#include "pasg/number_field.hpp"
#include "pasg/util.hpp"

#include <map>
#include <vector>

namespace pasg {

// Sparse multivariate polynomial over Q, exponent-vector keyed. Sizes here
// are desk scale (a few variables, modest degree), so a map is plenty.
class MultiPoly {
public:
    using Expo = std::vector<unsigned>;

    explicit MultiPoly(long nvars) : nvars_(nvars) {}
    static MultiPoly constant(long nvars, const Q& c);
    static MultiPoly variable(long nvars, long i);

    long nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    long total_degree() const;
    const std::map<Expo, Q>& terms() const { return terms_; }

    void set(const Expo& e, const Q& c);
    Q coefficient(const Expo& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Q& c) const;
    MultiPoly derivative(long var) const;

    Q evaluate(const std::vector<Q>& x) const;
    // evaluation with number-field arguments
    poly::QPoly evaluate(const NumberField& k, const std::vector<poly::QPoly>& x) const;
    // substitution of polynomials for the variables
    MultiPoly compose(const std::vector<MultiPoly>& args) const;

    std::vector<Q> coefficient_vector() const;  // in term order
    std::string to_string(const std::vector<std::string>& names = {}) const;

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    long nvars_;
    std::map<Expo, Q> terms_;
};

}  // namespace pasg
