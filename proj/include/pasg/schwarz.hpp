#pragma once

#include "pasg/padic.hpp"
#include "pasg/power_series.hpp"

#include <vector>

namespace pasg {

// Certified enclosure of a p-adic absolute value.
struct NormInterval {
    PNorm lo;
    PNorm hi;
};

enum class SchwarzVerdict { Holds, Violated, Indeterminate };

// All quantities of the p-adic Schwarz lemma
//   |f|_s <= max{ (s/t)^{ql} |f|_t,  mu (s/delta)^{ql-1} r_p^{-(q-1)} }
// evaluated on one instance, with certified enclosures on each side.
struct SchwarzReport {
    explicit SchwarzReport(const Prime& p)
        : s(PNorm::zero(p)), t(PNorm::zero(p)), delta(PNorm::zero(p)),
          mu{PNorm::zero(p), PNorm::zero(p)}, lhs{PNorm::zero(p), PNorm::zero(p)},
          rhs_growth{PNorm::zero(p), PNorm::zero(p)},
          rhs_points{PNorm::zero(p), PNorm::zero(p)} {}

    PNorm s;
    PNorm t;
    long q = 0;
    long l = 0;
    PNorm delta;          // min pairwise distance within Gamma
    NormInterval mu;      // sup of |f^{(m)}(gamma)|, m < q
    NormInterval lhs;     // |f|_s
    NormInterval rhs_growth;   // (s/t)^{ql} |f|_t
    NormInterval rhs_points;   // mu (s/delta)^{ql-1} r_p^{-(q-1)}
    SchwarzVerdict verdict = SchwarzVerdict::Indeterminate;
    bool holds() const { return verdict == SchwarzVerdict::Holds; }
};

// Checks the lemma's inequality on exact data. Preconditions (reported
// distinctly): t >= s > 0, q >= 1, |Gamma| >= 2, Gamma inside the closed
// ball of radius s, delta <= 1, f certified on the closed ball of radius t.
// A Violated verdict would indicate an implementation bug, not a defect of
// the underlying statement.
SchwarzReport schwarz_check(const PowerSeries& f, const PNorm& s, const PNorm& t, long q,
                            const std::vector<PAdicNumber>& gamma);

// Same check with exact rational points: every evaluation is exact, so the
// verdict is always decided (never Indeterminate) when f is a polynomial.
SchwarzReport schwarz_check(const PowerSeries& f, const PNorm& s, const PNorm& t, long q,
                            const std::vector<Q>& gamma);

}  // namespace pasg
