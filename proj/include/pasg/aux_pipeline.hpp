#pragma once

#include "pasg/multipoly.hpp"
#include "pasg/schedule.hpp"
#include "pasg/siegel.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pasg {

// The auxiliary polynomial: homogeneous of degree D in X_0..X_n, stored in
// the affine chart (X_0 = 1, T_i = X_i/X_0) as exponent vectors with integer
// coefficients. Nonzero as a polynomial on the torus chart by construction.
struct AuxPolynomial {
    long nvars = 0;
    long degree = 0;
    std::vector<std::vector<unsigned>> monomials;  // affine exponents, total <= degree
    lat::ZVec coefficients;

    MultiPoly affine() const;
    HeightValue height() const { return poly_height(coefficients); }
    std::string to_string() const;
};

// One evaluated proof-grid entry: the exact value of (Delta^t Phi_P)(s u).
struct GridValue {
    long s = 0;
    std::vector<long> t;
    bool exact_zero = true;
    std::string value;          // exact rational as text (possibly huge)
    std::optional<long> valuation;  // v_p when nonzero
    bool imposed = false;       // part of the construction system
    bool reverified = false;    // independent symbolic path agreed
};

// Structured record of one pipeline run; serializes deterministically.
struct ProofTranscript {
    // inputs
    long n = 0, k = 0, field_degree = 1;
    Z prime = 2;
    std::vector<std::string> gamma;
    lat::ZMat v_rows;
    PipelineConstants constants;
    ParameterSchedule schedule;
    // normalization
    long power_replacement = 1;  // gamma replaced by gamma^m
    std::vector<std::string> gamma_shifted;
    std::vector<long> u_valuations;
    long alpha_exponent = 1;  // r = p^{-alpha}
    std::string h_enclosure, b_enclosure;
    // construction
    long rows = 0, cols = 0;
    std::vector<Z> row_denominators;
    std::optional<AuxPolynomial> polynomial;
    std::string height_of_p, c2_bound;
    bool height_within_bound = false;
    std::vector<GridValue> grid;
    // bounds
    std::string lower_bound_note, upper_bound_note;
    std::optional<Q> upper_bound_exponent;  // log_p scale
    bool upper_bound_verified = false;
    bool lower_bounds_verified = false;
    // collision
    std::string collision_note;

    nlohmann::json to_json() const;
    std::string serialize() const;  // byte-deterministic
};

// Proposition-4.2-shaped construction: a nonzero integral P of degree D with
// (Delta^t Phi_P)(s u) = 0 for 0 <= s < S0 and every t in [0, 2T)^k, all
// zeros established and re-verified by exact algebraic evaluation.
ProofTranscript build_aux_polynomial(const SplitGroup& torus, const LieSubspace& v,
                                     const GroupPoint& gamma, const ParameterSchedule& sched,
                                     const PipelineConstants& constants);

// Least |t| with (Delta^t Phi_P)(s u) != 0, or >= max_t (sentinel -1 when
// Phi_P vanishes identically).
struct VanishingOrder {
    bool identically_zero = false;
    bool at_least_max = false;
    long order = 0;
    std::vector<long> witness_t;
};
VanishingOrder vanishing_order_along(const ProofTranscript& tr, long s, long max_t);

// Liouville lower bound at a certified-nonzero grid point; returns the
// certified bound on the log_p scale and checks the actual value against
// both the direct-height bound and the c3 formula bound.
struct LowerBoundRecord {
    Q value_log_p;        // exact: -v_p(value)
    Q direct_bound_log_p;     // certified: >= -d h(value) / log p
    Q formula_bound_log_p;    // the c3(...) shape, certified lower bound
    bool holds = false;
    std::string e_factor_note;  // Leibniz E_s factors (identically 1 here)
};
LowerBoundRecord lower_bound_at(const ProofTranscript& tr, long s, const std::vector<long>& t);

// Inequality-(3) upper bound via the p-adic Schwarz lemma at R = p^{1/(2d)}:
//   log_p |(Delta^t Phi)(s u)| <= T e_L - S0 T/(2d)
// for every |t| < T and 0 <= s < S, verified against the exact grid values.
struct UpperBoundRecord {
    Q bound_log_p;
    long gamma_points = 0;  // l = S0
    Q delta_log_p;          // min pairwise distance within {0..S0-1}
    bool mu_vanishes = false;
    bool all_grid_points_respect_bound = false;
    std::string note;
};
UpperBoundRecord upper_bound_via_schwarz(ProofTranscript& tr);

// The proof's contradiction window: whether the certified upper bound lies
// strictly below the c3 lower-bound formula, for this schedule and along a
// scaled schedule family (minimal opening scale by bisection). The final
// step of the paper's argument (the multiplicity estimate) is cited, not
// re-proved, and this verdict never claims a refutation.
struct CollisionReport {
    bool window_open_at_schedule = false;
    Q margin_log_p;              // lower_formula - upper_formula (certified)
    std::optional<long> minimal_opening_scale;
    std::vector<std::pair<long, Q>> sampled_margins;  // (scale, margin)
    std::string note;
};
CollisionReport collision_report(const ProofTranscript& tr, long max_scale = 1 << 24);

// Full pipeline on a toy instance: build, verify, bound, report.
ProofTranscript run_aux_pipeline(const SplitGroup& torus, const LieSubspace& v,
                                 const GroupPoint& gamma, const PipelineConstants& constants,
                                 const ScheduleOverrides& overrides = {});

}  // namespace pasg
