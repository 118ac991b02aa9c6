#pragma once

#include "pasg/group.hpp"
#include "pasg/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pasg {

// A verified integer relation: prod alpha_i^{m_i} is a root of unity,
// established by exact algebraic arithmetic (never by p-adic approximation).
struct RelationCertificate {
    lat::ZVec exponents;
    long torsion_order;
    std::string transcript;
};

struct RelationSearchResult {
    std::vector<RelationCertificate> certificates;  // verified generators
    lat::ZMat lattice;                              // saturated relation lattice
    long guard_precision;                           // N' actually used
    std::string guard_note;
};

// Integer-relation detection among p-adic logarithms of algebraic units.
// Discovery is p-adic (complete short-vector enumeration on the log lattice
// augmented with p^{N'}); every candidate is then verified exactly or
// discarded, so the output contains no false positives by construction.
// Precondition: `precision` at least the guard
//   N' = ceil(M n max_i(deg_i h_i) / log p) + 32.
RelationSearchResult detect_log_relations(const std::vector<AlgebraicNumber>& alpha,
                                          long exponent_bound, long precision);

// The guard precision for given inputs (recorded in every run).
long relation_guard_precision(const std::vector<AlgebraicNumber>& alpha, long exponent_bound);

// Outcome of the torus instantiation of the analytic subgroup search.
struct AsgResult {
    enum class Kind { SubgroupFound, Torsion, NotFoundUpToBound };
    Kind kind;
    std::optional<SubgroupLattice> subgroup;
    TorsionVerdict torsion;
    std::optional<RelationSearchResult> relations;
    std::string note;
};

// For a torus G, a point gamma in G(F)_f with algebraic unit coordinates and
// 0 != log(gamma) in V (x) Q_p (checked at precision), finds an algebraic
// subgroup H with gamma in H and Lie(H) inside V, both verified exactly.
// Torsion gamma short-circuits; an undiscovered relation set degrades to
// NotFoundUpToBound (the search horizon, never a counterexample).
AsgResult asg_find_subgroup(const SplitGroup& torus, const GroupPoint& gamma,
                            const LieSubspace& v, long exponent_bound, long precision);

// Is u in the Q_p-span of the subspace at the working precision?
bool padic_in_span(const LieSubspace& v, const Prime& p,
                   const std::vector<PAdicNumber>& u, long digits);

}  // namespace pasg
