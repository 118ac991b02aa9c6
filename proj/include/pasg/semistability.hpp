#pragma once

#include "pasg/group.hpp"
#include "pasg/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pasg {

// A rational kernel subspace of Lie(G), block-structured (no additive/
// multiplicative mixing for split groups). Rows are saturated integer bases.
struct KernelSubspace {
    SplitGroup group;
    lat::ZMat additive_rows;
    lat::ZMat multiplicative_rows;

    KernelSubspace(SplitGroup g, lat::ZMat add, lat::ZMat mult);
    long dim() const {
        return static_cast<long>(additive_rows.size() + multiplicative_rows.size());
    }
    // flattened canonical form for deterministic ordering
    std::vector<Z> flat() const;
    std::string to_string() const;
};

// tau(G, V) = dim V / dim G, or 1 for the zero group.
Q tau(const SplitGroup& g, const LieSubspace& v);

// tau of (G/W, pi_* V); dim pi_*V = dim V - dim(V cap W). "1 otherwise" when
// the quotient is the zero group.
Q quotient_tau(const SplitGroup& g, const LieSubspace& v, const KernelSubspace& w);

enum class SemistabilityKind { NotSemistable, SemistableCertified, SemistableUpToBound };

struct SemistabilityReport {
    SemistabilityKind kind;
    Q tau_value;                            // tau(G, V)
    std::optional<KernelSubspace> witness;  // NotSemistable: tau(quotient) < tau
    Q witness_tau;
    std::string reason;                     // certification rule or bound note
    long search_bound = 0;
    std::vector<Q> taus_encountered;        // sorted, deduplicated
};

// Proper-quotient kernels searched: V itself when rational, the maximal
// rational subspace inside V, coordinate subspaces, and every block-
// structured subspace generated by primitive vectors with entries <= bound.
SemistabilityReport is_semistable(const SplitGroup& g, const LieSubspace& v, long search_bound);

struct ReductionResult {
    KernelSubspace kernel;               // minimizing kernel W*
    Q quotient_tau_value;
    SplitGroup quotient_group;
    LieSubspace pushed_subspace;         // pi_* V
    SemistabilityReport recheck;         // quotient pair re-tested
};

// Lemma-shaped semistable reduction: over the searched family, pass to the
// quotient minimizing tau (lexicographically smallest kernel on ties).
ReductionResult semistable_reduction(const SplitGroup& g, const LieSubspace& v,
                                     long search_bound);

// The searched kernel family for a given bound (deterministic order).
std::vector<KernelSubspace> kernel_family(const SplitGroup& g, long bound);

// pi_* V for the quotient by W, together with the quotient group.
std::pair<SplitGroup, LieSubspace> push_forward(const SplitGroup& g, const LieSubspace& v,
                                                const KernelSubspace& w);

}  // namespace pasg
