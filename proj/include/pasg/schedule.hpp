#pragma once

#include "pasg/derivation.hpp"
#include "pasg/group.hpp"
#include "pasg/subgroup.hpp"

#include <optional>
#include <string>

namespace pasg {

// Pinned pipeline constants. The proof only needs existence of constants;
// the artifact picks explicit defaults and records them in every transcript.
struct PipelineConstants {
    Q c = Q(3);             // schedule constant
    long c1_factor = 3;     // c1 = c1_factor * 2^k
    long c23_factor = 16;   // c2 = c3 = c23_factor * n^2 * (N+1), N = n here
    long c1(long k) const { return c1_factor * (1L << k); }
    long c23(long n) const { return c23_factor * n * n * (n + 1); }
};

struct ScheduleOverrides {
    std::optional<long> s0, s, d, t;
};

// The derived proof parameters. Formula values follow the growth shapes
//   S0 = [c w_L b log h], S = [c^2 S0],
//   D = [c^{(5d+1)/(n-d)} S0^{(n+1)/(n-d)} h^{d/(n-d)}],
//   T = [c^{(4d+n+1)/(n-d)} S0^{(n+1)/(n-d)} h^{n/(n-d)}],
// with floors S0 >= 1, T >= 1, D >= n+1, S >= S0+1 applied where the
// formulas degenerate (w_L = 0 for integral bases of split groups).
struct ParameterSchedule {
    long s0 = 1;
    long s = 2;
    long d = 2;  // the homogeneous degree D
    long t = 1;  // the derivative box parameter T
    bool degenerate = false;
    bool from_overrides = false;
    bool hypothesis_ok = false;  // D^n >= c1 S0 T^k
    long c1_value = 0;
    std::string provenance;
};

// Derives the schedule for a non-torsion gamma. The height h = max{1,h(gamma)}
// and the basis-entry bound b enter through certified enclosures; n <= d is
// rejected (the displayed exponents are undefined there) unless overrides
// supply every parameter.
ParameterSchedule derive_schedule(const SplitGroup& g, const LieSubspace& v,
                                  const GroupPoint& gamma, const PipelineConstants& constants,
                                  const ScheduleOverrides& overrides = {});

// D^n >= c1 S0 T^k, exact.
bool schedule_hypothesis(const ParameterSchedule& sched, long n, long k, long c1);

}  // namespace pasg
