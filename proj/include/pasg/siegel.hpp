#pragma once

#include "pasg/heights.hpp"
#include "pasg/lattice.hpp"

namespace pasg {

// An underdetermined integer linear system A x = 0, m rows < n columns.
struct LinearSystem {
    lat::ZMat a;
    size_t rows() const { return a.size(); }
    size_t cols() const { return a.empty() ? 0 : a[0].size(); }
    Z max_entry() const;
};

// A small nonzero kernel vector with the certified Siegel bound
//   log ||x||_inf <= (m/(n-m)) log(n * max|a_ij|),
// checked exactly as ||x||_inf^{n-m} <= (n max|a|)^m.
struct SiegelSolution {
    lat::ZVec x;
    Z inf_norm;
    HeightValue height;        // log ||x||_inf enclosure
    HeightValue bound;         // the certified bound above
    bool within_bound = true;  // exact integer comparison
};

SiegelSolution siegel_solve(const LinearSystem& system);

}  // namespace pasg
