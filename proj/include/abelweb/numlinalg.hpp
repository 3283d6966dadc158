#pragma once

#include "abelweb/mp.hpp"

#include <vector>

namespace abelweb {

using CVector = std::vector<Complex>;
using CMatrix = std::vector<CVector>;

struct NumericKernel {
    std::size_t rank = 0;
    std::vector<CVector> basis;   // kernel vectors, normalized so the free entry is 1
    std::vector<Real> pivots;     // absolute pivot sizes in elimination order, relative to the largest entry
    Real gap;                     // last accepted pivot / first rejected pivot (inf -> 0 rejected)
};

// Gaussian elimination with complete pivoting. Pivots below `threshold`
// (relative to the largest entry of the matrix) count as zero.
NumericKernel numeric_kernel(CMatrix m, std::size_t ncols, const Real &threshold);

} // namespace abelweb
