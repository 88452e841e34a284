#pragma once

/// Exact Gaussian elimination over Q, the workhorse behind incidence tests,
/// kernels of multiplication operators, and canonical line representatives.

#include "cliffpar/exactnum.hpp"

#include <vector>

namespace cliffpar {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Reduced row echelon form with zero rows dropped. Pivot entries are 1 and
/// are the only nonzero entries in their columns; pivot columns strictly
/// increase row by row, so the form is a canonical basis of the row space.
struct Echelon {
    RatMat rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }
};

Echelon reduced_echelon(RatMat m);

int rank(const RatMat& m);

/// Basis of the right kernel of an r x cols matrix, one vector per free
/// column in increasing column order. The vector for free column f has
/// entry 1 at f and zeros at every other free column, which makes the
/// result canonical.
std::vector<RatVec> kernel_basis(const RatMat& m, int cols);

/// True iff v lies in the row space described by e.
bool in_row_space(const Echelon& e, const RatVec& v);

}  // namespace cliffpar
