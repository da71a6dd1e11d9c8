#pragma once

#include <vector>

#include <gmpxx.h>

#include "etaq/qseries.hpp"

namespace etaq {

struct Combination {
    std::vector<mpq_class> coeffs;
    // Index below which target == sum coeffs[i] * basis[i] was checked.
    long verified_through = 0;
    long equations_used = 0;
};

// Finds the unique rational coefficients with target = sum x_i basis_i.
// Rows are fed to a fraction-free eliminator until the solution is pinned
// down, then the combination is checked at every index below the common
// precision. Throws no-solution or ambiguous-solution; precision-exhausted
// when fewer than min_check coefficients remain after solving.
Combination solve_series_combination(const std::vector<QSeries>& basis, const QSeries& target,
                                     long min_check = 0);

}  // namespace etaq
