#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace etaq::linalg {

// Incremental fraction-free elimination over Z. Pivot rows are kept mutually
// reduced: each one is zero in every other pivot's column, and rows are
// divided by their content after every update.
class FractionFreeEliminator {
public:
    explicit FractionFreeEliminator(std::size_t ncols);

    // Returns true when the row was independent of the rows seen so far.
    bool add_row(std::vector<mpz_class> row);
    bool add_row(const std::vector<mpq_class>& row);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Basis of the right null space, one vector per free column.
    std::vector<std::vector<mpq_class>> kernel() const;

private:
    std::size_t ncols_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<std::size_t> pivots_;
};

// Unique x with A x = b; throws no-solution or ambiguous-solution.
std::vector<mpq_class> solve_unique(const std::vector<std::vector<mpq_class>>& a,
                                    const std::vector<mpq_class>& b);

}  // namespace etaq::linalg
