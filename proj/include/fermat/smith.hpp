#pragma once

#include "fermat/numeric.hpp"

#include <vector>

namespace fermat {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(std::size_t n);

/* Smith normal form data for an integer matrix M (rows x cols):
 * U M V = diag(d_1, ..., d_r, 0, ...) with U, V unimodular, d_i >= 1 and
 * d_i | d_{i+1}.  Only V (the column transform) is retained: it is what
 * lattice-membership queries need.  Row operations preserve the row lattice,
 * so  x in rowspace_Z(M)  iff  y = x V  has  d_i | y_i  for i <= r  and
 * y_i = 0 beyond the rank.
 *
 * Standard pivoting over arbitrary-precision integers; no modular shortcuts,
 * the invariant factors are exact.
 */
struct SmithDecomposition {
    std::vector<Int> diagonal; // d_1 | d_2 | ... | d_r, positive
    IntMatrix right;           // V, cols x cols, unimodular
    std::size_t rank = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

SmithDecomposition smith_normal_form(IntMatrix m);

// y = x V for a row vector x (length = cols of the decomposed matrix).
std::vector<Int> apply_right_transform(const SmithDecomposition& snf,
                                       const std::vector<Int>& x);

/* Least k >= 1 with k*x in the row lattice of the decomposed matrix, or 0 if
 * no multiple of x lies in it (x has a component outside the lattice's span).
 */
Int order_in_quotient(const SmithDecomposition& snf, const std::vector<Int>& x);

} // namespace fermat
