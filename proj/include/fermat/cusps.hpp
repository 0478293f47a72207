#pragma once

#include "fermat/numeric.hpp"
#include "fermat/smith.hpp"

#include <stdexcept>
#include <vector>

namespace fermat {

// Raised when the principal lattice has rank < 3d - 1.  That would make the
// quotient infinite, which falsifies the encoded generator family; it signals
// an implementation bug, not a mathematical discovery.
struct infinite_quotient_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The 3d points of the Fermat curve F_d^1 lying on a coordinate line
 * X_axis = 0.  idx enumerates the d points on one line: with a d-th root
 * eps of -1 fixed symbolically, the points on X_0 = 0 are
 * (0 : eps zeta^idx : 1), and cyclically for the other axes.  No complex
 * number is ever materialized; (axis, idx) is the whole datum.
 */
struct Cusp {
    int axis = 0; // which coordinate vanishes, in {0, 1, 2}
    int idx = 0;  // residue mod d

    friend auto operator<=>(const Cusp&, const Cusp&) = default;
};

// Fixed position of a cusp in divisor vectors: axis*d + idx.
int cusp_position(const Cusp& cusp, int d);

// Divisors supported on the cusps, as length-3d coefficient vectors.
using CuspidalDivisor = std::vector<Int>;

Int divisor_degree(const CuspidalDivisor& divisor);

CuspidalDivisor zero_divisor(int d);
CuspidalDivisor point_difference(const Cusp& a, const Cusp& b, int d);

/* The two kinds of rational function whose cuspidal divisors are forced by
 * Bezout, with no function-field computation:
 *   coordinate-ratio(i, j):  X_i / X_j, a line section over a line section;
 *   tangent-ratio(at, j):    (tangent line at cusp `at`) / X_j; the tangent
 *                            at a cusp meets the curve only there, with full
 *                            contact order d.
 */
struct CuspidalFunction {
    enum class Kind { coordinate_ratio, tangent_ratio };

    Kind kind = Kind::coordinate_ratio;
    int num_axis = 0;   // i for coordinate-ratio; unused for tangent-ratio
    int den_axis = 1;   // j in both
    Cusp at;            // tangent-ratio only

    static CuspidalFunction coordinate_ratio(int i, int j);
    static CuspidalFunction tangent_ratio(const Cusp& at, int j);
};

/* div(X_i/X_j)          = sum_k P_(i,k)  -  sum_k P_(j,k)
 * div(tangent(at)/X_j)  = d * P_at       -  sum_k P_(j,k)
 */
CuspidalDivisor divisor_of(const CuspidalFunction& f, int d);

/* Row-generators of the lattice of principal divisors supported on the
 * cusps: all 6 ordered coordinate ratios and all 3*d*2 tangent ratios
 * (every cusp over each of the two other axes).  (6 + 6d) x 3d.
 */
IntMatrix principal_lattice(int d);

/* Precomputed Smith data for one degree d, reused across membership queries.
 * Degree-0 divisors are rewritten in the basis f_k = e_k - e_{k+1}
 * (coordinates are partial sums), which identifies the degree-0 sublattice
 * with Z^{3d-1}.
 */
struct CuspLattice {
    int d = 1;
    int generators_used = 0;
    SmithDecomposition snf; // of the generator matrix in degree-0 coordinates

    std::size_t rank() const { return snf.rank; }
};

CuspLattice build_cusp_lattice(int d);

struct ClassGroup {
    int d = 1;
    int rank = 0;            // rank of the principal lattice (3d - 1 expected)
    int generators_used = 0;
    // Invariant factors > 1 of the quotient (degree-0 divisors)/(lattice).
    // An upper bound on the cuspidal class group: a priori the encoded
    // generators could span a finite-index sublattice of all principal
    // cuspidal divisors.
    std::vector<Int> invariant_factors;
};

ClassGroup class_group(const CuspLattice& lattice);
ClassGroup class_group(int d);

// Exponent of the quotient group: the largest invariant factor (1 if trivial).
Int class_group_exponent(const ClassGroup& group);

/* Least k >= 1 with k*D principal (in the encoded lattice).  Solved exactly
 * through the Smith change of basis; requires degree(D) = 0.  Throws
 * infinite_quotient_error if no multiple of D lands in the lattice, which
 * cannot happen while the lattice has full rank 3d - 1.
 */
Int torsion_order(const CuspLattice& lattice, const CuspidalDivisor& divisor);
Int torsion_order(const CuspidalDivisor& divisor, int d);

} // namespace fermat
