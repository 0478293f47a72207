#pragma once

#include "fermat/characters.hpp"
#include "fermat/isotypic.hpp"
#include "fermat/numeric.hpp"

#include <string>
#include <vector>

namespace fermat {

/* Multiplicity-level model of the localization sequence
 *
 *   0 -> H^{2p-1}(F) -> H^{2p-1}(F - S) -> H^{2p}_S(F)^0 -> 0
 *
 * for the union S of the codimension-p coordinate sections of F = F_d^n,
 * in the interesting case p = (n+1)/2.  "middle" is the weight-(2p-1-q)
 * graded piece, "support" the weight-2p piece, and kernel_dim the dimension
 * of the part of H^{2p}_S(F) killed by the cycle class map.  q = 1 reuses
 * the same character bookkeeping with the weight label shifted by the
 * suspension, which is all that survives of the level at dimension level.
 */
struct LocalizationModel {
    FermatParams params;
    int p = 1;
    int q = 0;
    GradedVirtualModule middle;
    GradedVirtualModule support;
    Int kernel_dim;
};

/* Dimension of the kernel of the cycle class map H^{2p}_S(F) -> H^{2p}(F)
 * restricted to classes of the coordinate sections.  The image has rank 1:
 * for n = 1 the 3d cusp points all map to the point class (degree map), and
 * for n > 1 the C(n+2, p) sections all share the class h^p because the only
 * interesting cohomology of F sits in degree n and 2p = n+1 is off it.  So:
 * n = 1 gives 3d - 1, n > 1 gives C(n+2, p) - 1.
 */
Int kernel_of_cycle_class(const FermatParams& params, int p);

LocalizationModel build_model(const FermatParams& params, int p, int q,
                              long long max_enum = default_enumeration_limit);

struct SplitCheck {
    std::string name;
    bool passed = false;
};

struct SplitReport {
    bool verdict = false;
    ProjectorSpec witness;
    std::vector<SplitCheck> checks;
    Int scalar; // the unnormalized group order d^(n+1)
};

/* Certifies the splitting by the proof's own mechanism: a group-algebra
 * projector that annihilates the middle piece and is the identity on the
 * support piece.  Witness: character-sum over the union of the B_i for
 * n = 1, plain averaging for n > 1.  Four named sub-checks:
 *   disjointness          middle and support have disjoint character sets
 *   kill-middle           witness * middle = 0
 *   identity-on-support   witness * support = support
 *   dimension-exactness   kernel_dim = dim(support) - 1 (rank-1 cycle image)
 * The verdict is their conjunction; a failed check is a false verdict, not
 * an error.
 */
SplitReport verify_split(const LocalizationModel& model);

} // namespace fermat
