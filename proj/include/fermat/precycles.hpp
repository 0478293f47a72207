#pragma once

#include "fermat/characters.hpp"
#include "fermat/numeric.hpp"

#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

namespace fermat {

// Raised by admissibility checks at levels q >= 2: the boundary condition
// there is a tame-symbol condition with no encoded formula, so the check
// refuses rather than silently passing.
struct unsupported_level : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* C_I: the intersection of F_d^n with the coordinate hyperplanes indexed by
 * I, isomorphic to F_d^{n-|I|}.  Index sets are kept sorted and duplicate
 * free, so C_{I u {a,b}} and C_{I u {b,a}} are the same object syntactically.
 */
struct LinearSubvariety {
    FermatParams params;
    std::vector<int> indices; // sorted subset of {0, ..., n+1}, size <= n

    int dim() const { return params.n - static_cast<int>(indices.size()); }
    // dimension of the Fermat variety C_I is isomorphic to
    int sub_fermat_dim() const { return dim(); }

    friend auto operator<=>(const LinearSubvariety&,
                            const LinearSubvariety&) = default;
};

LinearSubvariety linear_subvariety(const FermatParams& params,
                                   std::vector<int> indices);

// Union with extra indices (validated distinct and in range).
LinearSubvariety extended(const LinearSubvariety& base, std::vector<int> extra);

/* An opaque rational function on base = C_{I u {a}} whose divisor is
 * C_{I u {a, plus_idx}} - C_{I u {a, minus_idx}}.  Nothing else about the
 * function is ever used, so nothing else is stored.
 */
struct SymbolicFunction {
    LinearSubvariety base;
    int plus_idx = 0;
    int minus_idx = 0;

    friend auto operator<=>(const SymbolicFunction&,
                            const SymbolicFunction&) = default;
};

SymbolicFunction symbolic_function(const LinearSubvariety& base, int plus_idx,
                                   int minus_idx);

LinearSubvariety plus_component(const SymbolicFunction& f);
LinearSubvariety minus_component(const SymbolicFunction& f);

// A constant function entry; its divisor is zero.  The label is kept only
// for display.
struct ConstantMarker {
    Int value = 1;

    friend auto operator<=>(const ConstantMarker&,
                            const ConstantMarker&) = default;
};

using FunctionEntry = std::variant<SymbolicFunction, ConstantMarker>;

/* One term (Z, f_1, ..., f_q) of a precycle: a carrier subvariety with a
 * list of function entries living on it, and a formal integer coefficient.
 */
struct PreCycleTerm {
    Int coeff = 1;
    LinearSubvariety carrier;
    std::vector<FunctionEntry> entries; // length q >= 1
};

struct PreCycle {
    std::vector<PreCycleTerm> terms;

    bool empty() const { return terms.empty(); }
    // Uniform entry-list length q; 0 for the empty precycle.
    int level() const;
};

// Structural validation: shared params, uniform level q >= 1 per term list,
// symbolic entries based on their term's carrier.  Throws
// std::invalid_argument on violations.
void validate(const PreCycle& cycle);

PreCycle operator+(const PreCycle& lhs, const PreCycle& rhs);

// Formal integer combination of subvarieties, keyed by canonical index set.
using FormalDivisor = std::map<std::vector<int>, Int>;

/* Sum over terms of coeff * div(entry).  Only level q = 1 has an encoded
 * boundary; q >= 2 throws unsupported_level.  Constant entries contribute
 * nothing.  Zero coefficients are erased, so the zero combination is the
 * empty map.
 */
FormalDivisor divisor_sum(const PreCycle& cycle);

/* (C_{I u {a}}, f_bc) + (C_{I u {b}}, f_ca) + (C_{I u {c}}, f_ab):
 * the divisors telescope to zero.  Requires a, b, c distinct, outside I,
 * everything within {0, ..., n+1}, and |I| + 2 <= n so that every divisor
 * component stays positive-dimensional and irreducible.
 */
PreCycle triangle_cycle(const FermatParams& params, std::vector<int> indices,
                        int a, int b, int c);

// True iff divisor_sum(cycle) is the zero combination (level 1 only).
bool is_admissible(const PreCycle& cycle);

// True iff every function entry of every term is a constant marker.
// Vacuously true for the empty precycle.  Works at any level.
bool is_decomposable(const PreCycle& cycle);

} // namespace fermat
