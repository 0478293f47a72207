#pragma once

#include "fermat/numeric.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

// Thrown when a requested enumeration would exceed the configured size guard.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for parameter combinations the verification deliberately refuses
// (as opposed to malformed input, which throws std::invalid_argument).
struct unsupported_case : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long default_enumeration_limit = 10'000'000;

// The degree-d hypersurface X_0^d + ... + X_{n+1}^d = 0 in P^{n+1}.
struct FermatParams {
    int d = 1; // degree, >= 1
    int n = 1; // dimension, >= 0

    int ambient_vars() const { return n + 2; }

    friend auto operator<=>(const FermatParams&, const FermatParams&) = default;
};

void validate(const FermatParams& params); // throws std::invalid_argument

// Order of the group of coordinatewise d-th-root scalings modulo the
// diagonal: d^(n+1).
Int group_order(const FermatParams& params);

/* A character of that group: an (n+2)-tuple of residues mod d whose sum is
 * divisible by d.  The tuple form (rather than a transversal of the quotient)
 * keeps the coordinate action and the sets A, B_I directly indexable.
 * Residues are kept reduced to [0, d); no root of unity is ever materialized.
 */
class Character {
  public:
    Character(int modulus, std::vector<int> residues);

    int modulus() const { return d_; }
    std::size_t size() const { return a_.size(); }
    int operator[](std::size_t i) const { return a_[i]; }
    const std::vector<int>& residues() const { return a_; }

    bool trivial() const;
    bool all_nonzero() const;

    // The conjugate character (every residue negated mod d).
    Character negated() const;

    std::string to_string() const;

    friend auto operator<=>(const Character&, const Character&) = default;

  private:
    int d_;
    std::vector<int> a_;
};

// A sorted, duplicate-free list of characters of a fixed dual group.
struct CharacterSet {
    FermatParams params;
    std::vector<Character> members;

    std::size_t size() const { return members.size(); }
    bool contains(const Character& chi) const;
};

// All d^(n+1) characters, ordered lexicographically by residue tuple (the
// last coordinate is determined by the zero-sum constraint, so this agrees
// with lexicographic order on the first n+1 coordinates).
CharacterSet enumerate_dual_group(const FermatParams& params,
                                  long long max_enum = default_enumeration_limit);

// A_d^n: characters with every coordinate nonzero.  These index the
// eigenspace decomposition of primitive middle cohomology.
CharacterSet set_A(const FermatParams& params,
                   long long max_enum = default_enumeration_limit);

// Closed form ((d-1)^(n+2) + (-1)^(n+2) (d-1)) / d for |A_d^n|, used as an
// independent check against enumeration.
Int count_A_closed_form(const FermatParams& params);

// B_I: characters vanishing on every coordinate in I (nonempty I required).
CharacterSet set_B(const FermatParams& params, const std::vector<int>& indices,
                   long long max_enum = default_enumeration_limit);

struct HodgeType {
    int p = 0;
    int q = 0;

    friend auto operator<=>(const HodgeType&, const HodgeType&) = default;
};

/* Hodge type of the eigenspace V(chi) for chi in A_d^n:
 * q = (sum_i <a_i/d>) - 1 and p = n - q, where <.> is the fractional part.
 * Since every a_i lies in [1, d-1] and the sum is divisible by d, this is
 * integer arithmetic: q = (sum a_i)/d - 1.  Defined only on A_d^n; characters
 * with a zero coordinate have no Hodge type here.
 */
HodgeType hodge_type(const FermatParams& params, const Character& chi);

/* Independent oracle for the Hodge numbers of the primitive middle
 * cohomology: h^{n-q,q}_prim equals the number of monomials of degree
 * (q+1)d - (n+2) in n+2 variables with every exponent at most d-2
 * (the Jacobian-ring count).  Computed by bounded-composition counting,
 * sharing no code with the character rule above.
 */
Int griffiths_hodge_number(const FermatParams& params, int q);

} // namespace fermat
