#pragma once

#include "fermat/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace fermat {

/* Basis of H^*(C; Q) for a genus-g curve C, as small integer symbols:
 *   0           the unit (degree 0)
 *   1 .. g      a_1 .. a_g     (degree 1)
 *   g+1 .. 2g   b_1 .. b_g     (degree 1)
 *   2g+1        w, the point class (degree 2)
 * with products a_i b_i = w, b_i a_i = -w, all other products of positive-
 * degree classes zero.  For C = F_d^1 the genus is (d-1)(d-2)/2.
 */
class CurveBasis {
  public:
    explicit CurveBasis(int genus);

    int genus() const { return g_; }
    int symbol_count() const { return 2 * g_ + 2; }

    int unit() const { return 0; }
    int omega() const { return 2 * g_ + 1; }
    int alpha(int i) const; // i in [1, g]
    int beta(int i) const;

    int degree(int symbol) const;
    std::string name(int symbol) const;

    friend auto operator<=>(const CurveBasis&, const CurveBasis&) = default;

  private:
    int g_;
};

int genus_of_fermat_curve(int d);

// A class in H^*(C) with exact rational coefficients.
using CurveClass = std::map<int, Rat>;

CurveClass symbol_product(const CurveBasis& basis, int x, int y);
CurveClass product(const CurveBasis& basis, const CurveClass& x,
                   const CurveClass& y);
// Integral over C: the coefficient of w.
Rat integral(const CurveBasis& basis, const CurveClass& c);

/* A homogeneous class in H^*(C^m) via the Kunneth decomposition: an exact
 * rational combination of tensor monomials of basis symbols.  Products use
 * the Koszul convention: moving a symbol of degree p past one of degree q
 * contributes (-1)^{pq}.  That single rule (implemented once, in the cup
 * product) carries every sign in this module.
 */
class KunnethClass {
  public:
    using Monomial = std::vector<int>; // length m, basis symbol per slot

    KunnethClass(CurveBasis basis, int factors);

    const CurveBasis& basis() const { return basis_; }
    int factors() const { return m_; }

    // Total degree shared by all monomials; -1 while the class is zero.
    int total_degree() const { return degree_; }

    void add(const Monomial& monomial, const Rat& coeff);
    Rat coefficient(const Monomial& monomial) const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Integral over C^m: the coefficient of w @ w @ ... @ w.
    Rat integral() const;

    KunnethClass operator-() const;
    KunnethClass& operator+=(const KunnethClass& other);
    KunnethClass& operator-=(const KunnethClass& other);
    friend KunnethClass operator+(KunnethClass lhs, const KunnethClass& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend KunnethClass operator-(KunnethClass lhs, const KunnethClass& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend bool operator==(const KunnethClass&, const KunnethClass&) = default;

    std::string to_string() const;

  private:
    CurveBasis basis_;
    int m_;
    int degree_; // -1 when empty
    std::map<Monomial, Rat> terms_;
};

// Cup product on H^*(C^m), with Koszul signs from interleaving the slots.
KunnethClass cup(const KunnethClass& lhs, const KunnethClass& rhs);

/* New class on C^{m+1} with the given symbol placed in slot `slot`
 * (0-based).  Only even-degree symbols (the unit and w) are accepted;
 * inserting an even class never introduces signs, and these are the only
 * insertions the diagonal formulas need.
 */
KunnethClass insert_even_symbol(const KunnethClass& cls, int slot, int symbol);

/* Class of the diagonal in C x C:
 *   1 @ w + w @ 1 + sum_i (b_i @ a_i - a_i @ b_i).
 * The expansion is pinned down by the pairing identity
 *   integral_{CxC} [D] . (x @ y) = integral_C x . y
 * on all basis pairs, which the tests enforce; the sign of the odd part is
 * whatever that identity forces under the fixed product conventions.
 */
KunnethClass diagonal_class(const CurveBasis& basis);

enum class Diagonal {
    small_diagonal, // {(x, x, x)}
    d12,            // {(x, x, e)}
    d13,            // {(x, e, x)}
    d23,            // {(e, x, x)}
    d1,             // {(x, e, e)}
    d2,             // {(e, x, e)}
    d3              // {(e, e, x)}
};

std::string diagonal_name(Diagonal which);

/* Classes of the (partial) diagonals in C^3 for a fixed base point e, whose
 * class is w regardless of the point.  D_ij places the two-factor diagonal
 * class in slots (i, j) and w in the remaining slot; D_i is the slot-i
 * fundamental class times two points; the small diagonal is the transverse
 * intersection of {x1 = x2} and {x1 = x3}, computed as a cup product and
 * pinned by the triple-pairing identity
 *   integral_{C^3} [D] . (x @ y @ z) = integral_C x . y . z.
 */
KunnethClass partial_diagonal_class(Diagonal which, const CurveBasis& basis);

/* The Gross-Schoen modified diagonal
 *   D_e = D - D_12 - D_13 - D_23 + D_1 + D_2 + D_3,
 * null-homologous for every genus: the class cancels to zero symbolically,
 * while the small diagonal class alone does not.
 */
KunnethClass modified_diagonal_class(const CurveBasis& basis);

bool is_null_class(const KunnethClass& cls);

} // namespace fermat
