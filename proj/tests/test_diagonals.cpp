#include "fermat/diagonals.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace fermat;

namespace {

CurveClass single(int symbol) { return CurveClass{{symbol, Rat(1)}}; }

KunnethClass tensor_monomial(const CurveBasis& basis,
                             const std::vector<int>& symbols) {
    KunnethClass out(basis, static_cast<int>(symbols.size()));
    out.add(symbols, 1);
    return out;
}

} // namespace

TEST_CASE("curve basis bookkeeping") {
    const CurveBasis basis(2);
    CHECK(basis.symbol_count() == 6);
    CHECK(basis.unit() == 0);
    CHECK(basis.alpha(1) == 1);
    CHECK(basis.alpha(2) == 2);
    CHECK(basis.beta(1) == 3);
    CHECK(basis.beta(2) == 4);
    CHECK(basis.omega() == 5);
    CHECK(basis.degree(basis.unit()) == 0);
    CHECK(basis.degree(basis.alpha(2)) == 1);
    CHECK(basis.degree(basis.beta(1)) == 1);
    CHECK(basis.degree(basis.omega()) == 2);
    CHECK(basis.name(basis.alpha(1)) == "a1");
    CHECK(basis.name(basis.beta(2)) == "b2");
    CHECK(basis.name(basis.unit()) == "1");
    CHECK(basis.name(basis.omega()) == "w");
    CHECK_THROWS_AS(basis.alpha(0), std::invalid_argument);
    CHECK_THROWS_AS(basis.beta(3), std::invalid_argument);
    CHECK_THROWS_AS(basis.degree(6), std::invalid_argument);
    CHECK_THROWS_AS(CurveBasis(-1), std::invalid_argument);
}

TEST_CASE("genus of Fermat curves") {
    CHECK(genus_of_fermat_curve(1) == 0);
    CHECK(genus_of_fermat_curve(2) == 0);
    CHECK(genus_of_fermat_curve(3) == 1);
    CHECK(genus_of_fermat_curve(4) == 3);
    CHECK(genus_of_fermat_curve(5) == 6);
    CHECK_THROWS_AS(genus_of_fermat_curve(0), std::invalid_argument);
}

TEST_CASE("the symplectic product table") {
    const CurveBasis basis(2);
    // a_i b_i = w, b_i a_i = -w.
    CHECK(symbol_product(basis, basis.alpha(1), basis.beta(1)) ==
          single(basis.omega()));
    CHECK(symbol_product(basis, basis.beta(1), basis.alpha(1)) ==
          CurveClass{{basis.omega(), Rat(-1)}});
    // Mixed indices and equal kinds vanish.
    CHECK(symbol_product(basis, basis.alpha(1), basis.beta(2)).empty());
    CHECK(symbol_product(basis, basis.alpha(1), basis.alpha(2)).empty());
    CHECK(symbol_product(basis, basis.alpha(1), basis.alpha(1)).empty());
    // Unit is the identity; w truncates everything above top degree.
    CHECK(symbol_product(basis, basis.unit(), basis.beta(2)) ==
          single(basis.beta(2)));
    CHECK(symbol_product(basis, basis.omega(), basis.unit()) ==
          single(basis.omega()));
    CHECK(symbol_product(basis, basis.omega(), basis.omega()).empty());
    CHECK(symbol_product(basis, basis.omega(), basis.alpha(2)).empty());
}

TEST_CASE("graded commutativity holds for every symbol pair") {
    for (int g = 0; g <= 3; ++g) {
        const CurveBasis basis(g);
        for (int x = 0; x < basis.symbol_count(); ++x)
            for (int y = 0; y < basis.symbol_count(); ++y) {
                const int sign =
                    basis.degree(x) * basis.degree(y) % 2 == 0 ? 1 : -1;
                CurveClass rhs;
                for (const auto& [symbol, coeff] :
                     symbol_product(basis, y, x))
                    rhs[symbol] = coeff * sign;
                CHECK(symbol_product(basis, x, y) == rhs);
            }
    }
}

TEST_CASE("the product is associative on all symbol triples") {
    const CurveBasis basis(2);
    for (int x = 0; x < basis.symbol_count(); ++x)
        for (int y = 0; y < basis.symbol_count(); ++y)
            for (int z = 0; z < basis.symbol_count(); ++z)
                CHECK(product(basis, symbol_product(basis, x, y), single(z)) ==
                      product(basis, single(x), symbol_product(basis, y, z)));
}

TEST_CASE("curve integral picks the w coefficient") {
    const CurveBasis basis(1);
    CHECK(integral(basis, single(basis.omega())) == 1);
    CHECK(integral(basis, single(basis.alpha(1))) == 0);
    CHECK(integral(basis,
                   product(basis, single(basis.alpha(1)),
                           single(basis.beta(1)))) == 1);
    CHECK(integral(basis,
                   product(basis, single(basis.beta(1)),
                           single(basis.alpha(1)))) == -1);
}

TEST_CASE("Kunneth classes enforce homogeneity and cancel exactly") {
    const CurveBasis basis(1);
    KunnethClass cls(basis, 2);
    CHECK(cls.is_zero());
    CHECK(cls.total_degree() == -1);
    cls.add({basis.alpha(1), basis.beta(1)}, Rat(2, 3));
    CHECK(cls.total_degree() == 2);
    CHECK_THROWS_AS(cls.add({basis.unit(), basis.unit()}, 1),
                    std::logic_error);
    CHECK_THROWS_AS(cls.add({basis.omega()}, 1), std::invalid_argument);
    cls.add({basis.alpha(1), basis.beta(1)}, Rat(-2, 3));
    CHECK(cls.is_zero());
    CHECK(cls.total_degree() == -1); // empty again, degree resets
}

TEST_CASE("Kunneth arithmetic") {
    const CurveBasis basis(1);
    const KunnethClass x = tensor_monomial(basis, {basis.alpha(1), basis.unit()});
    const KunnethClass y = tensor_monomial(basis, {basis.unit(), basis.alpha(1)});
    const KunnethClass sum = x + y;
    CHECK(sum.term_count() == 2);
    CHECK((sum - x) == y);
    CHECK((x - x).is_zero());
    CHECK((-x).coefficient({basis.alpha(1), basis.unit()}) == -1);
    CHECK_THROWS_AS(x + tensor_monomial(basis, {basis.omega()}),
                    std::invalid_argument);
}

TEST_CASE("cup product carries the Koszul sign of the interleaving") {
    const CurveBasis basis(1);
    const int a = basis.alpha(1);
    const int b = basis.beta(1);
    const int u = basis.unit();
    const int w = basis.omega();

    // (1 x a) . (b x 1): b crosses a, picking up one sign.
    const KunnethClass left = cup(tensor_monomial(basis, {u, a}),
                                  tensor_monomial(basis, {b, u}));
    CHECK(left.coefficient({b, a}) == -1);
    CHECK(left.term_count() == 1);

    // (a x 1) . (1 x b): nothing crosses, no sign.
    const KunnethClass right = cup(tensor_monomial(basis, {a, u}),
                                   tensor_monomial(basis, {u, b}));
    CHECK(right.coefficient({a, b}) == 1);

    // (a x b) . (b x a) = (ab) x (ba) with sign (-1)^{|b||b|} = -1 -> w x w.
    const KunnethClass top = cup(tensor_monomial(basis, {a, b}),
                                 tensor_monomial(basis, {b, a}));
    CHECK(top.coefficient({w, w}) == 1);
    CHECK(top.integral() == 1);
}

TEST_CASE("insertion of even symbols") {
    const CurveBasis basis(1);
    const KunnethClass base =
        tensor_monomial(basis, {basis.alpha(1), basis.beta(1)});
    const KunnethClass widened = insert_even_symbol(base, 1, basis.omega());
    CHECK(widened.factors() == 3);
    CHECK(widened.coefficient(
              {basis.alpha(1), basis.omega(), basis.beta(1)}) == 1);
    CHECK_THROWS_AS(insert_even_symbol(base, 0, basis.alpha(1)),
                    std::invalid_argument); // odd symbol
    CHECK_THROWS_AS(insert_even_symbol(base, 3, basis.omega()),
                    std::invalid_argument); // slot out of range
}

TEST_CASE("diagonal class: shape and term count") {
    for (int g = 0; g <= 3; ++g) {
        const CurveBasis basis(g);
        const KunnethClass diagonal = diagonal_class(basis);
        CHECK(diagonal.factors() == 2);
        CHECK(diagonal.total_degree() == 2);
        CHECK(diagonal.term_count() == static_cast<std::size_t>(2 + 2 * g));
        CHECK(diagonal.coefficient({basis.unit(), basis.omega()}) == 1);
        CHECK(diagonal.coefficient({basis.omega(), basis.unit()}) == 1);
    }
}

/* The duality oracle that pins every sign in the diagonal expansion:
 * integrating [D] against x x y must reproduce the intersection pairing
 * integral_C x.y for all basis classes.  A wrong sign on the odd part fails
 * this on (a, b) pairs.
 */
TEST_CASE("diagonal pairing oracle on all basis pairs") {
    for (int g = 0; g <= 3; ++g) {
        const CurveBasis basis(g);
        const KunnethClass diagonal = diagonal_class(basis);
        for (int x = 0; x < basis.symbol_count(); ++x)
            for (int y = 0; y < basis.symbol_count(); ++y) {
                CAPTURE(g);
                CAPTURE(x);
                CAPTURE(y);
                KunnethClass pair(basis, 2);
                pair.add({x, y}, 1);
                CHECK(cup(diagonal, pair).integral() ==
                      integral(basis,
                               symbol_product(basis, x, y)));
            }
    }
}

TEST_CASE("diagonal self-intersection is the Euler characteristic") {
    for (int g = 0; g <= 5; ++g) {
        const CurveBasis basis(g);
        const KunnethClass diagonal = diagonal_class(basis);
        CHECK(cup(diagonal, diagonal).integral() == 2 - 2 * g);
    }
}

TEST_CASE("small diagonal pairing oracle on all basis triples") {
    for (int g = 0; g <= 3; ++g) {
        const CurveBasis basis(g);
        const KunnethClass small =
            partial_diagonal_class(Diagonal::small_diagonal, basis);
        for (int x = 0; x < basis.symbol_count(); ++x)
            for (int y = 0; y < basis.symbol_count(); ++y)
                for (int z = 0; z < basis.symbol_count(); ++z) {
                    CAPTURE(g);
                    CAPTURE(x);
                    CAPTURE(y);
                    CAPTURE(z);
                    KunnethClass triple(basis, 3);
                    triple.add({x, y, z}, 1);
                    const CurveClass xy = symbol_product(basis, x, y);
                    CHECK(cup(small, triple).integral() ==
                          integral(basis, product(basis, xy, single(z))));
                }
    }
}

TEST_CASE("small diagonal (2,1,1) component at genus 1") {
    const CurveBasis basis(1);
    const int a = basis.alpha(1);
    const int b = basis.beta(1);
    const int w = basis.omega();
    const KunnethClass small =
        partial_diagonal_class(Diagonal::small_diagonal, basis);
    // The component with w in the first slot is -(w x a x b - w x b x a).
    CHECK(small.coefficient({w, a, b}) == -1);
    CHECK(small.coefficient({w, b, a}) == 1);
}

TEST_CASE("two-slot partial diagonals put the point class elsewhere") {
    const CurveBasis basis(0); // genus 0 keeps the expansion two terms
    const int u = basis.unit();
    const int w = basis.omega();
    const KunnethClass d12 = partial_diagonal_class(Diagonal::d12, basis);
    CHECK(d12.term_count() == 2);
    CHECK(d12.coefficient({u, w, w}) == 1);
    CHECK(d12.coefficient({w, u, w}) == 1);

    const KunnethClass d23 = partial_diagonal_class(Diagonal::d23, basis);
    CHECK(d23.coefficient({w, u, w}) == 1);
    CHECK(d23.coefficient({w, w, u}) == 1);
}

TEST_CASE("two-slot partial diagonals pair like the diagonal with a point") {
    const CurveBasis basis(2);
    const KunnethClass d12 = partial_diagonal_class(Diagonal::d12, basis);
    const KunnethClass diagonal = diagonal_class(basis);
    for (int x = 0; x < basis.symbol_count(); ++x)
        for (int y = 0; y < basis.symbol_count(); ++y) {
            KunnethClass triple(basis, 3);
            triple.add({x, y, basis.unit()}, 1);
            KunnethClass pair(basis, 2);
            pair.add({x, y}, 1);
            CHECK(cup(d12, triple).integral() == cup(diagonal, pair).integral());
            // A positive-degree class in the point slot kills the pairing.
            KunnethClass blocked(basis, 3);
            blocked.add({x, y, basis.omega()}, 1);
            CHECK(cup(d12, blocked).integral() == 0);
        }
}

TEST_CASE("one-slot partial diagonals are pure point classes") {
    const CurveBasis basis(3);
    const int u = basis.unit();
    const int w = basis.omega();
    const KunnethClass d1 = partial_diagonal_class(Diagonal::d1, basis);
    REQUIRE(d1.term_count() == 1);
    CHECK(d1.coefficient({u, w, w}) == 1);
    const KunnethClass d2 = partial_diagonal_class(Diagonal::d2, basis);
    CHECK(d2.coefficient({w, u, w}) == 1);
    const KunnethClass d3 = partial_diagonal_class(Diagonal::d3, basis);
    CHECK(d3.coefficient({w, w, u}) == 1);
}

TEST_CASE("the modified diagonal vanishes identically; the small one does "
          "not") {
    for (int g = 0; g <= 5; ++g) {
        CAPTURE(g);
        const CurveBasis basis(g);
        CHECK(is_null_class(modified_diagonal_class(basis)));
        CHECK_FALSE(is_null_class(
            partial_diagonal_class(Diagonal::small_diagonal, basis)));
    }
}

TEST_CASE("diagonal names are stable") {
    CHECK(diagonal_name(Diagonal::small_diagonal) == "small");
    CHECK(diagonal_name(Diagonal::d12) == "d12");
    CHECK(diagonal_name(Diagonal::d13) == "d13");
    CHECK(diagonal_name(Diagonal::d23) == "d23");
    CHECK(diagonal_name(Diagonal::d1) == "d1");
    CHECK(diagonal_name(Diagonal::d2) == "d2");
    CHECK(diagonal_name(Diagonal::d3) == "d3");
}
