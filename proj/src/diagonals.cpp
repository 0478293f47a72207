#include "fermat/diagonals.hpp"

#include <sstream>
#include <stdexcept>

namespace fermat {

CurveBasis::CurveBasis(int genus) : g_(genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
}

int CurveBasis::alpha(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("alpha index out of range");
    return i;
}

int CurveBasis::beta(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("beta index out of range");
    return g_ + i;
}

int CurveBasis::degree(int symbol) const {
    if (symbol < 0 || symbol > omega())
        throw std::invalid_argument("basis symbol out of range");
    if (symbol == unit()) return 0;
    if (symbol == omega()) return 2;
    return 1;
}

std::string CurveBasis::name(int symbol) const {
    degree(symbol); // range check
    if (symbol == unit()) return "1";
    if (symbol == omega()) return "w";
    if (symbol <= g_) return "a" + std::to_string(symbol);
    return "b" + std::to_string(symbol - g_);
}

int genus_of_fermat_curve(int d) {
    if (d < 1) throw std::invalid_argument("degree d must be at least 1");
    return (d - 1) * (d - 2) / 2;
}

CurveClass symbol_product(const CurveBasis& basis, int x, int y) {
    const int dx = basis.degree(x);
    const int dy = basis.degree(y);
    CurveClass out;
    if (dx == 0) {
        out[y] = 1;
        return out;
    }
    if (dy == 0) {
        out[x] = 1;
        return out;
    }
    if (dx + dy > 2) return out; // above the top degree
    // Both of degree 1: only a_i . b_i = w and b_i . a_i = -w survive.
    const int g = basis.genus();
    const bool x_is_alpha = x <= g;
    const bool y_is_alpha = y <= g;
    const int xi = x_is_alpha ? x : x - g;
    const int yi = y_is_alpha ? y : y - g;
    if (xi == yi && x_is_alpha != y_is_alpha)
        out[basis.omega()] = x_is_alpha ? 1 : -1;
    return out;
}

CurveClass product(const CurveBasis& basis, const CurveClass& x,
                   const CurveClass& y) {
    CurveClass out;
    for (const auto& [xs, xc] : x)
        for (const auto& [ys, yc] : y)
            for (const auto& [zs, zc] : symbol_product(basis, xs, ys)) {
                out[zs] += xc * yc * zc;
                if (out[zs] == 0) out.erase(zs);
            }
    return out;
}

Rat integral(const CurveBasis& basis, const CurveClass& c) {
    auto it = c.find(basis.omega());
    return it == c.end() ? Rat(0) : it->second;
}

KunnethClass::KunnethClass(CurveBasis basis, int factors)
    : basis_(basis), m_(factors), degree_(-1) {
    if (factors < 1) throw std::invalid_argument("need at least one factor");
}

namespace {

int monomial_degree(const CurveBasis& basis,
                    const KunnethClass::Monomial& monomial) {
    int total = 0;
    for (int symbol : monomial) total += basis.degree(symbol);
    return total;
}

} // namespace

void KunnethClass::add(const Monomial& monomial, const Rat& coeff) {
    if (coeff == 0) return;
    if (monomial.size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("monomial length does not match factor count");
    const int deg = monomial_degree(basis_, monomial);
    if (degree_ == -1)
        degree_ = deg;
    else if (deg != degree_)
        throw std::logic_error("class would become inhomogeneous");
    auto it = terms_.find(monomial);
    if (it == terms_.end()) {
        terms_.emplace(monomial, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) {
        terms_.erase(it);
        if (terms_.empty()) degree_ = -1;
    }
}

Rat KunnethClass::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat KunnethClass::integral() const {
    return coefficient(Monomial(static_cast<std::size_t>(m_), basis_.omega()));
}

KunnethClass KunnethClass::operator-() const {
    KunnethClass out(basis_, m_);
    for (const auto& [monomial, coeff] : terms_) out.add(monomial, -coeff);
    return out;
}

KunnethClass& KunnethClass::operator+=(const KunnethClass& other) {
    if (other.basis_ != basis_ || other.m_ != m_)
        throw std::invalid_argument("cannot add classes on different products");
    for (const auto& [monomial, coeff] : other.terms_) add(monomial, coeff);
    return *this;
}

KunnethClass& KunnethClass::operator-=(const KunnethClass& other) {
    return *this += -other;
}

std::string KunnethClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [monomial, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << coeff << "*";
        for (std::size_t i = 0; i < monomial.size(); ++i) {
            if (i) out << "@";
            out << basis_.name(monomial[i]);
        }
    }
    return out.str();
}

KunnethClass cup(const KunnethClass& lhs, const KunnethClass& rhs) {
    if (lhs.basis() != rhs.basis() || lhs.factors() != rhs.factors())
        throw std::invalid_argument("cup product needs matching products");
    const CurveBasis& basis = lhs.basis();
    const int m = lhs.factors();

    KunnethClass out(basis, m);
    for (const auto& [x, xc] : lhs.terms())
        for (const auto& [y, yc] : rhs.terms()) {
            /* Interleave x_1..x_m with y_1..y_m: y_k moves past
             * x_{k+1}, ..., x_m, so the Koszul exponent is
             * sum_k deg(y_k) * (deg(x_{k+1}) + ... + deg(x_m)).
             */
            long long exponent = 0;
            int x_tail = 0;
            for (int k = m - 1; k >= 0; --k) {
                exponent += static_cast<long long>(
                                basis.degree(y[static_cast<std::size_t>(k)])) *
                            x_tail;
                x_tail += basis.degree(x[static_cast<std::size_t>(k)]);
            }
            const int sign = exponent % 2 == 0 ? 1 : -1;

            // Slotwise products; each is a single symbol or zero, so the
            // expansion never fans out.
            KunnethClass::Monomial slots(static_cast<std::size_t>(m));
            Rat coeff = xc * yc * sign;
            bool dead = false;
            for (int k = 0; k < m && !dead; ++k) {
                CurveClass p = symbol_product(basis, x[static_cast<std::size_t>(k)],
                                              y[static_cast<std::size_t>(k)]);
                if (p.empty()) {
                    dead = true;
                    break;
                }
                slots[static_cast<std::size_t>(k)] = p.begin()->first;
                coeff *= p.begin()->second;
            }
            if (!dead) out.add(slots, coeff);
        }
    return out;
}

KunnethClass insert_even_symbol(const KunnethClass& cls, int slot, int symbol) {
    const CurveBasis& basis = cls.basis();
    if (basis.degree(symbol) % 2 != 0)
        throw std::invalid_argument(
            "only even-degree symbols can be inserted without sign bookkeeping");
    if (slot < 0 || slot > cls.factors())
        throw std::invalid_argument("insertion slot out of range");
    KunnethClass out(basis, cls.factors() + 1);
    for (const auto& [monomial, coeff] : cls.terms()) {
        KunnethClass::Monomial extended = monomial;
        extended.insert(extended.begin() + slot, symbol);
        out.add(extended, coeff);
    }
    return out;
}

KunnethClass diagonal_class(const CurveBasis& basis) {
    KunnethClass out(basis, 2);
    out.add({basis.unit(), basis.omega()}, 1);
    out.add({basis.omega(), basis.unit()}, 1);
    // Odd part: the sign is the one forced by the pairing identity
    // integral([D].(x @ y)) = integral(x.y) under the product conventions
    // above (checked exhaustively in the tests).
    for (int i = 1; i <= basis.genus(); ++i) {
        out.add({basis.beta(i), basis.alpha(i)}, 1);
        out.add({basis.alpha(i), basis.beta(i)}, -1);
    }
    return out;
}

std::string diagonal_name(Diagonal which) {
    switch (which) {
    case Diagonal::small_diagonal: return "small";
    case Diagonal::d12: return "d12";
    case Diagonal::d13: return "d13";
    case Diagonal::d23: return "d23";
    case Diagonal::d1: return "d1";
    case Diagonal::d2: return "d2";
    case Diagonal::d3: return "d3";
    }
    throw std::logic_error("unreachable diagonal kind");
}

KunnethClass partial_diagonal_class(Diagonal which, const CurveBasis& basis) {
    const int unit = basis.unit();
    const int omega = basis.omega();
    const KunnethClass diag = diagonal_class(basis);

    auto point_cycle = [&basis, unit, omega](int curve_slot) {
        // The curve in one slot, base points elsewhere: 1 in the moving
        // slot, w in the other two.
        KunnethClass out(basis, 3);
        KunnethClass::Monomial monomial(3, omega);
        monomial[static_cast<std::size_t>(curve_slot)] = unit;
        out.add(monomial, 1);
        return out;
    };

    switch (which) {
    case Diagonal::small_diagonal:
        // {x1 = x2} meets {x1 = x3} transversally in the small diagonal, so
        // its class is the cup product of the two pullbacks.
        return cup(insert_even_symbol(diag, 2, unit),
                   insert_even_symbol(diag, 1, unit));
    case Diagonal::d12: return insert_even_symbol(diag, 2, omega);
    case Diagonal::d13: return insert_even_symbol(diag, 1, omega);
    case Diagonal::d23: return insert_even_symbol(diag, 0, omega);
    case Diagonal::d1: return point_cycle(0);
    case Diagonal::d2: return point_cycle(1);
    case Diagonal::d3: return point_cycle(2);
    }
    throw std::logic_error("unreachable diagonal kind");
}

KunnethClass modified_diagonal_class(const CurveBasis& basis) {
    return partial_diagonal_class(Diagonal::small_diagonal, basis) -
           partial_diagonal_class(Diagonal::d12, basis) -
           partial_diagonal_class(Diagonal::d13, basis) -
           partial_diagonal_class(Diagonal::d23, basis) +
           partial_diagonal_class(Diagonal::d1, basis) +
           partial_diagonal_class(Diagonal::d2, basis) +
           partial_diagonal_class(Diagonal::d3, basis);
}

bool is_null_class(const KunnethClass& cls) { return cls.is_zero(); }

} // namespace fermat
