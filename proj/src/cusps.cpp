#include "fermat/cusps.hpp"

#include <sstream>

namespace fermat {

namespace {

void check_degree_param(int d) {
    if (d < 1) throw std::invalid_argument("degree d must be at least 1");
}

void check_axis(int axis) {
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("cusp axis must be in {0, 1, 2}");
}

} // namespace

int cusp_position(const Cusp& cusp, int d) {
    check_degree_param(d);
    check_axis(cusp.axis);
    if (cusp.idx < 0 || cusp.idx >= d)
        throw std::invalid_argument("cusp index must be a residue in [0, d)");
    return cusp.axis * d + cusp.idx;
}

Int divisor_degree(const CuspidalDivisor& divisor) {
    Int total = 0;
    for (const Int& c : divisor) total += c;
    return total;
}

CuspidalDivisor zero_divisor(int d) {
    check_degree_param(d);
    return CuspidalDivisor(static_cast<std::size_t>(3 * d), 0);
}

CuspidalDivisor point_difference(const Cusp& a, const Cusp& b, int d) {
    CuspidalDivisor out = zero_divisor(d);
    out[static_cast<std::size_t>(cusp_position(a, d))] += 1;
    out[static_cast<std::size_t>(cusp_position(b, d))] -= 1;
    return out;
}

CuspidalFunction CuspidalFunction::coordinate_ratio(int i, int j) {
    check_axis(i);
    check_axis(j);
    if (i == j)
        throw std::invalid_argument("coordinate ratio X_i/X_j needs i != j");
    CuspidalFunction f;
    f.kind = Kind::coordinate_ratio;
    f.num_axis = i;
    f.den_axis = j;
    return f;
}

CuspidalFunction CuspidalFunction::tangent_ratio(const Cusp& at, int j) {
    check_axis(at.axis);
    check_axis(j);
    if (at.axis == j)
        throw std::invalid_argument(
            "tangent ratio denominator axis must differ from the cusp's axis "
            "(the tangent line at a cusp on X_i = 0 is not X_i itself)");
    CuspidalFunction f;
    f.kind = Kind::tangent_ratio;
    f.den_axis = j;
    f.at = at;
    return f;
}

CuspidalDivisor divisor_of(const CuspidalFunction& f, int d) {
    CuspidalDivisor out = zero_divisor(d);
    // Both numerator and denominator are lines; by Bezout each cuts out d
    // points.  X_j meets the curve in the d cusps on its axis; the tangent
    // line at a cusp has full contact order d there.
    switch (f.kind) {
    case CuspidalFunction::Kind::coordinate_ratio:
        if (f.num_axis == f.den_axis)
            throw std::invalid_argument("coordinate ratio X_i/X_j needs i != j");
        for (int k = 0; k < d; ++k) {
            out[static_cast<std::size_t>(cusp_position({f.num_axis, k}, d))] += 1;
            out[static_cast<std::size_t>(cusp_position({f.den_axis, k}, d))] -= 1;
        }
        return out;
    case CuspidalFunction::Kind::tangent_ratio:
        if (f.at.axis == f.den_axis)
            throw std::invalid_argument(
                "tangent ratio denominator axis must differ from the cusp's axis");
        out[static_cast<std::size_t>(cusp_position(f.at, d))] += d;
        for (int k = 0; k < d; ++k)
            out[static_cast<std::size_t>(cusp_position({f.den_axis, k}, d))] -= 1;
        return out;
    }
    throw std::logic_error("unreachable function kind");
}

IntMatrix principal_lattice(int d) {
    check_degree_param(d);
    IntMatrix rows;
    rows.reserve(static_cast<std::size_t>(6 + 6 * d));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                rows.push_back(divisor_of(CuspidalFunction::coordinate_ratio(i, j), d));
    for (int axis = 0; axis < 3; ++axis)
        for (int idx = 0; idx < d; ++idx)
            for (int j = 0; j < 3; ++j)
                if (j != axis)
                    rows.push_back(
                        divisor_of(CuspidalFunction::tangent_ratio({axis, idx}, j), d));
    return rows;
}

namespace {

/* Coordinates of a degree-0 vector in the basis f_k = e_k - e_{k+1},
 * k = 0..3d-2: the partial sums.  v = sum_k (v_0 + ... + v_k) f_k exactly
 * when sum(v) = 0.
 */
std::vector<Int> degree_zero_coordinates(const CuspidalDivisor& v) {
    std::vector<Int> out(v.size() - 1, 0);
    Int running = 0;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        running += v[k];
        out[k] = running;
    }
    return out;
}

} // namespace

CuspLattice build_cusp_lattice(int d) {
    IntMatrix generators = principal_lattice(d);
    IntMatrix reduced;
    reduced.reserve(generators.size());
    for (const CuspidalDivisor& row : generators) {
        if (divisor_degree(row) != 0)
            throw std::logic_error("principal generator of nonzero degree");
        reduced.push_back(degree_zero_coordinates(row));
    }
    CuspLattice out;
    out.d = d;
    out.generators_used = static_cast<int>(generators.size());
    out.snf = smith_normal_form(std::move(reduced));
    return out;
}

ClassGroup class_group(const CuspLattice& lattice) {
    const std::size_t full = static_cast<std::size_t>(3 * lattice.d - 1);
    if (lattice.rank() < full) {
        std::ostringstream msg;
        msg << "principal lattice for d = " << lattice.d << " has rank "
            << lattice.rank() << " < " << full
            << ": the quotient would be infinite, which contradicts the "
               "generator family's design (implementation bug)";
        throw infinite_quotient_error(msg.str());
    }
    ClassGroup out;
    out.d = lattice.d;
    out.rank = static_cast<int>(lattice.rank());
    out.generators_used = lattice.generators_used;
    for (const Int& factor : lattice.snf.diagonal)
        if (factor > 1) out.invariant_factors.push_back(factor);
    return out;
}

ClassGroup class_group(int d) { return class_group(build_cusp_lattice(d)); }

Int class_group_exponent(const ClassGroup& group) {
    return group.invariant_factors.empty() ? Int(1)
                                           : group.invariant_factors.back();
}

Int torsion_order(const CuspLattice& lattice, const CuspidalDivisor& divisor) {
    if (divisor.size() != static_cast<std::size_t>(3 * lattice.d))
        throw std::invalid_argument("divisor length must be 3d");
    if (divisor_degree(divisor) != 0)
        throw std::invalid_argument(
            "torsion order is defined for degree-0 divisors only");
    const Int order = order_in_quotient(lattice.snf, degree_zero_coordinates(divisor));
    if (order == 0)
        throw infinite_quotient_error(
            "no multiple of the divisor is principal; the lattice is not of "
            "full rank (implementation bug)");
    return order;
}

Int torsion_order(const CuspidalDivisor& divisor, int d) {
    return torsion_order(build_cusp_lattice(d), divisor);
}

} // namespace fermat
