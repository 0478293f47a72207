#include "fermat/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

namespace {

// Column operations mirror onto V so that M_original * V_total tracks the
// running matrix's column space relation; row operations need no mirror.
struct Worker {
    IntMatrix m;
    IntMatrix v;
    std::size_t rows, cols;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a != b) std::swap(m[a], m[b]);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][a], v[r][b]);
    }

    void add_row(std::size_t dst, std::size_t src, const Int& factor) {
        if (factor == 0) return;
        for (std::size_t c = 0; c < cols; ++c) m[dst][c] += factor * m[src][c];
    }

    void add_col(std::size_t dst, std::size_t src, const Int& factor) {
        if (factor == 0) return;
        for (std::size_t r = 0; r < rows; ++r) m[r][dst] += factor * m[r][src];
        for (std::size_t r = 0; r < cols; ++r) v[r][dst] += factor * v[r][src];
    }

    void negate_col(std::size_t c) {
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = -m[r][c];
        for (std::size_t r = 0; r < cols; ++r) v[r][c] = -v[r][c];
    }

    // Smallest nonzero |entry| in the submatrix starting at (t, t).
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                Int mag = abs(m[r][c]);
                if (!found || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        return found;
    }
};

} // namespace

SmithDecomposition smith_normal_form(IntMatrix input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    for (const auto& row : input)
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix passed to smith_normal_form");

    Worker w{std::move(input), identity_matrix(cols), rows, cols};

    const std::size_t bound = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < bound; ++t) {
        std::size_t pr = t, pc = t;
        if (!w.find_pivot(t, pr, pc)) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        // Clear row and column t; restarts when a remainder replaces the
        // pivot with something smaller, which terminates since |pivot|
        // strictly decreases.
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (w.m[r][t] == 0) continue;
                Int quotient = w.m[r][t] / w.m[t][t];
                w.add_row(r, t, -quotient);
                if (w.m[r][t] != 0) { // remainder smaller than the pivot
                    w.swap_rows(t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (w.m[t][c] == 0) continue;
                Int quotient = w.m[t][c] / w.m[t][t];
                w.add_col(c, t, -quotient);
                if (w.m[t][c] != 0) {
                    w.swap_cols(t, c);
                    dirty = true;
                }
            }
        }

        // Divisibility fix-up: the pivot must divide every remaining entry.
        for (bool fixed = false; !fixed;) {
            fixed = true;
            for (std::size_t r = t + 1; r < rows && fixed; ++r)
                for (std::size_t c = t + 1; c < cols && fixed; ++c)
                    if (w.m[r][c] % w.m[t][t] != 0) {
                        // Fold row r into the pivot row and re-eliminate.
                        w.add_row(t, r, 1);
                        for (bool dirty = true; dirty;) {
                            dirty = false;
                            for (std::size_t c2 = t + 1; c2 < cols; ++c2) {
                                if (w.m[t][c2] == 0) continue;
                                Int quotient = w.m[t][c2] / w.m[t][t];
                                w.add_col(c2, t, -quotient);
                                if (w.m[t][c2] != 0) {
                                    w.swap_cols(t, c2);
                                    dirty = true;
                                }
                            }
                            for (std::size_t r2 = t + 1; r2 < rows; ++r2) {
                                if (w.m[r2][t] == 0) continue;
                                Int quotient = w.m[r2][t] / w.m[t][t];
                                w.add_row(r2, t, -quotient);
                                if (w.m[r2][t] != 0) {
                                    w.swap_rows(t, r2);
                                    dirty = true;
                                }
                            }
                        }
                        fixed = false;
                    }
        }

        if (w.m[t][t] < 0) w.negate_col(t);
    }

    SmithDecomposition out;
    out.rows = rows;
    out.cols = cols;
    out.rank = t;
    out.right = std::move(w.v);
    out.diagonal.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(w.m[i][i]);
    return out;
}

std::vector<Int> apply_right_transform(const SmithDecomposition& snf,
                                       const std::vector<Int>& x) {
    if (x.size() != snf.cols)
        throw std::invalid_argument("vector length does not match decomposition");
    std::vector<Int> y(snf.cols, 0);
    for (std::size_t c = 0; c < snf.cols; ++c)
        for (std::size_t k = 0; k < snf.cols; ++k)
            if (x[k] != 0) y[c] += x[k] * snf.right[k][c];
    return y;
}

Int order_in_quotient(const SmithDecomposition& snf, const std::vector<Int>& x) {
    const std::vector<Int> y = apply_right_transform(snf, x);
    for (std::size_t i = snf.rank; i < snf.cols; ++i)
        if (y[i] != 0) return 0; // outside the rational span: infinite order
    Int order = 1;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        if (y[i] == 0) continue;
        const Int step = snf.diagonal[i] / gcd(snf.diagonal[i], y[i]);
        order = lcm(order, step);
    }
    return order;
}

} // namespace fermat
