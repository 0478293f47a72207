#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace fermat {

// All counts, dimensions, matrix entries and torsion orders are exact.
// cpp_int is header-only and never overflows silently.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned exp) {
    Int out = 1;
    while (exp != 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i; // exact at every step: out is C(n-k+i, i)
    }
    return out;
}

} // namespace fermat
