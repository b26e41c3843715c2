#pragma once

#include <hpzeta/rational.hpp>

#include <stdexcept>

namespace hpzeta {

inline Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (unsigned j = 1; j <= k; ++j) {
        acc *= n - k + j;
        acc /= j;  // exact at every step
    }
    return acc;
}

inline Int int_pow(Int base, unsigned exp) {
    Int acc = 1;
    while (exp) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

/// Stirling number of the second kind via the alternating binomial sum
/// r! S(n,r) = sum_{m=1..r} (-1)^{r-m} C(r,m) m^n, with S(0,0) = 1 and
/// S(n,0) = 0 for n >= 1.
inline Rational stirling2(unsigned n, unsigned r) {
    if (r > n) throw std::domain_error("stirling2: r > n");
    if (r == 0) return Rational(n == 0 ? 1 : 0);
    Int sum = 0;
    for (unsigned m = 1; m <= r; ++m) {
        const Int term = binomial(r, m) * int_pow(Int(m), n);
        if ((r - m) % 2 == 0) sum += term;
        else sum -= term;
    }
    const Int rf = factorial(r);
    return Rational(sum, rf);  // always an exact integer
}

}  // namespace hpzeta
