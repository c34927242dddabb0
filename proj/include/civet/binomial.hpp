#pragma once

#include <stdexcept>

#include "civet/bigint.hpp"

namespace civet {

/// Binomial coefficient C(n, k) for nonnegative integers, exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long j = 1; j <= k; ++j) {
        r = (r * BigInt(n - j + 1)).div_exact(BigInt(j));
    }
    return r;
}

/// Polynomial extension of C(a, k) in the upper argument:
/// a(a-1)...(a-k+1)/k!, defined for any integer a. This is the degree-k
/// polynomial that Euler-characteristic formulas evaluate at negative twists.
inline BigInt binomial_poly(long long a, long long k) {
    if (k < 0) throw std::domain_error("binomial_poly: negative lower index");
    if (k == 0) return BigInt(1);
    BigInt num(1);
    for (long long j = 0; j < k; ++j) num *= BigInt(a - j);
    BigInt fact(1);
    for (long long j = 2; j <= k; ++j) fact *= BigInt(j);
    return num.div_exact(fact);
}

}  // namespace civet
