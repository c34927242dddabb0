#pragma once

#include <stdexcept>
#include <vector>

#include "civet/binomial.hpp"

namespace civet::deduce {

/// chi(O_Z(t)) for a complete intersection Z of the given cutting degrees in
/// P^N, by inclusion-exclusion over the Koszul resolution:
///   chi = sum_{S subset {1..c}} (-1)^|S| C(t - sum_S m_i + N, N)
/// with polynomial binomials. An empty degree list gives chi(O_{P^N}(t)).
inline BigInt ci_euler_char(int N, const std::vector<int>& degrees, long long t) {
    if (N < 1) throw std::domain_error("ci_euler_char: N must be >= 1");
    for (int d : degrees)
        if (d < 2) throw std::domain_error("ci_euler_char: cutting degrees must be >= 2");
    if (static_cast<int>(degrees.size()) > N)
        throw std::domain_error("ci_euler_char: too many cutting degrees");
    int c = static_cast<int>(degrees.size());
    BigInt chi(0);
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        long long s = 0;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) s += degrees[i];
        BigInt term = binomial_poly(t - s + N, N);
        chi = (__builtin_popcount(mask) % 2 == 0) ? chi + term : chi - term;
    }
    return chi;
}

}  // namespace civet::deduce
