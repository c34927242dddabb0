#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "civet/rational.hpp"

namespace civet::witness {

using GaussianVec = std::vector<GaussRat>;

inline GaussRat dot(const GaussianVec& a, const GaussianVec& b) {
    if (a.size() != b.size()) throw std::domain_error("dot: dimension mismatch");
    GaussRat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const GaussianVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// An alternating map V ^ V -> V given by structure constants c^i_{jk},
/// antisymmetric in (j,k); stored dense and validated on construction.
class AltMap {
public:
    explicit AltMap(size_t n) : n_(n), c_(n * n * n) {}

    /// Build from the action on basis pairs (e_j, e_k), j < k.
    static AltMap from_action(size_t n,
                              const std::function<GaussianVec(size_t, size_t)>& action) {
        AltMap m(n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                GaussianVec w = action(j, k);
                if (w.size() != n) throw std::domain_error("AltMap: bad action dimension");
                for (size_t i = 0; i < n; ++i) {
                    m.at(i, j, k) = w[i];
                    m.at(i, k, j) = -w[i];
                }
            }
        return m;
    }

    static AltMap zero(size_t n) { return AltMap(n); }

    size_t dim() const { return n_; }

    const GaussRat& coeff(size_t i, size_t j, size_t k) const { return c_[idx(i, j, k)]; }

    bool antisymmetric() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                for (size_t k = 0; k < n_; ++k)
                    if (coeff(i, j, k) != -coeff(i, k, j)) return false;
        return true;
    }

    GaussianVec apply(const GaussianVec& u, const GaussianVec& v) const {
        if (u.size() != n_ || v.size() != n_) throw std::domain_error("AltMap: dimension mismatch");
        GaussianVec w(n_);
        for (size_t i = 0; i < n_; ++i) {
            GaussRat s;
            for (size_t j = 0; j < n_; ++j)
                for (size_t k = 0; k < n_; ++k) s += coeff(i, j, k) * u[j] * v[k];
            w[i] = s;
        }
        return w;
    }

private:
    size_t n_;
    std::vector<GaussRat> c_;
    size_t idx(size_t i, size_t j, size_t k) const { return (i * n_ + j) * n_ + k; }
    GaussRat& at(size_t i, size_t j, size_t k) { return c_[idx(i, j, k)]; }
};

/// The plane-conic witness: the alternating map with
/// sigma(e1^e2)=e3, sigma(e2^e3)=e1, sigma(e3^e1)=e2 (the cross product).
inline AltMap sigma_conic() {
    return AltMap::from_action(3, [](size_t j, size_t k) -> GaussianVec {
        GaussianVec w(3);
        if (j == 0 && k == 1) w[2] = GaussRat(1);
        if (j == 1 && k == 2) w[0] = GaussRat(1);
        if (j == 0 && k == 2) w[1] = GaussRat(-1);  // sigma(e3 ^ e1) = e2
        return w;
    });
}

/// The contraction map of a dual vector: sigma_delta(u,v) = delta(u) v - delta(v) u.
inline AltMap contraction(const GaussianVec& delta) {
    size_t n = delta.size();
    if (n < 2) throw std::domain_error("contraction: requires dim >= 2");
    return AltMap::from_action(n, [&](size_t j, size_t k) -> GaussianVec {
        GaussianVec w(n);
        w[k] += delta[j];
        w[j] -= delta[k];
        return w;
    });
}

/// Rational point of the cone x1^2 + x2^2 + x3^2 = 0:
/// u = (s^2 - t^2, i(s^2 + t^2), 2st); the isotropy u.u = 0 is rechecked
/// exactly on every call.
inline GaussianVec conic_point(const GaussRat& s, const GaussRat& t) {
    if (s.is_zero() && t.is_zero()) throw std::domain_error("conic_point: (s,t) = (0,0)");
    GaussRat s2 = s * s, t2 = t * t;
    GaussianVec u{s2 - t2, GaussRat::unit_i() * (s2 + t2), GaussRat(2) * s * t};
    if (!dot(u, u).is_zero()) throw std::logic_error("conic_point: isotropy failed");
    return u;
}

/// Basis of the tangent space {v : u.v = 0} of the cone at an isotropic u:
/// for a nonzero coordinate u_i, the vectors u_i e_j - u_j e_i, j != i.
inline std::vector<GaussianVec> tangent_basis(const GaussianVec& u) {
    size_t n = u.size();
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i)
        if (!u[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == n) throw std::domain_error("tangent_basis: zero vector");
    std::vector<GaussianVec> basis;
    for (size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        GaussianVec v(n);
        v[j] = u[pivot];
        v[pivot] = -u[j];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace detail {
inline GaussRat minor2(const GaussianVec& a, const GaussianVec& b, size_t i, size_t j) {
    return a[i] * b[j] - a[j] * b[i];
}
}  // namespace detail

inline bool rank_le_1(const GaussianVec& a, const GaussianVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!detail::minor2(a, b, i, j).is_zero()) return false;
    return true;
}

inline bool rank_le_2(const GaussianVec& a, const GaussianVec& b, const GaussianVec& c) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                GaussRat det = a[i] * detail::minor2(b, c, j, k) -
                               a[j] * detail::minor2(b, c, i, k) +
                               a[k] * detail::minor2(b, c, i, j);
                if (!det.is_zero()) return false;
            }
    return true;
}

/// sigma(u, v) in C.u for an isotropic cone point u and tangent vector v.
inline bool check_xi_prime(const AltMap& sigma, const GaussianVec& u, const GaussianVec& v) {
    if (is_zero_vec(u)) throw std::domain_error("check_xi_prime: u = 0");
    if (!dot(u, u).is_zero())
        throw std::invalid_argument("check_xi_prime: u is not on the cone");
    if (!dot(u, v).is_zero()) throw std::invalid_argument("check_xi_prime: v is not tangent");
    return rank_le_1(u, sigma.apply(u, v));
}

/// sigma(u, v) in C.u + C.v for arbitrary u, v.
inline bool check_xi_V(const AltMap& sigma, const GaussianVec& u, const GaussianVec& v) {
    return rank_le_2(u, v, sigma.apply(u, v));
}

/// Deterministic splitmix64-based sampler over bounded-height Gaussian
/// rationals; identical seeds reproduce identical streams.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() %
                                           static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational next_rational(long long height) {
        return Rational(next_int(-height, height), next_int(1, height));
    }

    GaussRat next_gauss(long long height) {
        return GaussRat(next_rational(height), next_rational(height));
    }

    GaussianVec next_vec(size_t n, long long height) {
        GaussianVec v(n);
        for (auto& x : v) x = next_gauss(height);
        return v;
    }

private:
    std::uint64_t state_;
};

/// Deterministic parameter ladder for grid sweeps: a fixed enumeration of
/// small-height Gaussian rationals (mixing integers, fractions, and
/// imaginary parts).
inline GaussRat grid_value(int k) {
    Rational re(k % 5 - 2, 1 + k % 3);
    Rational im((k / 5) % 4 - 1, 1 + (k / 2) % 2);
    return GaussRat(re, im);
}

}  // namespace civet::witness
