#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "civet/sheaf.hpp"

namespace civet::deduce {

using sheaf::ExactComplex;
using sheaf::SheafExpr;
using sheaf::SheafSum;
using sheaf::Space;

namespace detail {

inline Space ambient_of(const Space& s) {
    switch (s.kind) {
        case Space::Kind::CompleteIntersection: return Space::proj(s.ambient_dim);
        case Space::Kind::CIinHypersurface:
            return Space::hypersurface(s.ambient_dim, s.hyp_degree);
        case Space::Kind::Hypersurface: return Space::proj(s.ambient_dim);
        default: throw std::domain_error("ambient_of: P^N has no enclosing space here");
    }
}

/// The base a bundle of the ambient space acquires after restriction.
inline SheafExpr restrict_to(const SheafExpr& f, const Space& target, int twist) {
    using B = SheafExpr::Base;
    switch (f.base) {
        case B::Structure: return SheafExpr::structure(target, twist);
        case B::IntrinsicForms: return SheafExpr::ambient_forms(target, f.index, twist);
        case B::TangentTensorForm:
            return SheafExpr::ambient_tangent_tensor_form(target, twist);
        default:
            throw std::domain_error("koszul_complex: unsupported coefficient sheaf " + f.token());
    }
}

/// Sums of cutting degrees over all index subsets of a fixed size, enumerated
/// in increasing bitmask order (stable output ordering).
inline std::vector<int> subset_degree_sums(const std::vector<int>& degs, int size) {
    std::vector<int> sums;
    int c = static_cast<int>(degs.size());
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        int s = 0;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) s += degs[i];
        sums.push_back(s);
    }
    return sums;
}

}  // namespace detail

/// Koszul resolution of F|_Z(t) for a complete intersection Z cut out of its
/// ambient space by the listed degrees:
///   0 -> F(t-m) -> ... -> (+)_i F(t-m_i) -> F(t) -> F|_Z(t) -> 0
/// with exterior-power multiplicities C(c,j). F must live on Z's ambient
/// space (P^N for a plain complete intersection, Y for one inside Y) and
/// carry no twist of its own.
inline ExactComplex koszul_complex(const Space& z, const SheafExpr& f, int t) {
    if (z.kind != Space::Kind::CompleteIntersection &&
        z.kind != Space::Kind::CIinHypersurface)
        throw std::domain_error("koszul_complex: space is not a complete intersection");
    Space amb = detail::ambient_of(z);
    if (f.space != amb)
        throw std::domain_error("koszul_complex: coefficient sheaf must live on " + amb.token());
    if (f.twist != 0)
        throw std::domain_error("koszul_complex: pass the twist separately");
    int c = static_cast<int>(z.degrees.size());
    ExactComplex cx;
    cx.provenance = "koszul";
    for (int j = c; j >= 0; --j) {
        SheafSum term;
        for (int s : detail::subset_degree_sums(z.degrees, j))
            term.summands.push_back(f.twisted(t - s));
        cx.terms.push_back(std::move(term));
    }
    cx.terms.emplace_back(detail::restrict_to(f, z, t));
    cx.validate();
    return cx;
}

/// The ideal-sheaf variant: 0 -> O(t-m) -> ... -> (+)_i O(t-m_i) -> I_Z(t) -> 0
/// (the structure-sheaf Koszul complex with the final surjection onto the
/// twisted ideal sheaf instead of O(t) -> O_Z(t)).
inline ExactComplex ideal_complex(int N, const std::vector<int>& degrees, int t) {
    Space z = Space::complete_intersection(N, degrees);
    Space amb = Space::proj(N);
    int c = static_cast<int>(z.degrees.size());
    ExactComplex cx;
    cx.provenance = "ideal-koszul";
    for (int j = c; j >= 1; --j) {
        SheafSum term;
        for (int s : detail::subset_degree_sums(z.degrees, j))
            term.summands.push_back(SheafExpr::structure(amb, t - s));
        cx.terms.push_back(std::move(term));
    }
    cx.terms.emplace_back(SheafExpr::ideal(z, t));
    cx.validate();
    return cx;
}

/// A short exact sequence 0 -> sub -> mid -> quot -> 0 with a provenance tag.
struct ShortExact {
    SheafExpr sub, mid, quot;
    std::string provenance;
};

/// Restriction to the hypersurface Y:  0 -> F(p-d) -> F(p) -> F(p)|_Y -> 0.
/// `restricted` names the last term (a sheaf on Y with an ambient base).
inline ShortExact restriction_sequence(const SheafExpr& restricted) {
    using B = SheafExpr::Base;
    const Space& y = restricted.space;
    if (y.kind != Space::Kind::Hypersurface)
        throw std::domain_error("restriction_sequence: expected a sheaf on a hypersurface");
    Space p = Space::proj(y.ambient_dim);
    SheafExpr mid, sub;
    switch (restricted.base) {
        case B::AmbientForms:
            mid = SheafExpr::intrinsic_forms(p, restricted.index, restricted.twist);
            break;
        case B::AmbientTangentTensorForm:
            mid = SheafExpr::tangent_tensor_form(p, restricted.twist);
            break;
        case B::Structure:
            mid = SheafExpr::structure(p, restricted.twist);
            break;
        default:
            throw std::domain_error("restriction_sequence: unsupported base");
    }
    sub = mid.twisted(-y.hyp_degree);
    return {sub, mid, restricted, "restrict"};
}

/// Conormal sequence on Y tensored with the restricted ambient tangent bundle:
///   0 -> T|_Y(p-d) -> (T ox Omega)(p)|_Y -> T|_Y(p) ox Omega_Y -> 0,
/// with T|_Y(p-d) rewritten as Omega^{N-1}(N+1+p-d)|_Y.
inline ShortExact mixed_sequence(const SheafExpr& mixed) {
    const Space& y = mixed.space;
    if (mixed.base != SheafExpr::Base::AmbientTangentIntrinsicForms)
        throw std::domain_error("mixed_sequence: expected T_amb|_Y ox Omega_Y");
    int N = y.ambient_dim, d = y.hyp_degree, p = mixed.twist;
    SheafExpr sub = SheafExpr::ambient_forms(y, N - 1, N + 1 + p - d);
    SheafExpr mid = SheafExpr::ambient_tangent_tensor_form(y, p);
    return {sub, mid, mixed, "mixed"};
}

/// Normal-bundle sequence of Y tensored with Omega_Y(p):
///   0 -> T_Y ox Omega_Y(p) -> T|_Y(p) ox Omega_Y -> Omega_Y(p+d) -> 0.
inline ShortExact normal_sequence(const SheafExpr& endo) {
    const Space& y = endo.space;
    if (endo.base != SheafExpr::Base::TangentTensorForm ||
        y.kind != Space::Kind::Hypersurface)
        throw std::domain_error("normal_sequence: expected T_Y ox Omega_Y on a hypersurface");
    int p = endo.twist;
    SheafExpr mid = SheafExpr::ambient_tangent_intrinsic_forms(y, p);
    SheafExpr quot = SheafExpr::intrinsic_forms(y, 1, p + y.hyp_degree);
    return {endo, mid, quot, "normal"};
}

/// Trace part of End(T_Y):  0 -> O_Y(p) -> T_Y ox Omega_Y(p) -> ad(T_Y)(p) -> 0
/// with ad(T_Y)(p) = Omega_Y^{T_{N-2}}(N+1-d+p).
inline ShortExact adjoint_sequence(const SheafExpr& endo) {
    const Space& y = endo.space;
    if (endo.base != SheafExpr::Base::TangentTensorForm ||
        y.kind != Space::Kind::Hypersurface)
        throw std::domain_error("adjoint_sequence: expected T_Y ox Omega_Y on a hypersurface");
    int N = y.ambient_dim, d = y.hyp_degree, p = endo.twist;
    SheafExpr sub = SheafExpr::structure(y, p);
    SheafExpr quot = SheafExpr::tableau(y, N - 2, N + 1 - d + p);
    return {sub, endo, quot, "adjoint"};
}

}  // namespace civet::deduce
