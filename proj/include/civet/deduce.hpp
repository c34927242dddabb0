#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "civet/complexes.hpp"
#include "civet/derivation.hpp"
#include "civet/hilbert.hpp"
#include "civet/rules.hpp"

namespace civet::deduce {

/// chi(O_Z(t)) for the complete intersection of the given degrees in P^N.
inline BigInt hilbert_ci(int N, const std::vector<int>& degrees, long long t) {
    return ci_euler_char(N, degrees, t);
}

inline Derivation chase_vanish(const sheaf::ExactComplex& cx, int q, const Rules& rules) {
    return rules.chase_vanish(cx, q);
}

inline Derivation chase_iso(const sheaf::ExactComplex& cx, int q, const Rules& rules) {
    return rules.chase_iso(cx, q);
}

namespace detail {
inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}
inline Derivation excluded_pair(const sheaf::SheafExpr& e, int q) {
    return {"excluded-pair", sheaf::SheafSum(e), q, Verdict::unknown()};
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Scripted derivations. Each function validates the hypotheses of the fact
// it certifies (precondition violations name the failed clause) and returns a
// full derivation tree built from the axiom rules and the chase operations.
// ---------------------------------------------------------------------------

/// H^0(Z, Omega^r_{P^N}|_Z(t)) = 0 whenever r >= max(1, t).
inline Derivation restricted_forms_vanish(int N, const std::vector<int>& degrees, int r, int t,
                                          const Rules& rules = {}) {
    detail::require(r >= 1 && r <= N, "restricted-forms: requires 1 <= r <= N");
    detail::require(r >= t, "restricted-forms: requires r >= max(1, t)");
    sheaf::Space z = sheaf::Space::complete_intersection(N, degrees);
    sheaf::ExactComplex cx = koszul_complex(
        z, sheaf::SheafExpr::intrinsic_forms(sheaf::Space::proj(N), r, 0), t);
    return rules.chase_vanish(cx, 0, "koszul-chase");
}

/// H^0(P^N, I_Z(t)): vanishing when every cutting degree exceeds t, otherwise
/// isomorphic to H^0 of (+) O(t - m_i) with the dimension transported.
inline Derivation ideal_sections(int N, const std::vector<int>& degrees, int t,
                                 const Rules& rules = {}) {
    sheaf::Space z = sheaf::Space::complete_intersection(N, degrees);
    return rules.query(sheaf::SheafExpr::ideal(z, t), 0);
}

/// H^q(Y, Omega^r_{P^N}|_Y(p)) on a hypersurface of degree d.
inline Derivation forms_on_hypersurface(int N, int d, int r, int p, int q,
                                        const Rules& rules = {}) {
    detail::require(r >= 1 && r <= N, "forms-on-hypersurface: requires 1 <= r <= N");
    detail::require((q == 0 && p <= r) || (q >= 1 && q <= N - 2),
                    "forms-on-hypersurface: requires q = 0 with p <= r, or 1 <= q <= N-2");
    sheaf::Space y = sheaf::Space::hypersurface(N, d);
    return rules.query(sheaf::SheafExpr::ambient_forms(y, r, p), q);
}

/// H^q(Y, (T ox Omega)_{P^N}(p)|_Y) for p <= -1, 0 <= q <= N-2. Unknown at
/// the excluded pairs (q,p) = (1,-1) and (N-2, d-N).
inline Derivation endo_on_hypersurface(int N, int d, int p, int q, const Rules& rules = {}) {
    detail::require(p <= -1, "endo-on-hypersurface: requires p <= -1");
    detail::require(q >= 0 && q <= N - 2, "endo-on-hypersurface: requires 0 <= q <= N-2");
    sheaf::Space y = sheaf::Space::hypersurface(N, d);
    sheaf::SheafExpr e = sheaf::SheafExpr::ambient_tangent_tensor_form(y, p);
    if ((q == 1 && p == -1) || (q == N - 2 && p == d - N)) return detail::excluded_pair(e, q);
    return rules.query(e, q);
}

/// H^q(Y, T_{P^N}|_Y(p) ox Omega_Y) for p <= -1, 0 <= q <= N-3. Unknown at
/// the excluded pairs (q,p) = (1,-1) and (N-3, 2d-N-1).
inline Derivation mixed_endo_hypersurface(int N, int d, int p, int q, const Rules& rules = {}) {
    detail::require(p <= -1, "mixed-endo: requires p <= -1");
    detail::require(q >= 0 && q <= N - 3, "mixed-endo: requires 0 <= q <= N-3");
    sheaf::Space y = sheaf::Space::hypersurface(N, d);
    sheaf::SheafExpr e = sheaf::SheafExpr::ambient_tangent_intrinsic_forms(y, p);
    if ((q == 1 && p == -1) || (q == N - 3 && p == 2 * d - N - 1))
        return detail::excluded_pair(e, q);
    return rules.query(e, q);
}

/// H^q(Y, T_Y ox Omega_Y(p)) = 0 for p <= -1 in the range 0 <= q <= N-3,
/// under the per-degree hypotheses: q=1 needs p+d <= 1, q=2 needs p+d != 0,
/// q=N-3 needs p != 2d-N-1. Overlapping degrees must satisfy every clause
/// that mentions them.
inline Derivation hypersurface_endo_vanish(int N, int d, int p, int q,
                                           const Rules& rules = {}) {
    detail::require(d >= 3, "hypersurface-endo: requires d >= 3");
    detail::require(p <= -1, "hypersurface-endo: requires p <= -1");
    detail::require(q >= 0 && q <= N - 3, "hypersurface-endo: requires 0 <= q <= N-3");
    if (q == 1) detail::require(p + d <= 1, "hypersurface-endo: q=1 clause requires p+d <= 1");
    if (q == 2) detail::require(p + d != 0, "hypersurface-endo: q=2 clause requires p+d != 0");
    if (q == N - 3)
        detail::require(p != 2 * d - N - 1,
                        "hypersurface-endo: q=N-3 clause requires p != 2d-N-1");
    sheaf::Space y = sheaf::Space::hypersurface(N, d);
    return rules.query(sheaf::SheafExpr::tangent_tensor_form(y, p), q);
}

/// H^0(Y, T_Y ox Omega_Y(1)) has dimension N+1 for a hypersurface of degree
/// d >= 3 (isomorphic to the linear forms of the ambient space).
inline Derivation hypersurface_endo_h0(int N, int d, const Rules& rules = {}) {
    detail::require(d >= 3, "hypersurface-endo-h0: requires d >= 3");
    detail::require(N >= 3, "hypersurface-endo-h0: requires N >= 3");
    sheaf::Space y = sheaf::Space::hypersurface(N, d);
    return rules.query(sheaf::SheafExpr::tangent_tensor_form(y, 1), 0);
}

/// H^0(Z, T_Y ox Omega_Y(1)|_Z) iso H^0(Y, T_Y ox Omega_Y(1)) for Z a
/// complete intersection inside Y with every cutting degree >= d.
inline Derivation endo_restriction_iso(int N, int d, const std::vector<int>& degrees,
                                       const Rules& rules = {}) {
    detail::require(d >= 3, "endo-restriction: requires d >= 3");
    for (int m : degrees)
        detail::require(m >= d, "endo-restriction: requires every m_j >= d");
    sheaf::Space zy = sheaf::Space::ci_in_hypersurface(N, d, degrees);
    detail::require(zy.dim() >= 2, "endo-restriction: requires dim Z >= 2");
    return rules.query(sheaf::SheafExpr::ambient_tangent_tensor_form(zy, 1), 0);
}

/// H^0(Z, T_Z(1)) rewritten as sections of Omega^{n-1}_Z(N+2-m); the
/// vanishing side of the classifier for dim Z >= 2.
inline Derivation tangent_twist_sections(int N, const std::vector<int>& degrees,
                                         const Rules& rules = {}) {
    sheaf::Space z = sheaf::Space::complete_intersection(N, degrees);
    detail::require(z.dim() >= 2, "tangent-twist: requires dim Z >= 2");
    int p = N + 2 - z.degree_sum();
    return rules.query(sheaf::SheafExpr::intrinsic_forms(z, z.dim() - 1, p), 0);
}

// ---------------------------------------------------------------------------
// Named dispatch (CLI surface) and replay
// ---------------------------------------------------------------------------

struct NamedParams {
    std::optional<int> N, d, r, p, q, t;
    std::vector<int> degrees;
};

inline const std::vector<std::string>& named_derivations() {
    static const std::vector<std::string> names = {
        "restricted-forms",    "ideal-quadrics",       "forms-on-hypersurface",
        "endo-on-hypersurface", "mixed-endo",           "hypersurface-endo",
        "hypersurface-endo-h0", "endo-restriction",     "tangent-twist",
    };
    return names;
}

inline Derivation derive_named(const std::string& name, const NamedParams& a,
                               const Rules& rules = {}) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw std::invalid_argument(std::string("chase ") + name + ": missing " + flag);
        return *v;
    };
    auto need_degrees = [&]() -> const std::vector<int>& {
        if (a.degrees.empty())
            throw std::invalid_argument("chase " + name + ": missing multi-degree");
        return a.degrees;
    };
    if (name == "restricted-forms")
        return restricted_forms_vanish(need(a.N, "--ambient"), need_degrees(), need(a.r, "--form"),
                                       a.t.value_or(0), rules);
    if (name == "ideal-quadrics")
        return ideal_sections(need(a.N, "--ambient"), need_degrees(), a.t.value_or(2), rules);
    if (name == "forms-on-hypersurface")
        return forms_on_hypersurface(need(a.N, "--ambient"), need(a.d, "--hyp-degree"),
                                     need(a.r, "--form"), need(a.p, "--twist"), need(a.q, "--q"),
                                     rules);
    if (name == "endo-on-hypersurface")
        return endo_on_hypersurface(need(a.N, "--ambient"), need(a.d, "--hyp-degree"),
                                    need(a.p, "--twist"), need(a.q, "--q"), rules);
    if (name == "mixed-endo")
        return mixed_endo_hypersurface(need(a.N, "--ambient"), need(a.d, "--hyp-degree"),
                                       need(a.p, "--twist"), need(a.q, "--q"), rules);
    if (name == "hypersurface-endo")
        return hypersurface_endo_vanish(need(a.N, "--ambient"), need(a.d, "--hyp-degree"),
                                        need(a.p, "--twist"), need(a.q, "--q"), rules);
    if (name == "hypersurface-endo-h0")
        return hypersurface_endo_h0(need(a.N, "--ambient"), need(a.d, "--hyp-degree"), rules);
    if (name == "endo-restriction")
        return endo_restriction_iso(need(a.N, "--ambient"), need(a.d, "--hyp-degree"),
                                    need_degrees(), rules);
    if (name == "tangent-twist")
        return tangent_twist_sections(need(a.N, "--ambient"), need_degrees(), rules);
    throw std::invalid_argument("chase: unknown derivation '" + name + "'");
}

namespace detail {

/// Reconstruct the exact complex a chase node was built from. Every chase in
/// this engine resolves the conclusion's sheaf, so the subject pins it down.
inline sheaf::ExactComplex rebuild_complex(const sheaf::SheafExpr& subject) {
    using B = sheaf::SheafExpr::Base;
    using K = sheaf::Space::Kind;
    const sheaf::Space& sp = subject.space;
    if (subject.base == B::IdealOfZ)
        return ideal_complex(sp.ambient_dim, sp.degrees, subject.twist);
    sheaf::Space amb = (sp.kind == K::CIinHypersurface)
                           ? sheaf::Space::hypersurface(sp.ambient_dim, sp.hyp_degree)
                           : sheaf::Space::proj(sp.ambient_dim);
    sheaf::SheafExpr f;
    switch (subject.base) {
        case B::Structure: f = sheaf::SheafExpr::structure(amb, 0); break;
        case B::AmbientForms:
            f = sheaf::SheafExpr::intrinsic_forms(amb, subject.index, 0);
            break;
        case B::AmbientTangentTensorForm:
            f = sheaf::SheafExpr::tangent_tensor_form(amb, 0);
            break;
        default: throw std::domain_error("replay: cannot rebuild complex for " + subject.token());
    }
    return koszul_complex(sp, f, subject.twist);
}

inline bool tree_equal(const Derivation& a, const Derivation& b) {
    if (a.rule != b.rule || a.q != b.q || !(a.subject == b.subject) ||
        !(a.verdict == b.verdict) || a.premises.size() != b.premises.size())
        return false;
    for (size_t i = 0; i < a.premises.size(); ++i)
        if (!tree_equal(a.premises[i], b.premises[i])) return false;
    return true;
}

}  // namespace detail

/// Re-derive a recorded derivation from the axiom set and require the whole
/// tree (rules, subjects, degrees, verdicts) to reproduce. A tampered node
/// anywhere in the tree makes replay fail.
inline bool replay(const Derivation& d, const Rules& rules = {}) {
    if (d.rule == "excluded-pair") return d.verdict.is_unknown();
    Derivation fresh;
    if (!d.subject.single()) {
        fresh = rules.query_sum(d.subject, d.q);
    } else if (d.rule == "vanish-chase" || d.rule == "iso-chase") {
        sheaf::ExactComplex cx = detail::rebuild_complex(d.subject.summands[0]);
        fresh = d.rule == "vanish-chase" ? rules.chase_vanish(cx, d.q, d.rule)
                                         : rules.chase_iso(cx, d.q, d.rule);
    } else {
        fresh = rules.query(d.subject.summands[0], d.q);
    }
    return detail::tree_equal(fresh, d);
}

}  // namespace civet::deduce
