#pragma once

#include <string>
#include <vector>

#include "civet/bott.hpp"
#include "civet/complexes.hpp"
#include "civet/derivation.hpp"
#include "civet/hilbert.hpp"
#include "civet/sheaf.hpp"

namespace civet::deduce {

namespace detail {
inline Verdict from_bott(const bott::CohomVerdict& v) {
    using S = bott::CohomVerdict::Status;
    switch (v.status) {
        case S::Zero: return Verdict::zero();
        case S::Nonzero: return Verdict::nonzero();
        default: return Verdict::nonzero_dim(v.dim);
    }
}
}  // namespace detail

/// The axiom rule set plus the exact-sequence chase machinery. Queries are
/// pure: the same (sheaf, q) always produces the same derivation tree, which
/// is what makes traces replayable. External results enter as named leaf
/// rules with their applicability guards; everything outside the vocabulary
/// answers Unknown, never a fabricated Zero.
class Rules {
public:
    /// Answer H^q(e) with a full derivation tree.
    Derivation query(const sheaf::SheafExpr& e, int q) const {
        using K = sheaf::Space::Kind;
        using B = sheaf::SheafExpr::Base;
        // cohomology vanishes outside 0..dim of the supporting space
        int sup = support_dim(e);
        if (q < 0 || q > sup)
            return {"dim-bound", sheaf::SheafSum(e), q, Verdict::zero()};
        switch (e.space.kind) {
            case K::Proj: return query_proj(e, q);
            case K::Hypersurface: return query_hypersurface(e, q);
            case K::CompleteIntersection:
                if (e.base == B::IdealOfZ) return ideal_chase(e, q);
                return query_ci(e, q);
            case K::CIinHypersurface: return query_ci_in_y(e, q);
        }
        return unknown_node(e, q);
    }

    /// Direct sums: a sum vanishes iff every distinct summand does.
    Derivation query_sum(const sheaf::SheafSum& s, int q) const {
        if (s.summands.empty())
            return {"sum", s, q, Verdict::nonzero_dim(BigInt(1))};  // unreachable guard
        if (s.single()) return query(s.summands[0], q);
        std::vector<Derivation> premises;
        bool all_zero = true, any_unknown = false, any_nonzero = false;
        bool all_dims = true;
        BigInt total(0);
        for (const auto& [expr, count] : s.grouped()) {
            Derivation d = query(expr, q);
            if (!d.verdict.certified_zero()) all_zero = false;
            if (d.verdict.is_unknown()) any_unknown = true;
            if (d.verdict.certified_nonzero()) any_nonzero = true;
            if (d.verdict.dim)
                total += *d.verdict.dim * BigInt(count);
            else
                all_dims = false;
            premises.push_back(std::move(d));
        }
        Verdict v;
        if (all_zero)
            v = Verdict::zero();
        else if (all_dims)
            v = total.is_zero() ? Verdict::zero() : Verdict::nonzero_dim(total);
        else if (any_unknown)
            v = Verdict::unknown();
        else if (any_nonzero)
            v = Verdict::nonzero();
        return {"sum", s, q, v, std::move(premises)};
    }

    /// H^q(last term) = 0 when the rules certify H^{q+j-1}(terms[m-j]) = 0
    /// for all j = 1..m (splitting the complex into short exact sequences).
    Derivation chase_vanish(const sheaf::ExactComplex& cx, int q,
                            const std::string& rule = "vanish-chase") const {
        cx.validate();
        int m = static_cast<int>(cx.terms.size()) - 1;
        std::vector<Derivation> premises;
        bool ok = true;
        for (int j = 1; j <= m; ++j) {
            Derivation d = query_sum(cx.terms[m - j], q + j - 1);
            if (!d.verdict.certified_zero()) ok = false;
            premises.push_back(std::move(d));
        }
        Verdict v = ok ? Verdict::zero() : Verdict::unknown();
        return {rule, cx.terms.back(), q, v, std::move(premises)};
    }

    /// H^q(last term) iso H^q(second-to-last) when the kernel of the final
    /// surjection has vanishing H^q and H^{q+1}, certified through the
    /// remaining terms. Transports the dimension when the target has one.
    Derivation chase_iso(const sheaf::ExactComplex& cx, int q,
                         const std::string& rule = "iso-chase") const {
        cx.validate();
        int m = static_cast<int>(cx.terms.size()) - 1;
        std::vector<Derivation> premises;
        bool ok = true;
        for (int j = 1; j <= m - 1; ++j) {
            Derivation a = query_sum(cx.terms[m - 1 - j], q + j - 1);
            Derivation b = query_sum(cx.terms[m - 1 - j], q + j);
            if (!a.verdict.certified_zero() || !b.verdict.certified_zero()) ok = false;
            premises.push_back(std::move(a));
            premises.push_back(std::move(b));
        }
        if (!ok) return {rule, cx.terms.back(), q, Verdict::unknown(), std::move(premises)};
        Derivation target = query_sum(cx.terms[m - 1], q);
        Verdict v = Verdict::iso_to(cx.terms[m - 1], q, target.verdict.dim);
        premises.push_back(std::move(target));
        return {rule, cx.terms.back(), q, v, std::move(premises)};
    }

    // ----- short exact sequence chases (one slot concluded per call) -----

    /// Conclude H^q of the quotient in 0 -> A -> B -> C -> 0.
    Derivation ses_quot(const ShortExact& s, int q, const std::string& rule) const {
        Derivation b_q = query(s.mid, q);
        Derivation a_q1 = query(s.sub, q + 1);
        if (b_q.verdict.certified_zero() && a_q1.verdict.certified_zero())
            return {rule, sheaf::SheafSum(s.quot), q, Verdict::zero(),
                    {std::move(b_q), std::move(a_q1)}};
        Derivation a_q = query(s.sub, q);
        if (a_q.verdict.certified_zero() && a_q1.verdict.certified_zero()) {
            Verdict v = promote_iso(s.mid, q, b_q.verdict);
            return {rule, sheaf::SheafSum(s.quot), q, v,
                    {std::move(a_q), std::move(a_q1), std::move(b_q)}};
        }
        Derivation b_q1 = query(s.mid, q + 1);
        if (b_q.verdict.certified_zero() && b_q1.verdict.certified_zero()) {
            Verdict v = promote_iso(s.sub, q + 1, a_q1.verdict);
            return {rule, sheaf::SheafSum(s.quot), q, v,
                    {std::move(b_q), std::move(b_q1), std::move(a_q1)}};
        }
        return {rule, sheaf::SheafSum(s.quot), q, Verdict::unknown(),
                {std::move(a_q), std::move(b_q), std::move(a_q1), std::move(b_q1)}};
    }

    /// Conclude H^q of the subobject in 0 -> A -> B -> C -> 0.
    Derivation ses_sub(const ShortExact& s, int q, const std::string& rule) const {
        Derivation c_prev = query(s.quot, q - 1);
        Derivation b_q = query(s.mid, q);
        if (c_prev.verdict.certified_zero() && b_q.verdict.certified_zero())
            return {rule, sheaf::SheafSum(s.sub), q, Verdict::zero(),
                    {std::move(c_prev), std::move(b_q)}};
        Derivation b_prev = query(s.mid, q - 1);
        if (b_prev.verdict.certified_zero() && b_q.verdict.certified_zero()) {
            Verdict v = promote_iso(s.quot, q - 1, c_prev.verdict);
            return {rule, sheaf::SheafSum(s.sub), q, v,
                    {std::move(b_prev), std::move(b_q), std::move(c_prev)}};
        }
        Derivation c_q = query(s.quot, q);
        if (c_prev.verdict.certified_zero() && c_q.verdict.certified_zero()) {
            Verdict v = promote_iso(s.mid, q, b_q.verdict);
            return {rule, sheaf::SheafSum(s.sub), q, v,
                    {std::move(c_prev), std::move(c_q), std::move(b_q)}};
        }
        return {rule, sheaf::SheafSum(s.sub), q, Verdict::unknown(),
                {std::move(c_prev), std::move(b_q), std::move(c_q)}};
    }

    /// Conclude H^q of the middle term in 0 -> A -> B -> C -> 0.
    Derivation ses_mid(const ShortExact& s, int q, const std::string& rule) const {
        Derivation a_q = query(s.sub, q);
        Derivation c_q = query(s.quot, q);
        if (a_q.verdict.certified_zero() && c_q.verdict.certified_zero())
            return {rule, sheaf::SheafSum(s.mid), q, Verdict::zero(),
                    {std::move(a_q), std::move(c_q)}};
        Derivation c_prev = query(s.quot, q - 1);
        if (c_prev.verdict.certified_zero() && c_q.verdict.certified_zero()) {
            Verdict v = promote_iso(s.sub, q, a_q.verdict);
            return {rule, sheaf::SheafSum(s.mid), q, v,
                    {std::move(c_prev), std::move(c_q), std::move(a_q)}};
        }
        Derivation a_q1 = query(s.sub, q + 1);
        if (a_q.verdict.certified_zero() && a_q1.verdict.certified_zero()) {
            Verdict v = promote_iso(s.quot, q, c_q.verdict);
            return {rule, sheaf::SheafSum(s.mid), q, v,
                    {std::move(a_q), std::move(a_q1), std::move(c_q)}};
        }
        return {rule, sheaf::SheafSum(s.mid), q, Verdict::unknown(),
                {std::move(a_q), std::move(c_q)}};
    }

private:
    static int support_dim(const sheaf::SheafExpr& e) {
        // the ideal sheaf lives on the ambient projective space
        if (e.base == sheaf::SheafExpr::Base::IdealOfZ) return e.space.ambient_dim;
        return e.space.dim();
    }

    static Derivation unknown_node(const sheaf::SheafExpr& e, int q) {
        return {"unknown", sheaf::SheafSum(e), q, Verdict::unknown()};
    }

    /// An iso conclusion inherits what is known about its target: a target
    /// that is plain Nonzero makes the conclusion Nonzero; a target with a
    /// dimension keeps the Iso-to form with the dimension transported.
    static Verdict promote_iso(const sheaf::SheafExpr& target, int q, const Verdict& tv) {
        if (tv.status == Verdict::Status::Nonzero) return Verdict::nonzero();
        if (tv.is_unknown()) return Verdict::iso_to(sheaf::SheafSum(target), q);
        return Verdict::iso_to(sheaf::SheafSum(target), q, tv.dim);
    }

    // ----- P^N: closed-form leaves -----

    Derivation query_proj(const sheaf::SheafExpr& e, int q) const {
        using B = sheaf::SheafExpr::Base;
        int N = e.space.ambient_dim;
        sheaf::SheafSum subj(e);
        switch (e.base) {
            case B::Structure:
                return {"line-bundle", subj, q, detail::from_bott(bott::line_bundle(N, e.twist, q))};
            case B::IntrinsicForms:
                return {"bott-forms", subj, q,
                        detail::from_bott(bott::omega(N, e.index, e.twist, q))};
            case B::Tableau:
                return {"bott-tableau", subj, q,
                        detail::from_bott(bott::tableau(N, e.index, e.twist, q))};
            case B::TangentTensorForm:
                if (q <= N - 1 && N >= 2)
                    return {"bott-endo", subj, q, detail::from_bott(bott::endo(N, e.twist, q))};
                return unknown_node(e, q);
            default: return unknown_node(e, q);
        }
    }

    // ----- hypersurface Y in P^N -----

    Derivation query_hypersurface(const sheaf::SheafExpr& e, int q) const {
        using B = sheaf::SheafExpr::Base;
        switch (e.base) {
            case B::Structure: return hyp_line_bundle(e, q);
            case B::IntrinsicForms: return hyp_forms_axiom(e, q);
            case B::AmbientForms:
            case B::AmbientTangentTensorForm:
                return ses_quot(restriction_sequence(e), q, "restrict-chase");
            case B::AmbientTangentIntrinsicForms:
                return ses_quot(mixed_sequence(e), q, "mixed-chase");
            case B::TangentTensorForm: {
                Derivation d = ses_sub(normal_sequence(e), q, "normal-chase");
                if (!d.verdict.is_unknown()) return d;
                Derivation alt = ses_mid(adjoint_sequence(e), q, "adjoint-chase");
                return alt.verdict.is_unknown() ? d : alt;
            }
            case B::Tableau: return br_tableau_axiom(e, q);
            default: return unknown_node(e, q);
        }
    }

    /// H^q(Y, O_Y(p)) in closed form from the restriction sequence: sections
    /// and top cohomology are differences of the ambient line-bundle counts,
    /// everything in between vanishes.
    Derivation hyp_line_bundle(const sheaf::SheafExpr& e, int q) const {
        int N = e.space.ambient_dim, d = e.space.hyp_degree, p = e.twist;
        sheaf::SheafSum subj(e);
        if (q == 0) {
            BigInt h = bott::line_bundle(N, p, 0).dim_or_zero() -
                       bott::line_bundle(N, p - d, 0).dim_or_zero();
            return {"hyp-line", subj, q,
                    h.is_zero() ? Verdict::zero() : Verdict::nonzero_dim(h)};
        }
        if (q == N - 1) {
            BigInt h = bott::line_bundle(N, p - d, N).dim_or_zero() -
                       bott::line_bundle(N, p, N).dim_or_zero();
            return {"hyp-line", subj, q,
                    h.is_zero() ? Verdict::zero() : Verdict::nonzero_dim(h)};
        }
        return {"hyp-line", subj, q, Verdict::zero()};
    }

    /// Intrinsic forms on a hypersurface; an axiom leaf. Sections vanish for
    /// p <= r, the middle groups below the antidiagonal q+r = N-1 are
    /// delta_{q,r} delta_{p,0}, and one twist above the section bound is
    /// nonvanishing because a hypersurface is a complete intersection.
    Derivation hyp_forms_axiom(const sheaf::SheafExpr& e, int q) const {
        int N = e.space.ambient_dim, r = e.index, p = e.twist;
        int n = N - 1;  // dim Y
        sheaf::SheafSum subj(e);
        if (q == 0) {
            if (r >= 1 && r <= N - 2 && p <= r)
                return {"hyp-forms", subj, q, Verdict::zero()};
            if (r >= 1 && r <= n - 1 && p == r + 1)
                return {"ci-forms-nonvanish", subj, q, Verdict::nonzero()};
            return unknown_node(e, q);
        }
        if (q >= 1 && q <= N - 2 && q + r != N - 1) {
            if (q == r && p == 0)
                return {"hyp-forms", subj, q, Verdict::nonzero_dim(BigInt(1))};
            return {"hyp-forms", subj, q, Verdict::zero()};
        }
        return unknown_node(e, q);
    }

    /// Sections of the traceless-endomorphism tableau bundle on Y vanish at
    /// the adjoint twist when d >= 3; cited as an external vanishing.
    Derivation br_tableau_axiom(const sheaf::SheafExpr& e, int q) const {
        int N = e.space.ambient_dim, d = e.space.hyp_degree;
        if (q == 0 && d >= 3 && e.index == N - 2 && e.twist == N + 2 - d)
            return {"br-sections", sheaf::SheafSum(e), q, Verdict::zero()};
        return unknown_node(e, q);
    }

    // ----- complete intersection Z in P^N -----

    Derivation query_ci(const sheaf::SheafExpr& e, int q) const {
        using B = sheaf::SheafExpr::Base;
        switch (e.base) {
            case B::Structure: return ci_line_bundle(e, q);
            case B::IntrinsicForms: return ci_forms_axiom(e, q);
            case B::AmbientForms: {
                sheaf::SheafExpr f = sheaf::SheafExpr::intrinsic_forms(
                    sheaf::Space::proj(e.space.ambient_dim), e.index, 0);
                sheaf::ExactComplex cx = koszul_complex(e.space, f, e.twist);
                Derivation d = chase_vanish(cx, q, "koszul-chase");
                if (!d.verdict.is_unknown()) return d;
                Derivation iso = chase_iso(cx, q, "koszul-chase-iso");
                return iso.verdict.is_unknown() ? d : iso;
            }
            case B::ConormalOfZ: return conormal_split(e, q);
            default: return unknown_node(e, q);
        }
    }

    /// Line bundles on Z: negative twists have no sections, O_Z is connected,
    /// middle cohomology is chased through the Koszul resolution, the top
    /// degree dualizes to twist m - N - 1 - t.
    Derivation ci_line_bundle(const sheaf::SheafExpr& e, int q) const {
        int N = e.space.ambient_dim, t = e.twist, n = e.space.dim();
        int dual = e.space.degree_sum() - N - 1 - t;
        sheaf::SheafSum subj(e);
        if (q == 0) {
            if (t < 0) return {"neg-degree", subj, q, Verdict::zero()};
            if (t == 0) return {"structure-sections", subj, q, Verdict::nonzero_dim(BigInt(1))};
            // h^0 = chi once all higher groups are certified to vanish
            std::vector<Derivation> premises;
            bool ok = true;
            for (int qq = 1; qq <= n - 1 && ok; ++qq) {
                Derivation mid = chase_vanish(
                    koszul_complex(e.space,
                                   sheaf::SheafExpr::structure(sheaf::Space::proj(N), 0), t),
                    qq, "koszul-chase");
                if (!mid.verdict.certified_zero()) ok = false;
                premises.push_back(std::move(mid));
            }
            if (ok && dual < 0) {
                BigInt chi = ci_euler_char(N, e.space.degrees, t);
                if (chi <= BigInt(0)) throw std::logic_error("ci_line_bundle: chi must be positive");
                premises.push_back({"neg-degree",
                                    sheaf::SheafSum(sheaf::SheafExpr::structure(e.space, dual)), 0,
                                    Verdict::zero()});
                return {"ci-sections", subj, q, Verdict::nonzero_dim(chi), std::move(premises)};
            }
            return {"ci-sections", subj, q, Verdict::unknown(), std::move(premises)};
        }
        if (q >= 1 && q <= n - 1) {
            return chase_vanish(
                koszul_complex(e.space, sheaf::SheafExpr::structure(sheaf::Space::proj(N), 0), t),
                q, "koszul-chase");
        }
        // q == n: Serre duality on Z, canonical twist m - N - 1
        Derivation dualized = query(sheaf::SheafExpr::structure(e.space, dual), 0);
        Verdict v = dualized.verdict;
        if (v.status == Verdict::Status::IsoTo) v = v.dim ? Verdict::nonzero_dim(*v.dim) : Verdict::nonzero();
        return {"serre-twist", subj, q, v, {std::move(dualized)}};
    }

    /// Sections of intrinsic forms on Z. Two axiom leaves: vanishing for
    /// p <= r in the middle form range, nonvanishing one twist above.
    Derivation ci_forms_axiom(const sheaf::SheafExpr& e, int q) const {
        int r = e.index, p = e.twist, n = e.space.dim();
        if (q == 0 && r >= 1 && r <= n - 1) {
            if (p <= r) return {"ci-forms-vanish", sheaf::SheafSum(e), q, Verdict::zero()};
            if (p == r + 1)
                return {"ci-forms-nonvanish", sheaf::SheafSum(e), q, Verdict::nonzero()};
        }
        return unknown_node(e, q);
    }

    /// The normal bundle of Z splits as (+) O_Z(m_i), so its twisted dual is
    /// the direct sum of line bundles O_Z(t - m_i).
    Derivation conormal_split(const sheaf::SheafExpr& e, int q) const {
        sheaf::SheafSum split;
        for (int mi : e.space.degrees)
            split.summands.push_back(sheaf::SheafExpr::structure(e.space, e.twist - mi));
        Derivation inner = query_sum(split, q);
        Verdict v = inner.verdict;
        return {"conormal-split", sheaf::SheafSum(e), q, v, {std::move(inner)}};
    }

    /// I_Z(t) on P^N through the ideal-sheaf Koszul complex.
    Derivation ideal_chase(const sheaf::SheafExpr& e, int q) const {
        sheaf::ExactComplex cx = ideal_complex(e.space.ambient_dim, e.space.degrees, e.twist);
        Derivation d = chase_vanish(cx, q, "ideal-chase");
        if (!d.verdict.is_unknown()) return d;
        Derivation iso = chase_iso(cx, q, "ideal-chase-iso");
        return iso.verdict.is_unknown() ? d : iso;
    }

    // ----- complete intersection Z inside the hypersurface Y -----

    Derivation query_ci_in_y(const sheaf::SheafExpr& e, int q) const {
        using B = sheaf::SheafExpr::Base;
        sheaf::SheafExpr f;
        sheaf::Space y =
            sheaf::Space::hypersurface(e.space.ambient_dim, e.space.hyp_degree);
        switch (e.base) {
            case B::Structure: f = sheaf::SheafExpr::structure(y, 0); break;
            case B::AmbientForms: f = sheaf::SheafExpr::intrinsic_forms(y, e.index, 0); break;
            case B::AmbientTangentTensorForm:
                f = sheaf::SheafExpr::tangent_tensor_form(y, 0);
                break;
            default: return unknown_node(e, q);
        }
        sheaf::ExactComplex cx = koszul_complex(e.space, f, e.twist);
        Derivation d = chase_vanish(cx, q, "koszul-y-chase");
        if (!d.verdict.is_unknown()) return d;
        Derivation iso = chase_iso(cx, q, "koszul-y-chase-iso");
        return iso.verdict.is_unknown() ? d : iso;
    }
};

}  // namespace civet::deduce
