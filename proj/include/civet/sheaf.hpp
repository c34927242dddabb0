#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace civet::sheaf {

/// The spaces cohomology is taken over: P^N, a hypersurface Y in P^N, a
/// complete intersection Z in P^N, or a complete intersection Z inside Y.
struct Space {
    enum class Kind { Proj, Hypersurface, CompleteIntersection, CIinHypersurface };

    Kind kind = Kind::Proj;
    int ambient_dim = 1;      // N
    int hyp_degree = 0;       // d (Hypersurface / CIinHypersurface)
    std::vector<int> degrees; // cutting degrees of Z, sorted nondecreasing

    static Space proj(int N) {
        if (N < 1) throw std::domain_error("Space: ambient dimension must be >= 1");
        Space s;
        s.kind = Kind::Proj;
        s.ambient_dim = N;
        return s;
    }

    static Space hypersurface(int N, int d) {
        if (N < 2) throw std::domain_error("Space: hypersurface needs N >= 2");
        if (d < 2) throw std::domain_error("Space: hypersurface degree must be >= 2");
        Space s;
        s.kind = Kind::Hypersurface;
        s.ambient_dim = N;
        s.hyp_degree = d;
        return s;
    }

    static Space complete_intersection(int N, std::vector<int> degs) {
        Space s;
        s.kind = Kind::CompleteIntersection;
        s.ambient_dim = N;
        s.degrees = std::move(degs);
        std::sort(s.degrees.begin(), s.degrees.end());
        s.check_ci();
        return s;
    }

    static Space ci_in_hypersurface(int N, int d, std::vector<int> degs) {
        if (d < 2) throw std::domain_error("Space: hypersurface degree must be >= 2");
        Space s;
        s.kind = Kind::CIinHypersurface;
        s.ambient_dim = N;
        s.hyp_degree = d;
        s.degrees = std::move(degs);
        std::sort(s.degrees.begin(), s.degrees.end());
        s.check_ci();
        return s;
    }

    int codim() const {
        switch (kind) {
            case Kind::Proj: return 0;
            case Kind::Hypersurface: return 1;
            case Kind::CompleteIntersection: return static_cast<int>(degrees.size());
            default: return 1 + static_cast<int>(degrees.size());
        }
    }

    int dim() const { return ambient_dim - codim(); }

    int degree_sum() const {
        int m = 0;
        for (int d : degrees) m += d;
        return m;
    }

    std::string token() const {
        switch (kind) {
            case Kind::Proj: return "P" + std::to_string(ambient_dim);
            case Kind::Hypersurface:
                return "Y(" + std::to_string(ambient_dim) + ";" + std::to_string(hyp_degree) + ")";
            case Kind::CompleteIntersection:
                return "Z(" + std::to_string(ambient_dim) + ";" + deg_token() + ")";
            default:
                return "ZY(" + std::to_string(ambient_dim) + ";" + std::to_string(hyp_degree) +
                       ";" + deg_token() + ")";
        }
    }

    friend bool operator==(const Space& a, const Space& b) {
        return a.kind == b.kind && a.ambient_dim == b.ambient_dim &&
               a.hyp_degree == b.hyp_degree && a.degrees == b.degrees;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

private:
    void check_ci() const {
        if (degrees.empty()) throw std::domain_error("Space: empty multi-degree");
        for (int d : degrees)
            if (d < 2) throw std::domain_error("Space: cutting degrees must be >= 2");
        if (dim() < 1) throw std::domain_error("Space: complete intersection must have dim >= 1");
    }

    std::string deg_token() const {
        std::string s;
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees[i]);
        }
        return s;
    }
};

/// A formal twisted sheaf on one of the spaces above. This is the entire
/// vocabulary the deduction engine speaks; anything else is Unknown.
///
/// "Ambient" bases mean a bundle of the next enclosing space restricted to
/// this one: on Y the ambient space is P^N, on Z-in-Y it is Y.
struct SheafExpr {
    enum class Base {
        Structure,                     // O
        AmbientForms,                  // Omega^r of the ambient, restricted
        IntrinsicForms,                // Omega^r of the space itself
        TangentTensorForm,             // T ox Omega of the space itself
        AmbientTangentTensorForm,      // T ox Omega of the ambient, restricted
        AmbientTangentIntrinsicForms,  // T_amb|_X ox Omega_X
        ConormalOfZ,                   // conormal bundle of Z
        IdealOfZ,                      // ideal sheaf of Z (lives on the ambient P^N)
        Tableau                        // Omega^{T_k}
    };

    Space space;
    Base base = Base::Structure;
    int index = 0;  // r for form powers, k for tableaux
    int twist = 0;

    SheafExpr() = default;

    static SheafExpr make(Space sp, Base b, int idx, int tw) {
        SheafExpr e;
        e.space = std::move(sp);
        e.base = b;
        e.index = idx;
        e.twist = tw;
        e.canonicalize();
        e.check();
        return e;
    }

    static SheafExpr structure(Space sp, int tw) {
        return make(std::move(sp), Base::Structure, 0, tw);
    }
    static SheafExpr ambient_forms(Space sp, int r, int tw) {
        return make(std::move(sp), Base::AmbientForms, r, tw);
    }
    static SheafExpr intrinsic_forms(Space sp, int r, int tw) {
        return make(std::move(sp), Base::IntrinsicForms, r, tw);
    }
    static SheafExpr tangent_tensor_form(Space sp, int tw) {
        return make(std::move(sp), Base::TangentTensorForm, 0, tw);
    }
    static SheafExpr ambient_tangent_tensor_form(Space sp, int tw) {
        return make(std::move(sp), Base::AmbientTangentTensorForm, 0, tw);
    }
    static SheafExpr ambient_tangent_intrinsic_forms(Space sp, int tw) {
        return make(std::move(sp), Base::AmbientTangentIntrinsicForms, 0, tw);
    }
    static SheafExpr conormal(Space sp, int tw) {
        return make(std::move(sp), Base::ConormalOfZ, 0, tw);
    }
    static SheafExpr ideal(Space sp, int tw) { return make(std::move(sp), Base::IdealOfZ, 0, tw); }
    static SheafExpr tableau(Space sp, int k, int tw) {
        return make(std::move(sp), Base::Tableau, k, tw);
    }

    SheafExpr twisted(int extra) const {
        SheafExpr e = *this;
        e.twist += extra;
        return e;
    }

    std::string token() const {
        std::string b;
        switch (base) {
            case Base::Structure: b = "O"; break;
            case Base::AmbientForms: b = "Om^" + std::to_string(index) + "|a"; break;
            case Base::IntrinsicForms: b = "Om^" + std::to_string(index); break;
            case Base::TangentTensorForm: b = "TxOm"; break;
            case Base::AmbientTangentTensorForm: b = "TxOm|a"; break;
            case Base::AmbientTangentIntrinsicForms: b = "TaxOm"; break;
            case Base::ConormalOfZ: b = "Nv"; break;
            case Base::IdealOfZ: b = "I"; break;
            case Base::Tableau: b = "Tab^" + std::to_string(index); break;
        }
        return b + "(" + std::to_string(twist) + ")@" + space.token();
    }

    friend bool operator==(const SheafExpr& a, const SheafExpr& b) {
        return a.space == b.space && a.base == b.base && a.index == b.index && a.twist == b.twist;
    }
    friend bool operator!=(const SheafExpr& a, const SheafExpr& b) { return !(a == b); }

private:
    void canonicalize() {
        // Omega^0 is the structure sheaf
        if ((base == Base::AmbientForms || base == Base::IntrinsicForms) && index == 0)
            base = Base::Structure;
        // on P^N the ambient bundles are the intrinsic ones
        if (space.kind == Space::Kind::Proj) {
            if (base == Base::AmbientForms) base = Base::IntrinsicForms;
            if (base == Base::AmbientTangentTensorForm) base = Base::TangentTensorForm;
        }
    }

    void check() const {
        using K = Space::Kind;
        switch (base) {
            case Base::AmbientForms:
            case Base::IntrinsicForms:
                if (index < 0 || index > space.ambient_dim)
                    throw std::domain_error("SheafExpr: form degree out of range");
                break;
            case Base::Tableau:
                if (index < 1 || index > space.ambient_dim)
                    throw std::domain_error("SheafExpr: tableau index out of range");
                break;
            case Base::ConormalOfZ:
            case Base::IdealOfZ:
                if (space.kind != K::CompleteIntersection)
                    throw std::domain_error(
                        "SheafExpr: ideal/conormal requires a complete intersection context");
                break;
            case Base::AmbientTangentIntrinsicForms:
                if (space.kind != K::Hypersurface)
                    throw std::domain_error(
                        "SheafExpr: mixed tangent-forms bundle lives on a hypersurface");
                break;
            default: break;
        }
    }
};

/// Formal direct sum, kept as a multiset of summands.
/// A sum vanishes iff every summand does.
struct SheafSum {
    std::vector<SheafExpr> summands;

    SheafSum() = default;
    SheafSum(SheafExpr one) { summands.push_back(std::move(one)); }
    explicit SheafSum(std::vector<SheafExpr> many) : summands(std::move(many)) {}

    bool single() const { return summands.size() == 1; }

    /// Distinct summands with multiplicities, in first-appearance order.
    std::vector<std::pair<SheafExpr, int>> grouped() const {
        std::vector<std::pair<SheafExpr, int>> g;
        for (const auto& e : summands) {
            bool found = false;
            for (auto& [expr, count] : g)
                if (expr == e) {
                    ++count;
                    found = true;
                    break;
                }
            if (!found) g.emplace_back(e, 1);
        }
        return g;
    }

    std::string token() const {
        if (summands.empty()) return "0";
        if (single()) return summands[0].token();
        std::string s = "[";
        auto g = grouped();
        for (size_t i = 0; i < g.size(); ++i) {
            if (i) s += "+";
            if (g[i].second > 1) s += std::to_string(g[i].second) + "*";
            s += g[i].first.token();
        }
        return s + "]";
    }

    friend bool operator==(const SheafSum& a, const SheafSum& b) {
        if (a.summands.size() != b.summands.size()) return false;
        auto ga = a.grouped();
        for (const auto& [expr, count] : ga) {
            int cb = 0;
            for (const auto& e : b.summands)
                if (e == expr) ++cb;
            if (cb != count) return false;
        }
        return true;
    }
};

/// An exact complex 0 -> terms[0] -> ... -> terms.back() -> 0, together with
/// the name of the rule that constructed it (so a derivation can be replayed).
struct ExactComplex {
    std::vector<SheafSum> terms;
    std::string provenance;

    void validate() const {
        if (terms.size() < 2) throw std::domain_error("ExactComplex: needs at least two terms");
    }

    std::string token() const {
        std::string s = "0";
        for (const auto& t : terms) s += " -> " + t.token();
        return s + " -> 0";
    }
};

}  // namespace civet::sheaf
