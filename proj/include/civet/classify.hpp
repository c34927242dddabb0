#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace civet::classify {

/// The multi-degree [m_1, ..., m_c] of a complete intersection in P^N,
/// canonicalized sorted nondecreasing. dim Z = N - c >= 1.
class MultiDegree {
public:
    MultiDegree(std::vector<int> degrees, int ambient_dim)
        : degrees_(std::move(degrees)), ambient_(ambient_dim) {
        std::sort(degrees_.begin(), degrees_.end());
        check(true);
    }

    /// For derived lists (a variety of tangent directions can be a finite
    /// set of points); dim Z >= 0 allowed.
    static MultiDegree allow_points(std::vector<int> degrees, int ambient_dim) {
        MultiDegree z(Tag{}, std::move(degrees), ambient_dim);
        z.check(false);
        return z;
    }

    const std::vector<int>& degrees() const { return degrees_; }
    int ambient_dim() const { return ambient_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return ambient_ - codim(); }

    /// m = sum of the cutting degrees.
    int degree_sum() const {
        int m = 0;
        for (int d : degrees_) m += d;
        return m;
    }

    /// Projective degree: the product of the cutting degrees.
    long long degree_product() const {
        long long p = 1;
        for (int d : degrees_) p *= d;
        return p;
    }

    bool is(std::initializer_list<int> list) const {
        return degrees_ == std::vector<int>(list);
    }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < degrees_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
        return a.degrees_ == b.degrees_ && a.ambient_ == b.ambient_;
    }

private:
    struct Tag {};
    MultiDegree(Tag, std::vector<int> degrees, int ambient_dim)
        : degrees_(std::move(degrees)), ambient_(ambient_dim) {
        std::sort(degrees_.begin(), degrees_.end());
    }

    void check(bool positive_dim) const {
        if (degrees_.empty()) throw std::domain_error("MultiDegree: empty degree list");
        for (int d : degrees_)
            if (d < 2) throw std::domain_error("MultiDegree: degrees must be >= 2");
        if (dim() < (positive_dim ? 1 : 0))
            throw std::domain_error("MultiDegree: too many cutting degrees for P^" +
                                    std::to_string(ambient_));
    }

    std::vector<int> degrees_;
    int ambient_;
};

/// H^0(Z, T_Z(1)) != 0. Curves: N+2 >= m. Higher dimension: sum(m_i - 1) <= 2.
inline bool h0_tz1_nonzero(const MultiDegree& z) {
    if (z.dim() == 1) return z.ambient_dim() + 2 >= z.degree_sum();
    return z.degree_sum() - z.codim() <= 2;
}

/// H^0(Z, T_Z) != 0 (continuous automorphisms of the cone). Curves: N+1 >= m.
/// Higher dimension: only the hyperquadric.
inline bool h0_tz_nonzero(const MultiDegree& z) {
    if (z.dim() == 1) return z.ambient_dim() + 1 >= z.degree_sum();
    return z.degree_sum() - z.codim() <= 1;
}

/// The space of cone-preserving alternating maps modulo contractions is
/// nonzero only for the plane conic.
inline bool xi_prime_nonzero(const MultiDegree& z) {
    return z.ambient_dim() == 2 && z.is({2});
}

/// Every positive-dimensional nonsingular nondegenerate complete intersection
/// is tangentially nondegenerate.
inline bool xi0_trivial(const MultiDegree&) { return true; }

/// Multi-degree of the variety of tangent directions of lines through a
/// general point: the concatenation of [2, 3, ..., m_i] over all i, inside
/// the projectivized tangent space P^{dim Z - 1}. The caller asserts that Z
/// is actually covered by lines.
inline MultiDegree vmrt_multidegree(const MultiDegree& z) {
    std::vector<int> out;
    for (int m : z.degrees())
        for (int j = 2; j <= m; ++j) out.push_back(j);
    return MultiDegree::allow_points(std::move(out), z.dim() - 1);
}

struct MainVerdict {
    enum class Clause { CurveI, CoveredByLinesII, InHypersurfaceIII, NotCovered };
    Clause clause = Clause::NotCovered;
    bool locally_flat_concluded = false;

    std::string clause_name() const {
        switch (clause) {
            case Clause::CurveI: return "curve-i";
            case Clause::CoveredByLinesII: return "covered-by-lines-ii";
            case Clause::InHypersurfaceIII: return "in-hypersurface-iii";
            default: return "not-covered";
        }
    }
};

namespace detail {
inline bool curve_exclusion(const MultiDegree& z) {
    return z.is({3}) || z.is({4}) || z.is({2, 2}) || z.is({2, 3}) || z.is({2, 2, 2});
}
inline void check_hyp_degree(const MultiDegree& z, std::optional<int> d) {
    if (!d) return;
    if (*d < 3)
        throw std::invalid_argument("in-hypersurface clause requires d >= 3");
    if (z.degrees().front() != *d)
        throw std::invalid_argument("in-hypersurface clause requires d = m_1");
}
}  // namespace detail

/// Local-flatness verdict for a Z-isotrivial structure; clauses tested in
/// order (i), (ii), (iii). covered_by_lines is caller-supplied; no
/// multi-degree criterion for line coverage is assumed.
inline MainVerdict theorem_main_verdict(const MultiDegree& z, bool covered_by_lines,
                                        std::optional<int> hypersurface_degree = {}) {
    detail::check_hyp_degree(z, hypersurface_degree);
    using C = MainVerdict::Clause;
    if (z.dim() == 1 && !detail::curve_exclusion(z)) return {C::CurveI, true};
    if (covered_by_lines && !(z.is({2}) || z.is({3}) || z.is({2, 2})))
        return {C::CoveredByLinesII, true};
    if (hypersurface_degree && z.codim() >= 2) {
        bool tail_ok = true;
        for (size_t i = 1; i < z.degrees().size(); ++i)
            if (z.degrees()[i] < *hypersurface_degree + 2) tail_ok = false;
        if (tail_ok) return {C::InHypersurfaceIII, true};
    }
    return {C::NotCovered, false};
}

/// Whether every cone-preserving alternating map is a contraction
/// (Xi_Z = Xi_V), by the same three clauses. Clause (i) reads "degree" as
/// the projective degree, so the plane conic is the only excluded curve.
inline bool xi_equals_xiv_verdict(const MultiDegree& z, bool covered_by_lines,
                                  std::optional<int> hypersurface_degree = {}) {
    detail::check_hyp_degree(z, hypersurface_degree);
    if (z.dim() == 1 && z.degree_product() >= 3) return true;
    if (covered_by_lines && !z.is({2})) return true;
    if (hypersurface_degree && z.codim() >= 2) {
        bool tail_ok = true;
        for (size_t i = 1; i < z.degrees().size(); ++i)
            if (z.degrees()[i] < *hypersurface_degree + 2) tail_ok = false;
        if (tail_ok) return true;
    }
    return false;
}

/// Surjectivity of H^0(Omega_Z(m_i-2)) ox H^0(O(1)) -> H^0(Omega_Z(m_i-1))
/// on a complete intersection curve: holds iff deg Omega_Z(m_i-2) >= 0,
/// i.e. m + m_i - N - 3 >= 0. Fails exactly for the plane conic.
inline bool projnormal_surjective(const MultiDegree& z, int i) {
    if (z.dim() != 1) throw std::domain_error("projnormal_surjective: requires a curve");
    if (i < 1 || i > z.codim())
        throw std::domain_error("projnormal_surjective: index out of range");
    return z.degree_sum() + z.degrees()[static_cast<size_t>(i - 1)] - z.ambient_dim() - 3 >= 0;
}

/// Existence of a nonzero bundle map (+) O(a_i) -> O(b) over a
/// positive-dimensional base: some a_i <= b.
inline bool hom_bundle_exists(const std::vector<int>& source_degrees, int target_degree) {
    if (source_degrees.empty()) throw std::domain_error("hom_bundle_exists: empty source");
    return *std::min_element(source_degrees.begin(), source_degrees.end()) <= target_degree;
}

}  // namespace civet::classify
