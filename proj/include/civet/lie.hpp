#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "civet/bigint.hpp"

namespace civet::lie {

enum class Type { A, B, C, D, E6, E7, E8, F4, G2 };

inline std::string type_token(Type t) {
    switch (t) {
        case Type::A: return "A";
        case Type::B: return "B";
        case Type::C: return "C";
        case Type::D: return "D";
        case Type::E6: return "E6";
        case Type::E7: return "E7";
        case Type::E8: return "E8";
        case Type::F4: return "F4";
        default: return "G2";
    }
}

inline Type parse_type(const std::string& s) {
    if (s == "A" || s == "a") return Type::A;
    if (s == "B" || s == "b") return Type::B;
    if (s == "C" || s == "c") return Type::C;
    if (s == "D" || s == "d") return Type::D;
    if (s == "E6" || s == "e6") return Type::E6;
    if (s == "E7" || s == "e7") return Type::E7;
    if (s == "E8" || s == "e8") return Type::E8;
    if (s == "F4" || s == "f4") return Type::F4;
    if (s == "G2" || s == "g2") return Type::G2;
    throw std::invalid_argument("unknown root-system type '" + s + "'");
}

/// Integer coordinates in the fundamental-weight basis.
using WeightVec = std::vector<long long>;

/// A simple root system realized through the doubled Gram matrix of its
/// simple roots (2(a_i, a_j), an integer for every type). Positive roots are
/// generated by root-string closure from the Cartan integers; weights stay
/// in the fundamental basis and only meet ambient coordinates inside the
/// invariant pairing.
class RootSystem {
public:
    RootSystem(Type type, int rank) : type_(type), rank_(rank) {
        validate_rank();
        build_gram();
        build_cartan();
        generate_positive_roots();
    }

    Type type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const {
        if (type_ == Type::A || type_ == Type::B || type_ == Type::C || type_ == Type::D)
            return type_token(type_) + std::to_string(rank_);
        return type_token(type_);
    }

    /// Positive roots in simple-root coordinates.
    const std::vector<std::vector<int>>& positive_roots() const { return positive_; }

    long long num_roots() const { return 2 * static_cast<long long>(positive_.size()); }
    long long dim_g() const { return rank_ + num_roots(); }

    WeightVec rho() const { return WeightVec(static_cast<size_t>(rank_), 1); }

    WeightVec fundamental(int k) const {
        if (k < 1 || k > rank_) throw std::domain_error("fundamental weight index out of range");
        WeightVec w(static_cast<size_t>(rank_), 0);
        w[static_cast<size_t>(k - 1)] = 1;
        return w;
    }

    /// 4 * (w, alpha) for a weight w (fundamental basis) and a positive root
    /// alpha (simple-root coordinates); exact and integral for every type.
    long long pairing4(const WeightVec& w, const std::vector<int>& alpha) const {
        long long s = 0;
        for (int j = 0; j < rank_; ++j)
            s += static_cast<long long>(alpha[static_cast<size_t>(j)]) *
                 w[static_cast<size_t>(j)] * gram2_[static_cast<size_t>(j)][static_cast<size_t>(j)];
        return s;
    }

    /// A weight is singular iff it is orthogonal to some positive root.
    bool is_singular(const WeightVec& w) const {
        check_weight(w);
        for (const auto& a : positive_)
            if (pairing4(w, a) == 0) return true;
        return false;
    }

    /// Weyl dimension formula, exact:  prod (l+rho, a) / (rho, a).
    BigInt weyl_dim(const WeightVec& lambda) const {
        check_weight(lambda);
        for (long long c : lambda)
            if (c < 0) throw std::domain_error("weyl_dim: weight is not dominant");
        WeightVec lr(lambda);
        WeightVec r = rho();
        for (int i = 0; i < rank_; ++i) lr[static_cast<size_t>(i)] += 1;
        BigInt num(1), den(1);
        for (const auto& a : positive_) {
            num *= BigInt(pairing4(lr, a));
            den *= BigInt(pairing4(r, a));
        }
        return num.div_exact(den);
    }

    /// The highest root, computed from the generated root set and returned
    /// in fundamental-weight coordinates.
    WeightVec highest_root() const {
        const std::vector<int>* best = nullptr;
        int best_h = -1;
        for (const auto& a : positive_) {
            int h = 0;
            for (int c : a) h += c;
            if (h > best_h) {
                best_h = h;
                best = &a;
            }
        }
        WeightVec w(static_cast<size_t>(rank_), 0);
        for (int j = 0; j < rank_; ++j) {
            long long s = 0;
            for (int i = 0; i < rank_; ++i)
                s += (*best)[static_cast<size_t>(i)] *
                     cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            w[static_cast<size_t>(j)] = s;
        }
        return w;
    }

    /// k with G/P_k an irreducible Hermitian symmetric space.
    std::vector<int> ihss_list() const {
        switch (type_) {
            case Type::A: {
                std::vector<int> ks;
                for (int k = 1; k <= rank_; ++k) ks.push_back(k);
                return ks;
            }
            case Type::B: return {1};
            case Type::C: return {rank_};
            case Type::D:
                return rank_ >= 3 ? std::vector<int>{1, rank_ - 1, rank_} : std::vector<int>{};
            case Type::E6: return {1, 6};
            case Type::E7: return {7};
            default: return {};
        }
    }

    /// Singularity of mu + rho for mu = beta - lambda_k, the highest weight
    /// of the (-1)-twisted tangent bundle of G/P_k. True forces all of its
    /// cohomology to vanish; the projective-space entries of type A are the
    /// cases where the weight comes out regular.
    bool ihss_tangent_vanishing(int k) const {
        auto list = ihss_list();
        if (std::find(list.begin(), list.end(), k) == list.end())
            throw std::domain_error("ihss_tangent_vanishing: G/P_" + std::to_string(k) +
                                    " is not Hermitian symmetric for " + name());
        WeightVec w = highest_root();
        for (int i = 0; i < rank_; ++i) w[static_cast<size_t>(i)] += 1;  // + rho
        w[static_cast<size_t>(k - 1)] -= 1;                              // - lambda_k
        return is_singular(w);
    }

private:
    Type type_;
    int rank_;
    std::vector<std::vector<long long>> gram2_;  // 2 (a_i, a_j)
    std::vector<std::vector<long long>> cartan_; // <a_i, a_j^vee>
    std::vector<std::vector<int>> positive_;

    void check_weight(const WeightVec& w) const {
        if (static_cast<int>(w.size()) != rank_)
            throw std::domain_error("weight length does not match rank");
    }

    void validate_rank() const {
        auto need = [&](bool ok, const char* msg) {
            if (!ok) throw std::domain_error(std::string("RootSystem: ") + msg);
        };
        switch (type_) {
            case Type::A: need(rank_ >= 1, "A_l needs l >= 1"); break;
            case Type::B: need(rank_ >= 2, "B_l needs l >= 2"); break;
            case Type::C: need(rank_ >= 2, "C_l needs l >= 2"); break;
            case Type::D: need(rank_ >= 3, "D_l needs l >= 3"); break;
            case Type::E6: need(rank_ == 6, "E6 has rank 6"); break;
            case Type::E7: need(rank_ == 7, "E7 has rank 7"); break;
            case Type::E8: need(rank_ == 8, "E8 has rank 8"); break;
            case Type::F4: need(rank_ == 4, "F4 has rank 4"); break;
            case Type::G2: need(rank_ == 2, "G2 has rank 2"); break;
        }
    }

    void set_edge(int i, int j, long long v) {
        gram2_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        gram2_[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }

    void build_gram() {
        size_t l = static_cast<size_t>(rank_);
        gram2_.assign(l, std::vector<long long>(l, 0));
        for (size_t i = 0; i < l; ++i) gram2_[i][i] = 4;
        auto chain = [&](int upto) {
            for (int i = 0; i + 1 <= upto; ++i) set_edge(i, i + 1, -2);
        };
        switch (type_) {
            case Type::A: chain(rank_ - 1); break;
            case Type::B:
                chain(rank_ - 1);
                gram2_[l - 1][l - 1] = 2;  // short last root
                break;
            case Type::C:
                chain(rank_ - 2);
                gram2_[l - 1][l - 1] = 8;  // long last root
                set_edge(rank_ - 2, rank_ - 1, -4);
                break;
            case Type::D:
                chain(rank_ - 2);
                set_edge(rank_ - 3, rank_ - 1, -2);
                set_edge(rank_ - 2, rank_ - 1, 0);
                break;
            case Type::E6:
            case Type::E7:
            case Type::E8: {
                // Bourbaki: chain 1-3-4-5-...; node 2 attached to node 4.
                set_edge(0, 2, -2);
                set_edge(1, 3, -2);
                for (int i = 2; i + 1 < rank_; ++i) set_edge(i, i + 1, -2);
                break;
            }
            case Type::F4:
                gram2_[2][2] = gram2_[3][3] = 2;  // two short roots
                set_edge(0, 1, -2);
                set_edge(1, 2, -2);
                set_edge(2, 3, -1);
                break;
            case Type::G2:
                gram2_[1][1] = 12;  // long root
                set_edge(0, 1, -6);
                break;
        }
    }

    void build_cartan() {
        size_t l = static_cast<size_t>(rank_);
        cartan_.assign(l, std::vector<long long>(l, 0));
        for (size_t i = 0; i < l; ++i)
            for (size_t j = 0; j < l; ++j) {
                long long num = 2 * gram2_[i][j];
                if (num % gram2_[j][j] != 0)
                    throw std::logic_error("RootSystem: non-integral Cartan entry");
                cartan_[i][j] = num / gram2_[j][j];
            }
    }

    /// Root-string closure: for a root b and simple a_j, b + a_j is a root
    /// iff the string length q = p - <b, a_j^vee> is positive, where p is how
    /// far b - k a_j stays a root.
    void generate_positive_roots() {
        size_t l = static_cast<size_t>(rank_);
        std::map<std::vector<int>, bool> seen;
        std::vector<std::vector<int>> frontier;
        for (size_t i = 0; i < l; ++i) {
            std::vector<int> e(l, 0);
            e[i] = 1;
            seen[e] = true;
            frontier.push_back(std::move(e));
        }
        positive_.clear();
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& b : frontier) {
                positive_.push_back(b);
                for (size_t j = 0; j < l; ++j) {
                    long long s = 0;
                    for (size_t i = 0; i < l; ++i) s += b[i] * cartan_[i][j];
                    int p = 0;
                    std::vector<int> down = b;
                    while (true) {
                        down[j] -= 1;
                        if (down[j] < 0 || !seen.count(down)) break;
                        ++p;
                    }
                    if (p - s >= 1) {
                        std::vector<int> up = b;
                        up[j] += 1;
                        if (!seen.count(up)) {
                            seen[up] = true;
                            next.push_back(up);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(positive_.begin(), positive_.end());
    }
};

// ---------------------------------------------------------------------------
// Hyperplane-section arithmetic and family checks
// ---------------------------------------------------------------------------

struct H1Result {
    long long value = 0;
    bool warning = false;  // negative result: inconsistent inputs
};

/// h^1(X, T_X) = dim V - 1 + h^0(X, T_X) - dim g for a hyperplane section X.
inline H1Result hyperplane_h1(long long dim_v, long long h0, long long dim_g) {
    if (dim_v < 0 || h0 < 0 || dim_g < 0)
        throw std::domain_error("hyperplane_h1: inputs must be nonnegative");
    long long v = dim_v - 1 + h0 - dim_g;
    return {v, v < 0};
}

/// dim V^{lambda_k} > dim G forces the generic orbit to be full-dimensional,
/// so the generic hyperplane stabilizer is finite.
inline bool generic_stabilizer_trivial(const RootSystem& g, int k) {
    return g.weyl_dim(g.fundamental(k)) > BigInt(g.dim_g());
}

enum class Family { Spinor, Lagrangian };

/// Trivial-stabilizer check for the two hyperplane-section families, over the
/// asserted ranges n > 8 (spinor) and n > 4 (Lagrangian).
inline bool family_stabilizer_check(Family f, int n) {
    if (f == Family::Spinor) {
        if (n < 9) throw std::invalid_argument("spinor family: requires n >= 9");
        return generic_stabilizer_trivial(RootSystem(Type::D, n), n);
    }
    if (n < 5) throw std::invalid_argument("lagrangian family: requires n >= 5");
    return generic_stabilizer_trivial(RootSystem(Type::C, n), n);
}

// ---------------------------------------------------------------------------
// Shipped data: rigid hyperplane sections and the section-8 tables
// ---------------------------------------------------------------------------

struct RigidEntry {
    Type type;
    int rank;
    int k;
    std::string label;
};

/// The homogeneous spaces whose general hyperplane sections are locally
/// rigid. Shipped as data (the underlying stabilizer dimensions are external
/// tables, not re-derived here); unbounded families are enumerated up to
/// max_rank, with both parabolic representatives of a variety listed.
inline std::vector<RigidEntry> rigid_list(int max_rank = 8) {
    std::vector<RigidEntry> out;
    auto add = [&](Type t, int l, int k, const std::string& label) {
        if (l > max_rank) return;
        for (const auto& e : out)
            if (e.type == t && e.rank == l && e.k == k) return;
        out.push_back({t, l, k, label});
    };
    for (int l = 1; l <= max_rank; ++l) {
        add(Type::A, l, 1, "P^" + std::to_string(l));
        add(Type::A, l, l, "P^" + std::to_string(l));
    }
    for (int l = 2; l <= max_rank; ++l) add(Type::B, l, 1, "Q^" + std::to_string(2 * l - 1));
    for (int l = 4; l <= max_rank; ++l) add(Type::D, l, 1, "Q^" + std::to_string(2 * l - 2));
    for (int l = 3; l <= max_rank; ++l) {
        add(Type::A, l, 2, "Gr(2," + std::to_string(l + 1) + ")");
        add(Type::A, l, l - 1, "Gr(2," + std::to_string(l + 1) + ")");
    }
    add(Type::A, 5, 3, "Gr(3,6)");
    add(Type::A, 6, 3, "Gr(3,7)");
    add(Type::A, 6, 4, "Gr(3,7)");
    for (int l = 5; l <= 7; ++l) {
        add(Type::D, l, l - 1, "S" + std::to_string(l));
        add(Type::D, l, l, "S" + std::to_string(l));
    }
    add(Type::C, 3, 3, "Lag(3,6)");
    add(Type::E6, 6, 1, "E6/P1");
    add(Type::E6, 6, 6, "E6/P1");
    add(Type::E7, 7, 7, "E7/P7");
    return out;
}

inline bool in_rigid_list(Type t, int rank, int k, int max_rank = 24) {
    for (const auto& e : rigid_list(max_rank))
        if (e.type == t && e.rank == rank && e.k == k) return true;
    return false;
}

struct TableRow {
    std::vector<std::string> cells;
};

struct Table {
    std::string name;
    std::vector<std::string> headers;
    std::vector<TableRow> rows;
};

/// The classification of irreducible Hermitian symmetric spaces, one row per
/// type.
inline Table ihss_table() {
    Table t;
    t.name = "ihss";
    t.headers = {"g", "k", "G/P_k"};
    t.rows = {
        {{"A_l", "1 <= k <= l", "Gr(k, l+1)"}},
        {{"B_l", "1", "Q^{2l-1}"}},
        {{"C_l", "l", "Lag(l, 2l)"}},
        {{"D_l", "1, l-1, l", "Q^{2l-2}, S_l"}},
        {{"E6", "1, 6", "OP^2"}},
        {{"E7", "7", "E7/P7"}},
    };
    return t;
}

/// The longest roots in fundamental-weight coordinates, one row per grouping.
inline Table longest_root_table() {
    Table t;
    t.name = "longest-root";
    t.headers = {"g", "beta"};
    t.rows = {
        {{"A_l", "w1 + wl"}},
        {{"C_l (l >= 2)", "2 w1"}},
        {{"F4, E7", "w1"}},
        {{"B_l (l >= 3), D_l (l >= 4), G2, E6", "w2"}},
        {{"E8", "w8"}},
    };
    return t;
}

/// The longest root of a concrete system in fundamental-weight coordinates,
/// as shipped table data (checked against the computed highest root).
inline WeightVec longest_root_data(Type type, int rank) {
    WeightVec w(static_cast<size_t>(rank), 0);
    switch (type) {
        case Type::A:
            w[0] += 1;
            w[static_cast<size_t>(rank - 1)] += 1;
            break;
        case Type::C: w[0] = 2; break;
        case Type::F4:
        case Type::E7: w[0] = 1; break;
        case Type::E8: w[7] = 1; break;
        default: w[1] = 1; break;  // B_l (l>=3), D_l (l>=4), G2, E6
    }
    return w;
}

}  // namespace civet::lie
