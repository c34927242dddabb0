#include <doctest.h>

#include <algorithm>

#include "civet/lie.hpp"

using namespace civet;
using lie::RootSystem;
using lie::Type;

TEST_CASE("positive root counts and algebra dimensions") {
    struct Row {
        Type t;
        int l;
        size_t phi_plus;
        long long dim;
    };
    const Row rows[] = {{Type::A, 1, 1, 3},    {Type::A, 5, 15, 35},  {Type::B, 2, 4, 10},
                        {Type::B, 4, 16, 36},  {Type::C, 3, 9, 21},   {Type::D, 4, 12, 28},
                        {Type::D, 6, 30, 66},  {Type::G2, 2, 6, 14},  {Type::F4, 4, 24, 52},
                        {Type::E6, 6, 36, 78}, {Type::E7, 7, 63, 133}, {Type::E8, 8, 120, 248}};
    for (const auto& r : rows) {
        RootSystem g(r.t, r.l);
        CHECK(g.positive_roots().size() == r.phi_plus);
        CHECK(g.dim_g() == r.dim);
    }
    CHECK_THROWS_AS(RootSystem(Type::E6, 7), std::domain_error);
    CHECK_THROWS_AS(RootSystem(Type::D, 2), std::domain_error);
}

TEST_CASE("fundamental weights pair to delta_ij against simple coroots") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D, Type::F4, Type::G2, Type::E7}) {
        int rank = t == Type::F4 ? 4 : t == Type::G2 ? 2 : t == Type::E7 ? 7 : 5;
        RootSystem g(t, rank);
        for (int i = 1; i <= rank; ++i)
            for (int j = 0; j < rank; ++j) {
                std::vector<int> simple(static_cast<size_t>(rank), 0);
                simple[static_cast<size_t>(j)] = 1;
                long long p = g.pairing4(g.fundamental(i), simple);
                // <lambda_i, alpha_j^vee> = 2 (lambda_i, alpha_j) / |alpha_j|^2
                CHECK((i - 1 == j ? p != 0 : p == 0));
            }
    }
}

TEST_CASE("weyl dimension formula spot values") {
    RootSystem a2(Type::A, 2);
    CHECK(a2.weyl_dim(a2.fundamental(1)) == BigInt(3));
    CHECK(a2.weyl_dim(lie::WeightVec{0, 0}) == BigInt(1));
    RootSystem d9(Type::D, 9);
    CHECK(d9.weyl_dim(d9.fundamental(9)) == BigInt(256));
    RootSystem c5(Type::C, 5);
    CHECK(c5.weyl_dim(c5.fundamental(5)) == BigInt(132));
    CHECK_THROWS_AS(a2.weyl_dim(lie::WeightVec{-1, 0}), std::domain_error);
}

TEST_CASE("adjoint representation has dimension dim g") {
    const std::pair<Type, int> cases[] = {
        {Type::A, 1}, {Type::A, 2}, {Type::A, 3}, {Type::A, 4}, {Type::A, 5},
        {Type::B, 2}, {Type::B, 3}, {Type::B, 4}, {Type::C, 2}, {Type::C, 3},
        {Type::C, 4}, {Type::D, 4}, {Type::D, 5}, {Type::D, 6}, {Type::G2, 2},
        {Type::F4, 4}};
    for (auto [t, l] : cases) {
        RootSystem g(t, l);
        CHECK(g.weyl_dim(g.highest_root()) == BigInt(g.dim_g()));
    }
}

TEST_CASE("longest roots match the shipped table") {
    for (int l = 1; l <= 8; ++l)
        CHECK(RootSystem(Type::A, l).highest_root() == lie::longest_root_data(Type::A, l));
    for (int l = 2; l <= 8; ++l)
        CHECK(RootSystem(Type::C, l).highest_root() == lie::longest_root_data(Type::C, l));
    for (int l = 3; l <= 8; ++l)
        CHECK(RootSystem(Type::B, l).highest_root() == lie::longest_root_data(Type::B, l));
    for (int l = 4; l <= 8; ++l)
        CHECK(RootSystem(Type::D, l).highest_root() == lie::longest_root_data(Type::D, l));
    CHECK(RootSystem(Type::G2, 2).highest_root() == lie::longest_root_data(Type::G2, 2));
    CHECK(RootSystem(Type::E6, 6).highest_root() == lie::longest_root_data(Type::E6, 6));
    CHECK(RootSystem(Type::E7, 7).highest_root() == lie::longest_root_data(Type::E7, 7));
    CHECK(RootSystem(Type::E8, 8).highest_root() == lie::longest_root_data(Type::E8, 8));
    CHECK(RootSystem(Type::F4, 4).highest_root() == lie::longest_root_data(Type::F4, 4));
    // B2 falls outside the l >= 3 row of the table: beta = 2 w2 there
    CHECK(RootSystem(Type::B, 2).highest_root() == lie::WeightVec{0, 2});
}

TEST_CASE("singular weights") {
    RootSystem a2(Type::A, 2);
    CHECK(!a2.is_singular(a2.rho()));
    CHECK(a2.is_singular(a2.fundamental(2)));  // orthogonal to alpha_1
    RootSystem b3(Type::B, 3);
    CHECK(b3.is_singular(lie::WeightVec{0, 2, 1}));  // rho + lambda_2 - lambda_1
    for (Type t : {Type::G2, Type::F4, Type::E6}) {
        RootSystem g(t, t == Type::G2 ? 2 : t == Type::F4 ? 4 : 6);
        CHECK(!g.is_singular(g.rho()));
    }
    // scanning order does not matter: compare against a reversed manual scan
    lie::WeightVec w{1, 0, -1};
    auto roots = b3.positive_roots();
    bool manual = false;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        if (b3.pairing4(w, *it) == 0) manual = true;
    CHECK(b3.is_singular(w) == manual);
}

TEST_CASE("hermitian symmetric quotients") {
    RootSystem a3(Type::A, 3);
    CHECK(a3.ihss_list() == std::vector<int>{1, 2, 3});
    RootSystem d5(Type::D, 5);
    CHECK(d5.ihss_list() == std::vector<int>{1, 4, 5});
    CHECK(RootSystem(Type::G2, 2).ihss_list().empty());
    CHECK(RootSystem(Type::F4, 4).ihss_list().empty());
    CHECK(RootSystem(Type::E8, 8).ihss_list().empty());
    CHECK(RootSystem(Type::B, 3).ihss_list() == std::vector<int>{1});
    CHECK(RootSystem(Type::C, 4).ihss_list() == std::vector<int>{4});
}

TEST_CASE("twisted tangent vanishing across the table") {
    CHECK(RootSystem(Type::B, 3).ihss_tangent_vanishing(1));
    CHECK(RootSystem(Type::C, 4).ihss_tangent_vanishing(4));
    CHECK(RootSystem(Type::E7, 7).ihss_tangent_vanishing(7));
    CHECK(RootSystem(Type::E6, 6).ihss_tangent_vanishing(1));
    CHECK(RootSystem(Type::D, 6).ihss_tangent_vanishing(6));
    // projective spaces are exactly where the weight stays regular
    CHECK(!RootSystem(Type::A, 3).ihss_tangent_vanishing(1));
    CHECK(!RootSystem(Type::A, 3).ihss_tangent_vanishing(3));
    CHECK(RootSystem(Type::A, 3).ihss_tangent_vanishing(2));
    CHECK_THROWS_AS(RootSystem(Type::B, 3).ihss_tangent_vanishing(2), std::domain_error);
}

TEST_CASE("hyperplane section h1 arithmetic") {
    auto r = lie::hyperplane_h1(56, 78, 133);
    CHECK(r.value == 0);
    CHECK(!r.warning);
    auto boundary = lie::hyperplane_h1(134, 0, 133);
    CHECK(boundary.value == 0);
    auto neg = lie::hyperplane_h1(10, 0, 15);
    CHECK(neg.value == -6);
    CHECK(neg.warning);
    CHECK_THROWS_AS(lie::hyperplane_h1(-1, 0, 0), std::domain_error);
}

TEST_CASE("generic stabilizers and the two families") {
    CHECK(lie::generic_stabilizer_trivial(RootSystem(Type::D, 9), 9));   // 256 > 153
    CHECK(lie::generic_stabilizer_trivial(RootSystem(Type::C, 5), 5));   // 132 > 55
    CHECK(!lie::generic_stabilizer_trivial(RootSystem(Type::A, 3), 1));  // 4 < 15
    CHECK(lie::family_stabilizer_check(lie::Family::Spinor, 9));
    CHECK(lie::family_stabilizer_check(lie::Family::Lagrangian, 5));
    CHECK(lie::family_stabilizer_check(lie::Family::Lagrangian, 8));
    CHECK_THROWS_AS(lie::family_stabilizer_check(lie::Family::Spinor, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(lie::family_stabilizer_check(lie::Family::Lagrangian, 4),
                    std::invalid_argument);
}

TEST_CASE("rigid hyperplane-section list") {
    CHECK(lie::in_rigid_list(Type::E7, 7, 7));
    CHECK(lie::in_rigid_list(Type::C, 3, 3));
    CHECK(lie::in_rigid_list(Type::D, 5, 5));
    CHECK(lie::in_rigid_list(Type::A, 6, 3));
    CHECK(!lie::in_rigid_list(Type::C, 5, 5));
    CHECK(!lie::in_rigid_list(Type::D, 8, 8));
    // entries are unique
    auto list = lie::rigid_list(8);
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j)
            CHECK(!(list[i].type == list[j].type && list[i].rank == list[j].rank &&
                    list[i].k == list[j].k));
}

TEST_CASE("table emitters carry the expected shape") {
    auto t1 = lie::ihss_table();
    CHECK(t1.rows.size() == 6);
    CHECK(t1.headers.size() == 3);
    auto t2 = lie::longest_root_table();
    CHECK(t2.rows.size() == 5);
    for (const auto& r : t2.rows) CHECK(r.cells.size() == 2);
}
