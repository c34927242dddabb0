#include <doctest.h>

#include "civet/witness.hpp"

using namespace civet;
using namespace civet::witness;

namespace {
GaussianVec vec3(GaussRat a, GaussRat b, GaussRat c) { return {a, b, c}; }
GaussianVec e(size_t i) {
    GaussianVec v(3);
    v[i] = GaussRat(1);
    return v;
}
}  // namespace

TEST_CASE("the conic map is the cross product") {
    AltMap s = sigma_conic();
    CHECK(s.antisymmetric());
    CHECK(s.apply(e(0), e(1)) == e(2));
    CHECK(s.apply(e(1), e(2)) == e(0));
    CHECK(s.apply(e(2), e(0)) == e(1));
    GaussianVec neg_e3 = vec3(GaussRat(0), GaussRat(0), GaussRat(-1));
    CHECK(s.apply(e(1), e(0)) == neg_e3);
    CHECK(is_zero_vec(s.apply(e(0), e(0))));
}

TEST_CASE("cone parametrization stays exactly isotropic") {
    auto u1 = conic_point(GaussRat(1), GaussRat(0));
    CHECK(u1 == vec3(GaussRat(1), GaussRat::unit_i(), GaussRat(0)));
    auto u2 = conic_point(GaussRat(1), GaussRat(2));
    CHECK(u2 == vec3(GaussRat(-3), GaussRat(Rational(0), Rational(5)), GaussRat(4)));
    auto u3 = conic_point(GaussRat(1), GaussRat::unit_i());
    CHECK(u3 == vec3(GaussRat(2), GaussRat(0), GaussRat(Rational(0), Rational(2))));
    CHECK(dot(u3, u3).is_zero());
    CHECK_THROWS_AS(conic_point(GaussRat(0), GaussRat(0)), std::domain_error);
}

TEST_CASE("cone membership certificate") {
    AltMap s = sigma_conic();
    GaussianVec u = vec3(GaussRat(1), GaussRat::unit_i(), GaussRat(0));
    GaussianVec v = e(2);
    CHECK(check_xi_prime(s, u, v));  // sigma(u,v) = (i,-1,0) = i*u
    // every tangent direction at every grid point stays in the cone
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            GaussRat sp = grid_value(i), tp = grid_value(j);
            if (sp.is_zero() && tp.is_zero()) continue;
            GaussianVec p = conic_point(sp, tp);
            for (const auto& t : tangent_basis(p)) CHECK(check_xi_prime(s, p, t));
        }
    // the zero map lands in every span
    CHECK(check_xi_prime(AltMap::zero(3), u, v));
    // u itself is tangent at an isotropic point
    CHECK(check_xi_prime(s, u, u));
    CHECK_THROWS_AS(check_xi_prime(s, GaussianVec(3), v), std::domain_error);
    CHECK_THROWS_AS(check_xi_prime(s, u, e(0)), std::invalid_argument);   // not tangent
    CHECK_THROWS_AS(check_xi_prime(s, e(0), e(1)), std::invalid_argument);  // not isotropic
}

TEST_CASE("contractions satisfy the span condition everywhere") {
    Sampler rng(123);
    for (int k = 0; k < 60; ++k) {
        GaussianVec delta = rng.next_vec(3, 4);
        AltMap sd = contraction(delta);
        CHECK(sd.antisymmetric());
        GaussianVec u = rng.next_vec(3, 4), v = rng.next_vec(3, 4);
        CHECK(check_xi_V(sd, u, v));
        // explicit formula: sigma_delta(u,v) = delta(u) v - delta(v) u
        GaussRat du = dot(delta, u), dv_ = dot(delta, v);
        GaussianVec want(3);
        for (size_t i = 0; i < 3; ++i) want[i] = du * v[i] - dv_ * u[i];
        CHECK(sd.apply(u, v) == want);
    }
    CHECK_THROWS_AS(contraction(GaussianVec(1)), std::domain_error);
}

TEST_CASE("the conic map is not a contraction") {
    AltMap s = sigma_conic();
    CHECK(!check_xi_V(s, e(0), e(1)));  // e3 escapes span{e1, e2}
    CHECK(check_xi_V(AltMap::zero(3), e(0), e(1)));
}

TEST_CASE("sampler determinism") {
    Sampler a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 32; ++i) {
        GaussRat x = a.next_gauss(5), y = b.next_gauss(5), z = c.next_gauss(5);
        if (!(x == y)) all_equal = false;
        if (!(x == z)) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("tangent basis spans the orthogonal plane") {
    Sampler rng(9);
    for (int k = 0; k < 20; ++k) {
        GaussRat sp = rng.next_gauss(3), tp = rng.next_gauss(3);
        if (sp.is_zero() && tp.is_zero()) continue;
        GaussianVec u = conic_point(sp, tp);
        auto basis = tangent_basis(u);
        REQUIRE(basis.size() == 2);
        for (const auto& v : basis) CHECK(dot(u, v).is_zero());
        CHECK(!rank_le_1(basis[0], basis[1]));
    }
}
