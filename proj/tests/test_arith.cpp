#include <doctest.h>

#include "civet/bigint.hpp"
#include "civet/binomial.hpp"
#include "civet/rational.hpp"
#include "civet/witness.hpp"

using civet::BigInt;
using civet::GaussRat;
using civet::Rational;

TEST_CASE("bigint arithmetic agrees with native on small operands") {
    civet::witness::Sampler rng(7);
    for (int i = 0; i < 500; ++i) {
        long long a = rng.next_int(-1000000, 1000000);
        long long b = rng.next_int(-1000000, 1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint divmod identity on wide operands") {
    // drive the multi-limb long-division path
    BigInt big(1);
    for (int i = 0; i < 12; ++i) big *= BigInt(1000000007LL);
    civet::witness::Sampler rng(11);
    for (int i = 0; i < 50; ++i) {
        BigInt a = big * BigInt(rng.next_int(-1000, 1000)) + BigInt(rng.next_int(-500, 500));
        BigInt b = BigInt(rng.next_int(1, 1000000)) * BigInt(rng.next_int(1, 1000000));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint string round trip") {
    BigInt big(1);
    for (int i = 0; i < 8; ++i) big *= BigInt(123456789LL);
    CHECK(big.to_string() == "53965948844821664748141453212125737955899777414752273389058576481");
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
}

TEST_CASE("bigint gcd and exact division") {
    BigInt a = BigInt(2 * 3 * 5 * 7) * BigInt(1000003);
    BigInt b = BigInt(3 * 7 * 11) * BigInt(1000003);
    CHECK(BigInt::gcd(a, b) == BigInt(21) * BigInt(1000003));
    CHECK(a.div_exact(BigInt(1000003)) == BigInt(210));
    CHECK_THROWS_AS(BigInt(7).div_exact(BigInt(2)), std::domain_error);
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("rational normalization and field ops") {
    Rational half(1, 2), third(-2, -6);
    CHECK(third == Rational(1, 3));
    CHECK(half + third == Rational(5, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK((half - half).is_zero());
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("gaussian rationals form a field with i^2 = -1") {
    GaussRat i = GaussRat::unit_i();
    CHECK(i * i == GaussRat(-1));
    GaussRat z(Rational(3, 2), Rational(-1, 3));
    GaussRat w(Rational(2), Rational(5));
    CHECK((z + w) - w == z);
    CHECK((z * w) / w == z);
    CHECK_THROWS_AS(z / GaussRat(0), std::domain_error);
}

TEST_CASE("binomials") {
    CHECK(civet::binomial(10, 3) == BigInt(120));
    CHECK(civet::binomial(5, 0) == BigInt(1));
    CHECK(civet::binomial(3, 5) == BigInt(0));
    // Pascal identity
    for (int n = 1; n < 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(civet::binomial(n, k) ==
                  civet::binomial(n - 1, k - 1) + civet::binomial(n - 1, k));
    // polynomial extension at negative arguments: C(-1,3) = -1, C(-7,4) = 210
    CHECK(civet::binomial_poly(-1, 3) == BigInt(-1));
    CHECK(civet::binomial_poly(-7, 4) == BigInt(210));
    CHECK(civet::binomial_poly(2, 3) == BigInt(0));
    // agreement with the standard binomial on nonnegative arguments
    for (int a = 0; a < 12; ++a)
        for (int k = 0; k < 6; ++k) CHECK(civet::binomial_poly(a, k) == civet::binomial(a, k));
}
