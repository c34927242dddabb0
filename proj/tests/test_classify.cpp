#include <doctest.h>

#include <functional>
#include <vector>

#include "civet/classify.hpp"
#include "civet/deduce.hpp"

using namespace civet::classify;

namespace {

void for_each_degs(int max_c, int max_m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> degs;
    std::function<void(int)> rec = [&](int lo) {
        if (!degs.empty()) fn(degs);
        if (static_cast<int>(degs.size()) == max_c) return;
        for (int m = lo; m <= max_m; ++m) {
            degs.push_back(m);
            rec(m);
            degs.pop_back();
        }
    };
    rec(2);
}

}  // namespace

TEST_CASE("multi-degree canonicalization and invariants") {
    MultiDegree z({3, 2}, 3);
    CHECK(z.degrees() == std::vector<int>{2, 3});
    CHECK(z.dim() == 1);
    CHECK(z.degree_sum() == 5);
    CHECK(z.degree_product() == 6);
    CHECK_THROWS_AS(MultiDegree({1}, 3), std::domain_error);
    CHECK_THROWS_AS(MultiDegree({2, 2, 2}, 3), std::domain_error);
    CHECK_THROWS_AS(MultiDegree({}, 3), std::domain_error);
}

TEST_CASE("twisted tangent sections classifier") {
    CHECK(h0_tz1_nonzero(MultiDegree({2, 3}, 3)));
    CHECK(h0_tz1_nonzero(MultiDegree({2, 2}, 4)));
    CHECK(!h0_tz1_nonzero(MultiDegree({4}, 4)));
    CHECK(h0_tz1_nonzero(MultiDegree({4}, 2)));   // plane quartic curve
    CHECK(!h0_tz1_nonzero(MultiDegree({5}, 2)));  // plane quintic curve
}

TEST_CASE("formula equals hardcoded lists on the sweep") {
    auto in_curve_list = [](const MultiDegree& z) {
        return z.is({2}) || z.is({3}) || z.is({4}) || z.is({2, 2}) || z.is({2, 3}) ||
               z.is({2, 2, 2});
    };
    auto in_surface_list = [](const MultiDegree& z) {
        return z.is({2}) || z.is({3}) || z.is({2, 2});
    };
    for_each_degs(4, 6, [&](const std::vector<int>& degs) {
        for (int N = static_cast<int>(degs.size()) + 1; N <= 10; ++N) {
            MultiDegree z(degs, N);
            bool want = z.dim() == 1 ? in_curve_list(z) : in_surface_list(z);
            CHECK(h0_tz1_nonzero(z) == want);
        }
    });
}

TEST_CASE("raising a degree never creates sections") {
    for_each_degs(4, 6, [&](const std::vector<int>& degs) {
        for (int N = static_cast<int>(degs.size()) + 1; N <= 9; ++N) {
            MultiDegree z(degs, N);
            if (h0_tz1_nonzero(z)) continue;
            for (size_t i = 0; i < degs.size(); ++i) {
                std::vector<int> up = degs;
                up[i] += 1;
                CHECK(!h0_tz1_nonzero(MultiDegree(up, N)));
            }
        }
    });
}

TEST_CASE("automorphism classifier") {
    CHECK(h0_tz_nonzero(MultiDegree({3}, 2)));      // plane cubic
    CHECK(h0_tz_nonzero(MultiDegree({2, 2}, 3)));   // elliptic quartic
    CHECK(h0_tz_nonzero(MultiDegree({2}, 5)));      // hyperquadric
    CHECK(!h0_tz_nonzero(MultiDegree({2, 3}, 3)));  // N+1 = 4 < m = 5
    CHECK(!h0_tz_nonzero(MultiDegree({3}, 4)));
}

TEST_CASE("xi classifiers") {
    CHECK(xi_prime_nonzero(MultiDegree({2}, 2)));
    CHECK(!xi_prime_nonzero(MultiDegree({2, 2}, 3)));
    CHECK(!xi_prime_nonzero(MultiDegree({2}, 3)));
    CHECK(xi0_trivial(MultiDegree({2}, 2)));
    CHECK(xi0_trivial(MultiDegree({3, 4}, 7)));
}

TEST_CASE("tangent-directions multi-degree") {
    CHECK(vmrt_multidegree(MultiDegree({4}, 5)).degrees() == std::vector<int>{2, 3, 4});
    CHECK(vmrt_multidegree(MultiDegree({3, 3}, 8)).degrees() == std::vector<int>{2, 2, 3, 3});
    // a quadric's tangent directions form a quadric again
    MultiDegree q({2}, 6);
    auto v = vmrt_multidegree(q);
    CHECK(v.degrees() == std::vector<int>{2});
    CHECK(v.ambient_dim() == q.dim() - 1);
    CHECK(vmrt_multidegree(v).degrees() == v.degrees());
    // entries stay >= 2, max is preserved
    for (const std::vector<int>& degs : {std::vector<int>{2, 4}, {3, 5}, {2, 2, 3}}) {
        MultiDegree z(degs, 12);
        auto out = vmrt_multidegree(z);
        for (int m : out.degrees()) CHECK(m >= 2);
        CHECK(out.degrees().back() == degs.back());
    }
}

TEST_CASE("local-flatness verdicts, clause order (i)-(ii)-(iii)") {
    auto v = theorem_main_verdict(MultiDegree({5}, 2), false, {});
    CHECK(v.clause == MainVerdict::Clause::CurveI);
    CHECK(v.locally_flat_concluded);

    // the excluded curves give no conclusion
    for (auto degs : {std::vector<int>{3}, {4}}) {
        auto e = theorem_main_verdict(MultiDegree(degs, 2), false, {});
        CHECK(!e.locally_flat_concluded);
    }
    for (auto degs : {std::vector<int>{2, 2}, {2, 3}}) {
        auto e = theorem_main_verdict(MultiDegree(degs, 3), false, {});
        CHECK(!e.locally_flat_concluded);
    }
    CHECK(!theorem_main_verdict(MultiDegree({2, 2, 2}, 4), false, {}).locally_flat_concluded);
    // the conic is not in the exclusion list of clause (i)
    CHECK(theorem_main_verdict(MultiDegree({2}, 2), false, {}).clause ==
          MainVerdict::Clause::CurveI);

    auto lines = theorem_main_verdict(MultiDegree({2, 4}, 7), true, {});
    CHECK(lines.clause == MainVerdict::Clause::CoveredByLinesII);
    CHECK(!theorem_main_verdict(MultiDegree({2, 2}, 7), true, {}).locally_flat_concluded);

    auto hyp = theorem_main_verdict(MultiDegree({3, 5, 5}, 5), false, 3);
    CHECK(hyp.clause == MainVerdict::Clause::InHypersurfaceIII);
    CHECK(!theorem_main_verdict(MultiDegree({3, 4, 5}, 5), false, 3).locally_flat_concluded);

    CHECK_THROWS_AS(theorem_main_verdict(MultiDegree({3, 5}, 4), false, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_main_verdict(MultiDegree({2, 5}, 4), false, 2),
                    std::invalid_argument);
}

TEST_CASE("contraction-space verdicts") {
    CHECK(xi_equals_xiv_verdict(MultiDegree({3}, 2), false, {}));       // cubic curve
    CHECK(xi_equals_xiv_verdict(MultiDegree({2, 2}, 3), false, {}));    // degree 4 curve
    CHECK(!xi_equals_xiv_verdict(MultiDegree({2}, 2), false, {}));      // the conic
    CHECK(!xi_equals_xiv_verdict(MultiDegree({2}, 7), true, {}));       // quadric
    CHECK(xi_equals_xiv_verdict(MultiDegree({2, 2}, 9), true, {}));
    CHECK(xi_equals_xiv_verdict(MultiDegree({3, 5, 5}, 5), false, 3));
    CHECK(!xi_equals_xiv_verdict(MultiDegree({4}, 5), false, {}));      // no clause applies
}

TEST_CASE("projective normality surjectivity bound") {
    CHECK(!projnormal_surjective(MultiDegree({2}, 2), 1));  // 2+2-2-3 = -1
    CHECK(projnormal_surjective(MultiDegree({2, 2}, 3), 1));
    CHECK(projnormal_surjective(MultiDegree({3}, 2), 1));
    CHECK_THROWS_AS(projnormal_surjective(MultiDegree({2}, 3), 1), std::domain_error);
    CHECK_THROWS_AS(projnormal_surjective(MultiDegree({2, 2}, 3), 3), std::domain_error);
}

TEST_CASE("bundle homomorphism existence") {
    CHECK(!hom_bundle_exists({5, 5}, 4));
    CHECK(hom_bundle_exists({2}, 2));
    CHECK(hom_bundle_exists({3, 7}, 5));
    CHECK_THROWS_AS(hom_bundle_exists({}, 3), std::domain_error);
}

TEST_CASE("classifier agrees with the deduction engine on the vanishing side") {
    const civet::deduce::Rules rules;
    for_each_degs(3, 5, [&](const std::vector<int>& degs) {
        for (int N = static_cast<int>(degs.size()) + 2; N <= 8; ++N) {
            MultiDegree z(degs, N);
            if (z.dim() < 2 || h0_tz1_nonzero(z)) continue;
            auto d = civet::deduce::tangent_twist_sections(N, degs, rules);
            CHECK(d.verdict.is_zero());
            CHECK(d.rule == "ci-forms-vanish");
        }
    });
}
