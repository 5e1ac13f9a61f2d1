#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chromabounds/chromatic.hpp"
#include "chromabounds/errors.hpp"
#include "chromabounds/monotonicity.hpp"
#include "chromabounds/roots.hpp"
#include "test_util.hpp"

using namespace chromabounds;

TEST_CASE("laurent coefficients: frozen values for K3") {
    auto c = laurent_coeffs(generate(GraphFamily::complete, 3), 4);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == BigRational(-3));
    CHECK(c[1] == BigRational(-5, 2));
    CHECK(c[2] == BigRational(-3));
    CHECK(c[3] == BigRational(-17, 4));
}

TEST_CASE("laurent coefficients are the negated scaled power sums") {
    auto rng = std::mt19937_64(testutil::suite_seed() ^ 0x1A0ULL);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(rng, 2, 7);
        IntPolynomial p = chromatic_deletion_contraction(g);
        auto c = laurent_coeffs(p, 5);
        auto ps = newton_power_sums(p, 5);
        for (int i = 1; i <= 5; ++i)
            CHECK(c[static_cast<std::size_t>(i - 1)] ==
                  -BigRational(ps[static_cast<std::size_t>(i - 1)], i));
    }
}

TEST_CASE("first two log-expansion coefficients count edges and triangles") {
    EdgeTriangleCheck k4 = verify_lemma22(generate(GraphFamily::complete, 4));
    CHECK(k4.ok);
    CHECK(k4.c1 == BigRational(-6));
    CHECK(k4.c2 == BigRational(-7));  // -(4 + 6/2)
    CHECK(k4.m == 6);
    CHECK(k4.t == 4);

    auto rng = std::mt19937_64(testutil::suite_seed() ^ 0x22ULL);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeTriangleCheck chk = verify_lemma22(testutil::random_graph(rng, 1, 7));
        CHECK(chk.ok);
        CHECK(chk.c1 == BigRational(-chk.m));
        CHECK(chk.c2 == -(BigRational(chk.t) + BigRational(chk.m, 2)));
    }
}

TEST_CASE("x0 crossover threshold") {
    CHECK(x0_threshold(2.0) == doctest::Approx((1.0 + std::sqrt(41.0)) / 2).epsilon(1e-14));
    CHECK(x0_threshold(0.0) == doctest::Approx(0.0));
    CHECK(x0_threshold(1.0) == doctest::Approx((0.0 + std::sqrt(4.0 + 4.0)) / 2).epsilon(1e-14));
    CHECK_THROWS_AS(x0_threshold(-0.5), std::domain_error);
    // increasing in rho
    CHECK(x0_threshold(3.0) > x0_threshold(2.0));
}

TEST_CASE("closed-form derivative lower bound is positive above the crossover") {
    for (auto family : {GraphFamily::cycle, GraphFamily::complete}) {
        for (int n = 3; n <= 6; ++n) {
            Graph g = generate(family, n);
            double rho = find_roots(chromatic_deletion_contraction(g)).rho;
            double x0 = x0_threshold(rho);
            for (double dx : {0.02, 0.5, 2.0, 10.0})
                CHECK(fprime_lower_bound(g, x0 + dx, rho) > 0.0);
            CHECK_THROWS_AS(fprime_lower_bound(g, rho - 0.5, rho), std::domain_error);
        }
    }
}

TEST_CASE("exact derivative sign: frozen case and pole errors") {
    Graph c4 = generate(GraphFamily::cycle, 4);
    // at x=5: x P'(x) - n P(x) = 5*257 - 4*260 = 245 > 0 and x P(x) > 0
    CHECK(fprime_exact_sign(c4, BigRational(5)) == 1);
    CHECK_THROWS_AS(fprime_exact_sign(c4, BigRational(1)), PoleError);  // P(1) = 0
    CHECK_THROWS_AS(fprime_exact_sign(c4, BigRational(0)), PoleError);  // log undefined at 0

    // the sign agrees with the definition F' = d/dx [ln P - n ln x] via the
    // cleared form sign(x P' - n P) * sign(x P)
    IntPolynomial p = chromatic_deletion_contraction(c4);
    for (int num : {-7, -3, 9, 12, 50}) {
        BigRational x(num, 2);
        BigRational cleared = x * p.derivative().eval(x) - BigRational(4) * p.eval(x);
        int expected = sign_of(cleared) * sign_of(x * p.eval(x));
        CHECK(fprime_exact_sign(p, 4, x) == expected);
    }
}

TEST_CASE("cross-multiplied ratio inequality, frozen integer case") {
    Graph c4 = generate(GraphFamily::cycle, 4);
    RatioCheck rc = check_ratio_inequality(c4, BigRational(3));
    CHECK(rc.holds);
    CHECK(rc.lhs == BigRational(288));  // (3-1)^4 * P(3) = 16 * 18
    CHECK(rc.rhs == BigRational(162));  // 3^4 * P(2) = 81 * 2
    // equality for edgeless graphs: both sides are x^n (x-1)^n
    RatioCheck eq = check_ratio_inequality(generate(GraphFamily::empty, 3), BigRational(7, 2));
    CHECK(eq.holds);
    CHECK(eq.lhs == eq.rhs);
}

TEST_CASE("monotonic threshold: exact two-decimal ceiling of 10 maxdeg^1.5") {
    CHECK(monotonic_threshold(0) == BigRational(0));
    CHECK(monotonic_threshold(1) == BigRational(10));
    CHECK(monotonic_threshold(2) == BigRational(2829, 100));
    CHECK(monotonic_threshold(3) == BigRational(5197, 100));
    CHECK(monotonic_threshold(4) == BigRational(80));
    CHECK_THROWS_AS(monotonic_threshold(-1), std::invalid_argument);
}

TEST_CASE("ratio inequality holds at and beyond the threshold (random graphs)") {
    auto rng = std::mt19937_64(testutil::suite_seed() ^ 0x7137ULL);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(rng, 1, 7);
        IntPolynomial p = chromatic_deletion_contraction(g);
        BigRational t0 = monotonic_threshold(max_degree(g));
        for (int j : {0, 1, 5, 40})
            CHECK(check_ratio_inequality(p, g.vertex_count(), t0 + j).holds);
    }
}

TEST_CASE("threshold scan: observed settle point far below the guarantee") {
    ThresholdScan scan = threshold_scan(generate(GraphFamily::path, 3));
    CHECK(scan.threshold == BigRational(2829, 100));
    REQUIRE(scan.settle_point.has_value());
    CHECK(*scan.settle_point == BigRational(171, 100));
    CHECK(scan.points == 2729);
    CHECK(scan.failures == 70);
    CHECK(scan.failures_above_threshold == 0);

    // edgeless: the inequality is an identity, settles immediately
    ThresholdScan flat = threshold_scan(generate(GraphFamily::empty, 3));
    CHECK(flat.threshold == BigRational(0));
    REQUIRE(flat.settle_point.has_value());
    CHECK(*flat.settle_point == BigRational(101, 100));
    CHECK(flat.failures == 0);

    CHECK_THROWS_AS(threshold_scan(generate(GraphFamily::path, 3), BigRational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(threshold_scan(generate(GraphFamily::path, 3), BigRational(-1, 2)),
                    std::invalid_argument);
}

TEST_CASE("tight-regime certificates behave as documented") {
    CHECK(case2_certificates(10.0).h3 > 0.0);
    CHECK(case2_certificates(10.0).h3 == doctest::Approx(4.0302).epsilon(1e-3));
    CHECK(case2_certificates(9.0).h3 < 0.0);
    CHECK(case2_certificates(9.85).deriv_margin > 0.0);
    CHECK(case2_certificates(9.85).deriv_margin == doctest::Approx(0.606).epsilon(1e-2));
    CHECK(case2_certificates(9.8).deriv_margin < 0.0);
    for (double c = 9.86; c <= 12.0; c += 0.01) CHECK(case2_certificates(c).deriv_margin > 0.0);
}
