#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "conespan/bounds.hpp"
#include "conespan/detail/rng.hpp"

using namespace conespan;

TEST_CASE("odd-k upper bound") {
    CHECK(yao_odd_upper_bound(5) == Catch::Approx(10.867320817865254).epsilon(1e-14));
    CHECK(yao_odd_upper_bound(7) ==
          Catch::Approx(1.0 / (1.0 - 2.0 * std::sin(3.0 * (two_pi / 7.0) / 8.0))).epsilon(1e-15));
    CHECK_THROWS_WITH(yao_odd_upper_bound(4),
                      Catch::Matchers::ContainsSubstring("theorem hypothesis violated"));
    CHECK_THROWS_AS(yao_odd_upper_bound(3), std::invalid_argument);
    CHECK_THROWS_AS(yao_odd_upper_bound(6), std::invalid_argument);

    // strictly decreasing over odd k, approaching 1
    double prev = yao_odd_upper_bound(5);
    for (int k = 7; k <= 199; k += 2) {
        const double cur = yao_odd_upper_bound(k);
        REQUIRE(cur < prev);
        prev = cur;
    }
    CHECK(yao_odd_upper_bound(101) < yao_odd_upper_bound(51));
    CHECK(yao_odd_upper_bound(101) > 1.0);
}

TEST_CASE("general upper bound and the odd-k improvement") {
    CHECK(yao_general_upper_bound(7) ==
          Catch::Approx(1.0 / (1.0 - 2.0 * std::sin(pi / 7.0))).epsilon(1e-15));
    CHECK_THROWS_AS(yao_general_upper_bound(6), std::invalid_argument);
    for (int k = 7; k <= 99; k += 2) REQUIRE(yao_odd_upper_bound(k) < yao_general_upper_bound(k));
    CHECK(yao_general_upper_bound(5000) == Catch::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("triangle ratio") {
    for (double beta : {0.1, 0.7, 1.4, 2.0}) CHECK(triangle_ratio(0.0, beta) == 1.0);
    // closed form of the capped case
    for (double d : {0.05, 0.2, 0.324}) {
        CHECK(triangle_ratio(pi / 3, pi / 3 - d) ==
              Catch::Approx(std::cos(pi / 6 - d / 2) / std::sin(d / 2)).epsilon(1e-14));
    }
    CHECK(triangle_ratio(pi / 3, pi / 3 - 0.324) < 5.8);
    CHECK_THROWS_WITH(triangle_ratio(pi / 2, 0.1),
                      Catch::Matchers::ContainsSubstring("ratio unbounded"));
    CHECK_THROWS_AS(triangle_ratio(-0.1, 0.2), std::invalid_argument);
}

TEST_CASE("triangle ratio equals the measured detour of constructed triangles") {
    // build the triangle from (alpha, beta), measure s = |ac| and
    // x = |ab| - |bc| from coordinates, compare s/x
    detail::Rng rng(31);
    int checked = 0;
    while (checked < 100000) {
        const double alpha = rng.range(0.01, pi / 2 - 0.02);
        const double bmax = pi - 2 * alpha;  // keeps x > 0 and the ratio finite
        if (bmax <= 0.02) continue;
        const double beta = rng.range(0.01, std::min(bmax - 0.01, pi - 0.02));
        const double denom = std::sin(alpha + beta);
        const double s = std::sin(beta) / denom;
        const double cx = s * std::cos(alpha);
        const double cy = s * std::sin(alpha);
        const double bc = std::hypot(1.0 - cx, cy);
        const double x = 1.0 - bc;
        if (x < 1e-5) continue;  // avoid cancellation swamping the comparison
        const double measured = std::hypot(cx, cy) / x;
        REQUIRE(measured == Catch::Approx(triangle_ratio(alpha, beta)).epsilon(1e-9));
        ++checked;
    }
}

TEST_CASE("six-cone bound") {
    const double t324 = y6_bound(0.324);
    CHECK(t324 < 5.8);
    CHECK(t324 == Catch::Approx(5.7989884282878883).epsilon(1e-14));
    // the first branch explodes as delta -> 0
    CHECK(y6_bound(1e-4) > 1e3);
    CHECK_THROWS_WITH(y6_bound(0.36), Catch::Matchers::ContainsSubstring("lemma hypothesis"));
    CHECK_THROWS_AS(y6_bound(0.0), std::invalid_argument);
    CHECK_THROWS_AS(y6_bound(-0.1), std::invalid_argument);

    // 0.324 is a grid point of {0.05 + i/1000}; the 1e-12 slack covers the
    // double representation gap between the literal and the grid expression
    for (int i = 0; i <= 290; ++i) REQUIRE(y6_bound(0.05 + i * 0.001) >= t324 - 1e-12);
}

TEST_CASE("six-cone bound minimizer") {
    const double d0 = y6_optimal_delta();
    CHECK(std::abs(d0 - 0.324) <= 5e-3);
    CHECK(y6_bound(d0) < 5.8);
    CHECK(y6_bound(d0) <= y6_bound(0.324));
}

TEST_CASE("threshold angle identity") {
    const double tb = BoundCatalog::y5_threshold_angle();
    const double lhs = 1.0 / (1.0 - 2.0 * std::sin(tb / 2.0));
    const double rhs = 1.0 / (1.0 - std::cos(tb));
    const double t = BoundCatalog::y5_upper();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * t);
    CHECK(std::abs(lhs - t) <= 1e-12 * t);
    CHECK(t == Catch::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-16));
    CHECK(tb == Catch::Approx(0.7494688654174802).epsilon(1e-14));
}

TEST_CASE("comparison constants") {
    CHECK(BoundCatalog::theta5_lower == 3.79);
    CHECK(BoundCatalog::theta5_upper == 9.96);
    CHECK(BoundCatalog::theta6 == 2.0);
    CHECK(BoundCatalog::y6_previous == 17.64);
    // the refined five-cone bound sits below the theta5 lower bound
    CHECK(BoundCatalog::y5_upper() < BoundCatalog::theta5_lower);
}
