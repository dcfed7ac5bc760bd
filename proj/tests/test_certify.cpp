#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "conespan/certify.hpp"

using namespace conespan;

namespace {
const CertCheck& check_named(const CertResult& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    FAIL("no check named " + name);
    throw std::logic_error("unreachable");
}
}  // namespace

TEST_CASE("basic-yao certifies with a reduced trial budget") {
    BasicYaoOptions opt;
    opt.trials = 100000;
    const CertResult r = certify_basic_yao(opt);
    CHECK(r.pass());
    CHECK(r.max_violation() <= 1e-12);
    CHECK(check_named(r, "equality-probes").max_violation <= 1e-12);
    CHECK(r.samples() >= opt.trials);
}

TEST_CASE("y5-short threshold behavior") {
    const CertResult r = certify_y5_short();
    CHECK(r.pass());
    CHECK(check_named(r, "threshold-equality").max_violation <= 1e-9);
    CHECK(check_named(r, "below-threshold").max_violation <= 1e-9);

    // strict inequality at half the threshold for the refined bound constant
    const double lam = 2.0 + std::sqrt(3.0);
    const double alpha = 0.8;
    const double th = (2 * lam * lam * std::cos(alpha) - 2 * lam) / (lam * lam - 1);
    const double s = 0.5 * th;
    const double bc = std::sqrt(s * s + 1 - 2 * s * std::cos(alpha));
    CHECK(s + lam * bc < lam - 1e-3);
    // |ac| = 0 degenerates to equality
    CHECK(std::abs(0.0 + lam * 1.0 - lam) == 0.0);
}

TEST_CASE("fourpoints certification") {
    const CertResult r = certify_fourpoints();
    CHECK(r.pass());
    CHECK(check_named(r, "sign-x1-x2").max_violation < 0.0);
    CHECK(check_named(r, "derivative-dominance").max_violation <= 1e-9);
    CHECK(check_named(r, "fd-agreement").max_violation <= 1e-6);
    CHECK(check_named(r, "cd-bound-corners").max_violation < 0.0);
    CHECK(check_named(r, "cd-bound-sampling").max_violation < 0.0);
    CHECK(check_named(r, "second-derivatives-exact").max_violation < 0.0);

    // the rounded-constant endpoint bound quoted alongside the exact one is
    // numerically false by about 4.4e-3; it is reported but not gating
    const CertCheck& rounded = check_named(r, "rounded-endpoint-constants");
    CHECK(!rounded.gating);
    CHECK(!rounded.pass());
    CHECK(rounded.max_violation == Catch::Approx(0.00436728).epsilon(1e-4));

    // spot values at the symmetric endpoint
    const double t = 2.0 + std::sqrt(3.0);
    const double x1 = std::sin(3 * pi / 10) / std::sin(3 * pi / 5) -
                      (2 * t * t * std::cos(3 * pi / 10) - 2 * t) / (t * t - 1);
    CHECK(x1 == Catch::Approx(0.161499878).epsilon(1e-6));

    // centered difference reproduces dx2/dgamma = c2 cos(3pi/5 - gamma) at 1.0
    const double c2 = 1.0 / std::sin(3 * pi / 5);
    const double fd = detail::central_difference(
        [&](double g) { return 1.0 - std::sin(3 * pi / 5 - g) / std::sin(3 * pi / 5); }, 1.0);
    CHECK(std::abs(fd - c2 * std::cos(3 * pi / 5 - 1.0)) <= 1e-6);
}

TEST_CASE("alpha-beta-max certification") {
    const CertResult r = certify_alpha_beta_max();
    CHECK(r.pass());
    CHECK(check_named(r, "maximality").max_violation <= 1e-9);
    CHECK(check_named(r, "partial-fd-agreement").max_violation <= 1e-6);
    CHECK(check_named(r, "partials-positive").max_violation <= 1e-9);
    // alpha = beta = 0 collapses the ratio to 1, well under any cap
    CHECK(triangle_ratio(0.0, 0.0) == 1.0);

    // the closed-form partial in alpha at (0.5, 0.5) vs a centered difference
    const double closed = (std::sin(0.5) + std::sin(1.0)) / (1.0 + std::cos(1.5));
    const double fd =
        detail::central_difference([](double a) { return triangle_ratio(a, 0.5); }, 0.5);
    CHECK(std::abs(closed - fd) <= 1e-6);
}

TEST_CASE("cd-close certification reports the delta > pi/12 regime honestly") {
    // the closed form at gamma = 0 always validates
    const CertResult full = certify_cd_close();
    CHECK(check_named(full, "uv-closed-form-at-0").pass());

    // |uv| is even in gamma and decreasing for small delta, but grows with
    // gamma once delta exceeds pi/12, where the certification fails
    CHECK(detail::central_difference([](double g) { return uv_diameter(g, 0.2); }, 0.1) < 0.0);
    CHECK(detail::central_difference([](double g) { return uv_diameter(g, 0.3); }, 0.1) > 0.0);
    CHECK(!full.pass());
    CHECK(check_named(full, "uv-derivative-negativity").max_violation > 0.25);
    CHECK(check_named(full, "cd-sampling").max_violation > 0.04);

    // restricted to delta <= 0.25 < pi/12 the whole certification passes
    CdCloseOptions opt;
    opt.delta_max = 0.25;
    const CertResult restricted = certify_cd_close(opt);
    CHECK(restricted.pass());

    // diameter value probes
    CHECK(uv_diameter(0.0, pi / 9) ==
          Catch::Approx(std::sqrt(3.0) / 2 - 1.0 / std::tan(2 * pi / 9 + pi / 6) / 2)
              .epsilon(1e-12));
    CHECK(uv_diameter(0.0, 0.2) ==
          Catch::Approx(std::sin(0.4) / std::sin(pi / 6 + 0.4)).epsilon(1e-12));
    // the bound collapses with the sub-cone width
    CHECK(std::sin(2e-6) / std::sin(pi / 6 + 2e-6) < 1e-5);
    CHECK(uv_diameter(0.0, 1e-6) < 1e-5);
}

TEST_CASE("special-case inequalities") {
    const CertResult r = certify_special();
    CHECK(r.pass());
    for (const auto& c : r.checks) CHECK(c.max_violation <= 1e-9);

    // boundary probes
    auto viol_a = [](double g) {
        return std::sin(pi / 3 + g) * std::sin(pi / 6) /
                   (std::sin(pi / 3) * std::sin(5 * pi / 12)) -
               std::sin(pi / 3 - g);
    };
    CHECK(viol_a(0.0) < 0.0);
    CHECK(viol_a(23 * pi / 180) < 0.0);
    auto viol_b = [](double g) {
        return 2 * std::sin(pi / 3 - g) * std::sin(pi / 12) / std::sin(pi / 3) -
               std::sin(pi / 3 + g);
    };
    CHECK(viol_b(pi / 9) < 0.0);
    CHECK(viol_b(pi / 3) <= 0.0);
}

TEST_CASE("certification results serialize with the documented keys") {
    const CertResult r = certify_special();
    const nlohmann::json j = r.to_json();
    for (const char* key : {"name", "grid", "samples", "max_violation", "min_margin", "pass"})
        REQUIRE(j.contains(key));
    CHECK(j["name"] == "special");
    CHECK(j["pass"].get<bool>());
    CHECK(j["checks"].is_array());
}

TEST_CASE("suite registry") {
    CHECK(certifier_names().size() == 6);
    CHECK_THROWS_AS(certify_by_name("nope"), std::invalid_argument);
}
