#pragma once

// Closed-form spanning-ratio bounds for cone-based spanners, plus the
// comparison constants the bound tables print.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conespan/geometry.hpp"

namespace conespan {

// Upper bound 1/(1 - 2 sin(3*theta/8)) for odd k >= 5, theta = 2*pi/k.
inline double yao_odd_upper_bound(int k) {
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("theorem hypothesis violated: k must be odd and >= 5");
    const double theta = two_pi / k;
    return 1.0 / (1.0 - 2.0 * std::sin(3.0 * theta / 8.0));
}

// Upper bound 1/(1 - 2 sin(theta/2)) for k > 6.
inline double yao_general_upper_bound(int k) {
    if (k <= 6) throw std::invalid_argument("bound requires k > 6");
    return 1.0 / (1.0 - 2.0 * std::sin(pi / k));
}

// t(alpha, beta) = cos(beta/2) / cos(alpha + beta/2): the detour ratio
// |ac| / (|ab| - |bc|) of a triangle with angles alpha at a and beta at b.
inline double triangle_ratio(double alpha, double beta) {
    if (alpha < 0.0 || beta < 0.0) throw std::invalid_argument("angles must be nonnegative");
    if (alpha + beta / 2.0 >= pi / 2.0) throw std::invalid_argument("ratio unbounded");
    return std::cos(beta / 2.0) / std::cos(alpha + beta / 2.0);
}

// Two-branch bound for six cones, valid for delta in (0, pi/9):
// max{ cos(pi/6 - d/2)/sin(d/2), 2/(1 - sin(2d)/sin(pi/6 + 2d)) }.
inline double y6_bound(double delta) {
    if (!(delta > 0.0) || !(delta < pi / 9.0))
        throw std::invalid_argument("lemma hypothesis violated: delta outside (0, pi/9)");
    const double b1 = std::cos(pi / 6.0 - delta / 2.0) / std::sin(delta / 2.0);
    const double b2 = 2.0 / (1.0 - std::sin(2.0 * delta) / std::sin(pi / 6.0 + 2.0 * delta));
    return std::max(b1, b2);
}

// Golden-section minimizer of y6_bound over (0, pi/9). The function is the
// max of a decreasing and an increasing branch, hence unimodal.
inline double y6_optimal_delta() {
    double a = 1e-6;
    double b = pi / 9.0 - 1e-12;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = y6_bound(x1);
    double f2 = y6_bound(x2);
    for (int i = 0; i < 200 && (b - a) > 1e-13; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = y6_bound(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = y6_bound(x2);
        }
    }
    return (a + b) / 2.0;
}

// Named constants used by the bound tables.
struct BoundCatalog {
    static double y5_upper() { return 2.0 + std::sqrt(3.0); }
    // Angle balancing the two case bounds: 1/(1-2sin(t/2)) = 1/(1-cos t).
    static double y5_threshold_angle() { return std::acos(std::sqrt(3.0) - 1.0); }
    static constexpr double theta5_lower = 3.79;
    static constexpr double theta5_upper = 9.96;
    static constexpr double theta6 = 2.0;
    static constexpr double y6_previous = 17.64;
    static constexpr double y4_known = 663.0;
};

}  // namespace conespan
