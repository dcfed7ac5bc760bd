#pragma once

// Named point sets: the 34-point worst-case configuration for five cones,
// the parametric four-point family for six cones, seeded random generators,
// and a hill-climbing search for empirically bad configurations.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conespan/construction.hpp"
#include "conespan/detail/format.hpp"
#include "conespan/detail/rng.hpp"
#include "conespan/geometry.hpp"
#include "conespan/metrics.hpp"

namespace conespan {

struct NamedPointSet {
    std::string name;
    PointSet points;
    std::string provenance;
    int expected_k = 0;
    std::map<int, std::string> labels;  // sparse id -> label
};

namespace detail {

// 34-point configuration with spanning ratio > 2.87 under five cones. The
// first four points are labeled u, v, w, z; the shipped data file
// data/y5_appendix.pts carries the same coordinates.
inline const std::vector<std::pair<double, double>>& y5_appendix_table() {
    static const std::vector<std::pair<double, double>> tbl = {
        {0, 0},      {252, 82},   {130, 230},  {12, 193},   {30, 302},   {293, 269},
        {321, 229},  {-143, 130}, {-143, 80},  {193, 384},  {158, 367},  {-135, 272},
        {-91, 287},  {-153, -55}, {371, 75},   {410, 115},  {334, 276},  {341, 264},
        {-179, 97},  {-180, 112}, {-91, -75},  {316, 36},   {352, 229},  {303, 297},
        {-167, 63},  {-167, 147}, {-26, -75},  {371, 213},  {51, 310},   {-176, 37},
        {344, 274},  {-189, 105}, {99, 320},   {-15, 284}};
    return tbl;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t coordinate_checksum(const std::vector<std::pair<double, double>>& xy) {
    std::string canon;
    for (auto [x, y] : xy) {
        canon += format_double(x);
        canon += ',';
        canon += format_double(y);
        canon += '\n';
    }
    return fnv1a64(canon);
}

inline constexpr std::uint64_t y5_appendix_checksum = 0x437103b6e459cf0dull;

}  // namespace detail

inline NamedPointSet y5_lower_bound_points() {
    const auto& tbl = detail::y5_appendix_table();
    if (detail::coordinate_checksum(tbl) != detail::y5_appendix_checksum)
        throw std::runtime_error("y5-appendix coordinate table failed checksum validation");
    NamedPointSet s;
    s.name = "y5-appendix";
    s.points = PointSet::from_xy(tbl);
    s.provenance = "appendix";
    s.expected_k = 5;
    s.labels = {{0, "u"}, {1, "v"}, {2, "w"}, {3, "z"}};
    return s;
}

// Four points a, b, c, d forcing two equal shortest a-b paths of length
// close to 2|ab| in the six-cone Yao graph: b sits just above the first cone
// boundary at angle pi/3 + eps from a; c and d sit just inside the far
// boundaries of their cones with |ac| = |bd| = (1 - eps^2)|ab| (the eps^2
// slack forces the Yao edges a->c and b->d deterministically) and
// |bc| = |ad| = (1 - eps)|ab|. Ratio of the result: 2 - eps - eps^2.
inline NamedPointSet y6_lower_bound_points(double eps) {
    if (!(eps > 0.0) || !(eps < 0.1))
        throw std::invalid_argument("eps must lie in (0, 0.1)");
    const double phi_b = pi / 3.0 + eps;
    const double r = 1.0 - eps * eps;  // |ac| = |bd|
    const double m = 1.0 - eps;        // |bc| = |ad|
    const double spread = std::acos((1.0 + r * r - m * m) / (2.0 * r));

    const double bx = std::cos(phi_b), by = std::sin(phi_b);
    const double phi_c = phi_b + spread;
    const double phi_d = phi_b + pi + spread;

    std::vector<std::pair<double, double>> xy = {
        {0.0, 0.0},
        {bx, by},
        {r * std::cos(phi_c), r * std::sin(phi_c)},
        {bx + r * std::cos(phi_d), by + r * std::sin(phi_d)},
    };

    NamedPointSet s;
    s.name = "y6-lb";
    s.points = PointSet::from_xy(xy);
    s.provenance = "parametric(eps=" + detail::format_double(eps) + ")";
    s.expected_k = 6;
    s.labels = {{0, "a"}, {1, "b"}, {2, "c"}, {3, "d"}};

    const ConeScheme six(6);
    const auto& p = s.points;
    const bool ok = cone_index(p[0], p[1], six) == 1 && cone_index(p[0], p[2], six) == 1 &&
                    cone_index(p[1], p[3], six) == 4 && cone_index(p[0], p[3], six) == 0 &&
                    cone_index(p[1], p[2], six) == 3;
    if (!ok) throw std::invalid_argument("construction degenerate: cone memberships lost");
    return s;
}

enum class Distribution { UnitSquare, UnitDisk, Clustered };

inline std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::UnitSquare: return "unit-square";
        case Distribution::UnitDisk: return "unit-disk";
        case Distribution::Clustered: return "clustered";
    }
    return "?";
}

inline NamedPointSet random_points(int n, std::uint64_t seed,
                                   Distribution dist = Distribution::UnitSquare) {
    if (n < 2) throw std::invalid_argument("need at least 2 points");
    detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<std::pair<double, double>> centers;
    if (dist == Distribution::Clustered) {
        const int m = std::max(2, n / 25);
        for (int i = 0; i < m; ++i) centers.emplace_back(rng.unit(), rng.unit());
    }

    auto gaussian = [&rng]() {
        const double u1 = 1.0 - rng.unit();  // (0, 1]
        const double u2 = rng.unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    };

    std::vector<std::pair<double, double>> xy;
    xy.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(xy.size()) < n) {
        std::pair<double, double> p;
        switch (dist) {
            case Distribution::UnitSquare:
                p = {rng.unit(), rng.unit()};
                break;
            case Distribution::UnitDisk: {
                do {
                    p = {2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0};
                } while (p.first * p.first + p.second * p.second > 1.0);
                break;
            }
            case Distribution::Clustered: {
                const auto& c = centers[rng.next_u64() % centers.size()];
                p = {c.first + 0.02 * gaussian(), c.second + 0.02 * gaussian()};
                break;
            }
        }
        bool fresh = true;
        for (const auto& q : xy)
            if (q.first == p.first && q.second == p.second) {
                fresh = false;
                break;
            }
        if (fresh) xy.push_back(p);
    }

    NamedPointSet s;
    s.name = "random-" + to_string(dist) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
    s.points = PointSet::from_xy(xy);
    s.provenance = "random(seed=" + std::to_string(seed) + ")";
    return s;
}

struct StepSchedule {
    double initial = 0.05;  // relative to the bounding-box diagonal
    double decay = 0.999;
};

struct SearchResult {
    NamedPointSet points;
    double ratio = 1.0;
};

// Hill climb on single-point perturbations: a move is kept only when it
// strictly increases the spanning ratio of the undirected Yao graph, so the
// result never falls below the base configuration.
inline SearchResult perturbation_search(const NamedPointSet& base, int k, long long iterations,
                                        const StepSchedule& schedule, std::uint64_t seed) {
    const ConeScheme scheme(k);
    std::vector<std::pair<double, double>> cur;
    for (const Point& p : base.points) cur.emplace_back(p.x, p.y);

    auto ratio_of = [&](const std::vector<std::pair<double, double>>& xy) {
        const PointSet ps = PointSet::from_xy(xy);
        return spanning_ratio(build_undirected_yao(ps, scheme), ps).ratio;
    };

    double lo_x = cur[0].first, hi_x = cur[0].first, lo_y = cur[0].second, hi_y = cur[0].second;
    for (const auto& p : cur) {
        lo_x = std::min(lo_x, p.first);
        hi_x = std::max(hi_x, p.first);
        lo_y = std::min(lo_y, p.second);
        hi_y = std::max(hi_y, p.second);
    }
    double step = schedule.initial * std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-9);

    double best = ratio_of(cur);
    detail::Rng rng(seed);
    for (long long it = 0; it < iterations; ++it, step *= schedule.decay) {
        const std::size_t v = static_cast<std::size_t>(rng.next_u64() % cur.size());
        auto cand = cur;
        cand[v].first += step * (2.0 * rng.unit() - 1.0);
        cand[v].second += step * (2.0 * rng.unit() - 1.0);
        bool distinct = true;
        for (std::size_t i = 0; i < cand.size() && distinct; ++i)
            if (i != v && cand[i] == cand[v]) distinct = false;
        if (!distinct) continue;
        const double r = ratio_of(cand);
        if (r > best) {
            best = r;
            cur = std::move(cand);
        }
    }

    SearchResult out;
    out.points.name = base.name + "-search";
    out.points.points = PointSet::from_xy(cur);
    out.points.provenance =
        "search(seed=" + std::to_string(seed) + ",iters=" + std::to_string(iterations) + ")";
    out.points.expected_k = k;
    out.ratio = best;
    return out;
}

}  // namespace conespan
