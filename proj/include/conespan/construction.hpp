#pragma once

// Yao and Theta graph construction: per vertex and per cone, one edge to the
// nearest candidate, under a deterministic tie-break rule. Plain O(n^2 k)
// scans; nearest means Euclidean distance for Yao and distance of the
// orthogonal projection onto the cone bisector for Theta.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conespan/geometry.hpp"
#include "conespan/graph.hpp"

namespace conespan {

// Applies among candidates whose primary key (Euclidean distance for Yao,
// bisector projection for Theta) ties exactly.
enum class TieBreak {
    LowestId,
    SmallestAngleThenLowestId,
};

namespace detail {

struct Candidate {
    double key;    // primary comparison value
    double angle;  // angle_ccw(apex, candidate)
    int id;
};

inline bool better(const Candidate& a, const Candidate& b, TieBreak tie) {
    if (a.key != b.key) return a.key < b.key;
    if (tie == TieBreak::SmallestAngleThenLowestId && a.angle != b.angle)
        return a.angle < b.angle;
    return a.id < b.id;
}

template <typename KeyFn>
GeoGraph build_directed_cone_graph(const PointSet& points, const ConeScheme& scheme,
                                   TieBreak tie, KeyFn&& key_of) {
    const int n = points.size();
    GeoGraph g;
    g.n = n;
    g.directed = true;
    std::vector<std::optional<Candidate>> best(static_cast<std::size_t>(scheme.k));
    for (int a = 0; a < n; ++a) {
        std::fill(best.begin(), best.end(), std::nullopt);
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            const double ang = angle_ccw(points[a], points[b]);
            int cone = static_cast<int>(std::floor(ang / scheme.theta()));
            if (cone >= scheme.k || cone < 0) cone = 0;
            Candidate cand{key_of(points[a], points[b]), ang, b};
            auto& slot = best[static_cast<std::size_t>(cone)];
            if (!slot || better(cand, *slot, tie)) slot = cand;
        }
        for (int c = 0; c < scheme.k; ++c) {
            if (!best[static_cast<std::size_t>(c)]) continue;
            const int b = best[static_cast<std::size_t>(c)]->id;
            g.edges.push_back(GeoEdge{a, b, euclidean_distance(points[a], points[b]), c});
        }
    }
    g.rebuild_adjacency();
    return g;
}

}  // namespace detail

inline GeoGraph build_directed_yao(const PointSet& points, const ConeScheme& scheme,
                                   TieBreak tie = TieBreak::LowestId) {
    return detail::build_directed_cone_graph(
        points, scheme, tie,
        [](const Point& a, const Point& b) { return euclidean_distance(a, b); });
}

// Theta selection key: length of the projection of (b - a) onto the cone
// bisector ray. Candidates inside the cone always project positively.
inline GeoGraph build_directed_theta(const PointSet& points, const ConeScheme& scheme,
                                     TieBreak tie = TieBreak::LowestId) {
    return detail::build_directed_cone_graph(
        points, scheme, tie, [&scheme](const Point& a, const Point& b) {
            const double ang = angle_ccw(a, b);
            int cone = static_cast<int>(std::floor(ang / scheme.theta()));
            if (cone >= scheme.k || cone < 0) cone = 0;
            const double bis = (cone + 0.5) * scheme.theta();
            return (b.x - a.x) * std::cos(bis) + (b.y - a.y) * std::sin(bis);
        });
}

// Underlying undirected graph: parallel/antiparallel edges collapse to one,
// normalized src < dst, cone recomputed for the stored orientation.
inline GeoGraph collapse_to_undirected(const GeoGraph& directed, const PointSet& points,
                                       const ConeScheme& scheme) {
    GeoGraph g;
    g.n = directed.n;
    g.directed = false;
    std::vector<std::pair<int, int>> seen;
    seen.reserve(directed.edges.size());
    for (const GeoEdge& e : directed.edges) {
        const int s = std::min(e.src, e.dst);
        const int t = std::max(e.src, e.dst);
        seen.emplace_back(s, t);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto [s, t] : seen)
        g.edges.push_back(GeoEdge{s, t, euclidean_distance(points[s], points[t]),
                                  cone_index(points[s], points[t], scheme)});
    g.rebuild_adjacency();
    return g;
}

inline GeoGraph build_undirected_yao(const PointSet& points, const ConeScheme& scheme,
                                     TieBreak tie = TieBreak::LowestId) {
    return collapse_to_undirected(build_directed_yao(points, scheme, tie), points, scheme);
}

inline GeoGraph build_undirected_theta(const PointSet& points, const ConeScheme& scheme,
                                       TieBreak tie = TieBreak::LowestId) {
    return collapse_to_undirected(build_directed_theta(points, scheme, tie), points, scheme);
}

}  // namespace conespan
