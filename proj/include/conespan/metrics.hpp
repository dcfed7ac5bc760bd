#pragma once

// Shortest paths and spanning-ratio computation with witness extraction.
// All-pairs strategy: one Dijkstra run per source, optionally fanned out
// across worker threads with a deterministic reduction.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "conespan/geometry.hpp"
#include "conespan/graph.hpp"

namespace conespan {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int> prev;
};

inline DijkstraResult dijkstra(const GeoGraph& g, int source) {
    if (source < 0 || source >= g.n) throw std::invalid_argument("invalid vertex id");
    DijkstraResult r;
    r.dist.assign(static_cast<std::size_t>(g.n), inf);
    r.prev.assign(static_cast<std::size_t>(g.n), -1);
    std::vector<char> done(static_cast<std::size_t>(g.n), 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    r.dist[static_cast<std::size_t>(source)] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        for (int e : g.adjacency[static_cast<std::size_t>(v)]) {
            const GeoEdge& ed = g.edges[static_cast<std::size_t>(e)];
            const int w = g.directed ? ed.dst : g.other(e, v);
            const double nd = d + ed.weight;
            if (nd < r.dist[static_cast<std::size_t>(w)]) {
                r.dist[static_cast<std::size_t>(w)] = nd;
                r.prev[static_cast<std::size_t>(w)] = v;
                pq.emplace(nd, w);
            }
        }
    }
    return r;
}

struct PathResult {
    double length = inf;
    std::vector<int> path;  // empty when unreachable
};

inline std::vector<int> extract_path(const DijkstraResult& r, int source, int target) {
    if (std::isinf(r.dist[static_cast<std::size_t>(target)])) return {};
    std::vector<int> path;
    for (int v = target; v != -1; v = r.prev[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    if (path.front() != source) return {};
    return path;
}

inline PathResult shortest_path_length(const GeoGraph& g, int source, int target) {
    if (target < 0 || target >= g.n) throw std::invalid_argument("invalid vertex id");
    if (source < 0 || source >= g.n) throw std::invalid_argument("invalid vertex id");
    // On undirected graphs run from the smaller endpoint, so p(a,b) and
    // p(b,a) are the same computation and therefore bit-equal: summing the
    // same weights in opposite orders could differ in the last ulp.
    const bool flip = !g.directed && source > target;
    const int from = flip ? target : source;
    const int to = flip ? source : target;
    const DijkstraResult r = dijkstra(g, from);
    PathResult out;
    out.length = r.dist[static_cast<std::size_t>(to)];
    out.path = extract_path(r, from, to);
    if (flip) std::reverse(out.path.begin(), out.path.end());
    return out;
}

// Minimum total weight over all simple paths, by exhaustive enumeration.
// Only for small instances; the independent check against Dijkstra.
inline double enumerate_paths_oracle(const GeoGraph& g, int source, int target, int max_n = 10) {
    if (max_n > 10) throw std::invalid_argument("oracle scale exceeded (max_n > 10)");
    if (g.n > max_n) throw std::invalid_argument("oracle scale exceeded");
    if (source < 0 || source >= g.n || target < 0 || target >= g.n)
        throw std::invalid_argument("invalid vertex id");
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    double best = inf;
    auto dfs = [&](auto&& self, int v, double acc) -> void {
        if (v == target) {
            best = std::min(best, acc);
            return;
        }
        used[static_cast<std::size_t>(v)] = 1;
        for (int e : g.adjacency[static_cast<std::size_t>(v)]) {
            const GeoEdge& ed = g.edges[static_cast<std::size_t>(e)];
            const int w = g.directed ? ed.dst : g.other(e, v);
            if (!used[static_cast<std::size_t>(w)]) self(self, w, acc + ed.weight);
        }
        used[static_cast<std::size_t>(v)] = 0;
    };
    dfs(dfs, source, 0.0);
    return best;
}

struct PairStretch {
    int source = 0;
    int target = 0;
    double distance = 0.0;
    double path_length = 0.0;
    double ratio = 0.0;
};

struct StretchReport {
    double ratio = 1.0;  // +inf when disconnected
    int witness_source = 0;
    int witness_target = 0;
    std::vector<int> witness_path;
    bool connected = true;
    std::optional<std::vector<PairStretch>> pairs;

    nlohmann::json to_json() const {
        nlohmann::json j;
        if (std::isinf(ratio))
            j["ratio"] = nullptr;
        else
            j["ratio"] = ratio;
        j["connected"] = connected;
        j["witness"] = {{"source", witness_source},
                        {"target", witness_target},
                        {"path", witness_path}};
        if (pairs) {
            nlohmann::json arr = nlohmann::json::array();
            for (const PairStretch& p : *pairs)
                arr.push_back({{"source", p.source},
                               {"target", p.target},
                               {"distance", p.distance},
                               {"path_length", p.path_length},
                               {"ratio", p.ratio}});
            j["pairs"] = std::move(arr);
        }
        return j;
    }
};

enum class RatioMode { MaxOnly, FullTable };

namespace detail {

struct WitnessBest {
    double ratio = -1.0;
    int source = -1;
    int target = -1;
    bool unreachable = false;

    // Strictly-greater update keeps the lexicographically smallest witness
    // when sources/targets are visited in ascending order.
    void offer(double r, int s, int t) {
        if (r > ratio) {
            ratio = r;
            source = s;
            target = t;
        }
    }
};

}  // namespace detail

// Exact maximum over vertex pairs of shortest-path length over Euclidean
// distance: unordered pairs on undirected graphs, ordered pairs on directed
// ones. Disconnected graphs report an infinite ratio and the smallest
// unreachable pair.
inline StretchReport spanning_ratio(const GeoGraph& g, const PointSet& points,
                                    RatioMode mode = RatioMode::MaxOnly, int jobs = 1) {
    if (g.n != points.size()) throw std::invalid_argument("graph/point set size mismatch");
    StretchReport rep;
    if (g.n < 2) {
        rep.witness_path = {0};
        return rep;
    }
    const int n = g.n;
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, n);

    std::vector<detail::WitnessBest> local(static_cast<std::size_t>(jobs));
    std::vector<std::pair<int, int>> local_unreach(static_cast<std::size_t>(jobs), {-1, -1});
    std::vector<std::vector<PairStretch>> local_pairs(static_cast<std::size_t>(jobs));

    auto run_chunk = [&](int w, int lo, int hi) {
        for (int s = lo; s < hi; ++s) {
            const DijkstraResult dr = dijkstra(g, s);
            const int t0 = g.directed ? 0 : s + 1;
            for (int t = t0; t < n; ++t) {
                if (t == s) continue;
                const double d = euclidean_distance(points[s], points[t]);
                const double p = dr.dist[static_cast<std::size_t>(t)];
                if (std::isinf(p)) {
                    auto& u = local_unreach[static_cast<std::size_t>(w)];
                    if (u.first < 0) u = {s, t};
                    continue;
                }
                const double r = p / d;
                local[static_cast<std::size_t>(w)].offer(r, s, t);
                if (mode == RatioMode::FullTable)
                    local_pairs[static_cast<std::size_t>(w)].push_back(PairStretch{s, t, d, p, r});
            }
        }
    };

    if (jobs == 1) {
        run_chunk(0, 0, n);
    } else {
        std::vector<std::thread> threads;
        const int chunk = (n + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(run_chunk, w, lo, hi);
        }
        for (auto& th : threads) th.join();
    }

    detail::WitnessBest best;
    std::pair<int, int> unreach{-1, -1};
    for (int w = 0; w < jobs; ++w) {
        const auto& lb = local[static_cast<std::size_t>(w)];
        if (lb.source >= 0) best.offer(lb.ratio, lb.source, lb.target);
        if (unreach.first < 0) unreach = local_unreach[static_cast<std::size_t>(w)];
    }

    if (unreach.first >= 0) {
        rep.ratio = inf;
        rep.connected = false;
        rep.witness_source = unreach.first;
        rep.witness_target = unreach.second;
        return rep;
    }

    rep.ratio = best.ratio;
    rep.witness_source = best.source;
    rep.witness_target = best.target;
    rep.witness_path = extract_path(dijkstra(g, best.source), best.source, best.target);
    if (mode == RatioMode::FullTable) {
        std::vector<PairStretch> all;
        for (auto& lp : local_pairs) all.insert(all.end(), lp.begin(), lp.end());
        rep.pairs = std::move(all);
    }
    return rep;
}

}  // namespace conespan
