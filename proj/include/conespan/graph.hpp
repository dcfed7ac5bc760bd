#pragma once

// Weighted geometric graph with per-edge cone provenance.

#include <string>
#include <vector>

#include "conespan/detail/format.hpp"
#include "conespan/geometry.hpp"

namespace conespan {

struct GeoEdge {
    int src = 0;
    int dst = 0;
    double weight = 0.0;
    int cone = 0;
};

struct GeoGraph {
    int n = 0;
    bool directed = true;
    std::vector<GeoEdge> edges;
    // Edge indices incident to each vertex: outgoing edges when directed,
    // all incident edges when undirected.
    std::vector<std::vector<int>> adjacency;

    void rebuild_adjacency() {
        adjacency.assign(static_cast<std::size_t>(n), {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adjacency[static_cast<std::size_t>(edges[e].src)].push_back(static_cast<int>(e));
            if (!directed)
                adjacency[static_cast<std::size_t>(edges[e].dst)].push_back(static_cast<int>(e));
        }
    }

    // Endpoint of edge e opposite to vertex v (undirected traversal).
    int other(int e, int v) const {
        const GeoEdge& ed = edges[static_cast<std::size_t>(e)];
        return ed.src == v ? ed.dst : ed.src;
    }
};

// Canonical text form, one edge per line: "src dst weight cone".
inline std::string format_edge_list(const GeoGraph& g) {
    std::string out;
    for (const GeoEdge& e : g.edges) {
        out += std::to_string(e.src);
        out += ' ';
        out += std::to_string(e.dst);
        out += ' ';
        out += detail::format_double(e.weight);
        out += ' ';
        out += std::to_string(e.cone);
        out += '\n';
    }
    return out;
}

}  // namespace conespan
