#include "graphhd/graph.hpp"

#include <algorithm>
#include <string>

namespace graphhd {

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges) {
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw DataFormatError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") references a vertex >= n = " + std::to_string(n));
        }
        if (u == v) continue;  // self-loops carry no binding information
        if (u > v) std::swap(u, v);
        canonical.emplace_back(u, v);
    }
    std::sort(canonical.begin(), canonical.end());
    canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

    Graph g;
    g.n_ = n;
    g.adjacency_.resize(n);
    for (auto [u, v] : canonical) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    g.edges_ = std::move(canonical);
    return g;
}

}  // namespace graphhd
