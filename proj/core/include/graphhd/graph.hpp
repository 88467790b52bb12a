#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphhd/error.hpp"

namespace graphhd {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Immutable undirected simple graph in canonical form: edges hold u < v,
// sorted lexicographically, deduplicated; self-loops are dropped at
// construction. Isolated vertices count toward n.
class Graph {
public:
    Graph() = default;

    // Canonicalizes the edge list: swaps endpoints to u < v, drops
    // self-loops, sorts and deduplicates. Throws on endpoints >= n.
    static Graph from_edges(VertexId n, std::vector<Edge> edges);

    VertexId vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<VertexId>>& adjacency() const noexcept { return adjacency_; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    bool operator==(const Graph&) const = default;

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

}  // namespace graphhd
