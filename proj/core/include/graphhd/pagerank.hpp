#pragma once

#include <cstdint>
#include <vector>

#include "graphhd/graph.hpp"

namespace graphhd {

// Per-vertex centrality, a probability distribution over vertices.
struct CentralityScores {
    std::vector<double> scores;  // each in [0,1], summing to 1
    int iterations_run = 0;
};

// rank[i] is the 0-based position of vertex i when vertices are ordered by
// descending centrality; always a permutation of {0,...,n-1}.
struct RankAssignment {
    std::vector<VertexId> rank;
};

// Fixed-iteration synchronous power method on the undirected graph, started
// from the uniform distribution:
//   x'_i = (1-damping)/n + damping * (sum_{j in N(i)} x_j/deg(j) + dangling/n)
// Degree-zero vertices redistribute their mass uniformly. The result is
// renormalized to sum 1 at the end to absorb floating-point drift.
CentralityScores pagerank(const Graph& g, int iterations, double damping);

// Stable descending sort by score; exact-score ties broken by ascending
// vertex index.
RankAssignment rank_vertices(const CentralityScores& c);

}  // namespace graphhd
