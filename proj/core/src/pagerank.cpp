#include "graphhd/pagerank.hpp"

#include <algorithm>
#include <numeric>

#include "graphhd/error.hpp"

namespace graphhd {

CentralityScores pagerank(const Graph& g, int iterations, double damping) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw Error("pagerank: empty graph");
    if (iterations < 1) throw ConfigError("pagerank: iterations must be >= 1");
    if (!(damping > 0.0 && damping < 1.0)) throw ConfigError("pagerank: damping must be in (0,1)");

    const auto& adj = g.adjacency();
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    std::vector<double> share(n);  // x_j / deg(j), 0 for dangling vertices

    for (int it = 0; it < iterations; ++it) {
        double dangling_mass = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t deg = adj[j].size();
            if (deg == 0) {
                dangling_mass += x[j];
                share[j] = 0.0;
            } else {
                share[j] = x[j] / static_cast<double>(deg);
            }
        }
        const double base = (1.0 - damping) / static_cast<double>(n) +
                            damping * dangling_mass / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            double in = 0.0;
            for (VertexId j : adj[i]) in += share[j];
            next[i] = base + damping * in;
        }
        x.swap(next);
    }

    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= total;

    return CentralityScores{std::move(x), iterations};
}

RankAssignment rank_vertices(const CentralityScores& c) {
    const std::size_t n = c.scores.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (c.scores[a] != c.scores[b]) return c.scores[a] > c.scores[b];
        return a < b;
    });
    RankAssignment out;
    out.rank.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        out.rank[order[pos]] = static_cast<VertexId>(pos);
    }
    return out;
}

}  // namespace graphhd
