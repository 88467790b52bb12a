#pragma once

// Shared graph/dataset fixtures and a scratch-directory guard for tests.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "graphhd/dataset.hpp"
#include "graphhd/graph.hpp"
#include "graphhd/pagerank.hpp"
#include "graphhd/rng.hpp"

namespace fixtures {

inline graphhd::Graph triangle() {
    return graphhd::Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

// Star K_{1,m} with the hub at vertex 0.
inline graphhd::Graph star(graphhd::VertexId leaves) {
    std::vector<graphhd::Edge> edges;
    for (graphhd::VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return graphhd::Graph::from_edges(leaves + 1, std::move(edges));
}

inline graphhd::Graph cycle(graphhd::VertexId n) {
    std::vector<graphhd::Edge> edges;
    for (graphhd::VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return graphhd::Graph::from_edges(n, std::move(edges));
}

// Single Erdos-Renyi draw used as generic "random graph" input.
inline graphhd::Graph random_graph(graphhd::VertexId n, double p, std::uint64_t seed) {
    graphhd::SplitMix64 gen(seed);
    std::vector<graphhd::Edge> edges;
    for (graphhd::VertexId u = 0; u + 1 < n; ++u) {
        for (graphhd::VertexId v = u + 1; v < n; ++v) {
            if (gen.next_unit() < p) edges.push_back({u, v});
        }
    }
    return graphhd::Graph::from_edges(n, std::move(edges));
}

// Union of t disjoint triangles plus `noise` random extra edges.
inline graphhd::Graph triangles_with_noise(graphhd::VertexId t, int noise,
                                           std::uint64_t seed) {
    const graphhd::VertexId n = 3 * t;
    std::vector<graphhd::Edge> edges;
    for (graphhd::VertexId i = 0; i < t; ++i) {
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i, 3 * i + 2});
        edges.push_back({3 * i + 1, 3 * i + 2});
    }
    graphhd::SplitMix64 gen(seed);
    for (int e = 0; e < noise; ++e) {
        const auto u = static_cast<graphhd::VertexId>(gen.next_below(n));
        const auto v = static_cast<graphhd::VertexId>(gen.next_below(n));
        if (u != v) edges.push_back({u, v});
    }
    return graphhd::Graph::from_edges(n, std::move(edges));
}

inline graphhd::Graph star_with_noise(graphhd::VertexId leaves, int noise,
                                      std::uint64_t seed) {
    std::vector<graphhd::Edge> edges;
    for (graphhd::VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i});
    graphhd::SplitMix64 gen(seed);
    for (int e = 0; e < noise; ++e) {
        const auto u = static_cast<graphhd::VertexId>(1 + gen.next_below(leaves));
        const auto v = static_cast<graphhd::VertexId>(1 + gen.next_below(leaves));
        if (u != v) edges.push_back({u, v});
    }
    return graphhd::Graph::from_edges(leaves + 1, std::move(edges));
}

// True when all PageRank scores are pairwise separated by more than `gap`.
// Oracle-equivalence tests need this: with exact centrality ties, two
// numerically different PageRank routes can break the tie differently, so
// only tie-free inputs give a meaningful exact comparison.
inline bool tie_free(const graphhd::Graph& g, double gap = 1e-8) {
    auto scores = graphhd::pagerank(g, 10, 0.85).scores;
    std::sort(scores.begin(), scores.end());
    for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
        if (scores[i + 1] - scores[i] <= gap) return false;
    }
    return true;
}

// Random graph with generic (tie-free) centralities and at least one edge.
// Needs n >= 6: every graph on fewer vertices has a nontrivial automorphism
// and therefore an exact score tie.
inline graphhd::Graph generic_graph(graphhd::VertexId n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
        graphhd::Graph g = random_graph(n, p, graphhd::rng::mix(seed + 7919 * attempt));
        if (g.edge_count() >= 1 && tie_free(g)) return g;
    }
    throw std::runtime_error("generic_graph: no tie-free graph found (n too small?)");
}

// Tiny two-class dataset of generic graphs, for exact pipeline-vs-oracle
// comparisons.
inline graphhd::Dataset generic_dataset(std::size_t count, std::uint64_t seed) {
    graphhd::Dataset ds;
    ds.name = "generic";
    ds.class_count = 2;
    ds.label_values = {0, 1};
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<graphhd::VertexId>(7 + i % 5);
        ds.graphs.push_back(generic_graph(n, 0.45, graphhd::rng::mix(seed * 1000 + i)));
        ds.labels.push_back(static_cast<int>(i % 2));
    }
    for (const auto& g : ds.graphs) {
        ds.max_vertices = std::max(ds.max_vertices, g.vertex_count());
    }
    return ds;
}

// Two structurally separated classes: unions of triangles vs stars, with a
// little noise and per-graph size variation.
inline graphhd::Dataset separable_dataset(std::size_t per_class, std::uint64_t seed) {
    graphhd::Dataset ds;
    ds.name = "synthetic";
    ds.class_count = 2;
    ds.label_values = {0, 1};
    for (std::size_t i = 0; i < per_class; ++i) {
        const auto t = static_cast<graphhd::VertexId>(4 + i % 5);
        ds.graphs.push_back(triangles_with_noise(t, 2, graphhd::rng::mix(seed + 2 * i)));
        ds.labels.push_back(0);
        const auto leaves = static_cast<graphhd::VertexId>(11 + i % 12);
        ds.graphs.push_back(star_with_noise(leaves, 2, graphhd::rng::mix(seed + 2 * i + 1)));
        ds.labels.push_back(1);
    }
    for (const auto& g : ds.graphs) {
        ds.max_vertices = std::max(ds.max_vertices, g.vertex_count());
    }
    return ds;
}

// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int attempt = 0;; ++attempt) {
            path_ = base / ("graphhd_" + tag + "_" + std::to_string(::getpid()) + "_" +
                            std::to_string(attempt));
            if (std::filesystem::create_directory(path_)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Hand-written two-graph file set: a triangle and a single edge, with every
// edge listed in both directions the way TUDataset files do.
inline void write_tiny_tudataset(const std::filesystem::path& dir, const std::string& name) {
    std::ofstream a(dir / (name + "_A.txt"));
    a << "1, 2\n2, 1\n1, 3\n3, 1\n2, 3\n3, 2\n4, 5\n5, 4\n";
    std::ofstream ind(dir / (name + "_graph_indicator.txt"));
    ind << "1\n1\n1\n2\n2\n";
    std::ofstream lab(dir / (name + "_graph_labels.txt"));
    lab << "-1\n1\n";
}

}  // namespace fixtures
