#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphhd/pagerank.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace graphhd;

TEST_CASE("3-cycle: symmetry forces exactly uniform scores") {
    const CentralityScores c = pagerank(fixtures::cycle(3), 10, 0.85);
    for (double s : c.scores) CHECK(std::abs(s - 1.0 / 3.0) < 1e-9);
    CHECK(c.iterations_run == 10);
}

TEST_CASE("star K_{1,4}: hub dominates, leaves tie") {
    const CentralityScores c = pagerank(fixtures::star(4), 10, 0.85);
    for (int leaf = 1; leaf <= 4; ++leaf) {
        CHECK(c.scores[0] > c.scores[static_cast<std::size_t>(leaf)]);
        CHECK(std::abs(c.scores[static_cast<std::size_t>(leaf)] - c.scores[1]) < 1e-9);
    }
    CHECK(rank_vertices(c).rank[0] == 0);
}

TEST_CASE("scores match the dense Google-matrix oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const VertexId n = 1 + static_cast<VertexId>(seed % 10);
        const Graph g = fixtures::random_graph(n, 0.4, rng::mix(seed));
        const CentralityScores c = pagerank(g, 10, 0.85);
        const auto expect = oracle::dense_pagerank(g, 10, 0.85);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(std::abs(c.scores[i] - expect[i]) < 1e-9);
        }
    }
}

TEST_CASE("stochasticity: scores sum to one, edgeless graphs stay uniform") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const VertexId n = 1 + static_cast<VertexId>(seed % 15);
        const Graph g = fixtures::random_graph(n, 0.2, rng::mix(seed + 100));
        const CentralityScores c = pagerank(g, 10, 0.85);
        const double total = std::accumulate(c.scores.begin(), c.scores.end(), 0.0);
        CHECK(std::abs(total - 1.0) < 1e-9);
        for (double s : c.scores) {
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
        }
    }
    const Graph edgeless = Graph::from_edges(5, {});
    const CentralityScores c = pagerank(edgeless, 10, 0.85);
    for (double s : c.scores) CHECK(std::abs(s - 0.2) < 1e-12);
}

TEST_CASE("pagerank input validation") {
    CHECK_THROWS_AS(pagerank(Graph{}, 10, 0.85), Error);
    CHECK_THROWS_AS(pagerank(fixtures::triangle(), 0, 0.85), ConfigError);
    CHECK_THROWS_AS(pagerank(fixtures::triangle(), 10, 1.0), ConfigError);
}

TEST_CASE("rank assignment: sort semantics and tie-breaks") {
    RankAssignment r = rank_vertices(CentralityScores{{0.2, 0.5, 0.3}, 10});
    CHECK(r.rank == std::vector<VertexId>{2, 0, 1});

    r = rank_vertices(CentralityScores{{0.25, 0.25, 0.25, 0.25}, 10});
    CHECK(r.rank == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("rank is always a permutation") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const VertexId n = 1 + static_cast<VertexId>(seed % 12);
        const Graph g = fixtures::random_graph(n, 0.35, rng::mix(seed + 500));
        const auto rank = rank_vertices(pagerank(g, 10, 0.85)).rank;
        std::vector<char> seen(n, 0);
        for (VertexId pos : rank) {
            REQUIRE(pos < n);
            CHECK(!seen[pos]);
            seen[pos] = 1;
        }
    }
}

TEST_CASE("relabeling a graph permutes scores accordingly") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const VertexId n = 4 + static_cast<VertexId>(seed % 8);
        const Graph g = fixtures::random_graph(n, 0.4, rng::mix(seed + 900));

        // Random permutation pi; relabeled graph has edge (pi(u), pi(v)) per
        // edge (u, v).
        std::vector<VertexId> pi(n);
        std::iota(pi.begin(), pi.end(), VertexId{0});
        SplitMix64 gen(seed);
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(pi[i], pi[gen.next_below(i + 1)]);
        }
        std::vector<Edge> relabeled;
        for (const auto& [u, v] : g.edges()) relabeled.push_back({pi[u], pi[v]});
        const Graph h = Graph::from_edges(n, std::move(relabeled));

        const auto cg = pagerank(g, 10, 0.85);
        const auto ch = pagerank(h, 10, 0.85);
        for (VertexId v = 0; v < n; ++v) {
            CHECK(std::abs(cg.scores[v] - ch.scores[pi[v]]) < 1e-12);
        }
    }
}

TEST_CASE("hub of K_{1,m} always gets rank zero") {
    for (VertexId m : {1u, 2u, 5u, 9u, 40u}) {
        const auto rank = rank_vertices(pagerank(fixtures::star(m), 10, 0.85)).rank;
        CHECK(rank[0] == 0);
    }
}
