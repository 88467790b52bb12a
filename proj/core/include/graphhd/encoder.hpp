#pragma once

// GraphHD encoding: PageRank ranks pick vertex hypervectors out of the
// shared basis, edges bind their endpoint vectors, and the graph bundles all
// edge-hypervectors into one integer accumulator.

#include <cstdint>
#include <vector>

#include "graphhd/basis.hpp"
#include "graphhd/graph.hpp"
#include "graphhd/pagerank.hpp"

namespace graphhd {

struct EncoderConfig {
    std::size_t dim = 10000;
    std::uint64_t seed = 0;
    int pagerank_iterations = 10;
    double damping = 0.85;

    void validate() const {
        if (dim == 0) throw ConfigError("encoder dim must be >= 1");
        if (pagerank_iterations < 1) throw ConfigError("pagerank_iterations must be >= 1");
        if (!(damping > 0.0 && damping < 1.0)) throw ConfigError("damping must be in (0,1)");
    }

    bool operator==(const EncoderConfig&) const = default;
};

// Vertex i maps to basis vector rank[i], where ranks come from the PageRank
// centrality ordering. Returned pointers alias the basis storage.
std::vector<const Hypervector*> encode_vertices(const Graph& g, const BasisSet& basis,
                                                const EncoderConfig& cfg);

// Edge hypervector: bind of the endpoint vertex hypervectors. Symmetric.
inline Hypervector encode_edge(const Hypervector& hu, const Hypervector& hv) {
    return bind(hu, hv);
}

// Bundle of all edge-hypervectors of g. An edgeless graph encodes to a zero
// accumulator with n_added == 0; callers decide how to handle it.
Accumulator encode_graph(const Graph& g, const BasisSet& basis, const EncoderConfig& cfg);

}  // namespace graphhd
