#include "graphhd/encoder.hpp"

namespace graphhd {

std::vector<const Hypervector*> encode_vertices(const Graph& g, const BasisSet& basis,
                                                const EncoderConfig& cfg) {
    cfg.validate();
    const RankAssignment ranks =
        rank_vertices(pagerank(g, cfg.pagerank_iterations, cfg.damping));
    basis.ensure(g.vertex_count());
    std::vector<const Hypervector*> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out[v] = &basis.at(ranks.rank[v]);
    }
    return out;
}

Accumulator encode_graph(const Graph& g, const BasisSet& basis, const EncoderConfig& cfg) {
    cfg.validate();
    if (basis.dim() != cfg.dim) {
        throw DimensionError("encode_graph: basis dim != config dim");
    }
    Accumulator acc(cfg.dim);
    if (g.edge_count() == 0) return acc;  // zero bundle, n_added == 0

    const RankAssignment ranks =
        rank_vertices(pagerank(g, cfg.pagerank_iterations, cfg.damping));
    basis.ensure(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        acc.add_product(basis.at(ranks.rank[u]), basis.at(ranks.rank[v]));
    }
    return acc;
}

}  // namespace graphhd
