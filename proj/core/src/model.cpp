#include "graphhd/model.hpp"

#include <algorithm>
#include <numeric>

#include "graphhd/parallel.hpp"

namespace graphhd {

int Model::majority_class() const {
    int best = 0;
    for (int c = 1; c < k; ++c) {
        if (class_vectors[static_cast<std::size_t>(c)].n_added() >
            class_vectors[static_cast<std::size_t>(best)].n_added()) {
            best = c;
        }
    }
    return best;
}

Model train(const Dataset& ds, std::span<const std::size_t> indices,
            const BasisSet& basis, const EncoderConfig& cfg, unsigned threads) {
    cfg.validate();
    if (indices.empty()) throw ConfigError("train: empty training set");
    if (basis.dim() != cfg.dim || basis.seed() != cfg.seed) {
        throw ConfigError("train: basis seed/dim does not match encoder config");
    }

    const std::size_t k = static_cast<std::size_t>(ds.class_count);
    std::vector<std::size_t> per_class(k, 0);
    for (std::size_t i : indices) {
        per_class[static_cast<std::size_t>(ds.labels[i])]++;
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (per_class[c] == 0) {
            throw ConfigError("train: class " + std::to_string(c) +
                              " has no training graphs");
        }
    }

    // Pre-materialize the basis so worker threads only read it.
    VertexId max_n = 0;
    for (std::size_t i : indices) max_n = std::max(max_n, ds.graphs[i].vertex_count());
    basis.ensure(max_n);

    const unsigned chunks = resolve_threads(threads, indices.size());
    std::vector<std::vector<Accumulator>> partial(
        chunks, std::vector<Accumulator>(k, Accumulator(cfg.dim)));
    std::vector<std::uint64_t> skipped(chunks, 0);

    parallel_chunks(indices.size(), threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
        for (std::size_t pos = begin; pos < end; ++pos) {
            const std::size_t i = indices[pos];
            const Graph& g = ds.graphs[i];
            if (g.edge_count() == 0) {
                ++skipped[chunk];
                continue;
            }
            const Accumulator bundle = encode_graph(g, basis, cfg);
            partial[chunk][static_cast<std::size_t>(ds.labels[i])].add(
                normalize(bundle, cfg.seed));
        }
    });

    Model model;
    model.config = cfg;
    model.k = ds.class_count;
    model.train_graph_count = indices.size();
    model.class_vectors.assign(k, Accumulator(cfg.dim));
    for (unsigned chunk = 0; chunk < chunks; ++chunk) {
        model.skipped_edgeless += skipped[chunk];
        for (std::size_t c = 0; c < k; ++c) {
            model.class_vectors[c].merge(partial[chunk][c]);
        }
    }
    return model;
}

Model train(const Dataset& ds, const BasisSet& basis, const EncoderConfig& cfg,
            unsigned threads) {
    std::vector<std::size_t> all(ds.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return train(ds, all, basis, cfg, threads);
}

Prediction predict(const Graph& g, const Model& model, const BasisSet& basis) {
    if (model.k < 1 || model.class_vectors.empty()) {
        throw ConfigError("predict: model has no class vectors");
    }
    if (basis.dim() != model.config.dim || basis.seed() != model.config.seed) {
        throw ConfigError("predict: basis seed/dim does not match the model");
    }

    Prediction p;
    p.similarities.assign(static_cast<std::size_t>(model.k), 0.0);
    if (g.edge_count() == 0) {
        p.label = model.majority_class();
        p.used_fallback = true;
        return p;
    }

    const Hypervector query =
        normalize(encode_graph(g, basis, model.config), model.config.seed);
    int best = 0;
    for (int c = 0; c < model.k; ++c) {
        const double sim =
            cosine_similarity(query, model.class_vectors[static_cast<std::size_t>(c)]);
        p.similarities[static_cast<std::size_t>(c)] = sim;
        if (sim > p.similarities[static_cast<std::size_t>(best)]) best = c;
    }
    p.label = best;
    return p;
}

std::vector<Prediction> predict_batch(const Dataset& ds,
                                      std::span<const std::size_t> indices,
                                      const Model& model, const BasisSet& basis,
                                      unsigned threads) {
    VertexId max_n = 0;
    for (std::size_t i : indices) max_n = std::max(max_n, ds.graphs[i].vertex_count());
    basis.ensure(max_n);

    std::vector<Prediction> out(indices.size());
    parallel_chunks(indices.size(), threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t pos = begin; pos < end; ++pos) {
            out[pos] = predict(ds.graphs[indices[pos]], model, basis);
        }
    });
    return out;
}

}  // namespace graphhd
