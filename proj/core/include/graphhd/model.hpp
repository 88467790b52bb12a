#pragma once

// Training and inference: one integer class-vector per class, built by
// bundling the bipolar graph-hypervectors of that class's training graphs;
// prediction is argmax cosine similarity against the class-vectors.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "graphhd/dataset.hpp"
#include "graphhd/encoder.hpp"

namespace graphhd {

struct Model {
    std::vector<Accumulator> class_vectors;
    EncoderConfig config;
    int k = 0;
    std::uint64_t train_graph_count = 0;
    std::uint64_t skipped_edgeless = 0;  // edgeless graphs dropped from training

    // Fallback class for edgeless queries: the class with the most trained
    // graphs, lowest index on ties.
    int majority_class() const;

    bool operator==(const Model&) const = default;
};

struct Prediction {
    int label = 0;
    std::vector<double> similarities;  // cosine against each class vector
    bool used_fallback = false;        // edgeless query, majority-class answer
};

// Build class vectors over the selected graphs (two-level bundling: each
// graph is majority-normalized before entering its class bundle). Every
// class must be represented; edgeless graphs are skipped and counted.
Model train(const Dataset& ds, std::span<const std::size_t> indices,
            const BasisSet& basis, const EncoderConfig& cfg, unsigned threads = 1);

// Train on the whole dataset.
Model train(const Dataset& ds, const BasisSet& basis, const EncoderConfig& cfg,
            unsigned threads = 1);

// Encode g with the model's config and return the most similar class, ties
// broken by lowest class index. The basis must be the one training used.
Prediction predict(const Graph& g, const Model& model, const BasisSet& basis);

std::vector<Prediction> predict_batch(const Dataset& ds,
                                      std::span<const std::size_t> indices,
                                      const Model& model, const BasisSet& basis,
                                      unsigned threads = 1);

// Versioned binary model container (see docs/model_format.md). The file
// always carries the seed so the basis can be regenerated; pass embed_basis
// to additionally store the materialized basis vectors for portability.
void save_model(const Model& model, const std::filesystem::path& path,
                const BasisSet* embed_basis = nullptr);

struct LoadedModel {
    Model model;
    BasisSet basis;  // regenerated from the stored seed, or embedded vectors
};

LoadedModel load_model(const std::filesystem::path& path);

}  // namespace graphhd
