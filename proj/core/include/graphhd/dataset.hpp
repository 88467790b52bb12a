#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "graphhd/graph.hpp"

namespace graphhd {

// Ordered set of graphs with dense class labels in {0,...,class_count-1}.
// label_values maps each dense label back to the integer that appeared in
// the source files (ascending), so exports stay faithful.
struct Dataset {
    std::string name;
    std::vector<Graph> graphs;
    std::vector<int> labels;
    int class_count = 0;
    std::vector<long long> label_values;
    VertexId max_vertices = 0;

    std::size_t size() const noexcept { return graphs.size(); }
};

struct DatasetStats {
    std::size_t graph_count = 0;
    int class_count = 0;
    double mean_vertices = 0.0;
    double mean_edges = 0.0;  // undirected edges
    std::vector<std::size_t> class_histogram;
};

// Load a dataset in the TUDataset plain-text layout from
// <dir>/<name>_A.txt, <name>_graph_indicator.txt, <name>_graph_labels.txt.
// 1-based global vertex ids are remapped to per-graph 0-based indices in
// file order, directed duplicate edge rows collapse to one undirected edge,
// self-loops are dropped, and class labels are densified preserving the
// ascending order of the original values. Vertex/edge label and attribute
// files are ignored when present.
Dataset load_tudataset(const std::filesystem::path& dir, const std::string& name);

// Write the three-file TUDataset layout (both edge directions listed, as the
// distributed datasets do). load_tudataset(export_tudataset(ds)) == ds.
void export_tudataset(const Dataset& ds, const std::filesystem::path& dir,
                      const std::string& name);

DatasetStats dataset_stats(const Dataset& ds);

// Synthetic G(n_vertices, edge_prob) dataset: n_graphs independent
// Erdos-Renyi graphs with labels assigned round-robin over n_classes.
// Deterministic in seed; per-graph streams are independent.
Dataset generate_er_dataset(VertexId n_vertices, std::size_t n_graphs, int n_classes,
                            double edge_prob, std::uint64_t seed);

}  // namespace graphhd
