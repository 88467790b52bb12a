#pragma once

// Benchmark harness: repeated stratified k-fold cross-validation with
// wall-clock train/inference timing, and the Erdos-Renyi scaling study.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "graphhd/model.hpp"

namespace graphhd {

struct CvConfig {
    int folds = 10;
    int repetitions = 3;
    std::uint64_t seed = 0;
    bool stratified = true;
    unsigned threads = 1;  // intra-fold parallelism; 0 = hardware concurrency
};

struct FoldRecord {
    int repetition = 0;
    int fold = 0;
    std::size_t test_size = 0;
    double accuracy = 0.0;
    double train_time_s = 0.0;  // wall time of one fold's training
    double test_time_s = 0.0;   // wall time of one fold's inference
};

struct CvReport {
    std::string dataset_name;
    EncoderConfig encoder;
    CvConfig cv;
    std::vector<FoldRecord> folds;

    // Aggregates are recomputed from the per-fold records.
    double mean_accuracy() const;
    double std_accuracy() const;  // sample standard deviation over fold records
    double mean_train_time_per_fold() const;
    double mean_inference_time_per_graph() const;  // mean over folds of test_time/test_size
};

// Disjoint fold index sets covering [0, labels.size()). Stratified mode deals
// each class's shuffled members round-robin, so per-class fold counts differ
// by at most one. The shuffle is keyed on (seed, repetition).
std::vector<std::vector<std::size_t>> make_folds(std::span<const int> labels, int folds,
                                                 bool stratified, std::uint64_t seed,
                                                 int repetition);

// Per repetition: shuffle and partition, then for each fold train on the
// rest (timed) and predict the held-out part (timed). Encoding happens
// inside the timed regions; nothing is cached across folds.
CvReport cross_validate(const Dataset& ds, const EncoderConfig& enc_cfg,
                        const CvConfig& cv_cfg);

struct ScalingPoint {
    VertexId n_vertices = 0;
    double mean_edges = 0.0;
    double mean_accuracy = 0.0;
    double mean_train_time_per_fold_s = 0.0;
    double mean_inference_time_per_graph_s = 0.0;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    EncoderConfig encoder;
    CvConfig cv;
    double edge_prob = 0.05;
    std::size_t n_graphs = 100;
    int n_classes = 2;
    std::uint64_t gen_seed = 0;
};

// Per grid point: generate an ER dataset and run the full cross-validation,
// recording mean train time per fold.
ScalingReport scaling_benchmark(std::span<const VertexId> vertex_grid,
                                const EncoderConfig& enc_cfg, const CvConfig& cv_cfg,
                                double edge_prob = 0.05, std::size_t n_graphs = 100,
                                int n_classes = 2, std::uint64_t gen_seed = 0);

enum class ReportFormat { csv, json };

// Deterministic column order; timing columns are the only fields that vary
// between reruns with an identical seed. JSON documents carry
// schema_version (see docs/report_schema.json).
void emit_report(const CvReport& report, ReportFormat format,
                 const std::filesystem::path& path);
void emit_report(const ScalingReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace graphhd
