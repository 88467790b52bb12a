// graphhd command line tool: dataset statistics, cross-validation benchmark,
// Erdos-Renyi scaling study, and model train/predict.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error,
//             3 internal invariant violation.

#include <cstdio>
#include <exception>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphhd/evaluation.hpp"

namespace {

using namespace graphhd;

struct CommonOptions {
    std::string dataset_dir;
    std::string name;
    EncoderConfig encoder;
    CvConfig cv;
    bool no_stratify = false;
    std::string out = "-";
    std::string format = "csv";
};

void add_encoder_flags(CLI::App& cmd, EncoderConfig& enc) {
    cmd.add_option("--dim", enc.dim, "Hypervector dimension")->capture_default_str();
    cmd.add_option("--pr-iters", enc.pagerank_iterations, "PageRank iterations")
        ->capture_default_str();
    cmd.add_option("--damping", enc.damping, "PageRank damping factor")
        ->capture_default_str();
    cmd.add_option("--seed", enc.seed, "Seed for basis vectors and fold shuffles")
        ->capture_default_str();
}

void add_cv_flags(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--folds", opt.cv.folds, "Cross-validation folds")->capture_default_str();
    cmd.add_option("--repeats", opt.cv.repetitions, "Cross-validation repetitions")
        ->capture_default_str();
    cmd.add_flag("--no-stratify", opt.no_stratify, "Disable stratified folds");
    cmd.add_option("--threads", opt.cv.threads,
                   "Worker threads for encoding inside a fold (0 = auto)")
        ->capture_default_str();
    cmd.add_option("--out", opt.out, "Report path ('-' = stdout)")->capture_default_str();
    cmd.add_option("--format", opt.format, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

ReportFormat parse_format(const std::string& f) {
    return f == "json" ? ReportFormat::json : ReportFormat::csv;
}

void print_cv_summary(const CvReport& report) {
    std::fprintf(stderr,
                 "%s: accuracy %.4f +/- %.4f | train %.6f s/fold | inference %.3e s/graph "
                 "(%d folds x %d repetitions)\n",
                 report.dataset_name.c_str(), report.mean_accuracy(), report.std_accuracy(),
                 report.mean_train_time_per_fold(), report.mean_inference_time_per_graph(),
                 report.cv.folds, report.cv.repetitions);
}

int run_stats(const std::string& dir, const std::string& name) {
    const Dataset ds = load_tudataset(dir, name);
    const DatasetStats stats = dataset_stats(ds);
    std::printf("# dataset\tgraphs\tclasses\tavg_vertices\tavg_edges\n");
    std::printf("%s\t%zu\t%d\t%.2f\t%.2f\n", ds.name.c_str(), stats.graph_count,
                stats.class_count, stats.mean_vertices, stats.mean_edges);
    std::printf("# class histogram:");
    for (std::size_t c = 0; c < stats.class_histogram.size(); ++c) {
        std::printf(" %lld:%zu", ds.label_values[c], stats.class_histogram[c]);
    }
    std::printf("\n");
    return 0;
}

int run_bench(CommonOptions& opt) {
    opt.cv.stratified = !opt.no_stratify;
    opt.cv.seed = opt.encoder.seed;
    const Dataset ds = load_tudataset(opt.dataset_dir, opt.name);
    const CvReport report = cross_validate(ds, opt.encoder, opt.cv);
    emit_report(report, parse_format(opt.format), opt.out);
    print_cv_summary(report);
    return 0;
}

int run_scale(CommonOptions& opt, const std::vector<VertexId>& grid, double edge_prob,
              std::size_t n_graphs, int n_classes) {
    opt.cv.stratified = !opt.no_stratify;
    opt.cv.seed = opt.encoder.seed;
    const ScalingReport report = scaling_benchmark(grid, opt.encoder, opt.cv, edge_prob,
                                                   n_graphs, n_classes, opt.encoder.seed);
    emit_report(report, parse_format(opt.format), opt.out);
    for (const ScalingPoint& p : report.points) {
        std::fprintf(stderr,
                     "n=%u: %.1f edges/graph | accuracy %.4f | train %.6f s/fold | "
                     "inference %.3e s/graph\n",
                     p.n_vertices, p.mean_edges, p.mean_accuracy,
                     p.mean_train_time_per_fold_s, p.mean_inference_time_per_graph_s);
    }
    return 0;
}

int run_train(CommonOptions& opt, const std::string& model_out, bool embed_basis) {
    const Dataset ds = load_tudataset(opt.dataset_dir, opt.name);
    BasisSet basis(opt.encoder.seed, opt.encoder.dim);
    const Model model = train(ds, basis, opt.encoder, opt.cv.threads);
    save_model(model, model_out, embed_basis ? &basis : nullptr);
    std::fprintf(stderr, "trained %llu graphs (%d classes, %llu edgeless skipped) -> %s\n",
                 static_cast<unsigned long long>(model.train_graph_count), model.k,
                 static_cast<unsigned long long>(model.skipped_edgeless), model_out.c_str());
    return 0;
}

int run_predict(const std::string& model_path, const std::string& dir,
                const std::string& name, unsigned threads) {
    LoadedModel loaded = load_model(model_path);
    const Dataset ds = load_tudataset(dir, name);
    std::vector<std::size_t> all(ds.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto predictions = predict_batch(ds, all, loaded.model, loaded.basis, threads);

    std::printf("graph,predicted,actual\n");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        std::printf("%zu,%d,%d\n", i, predictions[i].label, ds.labels[i]);
        if (predictions[i].label == ds.labels[i]) ++correct;
    }
    std::fprintf(stderr, "accuracy %.4f (%zu/%zu)\n",
                 static_cast<double>(correct) / static_cast<double>(ds.size()), correct,
                 ds.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GraphHD: graph classification with hyperdimensional computing"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* stats_cmd = app.add_subcommand("stats", "Print dataset statistics");
    stats_cmd->add_option("--dataset", opt.dataset_dir, "Dataset directory")->required();
    stats_cmd->add_option("--name", opt.name, "Dataset name (file prefix)")->required();

    auto* bench_cmd =
        app.add_subcommand("bench", "Repeated stratified k-fold cross-validation benchmark");
    bench_cmd->add_option("--dataset", opt.dataset_dir, "Dataset directory")->required();
    bench_cmd->add_option("--name", opt.name, "Dataset name (file prefix)")->required();
    add_encoder_flags(*bench_cmd, opt.encoder);
    add_cv_flags(*bench_cmd, opt);

    std::vector<VertexId> grid{100, 200, 400, 800, 980};
    double edge_prob = 0.05;
    std::size_t n_graphs = 100;
    int n_classes = 2;
    auto* scale_cmd =
        app.add_subcommand("scale", "Erdos-Renyi training-time scaling study");
    scale_cmd->add_option("--grid", grid, "Vertex counts to measure")
        ->delimiter(',')
        ->capture_default_str();
    scale_cmd->add_option("--edge-prob", edge_prob, "Edge probability")->capture_default_str();
    scale_cmd->add_option("--graphs", n_graphs, "Graphs per synthetic dataset")
        ->capture_default_str();
    scale_cmd->add_option("--classes", n_classes, "Classes per synthetic dataset")
        ->capture_default_str();
    add_encoder_flags(*scale_cmd, opt.encoder);
    add_cv_flags(*scale_cmd, opt);

    std::string model_path;
    bool embed_basis = false;
    auto* train_cmd = app.add_subcommand("train", "Train on a full dataset and save the model");
    train_cmd->add_option("--dataset", opt.dataset_dir, "Dataset directory")->required();
    train_cmd->add_option("--name", opt.name, "Dataset name (file prefix)")->required();
    train_cmd->add_option("--model-out", model_path, "Output model file")->required();
    train_cmd->add_flag("--embed-basis", embed_basis,
                        "Store materialized basis vectors in the model file");
    add_encoder_flags(*train_cmd, opt.encoder);
    train_cmd->add_option("--threads", opt.cv.threads, "Worker threads (0 = auto)")
        ->capture_default_str();

    auto* predict_cmd = app.add_subcommand("predict", "Classify a dataset with a saved model");
    predict_cmd->add_option("--model", model_path, "Model file")->required();
    predict_cmd->add_option("--dataset", opt.dataset_dir, "Dataset directory")->required();
    predict_cmd->add_option("--name", opt.name, "Dataset name (file prefix)")->required();
    predict_cmd->add_option("--threads", opt.cv.threads, "Worker threads (0 = auto)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // help/version exit 0, parse errors exit 1
    }

    try {
        if (*stats_cmd) return run_stats(opt.dataset_dir, opt.name);
        if (*bench_cmd) return run_bench(opt);
        if (*scale_cmd) return run_scale(opt, grid, edge_prob, n_graphs, n_classes);
        if (*train_cmd) return run_train(opt, model_path, embed_basis);
        if (*predict_cmd) return run_predict(model_path, opt.dataset_dir, opt.name, opt.cv.threads);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const DataFormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ModelIoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
