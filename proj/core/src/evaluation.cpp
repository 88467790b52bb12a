#include "graphhd/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

#include <json.hpp>

#include "graphhd/rng.hpp"

namespace graphhd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Full-precision, locale-independent number formatting so that reruns with
// the same seed produce byte-identical non-timing fields.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double mean_of(const std::vector<FoldRecord>& folds, double (*field)(const FoldRecord&)) {
    double sum = 0.0;
    for (const FoldRecord& r : folds) sum += field(r);
    return folds.empty() ? 0.0 : sum / static_cast<double>(folds.size());
}

}  // namespace

double CvReport::mean_accuracy() const {
    return mean_of(folds, [](const FoldRecord& r) { return r.accuracy; });
}

double CvReport::std_accuracy() const {
    if (folds.size() < 2) return 0.0;
    const double mean = mean_accuracy();
    double ss = 0.0;
    for (const FoldRecord& r : folds) ss += (r.accuracy - mean) * (r.accuracy - mean);
    return std::sqrt(ss / static_cast<double>(folds.size() - 1));
}

double CvReport::mean_train_time_per_fold() const {
    return mean_of(folds, [](const FoldRecord& r) { return r.train_time_s; });
}

double CvReport::mean_inference_time_per_graph() const {
    return mean_of(folds, [](const FoldRecord& r) {
        return r.test_size ? r.test_time_s / static_cast<double>(r.test_size) : 0.0;
    });
}

std::vector<std::vector<std::size_t>> make_folds(std::span<const int> labels, int folds,
                                                 bool stratified, std::uint64_t seed,
                                                 int repetition) {
    const std::size_t n = labels.size();
    if (folds < 2) throw ConfigError("make_folds: folds must be >= 2");
    if (static_cast<std::size_t>(folds) > n) {
        throw ConfigError("make_folds: folds (" + std::to_string(folds) +
                          ") exceeds dataset size (" + std::to_string(n) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 gen(rng::derive_key(seed, rng::kShuffleStream,
                                   static_cast<std::uint64_t>(repetition)));
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(order[i], order[gen.next_below(i + 1)]);
    }

    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(folds));
    if (stratified) {
        int max_label = 0;
        for (int l : labels) max_label = std::max(max_label, l);
        std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(max_label) + 1);
        for (std::size_t i : order) by_class[static_cast<std::size_t>(labels[i])].push_back(i);
        for (const auto& members : by_class) {
            if (members.size() < static_cast<std::size_t>(folds)) {
                throw ConfigError(
                    "make_folds: a class has fewer members than folds; "
                    "use unstratified folds");
            }
        }
        // One fold cursor across classes keeps total fold sizes balanced too,
        // not just the per-class counts.
        std::size_t cursor = 0;
        for (const auto& members : by_class) {
            for (std::size_t i : members) {
                out[cursor++ % static_cast<std::size_t>(folds)].push_back(i);
            }
        }
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) {
            out[i % static_cast<std::size_t>(folds)].push_back(order[i]);
        }
    }
    return out;
}

CvReport cross_validate(const Dataset& ds, const EncoderConfig& enc_cfg,
                        const CvConfig& cv_cfg) {
    enc_cfg.validate();
    if (ds.graphs.empty()) throw ConfigError("cross_validate: empty dataset");
    if (cv_cfg.repetitions < 1) throw ConfigError("cross_validate: repetitions must be >= 1");

    // The basis is shared setup (the encoding function is fixed across the
    // whole experiment); graph encodings themselves happen inside the timed
    // regions and are never cached.
    BasisSet basis(enc_cfg.seed, enc_cfg.dim);
    basis.ensure(ds.max_vertices);

    CvReport report;
    report.dataset_name = ds.name;
    report.encoder = enc_cfg;
    report.cv = cv_cfg;

    std::vector<char> in_test(ds.size());
    for (int rep = 0; rep < cv_cfg.repetitions; ++rep) {
        const auto folds =
            make_folds(ds.labels, cv_cfg.folds, cv_cfg.stratified, cv_cfg.seed, rep);
        for (int f = 0; f < cv_cfg.folds; ++f) {
            const auto& test_indices = folds[static_cast<std::size_t>(f)];
            std::vector<std::size_t> train_indices;
            train_indices.reserve(ds.size() - test_indices.size());
            for (int other = 0; other < cv_cfg.folds; ++other) {
                if (other == f) continue;
                const auto& part = folds[static_cast<std::size_t>(other)];
                train_indices.insert(train_indices.end(), part.begin(), part.end());
            }

            // Leakage guard: the partition must keep train and test disjoint.
            std::fill(in_test.begin(), in_test.end(), 0);
            for (std::size_t i : test_indices) in_test[i] = 1;
            for (std::size_t i : train_indices) {
                if (in_test[i]) throw std::logic_error("cross_validate: fold leakage");
            }

            const auto train_start = Clock::now();
            const Model model = train(ds, train_indices, basis, enc_cfg, cv_cfg.threads);
            const double train_time = seconds_since(train_start);

            const auto test_start = Clock::now();
            const auto predictions =
                predict_batch(ds, test_indices, model, basis, cv_cfg.threads);
            const double test_time = seconds_since(test_start);

            std::size_t correct = 0;
            for (std::size_t i = 0; i < test_indices.size(); ++i) {
                if (predictions[i].label == ds.labels[test_indices[i]]) ++correct;
            }
            report.folds.push_back(FoldRecord{
                rep, f, test_indices.size(),
                static_cast<double>(correct) / static_cast<double>(test_indices.size()),
                train_time, test_time});
        }
    }
    return report;
}

ScalingReport scaling_benchmark(std::span<const VertexId> vertex_grid,
                                const EncoderConfig& enc_cfg, const CvConfig& cv_cfg,
                                double edge_prob, std::size_t n_graphs, int n_classes,
                                std::uint64_t gen_seed) {
    if (vertex_grid.empty()) throw ConfigError("scaling_benchmark: empty vertex grid");

    ScalingReport report;
    report.encoder = enc_cfg;
    report.cv = cv_cfg;
    report.edge_prob = edge_prob;
    report.n_graphs = n_graphs;
    report.n_classes = n_classes;
    report.gen_seed = gen_seed;

    for (VertexId n : vertex_grid) {
        const Dataset ds = generate_er_dataset(n, n_graphs, n_classes, edge_prob,
                                               rng::mix(gen_seed + n));
        const CvReport cv = cross_validate(ds, enc_cfg, cv_cfg);
        const DatasetStats stats = dataset_stats(ds);
        report.points.push_back(ScalingPoint{n, stats.mean_edges, cv.mean_accuracy(),
                                             cv.mean_train_time_per_fold(),
                                             cv.mean_inference_time_per_graph()});
    }
    return report;
}

namespace {

class ReportSink {
public:
    explicit ReportSink(const std::filesystem::path& path) : to_stdout_(path == "-") {
        if (!to_stdout_) {
            file_.open(path);
            if (!file_) throw IoError("cannot write report file " + path.string());
        }
    }

    std::ostream& stream() { return to_stdout_ ? std::cout : file_; }

    void finish(const std::filesystem::path& path) {
        stream().flush();
        if (!to_stdout_ && !file_) {
            throw IoError("error while writing report file " + path.string());
        }
    }

private:
    bool to_stdout_;
    std::ofstream file_;
};

nlohmann::json encoder_json(const EncoderConfig& enc) {
    return {{"dim", enc.dim},
            {"pagerank_iterations", enc.pagerank_iterations},
            {"damping", enc.damping},
            {"seed", enc.seed}};
}

nlohmann::json cv_json(const CvConfig& cv) {
    return {{"folds", cv.folds},
            {"repetitions", cv.repetitions},
            {"seed", cv.seed},
            {"stratified", cv.stratified}};
}

}  // namespace

void emit_report(const CvReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
    ReportSink sink(path);
    std::ostream& out = sink.stream();
    if (format == ReportFormat::csv) {
        out << "# graphhd cv report v1\n";
        out << "# dataset=" << report.dataset_name << " dim=" << report.encoder.dim
            << " pagerank_iterations=" << report.encoder.pagerank_iterations
            << " damping=" << fmt_double(report.encoder.damping)
            << " seed=" << report.encoder.seed << " folds=" << report.cv.folds
            << " repetitions=" << report.cv.repetitions << " cv_seed=" << report.cv.seed
            << " stratified=" << (report.cv.stratified ? "true" : "false") << "\n";
        out << "method,dataset,repetition,fold,test_size,accuracy,train_time_s,test_time_s\n";
        for (const FoldRecord& r : report.folds) {
            out << "GraphHD," << report.dataset_name << ',' << r.repetition << ',' << r.fold
                << ',' << r.test_size << ',' << fmt_double(r.accuracy) << ','
                << fmt_double(r.train_time_s) << ',' << fmt_double(r.test_time_s) << "\n";
        }
    } else {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["kind"] = "cv_report";
        doc["method"] = "GraphHD";
        doc["dataset"] = report.dataset_name;
        doc["encoder"] = encoder_json(report.encoder);
        doc["cross_validation"] = cv_json(report.cv);
        doc["summary"] = {
            {"mean_accuracy", report.mean_accuracy()},
            {"std_accuracy", report.std_accuracy()},
            {"mean_train_time_per_fold_s", report.mean_train_time_per_fold()},
            {"mean_inference_time_per_graph_s", report.mean_inference_time_per_graph()}};
        nlohmann::json folds = nlohmann::json::array();
        for (const FoldRecord& r : report.folds) {
            folds.push_back({{"repetition", r.repetition},
                             {"fold", r.fold},
                             {"test_size", r.test_size},
                             {"accuracy", r.accuracy},
                             {"train_time_s", r.train_time_s},
                             {"test_time_s", r.test_time_s}});
        }
        doc["folds"] = std::move(folds);
        out << doc.dump(2) << "\n";
    }
    sink.finish(path);
}

void emit_report(const ScalingReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
    ReportSink sink(path);
    std::ostream& out = sink.stream();
    if (format == ReportFormat::csv) {
        out << "# graphhd scaling report v1\n";
        out << "# dim=" << report.encoder.dim
            << " pagerank_iterations=" << report.encoder.pagerank_iterations
            << " damping=" << fmt_double(report.encoder.damping)
            << " seed=" << report.encoder.seed << " folds=" << report.cv.folds
            << " repetitions=" << report.cv.repetitions << " cv_seed=" << report.cv.seed
            << " stratified=" << (report.cv.stratified ? "true" : "false")
            << " edge_prob=" << fmt_double(report.edge_prob) << " graphs=" << report.n_graphs
            << " classes=" << report.n_classes << " gen_seed=" << report.gen_seed << "\n";
        out << "method,n_vertices,mean_edges,mean_accuracy,"
               "mean_train_time_per_fold_s,mean_inference_time_per_graph_s\n";
        for (const ScalingPoint& p : report.points) {
            out << "GraphHD," << p.n_vertices << ',' << fmt_double(p.mean_edges) << ','
                << fmt_double(p.mean_accuracy) << ','
                << fmt_double(p.mean_train_time_per_fold_s) << ','
                << fmt_double(p.mean_inference_time_per_graph_s) << "\n";
        }
    } else {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["kind"] = "scaling_report";
        doc["method"] = "GraphHD";
        doc["encoder"] = encoder_json(report.encoder);
        doc["cross_validation"] = cv_json(report.cv);
        doc["generator"] = {{"edge_prob", report.edge_prob},
                            {"n_graphs", report.n_graphs},
                            {"n_classes", report.n_classes},
                            {"seed", report.gen_seed}};
        nlohmann::json points = nlohmann::json::array();
        for (const ScalingPoint& p : report.points) {
            points.push_back({{"n_vertices", p.n_vertices},
                              {"mean_edges", p.mean_edges},
                              {"mean_accuracy", p.mean_accuracy},
                              {"mean_train_time_per_fold_s", p.mean_train_time_per_fold_s},
                              {"mean_inference_time_per_graph_s",
                               p.mean_inference_time_per_graph_s}});
        }
        doc["points"] = std::move(points);
        out << doc.dump(2) << "\n";
    }
    sink.finish(path);
}

}  // namespace graphhd
