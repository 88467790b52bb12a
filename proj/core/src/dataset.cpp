#include "graphhd/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <string_view>
#include <utility>

#include "graphhd/rng.hpp"

namespace graphhd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_ll(std::string_view s, long long& out) {
    s = trim(s);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

// Line-oriented reader that tolerates CRLF and blank lines while keeping
// physical line numbers for error messages.
class LineReader {
public:
    explicit LineReader(const std::filesystem::path& path)
        : path_(path.string()), in_(path) {
        if (!in_) throw DataFormatError("cannot open " + path_);
    }

    bool next(std::string_view& out) {
        while (std::getline(in_, buf_)) {
            ++line_no_;
            const std::string_view line = trim(buf_);
            if (line.empty()) continue;
            out = line;
            return true;
        }
        return false;
    }

    std::size_t line_no() const noexcept { return line_no_; }
    const std::string& path() const noexcept { return path_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw DataFormatError(path_ + " line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::string path_;
    std::ifstream in_;
    std::string buf_;
    std::size_t line_no_ = 0;
};

}  // namespace

Dataset load_tudataset(const std::filesystem::path& dir, const std::string& name) {
    const auto a_path = dir / (name + "_A.txt");
    const auto indicator_path = dir / (name + "_graph_indicator.txt");
    const auto labels_path = dir / (name + "_graph_labels.txt");

    // Graph membership of every global vertex (1-based file ids).
    std::vector<std::size_t> graph_of;    // global vertex -> graph index (0-based)
    std::vector<VertexId> local_index;    // global vertex -> per-graph vertex index
    std::vector<VertexId> vertices_per_graph;
    {
        LineReader reader(indicator_path);
        std::string_view line;
        while (reader.next(line)) {
            long long gid;
            if (!parse_ll(line, gid) || gid < 1) {
                reader.fail("expected a 1-based graph id, got '" + std::string(line) + "'");
            }
            const std::size_t g = static_cast<std::size_t>(gid - 1);
            if (g >= vertices_per_graph.size()) vertices_per_graph.resize(g + 1, 0);
            graph_of.push_back(g);
            local_index.push_back(vertices_per_graph[g]++);
        }
    }
    const std::size_t graph_count = vertices_per_graph.size();
    if (graph_count == 0) {
        throw DataFormatError(indicator_path.string() + ": no vertices listed");
    }

    // Class labels, densified to {0,...,k-1} preserving ascending value order.
    std::vector<long long> raw_labels;
    {
        LineReader reader(labels_path);
        std::string_view line;
        while (reader.next(line)) {
            long long value;
            if (!parse_ll(line, value)) {
                reader.fail("expected an integer class label, got '" + std::string(line) + "'");
            }
            raw_labels.push_back(value);
        }
    }
    if (raw_labels.size() != graph_count) {
        throw DataFormatError(labels_path.string() + ": label count (" +
                              std::to_string(raw_labels.size()) + ") != graph count (" +
                              std::to_string(graph_count) + ")");
    }
    std::map<long long, int> dense_of;
    for (long long v : raw_labels) dense_of.emplace(v, 0);
    std::vector<long long> label_values;
    label_values.reserve(dense_of.size());
    for (auto& [value, dense] : dense_of) {
        dense = static_cast<int>(label_values.size());
        label_values.push_back(value);
    }

    // Edges, grouped per graph in local vertex indices.
    std::vector<std::vector<Edge>> edges_per_graph(graph_count);
    {
        LineReader reader(a_path);
        std::string_view line;
        while (reader.next(line)) {
            const auto comma = line.find(',');
            long long u_raw, v_raw;
            if (comma == std::string_view::npos || !parse_ll(line.substr(0, comma), u_raw) ||
                !parse_ll(line.substr(comma + 1), v_raw)) {
                reader.fail("expected 'i, j', got '" + std::string(line) + "'");
            }
            if (u_raw < 1 || v_raw < 1 ||
                static_cast<std::size_t>(u_raw) > graph_of.size() ||
                static_cast<std::size_t>(v_raw) > graph_of.size()) {
                reader.fail("vertex id out of range in edge (" + std::to_string(u_raw) +
                            ", " + std::to_string(v_raw) + ")");
            }
            const std::size_t u = static_cast<std::size_t>(u_raw - 1);
            const std::size_t v = static_cast<std::size_t>(v_raw - 1);
            if (graph_of[u] != graph_of[v]) {
                reader.fail("edge (" + std::to_string(u_raw) + ", " + std::to_string(v_raw) +
                            ") connects different graphs (" +
                            std::to_string(graph_of[u] + 1) + " vs " +
                            std::to_string(graph_of[v] + 1) + ")");
            }
            edges_per_graph[graph_of[u]].emplace_back(local_index[u], local_index[v]);
        }
    }

    Dataset ds;
    ds.name = name;
    ds.graphs.reserve(graph_count);
    ds.labels.reserve(graph_count);
    for (std::size_t g = 0; g < graph_count; ++g) {
        ds.graphs.push_back(
            Graph::from_edges(vertices_per_graph[g], std::move(edges_per_graph[g])));
        ds.labels.push_back(dense_of.at(raw_labels[g]));
        ds.max_vertices = std::max(ds.max_vertices, vertices_per_graph[g]);
    }
    ds.class_count = static_cast<int>(label_values.size());
    ds.label_values = std::move(label_values);
    return ds;
}

void export_tudataset(const Dataset& ds, const std::filesystem::path& dir,
                      const std::string& name) {
    std::filesystem::create_directories(dir);
    const auto open = [](const std::filesystem::path& p) {
        std::ofstream out(p);
        if (!out) throw DataFormatError("cannot write " + p.string());
        return out;
    };

    // Global 1-based vertex ids: graphs laid out consecutively.
    std::vector<std::size_t> offset(ds.size() + 1, 0);
    for (std::size_t g = 0; g < ds.size(); ++g) {
        offset[g + 1] = offset[g] + ds.graphs[g].vertex_count();
    }

    auto a_out = open(dir / (name + "_A.txt"));
    for (std::size_t g = 0; g < ds.size(); ++g) {
        const auto& adj = ds.graphs[g].adjacency();
        for (VertexId u = 0; u < ds.graphs[g].vertex_count(); ++u) {
            for (VertexId v : adj[u]) {
                a_out << offset[g] + u + 1 << ", " << offset[g] + v + 1 << '\n';
            }
        }
    }

    auto indicator_out = open(dir / (name + "_graph_indicator.txt"));
    for (std::size_t g = 0; g < ds.size(); ++g) {
        for (VertexId u = 0; u < ds.graphs[g].vertex_count(); ++u) {
            indicator_out << g + 1 << '\n';
        }
    }

    auto labels_out = open(dir / (name + "_graph_labels.txt"));
    for (int label : ds.labels) {
        labels_out << ds.label_values[static_cast<std::size_t>(label)] << '\n';
    }
}

DatasetStats dataset_stats(const Dataset& ds) {
    if (ds.graphs.empty()) throw Error("dataset_stats: empty dataset");
    DatasetStats s;
    s.graph_count = ds.size();
    s.class_count = ds.class_count;
    s.class_histogram.assign(static_cast<std::size_t>(ds.class_count), 0);
    double vertices = 0.0, edges = 0.0;
    for (const Graph& g : ds.graphs) {
        vertices += g.vertex_count();
        edges += static_cast<double>(g.edge_count());
    }
    for (int label : ds.labels) s.class_histogram[static_cast<std::size_t>(label)]++;
    s.mean_vertices = vertices / static_cast<double>(ds.size());
    s.mean_edges = edges / static_cast<double>(ds.size());
    return s;
}

Dataset generate_er_dataset(VertexId n_vertices, std::size_t n_graphs, int n_classes,
                            double edge_prob, std::uint64_t seed) {
    if (n_vertices == 0) throw ConfigError("generate_er_dataset: n_vertices must be >= 1");
    if (n_graphs == 0) throw ConfigError("generate_er_dataset: n_graphs must be >= 1");
    if (n_classes < 1) throw ConfigError("generate_er_dataset: n_classes must be >= 1");
    if (n_graphs % static_cast<std::size_t>(n_classes) != 0) {
        throw ConfigError("generate_er_dataset: n_graphs (" + std::to_string(n_graphs) +
                          ") not divisible by n_classes (" + std::to_string(n_classes) + ")");
    }
    if (!(edge_prob > 0.0 && edge_prob < 1.0)) {
        throw ConfigError("generate_er_dataset: edge_prob must be in (0,1)");
    }

    Dataset ds;
    ds.name = "ER_n" + std::to_string(n_vertices);
    ds.class_count = n_classes;
    ds.max_vertices = n_vertices;
    for (int c = 0; c < n_classes; ++c) ds.label_values.push_back(c);
    ds.graphs.reserve(n_graphs);
    ds.labels.reserve(n_graphs);
    for (std::size_t i = 0; i < n_graphs; ++i) {
        SplitMix64 gen(rng::derive_key(seed, rng::kErGraphStream, i));
        std::vector<Edge> edges;
        for (VertexId u = 0; u + 1 < n_vertices; ++u) {
            for (VertexId v = u + 1; v < n_vertices; ++v) {
                if (gen.next_unit() < edge_prob) edges.emplace_back(u, v);
            }
        }
        ds.graphs.push_back(Graph::from_edges(n_vertices, std::move(edges)));
        ds.labels.push_back(static_cast<int>(i % static_cast<std::size_t>(n_classes)));
    }
    return ds;
}

}  // namespace graphhd
