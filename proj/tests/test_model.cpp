#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numeric>

#include "graphhd/model.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace graphhd;

namespace {

EncoderConfig cfg_of(std::size_t dim, std::uint64_t seed) {
    EncoderConfig cfg;
    cfg.dim = dim;
    cfg.seed = seed;
    return cfg;
}

Dataset two_graph_dataset() {
    Dataset ds;
    ds.name = "pair";
    ds.graphs = {fixtures::triangle(), fixtures::star(4)};
    ds.labels = {0, 1};
    ds.class_count = 2;
    ds.label_values = {0, 1};
    ds.max_vertices = 5;
    return ds;
}

}  // namespace

TEST_CASE("one graph per class: class vector equals the graph hypervector") {
    const EncoderConfig cfg = cfg_of(256, 8);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = two_graph_dataset();
    const Model model = train(ds, basis, cfg);

    REQUIRE(model.k == 2);
    for (std::size_t c = 0; c < 2; ++c) {
        const Hypervector expected =
            normalize(encode_graph(ds.graphs[c], basis, cfg), cfg.seed);
        CHECK(model.class_vectors[c].n_added() == 1);
        for (std::size_t j = 0; j < cfg.dim; ++j) {
            CHECK(model.class_vectors[c].counts()[j] == expected[j]);
        }
    }
    CHECK(model.train_graph_count == 2);
    CHECK(model.skipped_edgeless == 0);
}

TEST_CASE("duplicate training graphs double the counts") {
    const EncoderConfig cfg = cfg_of(128, 5);
    BasisSet basis(cfg.seed, cfg.dim);
    Dataset ds = two_graph_dataset();
    ds.graphs.push_back(ds.graphs[0]);
    ds.labels.push_back(0);

    const Model model = train(ds, basis, cfg);
    const Hypervector ghv = normalize(encode_graph(ds.graphs[0], basis, cfg), cfg.seed);
    CHECK(model.class_vectors[0].n_added() == 2);
    for (std::size_t j = 0; j < cfg.dim; ++j) {
        CHECK(model.class_vectors[0].counts()[j] == 2 * ghv[j]);
    }
}

TEST_CASE("training matches the scalar re-implementation element by element") {
    const EncoderConfig cfg = cfg_of(256, 77);
    BasisSet basis(cfg.seed, cfg.dim);
    // Tie-free graphs: exact centrality ties are broken per-route and would
    // make an exact cross-implementation comparison meaningless.
    const Dataset ds = fixtures::generic_dataset(10, 31);
    std::vector<std::size_t> all(ds.size());
    std::iota(all.begin(), all.end(), std::size_t{0});

    const Model model = train(ds, all, basis, cfg);
    const auto naive = oracle::naive_train(ds, all, basis, cfg.seed,
                                           cfg.pagerank_iterations, cfg.damping);
    for (std::size_t c = 0; c < 2; ++c) {
        CHECK(model.class_vectors[c].n_added() == naive.trained_per_class[c]);
        for (std::size_t j = 0; j < cfg.dim; ++j) {
            CHECK(model.class_vectors[c].counts()[j] == naive.class_counts[c][j]);
        }
    }
}

TEST_CASE("full pipeline equals the naive oracle at d=64 on tiny sets") {
    const EncoderConfig cfg = cfg_of(64, 123);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = fixtures::generic_dataset(8, 9);
    std::vector<std::size_t> train_idx{0, 1, 2, 3, 4, 5};
    const Model model = train(ds, train_idx, basis, cfg);
    const auto naive = oracle::naive_train(ds, train_idx, basis, cfg.seed,
                                           cfg.pagerank_iterations, cfg.damping);

    for (std::size_t i = 0; i < ds.size(); ++i) {
        const Prediction p = predict(ds.graphs[i], model, basis);
        const int expected = oracle::naive_predict(ds.graphs[i], naive, basis, cfg.seed,
                                                   cfg.pagerank_iterations, cfg.damping);
        CHECK(p.label == expected);
    }
}

TEST_CASE("prediction on sole-member classes returns similarity exactly 1") {
    const EncoderConfig cfg = cfg_of(10000, 15);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = two_graph_dataset();
    const Model model = train(ds, basis, cfg);

    for (std::size_t i = 0; i < 2; ++i) {
        const Prediction p = predict(ds.graphs[i], model, basis);
        CHECK(p.label == static_cast<int>(i));
        CHECK(p.similarities[i] == 1.0);
        CHECK(!p.used_fallback);
    }
}

TEST_CASE("argmax over opposite class vectors, deterministic repeats") {
    const EncoderConfig cfg = cfg_of(512, 3);
    BasisSet basis(cfg.seed, cfg.dim);

    // Build a 2-class model by hand: C_0 = x, C_1 = -x.
    Model model;
    model.config = cfg;
    model.k = 2;
    const Graph g = fixtures::triangle();
    const Hypervector x = normalize(encode_graph(g, basis, cfg), cfg.seed);
    Accumulator c0(cfg.dim), c1(cfg.dim);
    c0.add(x);
    c1.add(negate(x));
    model.class_vectors = {c0, c1};

    const Prediction p = predict(g, model, basis);
    CHECK(p.label == 0);
    CHECK(p.similarities[0] == 1.0);
    CHECK(p.similarities[1] == -1.0);

    const Prediction q = predict(g, model, basis);
    CHECK(q.label == p.label);
    CHECK(q.similarities == p.similarities);
}

TEST_CASE("training-set accuracy on the separable synthetic set exceeds 0.9") {
    EncoderConfig cfg;  // d = 10000
    cfg.seed = 19;
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = fixtures::separable_dataset(10, 77);  // 20 graphs
    const Model model = train(ds, basis, cfg);

    std::size_t correct = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (predict(ds.graphs[i], model, basis).label == ds.labels[i]) ++correct;
    }
    CHECK(static_cast<double>(correct) / static_cast<double>(ds.size()) > 0.9);
}

TEST_CASE("class-order independence: permuting classes permutes predictions") {
    const EncoderConfig cfg = cfg_of(256, 41);
    BasisSet basis(cfg.seed, cfg.dim);
    Dataset ds = fixtures::separable_dataset(4, 3);

    Dataset swapped = ds;
    for (int& label : swapped.labels) label = 1 - label;

    const Model m0 = train(ds, basis, cfg);
    const Model m1 = train(swapped, basis, cfg);
    for (const Graph& g : ds.graphs) {
        const Prediction p0 = predict(g, m0, basis);
        const Prediction p1 = predict(g, m1, basis);
        CHECK(p0.label == 1 - p1.label);
        CHECK(p0.similarities[0] == p1.similarities[1]);
        CHECK(p0.similarities[1] == p1.similarities[0]);
    }
}

TEST_CASE("edgeless graphs: skipped in training, majority fallback at inference") {
    const EncoderConfig cfg = cfg_of(128, 6);
    BasisSet basis(cfg.seed, cfg.dim);
    Dataset ds = fixtures::separable_dataset(3, 8);  // class 1 has 3 graphs
    ds.graphs.push_back(Graph::from_edges(4, {}));
    ds.labels.push_back(0);
    ds.graphs.push_back(fixtures::triangle());
    ds.labels.push_back(0);

    const Model model = train(ds, basis, cfg);
    CHECK(model.skipped_edgeless == 1);
    CHECK(model.class_vectors[0].n_added() == 4);  // 3 + 1 extra, edgeless dropped
    CHECK(model.majority_class() == 0);

    const Prediction p = predict(Graph::from_edges(7, {}), model, basis);
    CHECK(p.used_fallback);
    CHECK(p.label == 0);
}

TEST_CASE("training errors: empty set, missing class, basis mismatch") {
    const EncoderConfig cfg = cfg_of(64, 2);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = two_graph_dataset();

    CHECK_THROWS_AS(train(ds, std::vector<std::size_t>{}, basis, cfg), ConfigError);
    CHECK_THROWS_WITH_AS(train(ds, std::vector<std::size_t>{0}, basis, cfg),
                         doctest::Contains("class 1"), ConfigError);

    BasisSet wrong_seed(99, cfg.dim);
    CHECK_THROWS_AS(train(ds, wrong_seed, cfg), ConfigError);
}

TEST_CASE("threaded training equals single-threaded exactly") {
    const EncoderConfig cfg = cfg_of(256, 10);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = fixtures::separable_dataset(6, 21);
    const Model serial = train(ds, basis, cfg, 1);
    const Model threaded = train(ds, basis, cfg, 4);
    CHECK(serial == threaded);
}

TEST_CASE("model save/load round-trip preserves predictions bit for bit") {
    const EncoderConfig cfg = cfg_of(512, 99);
    BasisSet basis(cfg.seed, cfg.dim);
    const Dataset ds = fixtures::separable_dataset(4, 13);
    const Model model = train(ds, basis, cfg);

    fixtures::TempDir dir("model");
    const auto path = dir.path() / "m.ghdm";

    SUBCASE("plain file regenerates the basis from the seed") {
        save_model(model, path);
        const LoadedModel loaded = load_model(path);
        CHECK(loaded.model == model);
        CHECK(loaded.basis.seed() == cfg.seed);
        for (const Graph& g : ds.graphs) {
            const Prediction a = predict(g, model, basis);
            const Prediction b = predict(g, loaded.model, loaded.basis);
            CHECK(a.label == b.label);
            CHECK(a.similarities == b.similarities);
        }
    }

    SUBCASE("embedded basis round-trips") {
        save_model(model, path, &basis);
        const LoadedModel loaded = load_model(path);
        CHECK(loaded.model == model);
        CHECK(loaded.basis.materialized() == basis.materialized());
        for (std::size_t i = 0; i < basis.materialized(); ++i) {
            CHECK(loaded.basis.at(i) == basis.at(i));
        }
    }

    SUBCASE("corrupting one payload byte trips the checksum") {
        save_model(model, path);
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(64);
        char byte;
        f.seekg(64);
        f.read(&byte, 1);
        byte = static_cast<char>(byte ^ 0x20);
        f.seekp(64);
        f.write(&byte, 1);
        f.close();
        CHECK_THROWS_WITH_AS(load_model(path), doctest::Contains("checksum"), ModelIoError);
    }

    SUBCASE("truncation yields a descriptive error") {
        save_model(model, path);
        const auto size = std::filesystem::file_size(path);
        std::filesystem::resize_file(path, size - 9);
        CHECK_THROWS_AS(load_model(path), ModelIoError);
    }

    SUBCASE("wrong magic and wrong version are rejected") {
        {
            std::ofstream f(path, std::ios::binary);
            f << "NOPEnope";
        }
        CHECK_THROWS_AS(load_model(path), ModelIoError);
    }

    SUBCASE("missing file is an error") {
        CHECK_THROWS_AS(load_model(dir.path() / "absent.ghdm"), ModelIoError);
    }
}

TEST_CASE("a model from one dimension cannot serve another") {
    const EncoderConfig cfg64 = cfg_of(64, 7);
    BasisSet basis64(cfg64.seed, cfg64.dim);
    const Model model = train(two_graph_dataset(), basis64, cfg64);

    BasisSet basis128(7, 128);
    CHECK_THROWS_AS(predict(fixtures::triangle(), model, basis128), ConfigError);
}
