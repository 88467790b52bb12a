#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "graphhd/model.hpp"

// Versioned little-endian binary container, layout in docs/model_format.md.
// The trailing checksum is FNV-1a 64 over every preceding byte.

namespace graphhd {

namespace {

constexpr char kMagic[4] = {'G', 'H', 'D', 'M'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kFlagEmbeddedBasis = 1u << 0;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

class ByteReader {
public:
    explicit ByteReader(std::string bytes) : bytes_(std::move(bytes)) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(byte()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(byte()) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }

    void raw(char* dst, std::size_t n) {
        need(n);
        bytes_.copy(dst, n, pos_);
        pos_ += n;
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }
    const std::string& bytes() const { return bytes_; }

private:
    unsigned char byte() { return static_cast<unsigned char>(bytes_[pos_++]); }
    void need(std::size_t n) const {
        if (bytes_.size() - pos_ < n) throw ModelIoError("model file truncated");
    }

    std::string bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

void save_model(const Model& model, const std::filesystem::path& path,
                const BasisSet* embed_basis) {
    if (model.k < 1 || model.class_vectors.size() != static_cast<std::size_t>(model.k)) {
        throw ConfigError("save_model: model has no class vectors");
    }
    if (embed_basis &&
        (embed_basis->seed() != model.config.seed || embed_basis->dim() != model.config.dim)) {
        throw ConfigError("save_model: embedded basis does not match the model config");
    }

    std::string out;
    out.append(kMagic, sizeof(kMagic));
    put_u32(out, kVersion);
    put_u32(out, embed_basis ? kFlagEmbeddedBasis : 0u);
    put_u32(out, static_cast<std::uint32_t>(model.config.dim));
    put_u32(out, static_cast<std::uint32_t>(model.k));
    put_u64(out, model.config.seed);
    put_u32(out, static_cast<std::uint32_t>(model.config.pagerank_iterations));
    put_f64(out, model.config.damping);
    put_u64(out, model.train_graph_count);
    put_u64(out, model.skipped_edgeless);

    for (const Accumulator& acc : model.class_vectors) {
        if (acc.dim() != model.config.dim) {
            throw ConfigError("save_model: class vector dim mismatch");
        }
        put_u64(out, acc.n_added());
        for (std::int32_t c : acc.counts()) {
            put_u32(out, static_cast<std::uint32_t>(c));
        }
    }

    if (embed_basis) {
        const std::size_t count = embed_basis->materialized();
        const std::size_t bytes_per_vector = (embed_basis->dim() + 7) / 8;
        put_u64(out, count);
        for (std::size_t i = 0; i < count; ++i) {
            const Hypervector& h = embed_basis->at(i);
            std::string packed(bytes_per_vector, '\0');
            for (std::size_t j = 0; j < h.dim(); ++j) {
                if (h[j] > 0) packed[j / 8] |= static_cast<char>(1u << (j % 8));
            }
            out += packed;
        }
    }

    put_u64(out, fnv1a(out));

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !file.write(out.data(), static_cast<std::streamsize>(out.size()))) {
        throw ModelIoError("cannot write model file " + path.string());
    }
}

LoadedModel load_model(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ModelIoError("cannot open model file " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());

    if (bytes.size() < sizeof(kMagic) + 8 || bytes.compare(0, 4, kMagic, 4) != 0) {
        throw ModelIoError("not a graphhd model file: " + path.string());
    }

    // Integrity first: no byte of the payload is interpreted before the
    // trailing checksum passes.
    const std::string payload = bytes.substr(0, bytes.size() - 8);
    {
        std::uint64_t stored_checksum = 0;
        for (int i = 0; i < 8; ++i) {
            stored_checksum |= static_cast<std::uint64_t>(static_cast<unsigned char>(
                                   bytes[bytes.size() - 8 + static_cast<std::size_t>(i)]))
                               << (8 * i);
        }
        if (stored_checksum != fnv1a(payload)) {
            throw ModelIoError("model file checksum mismatch (corrupt or truncated)");
        }
    }

    ByteReader reader(std::move(bytes));
    char magic[4];
    reader.raw(magic, 4);
    const std::uint32_t version = reader.u32();
    if (version != kVersion) {
        throw ModelIoError("unsupported model format version " + std::to_string(version));
    }
    const std::uint32_t flags = reader.u32();

    Model model;
    model.config.dim = reader.u32();
    model.k = static_cast<int>(reader.u32());
    model.config.seed = reader.u64();
    model.config.pagerank_iterations = static_cast<int>(reader.u32());
    model.config.damping = reader.f64();
    model.train_graph_count = reader.u64();
    model.skipped_edgeless = reader.u64();
    if (model.config.dim == 0 || model.k < 1) {
        throw ModelIoError("model file carries invalid dim/class count");
    }

    for (int c = 0; c < model.k; ++c) {
        const std::uint64_t n_added = reader.u64();
        std::vector<std::int32_t> counts(model.config.dim);
        for (std::size_t j = 0; j < counts.size(); ++j) {
            counts[j] = static_cast<std::int32_t>(reader.u32());
        }
        try {
            model.class_vectors.push_back(Accumulator::restore(std::move(counts), n_added));
        } catch (const Error& e) {
            throw ModelIoError(std::string("model file class vector invalid: ") + e.what());
        }
    }

    std::vector<Hypervector> preloaded;
    if (flags & kFlagEmbeddedBasis) {
        const std::uint64_t count = reader.u64();
        const std::size_t bytes_per_vector = (model.config.dim + 7) / 8;
        for (std::uint64_t i = 0; i < count; ++i) {
            std::string packed(bytes_per_vector, '\0');
            reader.raw(packed.data(), bytes_per_vector);
            std::vector<std::int8_t> elems(model.config.dim);
            for (std::size_t j = 0; j < elems.size(); ++j) {
                elems[j] = (packed[j / 8] >> (j % 8)) & 1 ? std::int8_t{+1} : std::int8_t{-1};
            }
            preloaded.push_back(Hypervector::from_elements(std::move(elems)));
        }
    }

    reader.u64();  // checksum, already verified
    if (reader.remaining() != 0) throw ModelIoError("trailing bytes in model file");

    BasisSet basis(model.config.seed, model.config.dim, std::move(preloaded));
    return LoadedModel{std::move(model), std::move(basis)};
}

}  // namespace graphhd
