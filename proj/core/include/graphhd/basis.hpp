#pragma once

// Seeded basis hypervectors. Vector i is a pure function of (seed, i, dim):
// regenerating with the same seed yields bit-identical vectors, in any order
// of first access. Vectors materialize lazily because the required basis size
// equals the largest vertex count in the dataset, unknown until ingestion.

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "graphhd/hypervector.hpp"

namespace graphhd {

class BasisSet {
public:
    BasisSet(std::uint64_t seed, std::size_t dim) : seed_(seed), dim_(dim) {
        if (dim == 0) throw DimensionError("basis dimension must be >= 1");
    }

    // Deserialization path: seed the cache with already-materialized vectors
    // (model files with an embedded basis). Indices beyond the preload still
    // extend lazily from (seed, index).
    BasisSet(std::uint64_t seed, std::size_t dim, std::vector<Hypervector> preloaded)
        : BasisSet(seed, dim) {
        for (Hypervector& h : preloaded) {
            if (h.dim() != dim) throw DimensionError("preloaded basis vector dim mismatch");
            vectors_.push_back(std::move(h));
        }
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t dim() const noexcept { return dim_; }

    // Basis vector by index, materializing on demand. Safe under concurrent
    // first access; returned references stay valid for the BasisSet lifetime
    // (deque storage never relocates elements).
    const Hypervector& at(std::size_t index) const {
        {
            std::shared_lock lock(*mutex_);
            if (index < vectors_.size()) return vectors_[index];
        }
        std::unique_lock lock(*mutex_);
        while (vectors_.size() <= index) {
            vectors_.push_back(make_vector(vectors_.size()));
        }
        return vectors_[index];
    }

    const Hypervector& operator[](std::size_t index) const { return at(index); }

    // Materialize vectors [0, count) up front so later at() calls are reads.
    void ensure(std::size_t count) const {
        std::unique_lock lock(*mutex_);
        while (vectors_.size() < count) {
            vectors_.push_back(make_vector(vectors_.size()));
        }
    }

    std::size_t materialized() const {
        std::shared_lock lock(*mutex_);
        return vectors_.size();
    }

private:
    Hypervector make_vector(std::size_t index) const {
        SplitMix64 gen(rng::derive_key(seed_, rng::kBasisStream, index));
        std::vector<std::int8_t> elems(dim_);
        std::size_t j = 0;
        while (j < dim_) {
            std::uint64_t word = gen.next();
            const std::size_t take = dim_ - j < 64 ? dim_ - j : 64;
            for (std::size_t b = 0; b < take; ++b, ++j) {
                elems[j] = (word >> b) & 1u ? std::int8_t{+1} : std::int8_t{-1};
            }
        }
        return Hypervector(Hypervector::unchecked_t{}, std::move(elems));
    }

    std::uint64_t seed_;
    std::size_t dim_;
    mutable std::deque<Hypervector> vectors_;
    mutable std::unique_ptr<std::shared_mutex> mutex_ = std::make_unique<std::shared_mutex>();
};

// i.i.d. uniform bipolar basis with the first `count` vectors materialized.
inline BasisSet generate_basis(std::uint64_t seed, std::size_t dim, std::size_t count) {
    BasisSet basis(seed, dim);
    basis.ensure(count);
    return basis;
}

}  // namespace graphhd
