#pragma once

// Bipolar hypervectors and the HDC operation set: binding (element-wise
// product), bundling (integer accumulation + majority sign), permutation
// (cyclic rotation) and cosine similarity. Elements are stored as int8 in
// {-1,+1}; bundles are kept as int32 counters so no majority information is
// lost until normalization.

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphhd/error.hpp"
#include "graphhd/rng.hpp"

namespace graphhd {

class Accumulator;

// Fixed-dimension bipolar vector, every element exactly -1 or +1.
class Hypervector {
public:
    // All-ones vector: the binding identity.
    explicit Hypervector(std::size_t dim) : elems_(check_dim(dim), +1) {}

    // Validating constructor for externally produced element arrays.
    static Hypervector from_elements(std::vector<std::int8_t> elems) {
        check_dim(elems.size());
        for (std::int8_t e : elems) {
            if (e != -1 && e != +1) {
                throw Error("hypervector element outside {-1,+1}");
            }
        }
        return Hypervector(unchecked_t{}, std::move(elems));
    }

    std::size_t dim() const noexcept { return elems_.size(); }
    std::int8_t operator[](std::size_t i) const noexcept { return elems_[i]; }
    const std::int8_t* data() const noexcept { return elems_.data(); }
    std::span<const std::int8_t> elements() const noexcept { return elems_; }

    bool operator==(const Hypervector&) const = default;

private:
    struct unchecked_t {};
    Hypervector(unchecked_t, std::vector<std::int8_t> elems)
        : elems_(std::move(elems)) {}

    static std::size_t check_dim(std::size_t dim) {
        if (dim == 0) throw DimensionError("hypervector dimension must be >= 1");
        return dim;
    }

    friend class Accumulator;
    friend class BasisSet;
    friend Hypervector bind(const Hypervector&, const Hypervector&);
    friend Hypervector permute(const Hypervector&, long long);
    friend Hypervector negate(const Hypervector&);
    friend Hypervector normalize(const Accumulator&, std::uint64_t);

    std::vector<std::int8_t> elems_;
};

// Integer-valued bundle: the pre-normalization form of a majority vote.
// counts[j] is the running signed sum of element j over everything added;
// n_added tracks how many bipolar vectors went in.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : counts_(dim, 0) {
        if (dim == 0) throw DimensionError("accumulator dimension must be >= 1");
    }

    // Rebuild from serialized state, enforcing the bundle invariants:
    // |counts[j]| <= n_added and counts[j] == n_added (mod 2).
    static Accumulator restore(std::vector<std::int32_t> counts, std::uint64_t n_added) {
        Accumulator acc(counts.size());
        for (std::int32_t c : counts) {
            const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -static_cast<std::int64_t>(c) : c);
            if (mag > n_added || (mag & 1) != (n_added & 1)) {
                throw Error("accumulator restore: counts inconsistent with n_added");
            }
        }
        acc.counts_ = std::move(counts);
        acc.n_added_ = n_added;
        return acc;
    }

    std::size_t dim() const noexcept { return counts_.size(); }
    std::uint64_t n_added() const noexcept { return n_added_; }
    std::span<const std::int32_t> counts() const noexcept { return counts_; }

    // Bundle one hypervector: counts[j] += h[j].
    void add(const Hypervector& h) {
        require_same_dim(h.dim());
        const std::int8_t* p = h.data();
        std::int32_t* c = counts_.data();
        for (std::size_t j = 0; j < counts_.size(); ++j) c[j] += p[j];
        ++n_added_;
    }

    // Bundle bind(a, b) without materializing the bound vector.
    // Equivalent to add(bind(a, b)); this is the encoder's hot loop.
    void add_product(const Hypervector& a, const Hypervector& b) {
        require_same_dim(a.dim());
        require_same_dim(b.dim());
        const std::int8_t* pa = a.data();
        const std::int8_t* pb = b.data();
        std::int32_t* c = counts_.data();
        for (std::size_t j = 0; j < counts_.size(); ++j) {
            c[j] += static_cast<std::int32_t>(pa[j]) * static_cast<std::int32_t>(pb[j]);
        }
        ++n_added_;
    }

    // Element-wise merge of a partial bundle. Associative and commutative,
    // which is what makes partitioned parallel bundling exact.
    void merge(const Accumulator& other) {
        require_same_dim(other.dim());
        const std::int32_t* o = other.counts_.data();
        std::int32_t* c = counts_.data();
        for (std::size_t j = 0; j < counts_.size(); ++j) c[j] += o[j];
        n_added_ += other.n_added_;
    }

    bool operator==(const Accumulator&) const = default;

private:
    void require_same_dim(std::size_t d) const {
        if (d != counts_.size()) {
            throw DimensionError("accumulator/operand dimension mismatch: " +
                                 std::to_string(counts_.size()) + " vs " +
                                 std::to_string(d));
        }
    }

    friend Hypervector normalize(const Accumulator&, std::uint64_t);

    std::vector<std::int32_t> counts_;
    std::uint64_t n_added_ = 0;
};

// Deterministic tie sign for zero counters, keyed on (seed, element index).
inline std::int8_t tie_sign(std::uint64_t seed, std::size_t element) noexcept {
    return (rng::derive_key(seed, rng::kTieBreakStream, element) & 1u) ? std::int8_t{+1}
                                                                       : std::int8_t{-1};
}

// Element-wise product. Commutative, associative, self-inverse; the all-ones
// vector is the identity.
inline Hypervector bind(const Hypervector& a, const Hypervector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("bind: dimension mismatch: " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    }
    std::vector<std::int8_t> out(a.dim());
    const std::int8_t* pa = a.data();
    const std::int8_t* pb = b.data();
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = static_cast<std::int8_t>(pa[j] * pb[j]);
    }
    return Hypervector(Hypervector::unchecked_t{}, std::move(out));
}

inline Hypervector negate(const Hypervector& h) {
    std::vector<std::int8_t> out(h.dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = static_cast<std::int8_t>(-h.elems_[j]);
    }
    return Hypervector(Hypervector::unchecked_t{}, std::move(out));
}

// Majority vote: +1 where counts > 0, -1 where counts < 0, deterministic
// pseudo-random sign keyed on (seed, element) where counts == 0. Zero
// counters can only occur when an even number of vectors was bundled.
inline Hypervector normalize(const Accumulator& acc, std::uint64_t seed) {
    if (acc.n_added() == 0) {
        throw EmptyBundleError("normalize: accumulator is empty");
    }
    std::vector<std::int8_t> out(acc.dim());
    const std::int32_t* c = acc.counts().data();
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = c[j] > 0 ? std::int8_t{+1}
               : c[j] < 0 ? std::int8_t{-1}
                          : tie_sign(seed, j);
    }
    return Hypervector(Hypervector::unchecked_t{}, std::move(out));
}

// Cyclic rotation: element i moves to position (i + shift) mod dim.
// permute(permute(h, s), -s) == h for any shift.
inline Hypervector permute(const Hypervector& h, long long shift) {
    const long long d = static_cast<long long>(h.dim());
    const std::size_t s = static_cast<std::size_t>(((shift % d) + d) % d);
    std::vector<std::int8_t> out(h.dim());
    const std::size_t split = h.dim() - s;
    for (std::size_t i = 0; i < split; ++i) out[i + s] = h.elems_[i];
    for (std::size_t i = split; i < h.dim(); ++i) out[i + s - h.dim()] = h.elems_[i];
    return Hypervector(Hypervector::unchecked_t{}, std::move(out));
}

namespace detail {

template <typename T, typename U>
inline double cosine_of_spans(std::span<const T> a, std::span<const U> b) {
    if (a.size() != b.size()) {
        throw DimensionError("cosine_similarity: dimension mismatch: " +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    std::int64_t dot = 0, na = 0, nb = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::int64_t x = a[j];
        const std::int64_t y = b[j];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0 || nb == 0) {
        throw ZeroNormError("cosine_similarity: zero-norm operand");
    }
    // na*nb stays exact in double for bipolar operands, which keeps
    // cosine(x, x) == 1.0 exact; clamp absorbs the last-ulp cases elsewhere.
    const double cos = static_cast<double>(dot) /
                       std::sqrt(static_cast<double>(na) * static_cast<double>(nb));
    return cos > 1.0 ? 1.0 : cos < -1.0 ? -1.0 : cos;
}

}  // namespace detail

inline double cosine_similarity(const Hypervector& a, const Hypervector& b) {
    return detail::cosine_of_spans(a.elements(), b.elements());
}
inline double cosine_similarity(const Accumulator& a, const Accumulator& b) {
    return detail::cosine_of_spans(a.counts(), b.counts());
}
inline double cosine_similarity(const Hypervector& a, const Accumulator& b) {
    return detail::cosine_of_spans(a.elements(), b.counts());
}
inline double cosine_similarity(const Accumulator& a, const Hypervector& b) {
    return detail::cosine_of_spans(a.counts(), b.elements());
}

// Record-based encoding: normalize(sum_i bind(keys[i], values[i])).
// The seed feeds the majority tie-break (ties are possible for even-length
// records). Invariant under any permutation of the pairs.
inline Hypervector encode_record(std::span<const Hypervector> keys,
                                 std::span<const Hypervector> values,
                                 std::uint64_t seed) {
    if (keys.size() != values.size()) {
        throw DimensionError("encode_record: keys/values length mismatch");
    }
    if (keys.empty()) {
        throw EmptyBundleError("encode_record: empty record");
    }
    Accumulator acc(keys[0].dim());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        acc.add_product(keys[i], values[i]);
    }
    return normalize(acc, seed);
}

}  // namespace graphhd
