#pragma once

#include <stdexcept>
#include <string>

namespace graphhd {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched or invalid hypervector dimensions.
struct DimensionError : Error {
    using Error::Error;
};

// Normalizing an accumulator that has nothing bundled into it.
struct EmptyBundleError : Error {
    using Error::Error;
};

// Cosine similarity against an all-zero operand.
struct ZeroNormError : Error {
    using Error::Error;
};

// Malformed or missing dataset input (TUDataset files, fixture text).
struct DataFormatError : Error {
    using Error::Error;
};

// Model file problems: unreadable, wrong version, truncated, bad checksum.
struct ModelIoError : Error {
    using Error::Error;
};

// Invalid run configuration (bad fold counts, indivisible class splits,
// stratification that cannot be satisfied, basis/model mismatches).
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem failures outside model files (report emission, exports).
struct IoError : Error {
    using Error::Error;
};

}  // namespace graphhd
