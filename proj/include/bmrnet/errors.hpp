#ifndef BMRNET_ERRORS_HPP
#define BMRNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmrnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested Gaussian has precision <= 0 (e.g. a reduced prior wider than
// the original prior, or an invalid natural-parameter conversion).
struct NonPositivePrecision : Error {
    using Error::Error;
};

// SNR/SPR selection without a pruning budget; these rankings have no
// intrinsic stopping rule.
struct MissingBudget : Error {
    using Error::Error;
};

struct AlreadyPruned : Error {
    using Error::Error;
};

struct ArchitectureUnsupported : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct SeriesTooShort : Error {
    using Error::Error;
};

struct NonFiniteLoss : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace bmrnet

#endif  // BMRNET_ERRORS_HPP
