#ifndef KERNELALG_ERRORS_HPP
#define KERNELALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kernelalg {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No admissible outer radius exists for the requested inner radius at this
// resolution (the zero-sphere hypothesis fails, or the candidate grid is
// exhausted).
struct NoDeltaPrime : Error {
    using Error::Error;
};

// A metric/measure hypothesis required by the requested construction does not
// hold for the given radius sequence; the message carries the witness.
struct ConditionFailed : Error {
    using Error::Error;
};

// The algebra has no unit for this space kind.
struct UnitNotAvailable : Error {
    using Error::Error;
};

// No admissible radius keeps the doubled balls around the node set disjoint.
struct DisjointBallsImpossible : Error {
    using Error::Error;
};

// A grid factorization would need more terms than the resolution supports.
struct FactorizationOverflow : Error {
    using Error::Error;
};

// Two operands live on different spaces.
struct SpaceMismatch : Error {
    using Error::Error;
};

// Positive measure found outside the designated support subset.
struct SupportViolation : Error {
    using Error::Error;
};

// A node map does not push the source weights onto the target weights.
struct NotMeasurePreserving : Error {
    using Error::Error;
};

// Experiment configuration document is malformed.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace kernelalg

#endif
