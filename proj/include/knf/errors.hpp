#pragma once

#include <stdexcept>
#include <string>

namespace knf {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Eigenvector basis too ill-conditioned; matrix treated as defective.
struct NonSemisimple : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct UnknownPresentation : Error {
    using Error::Error;
};

struct BallTooLarge : Error {
    using Error::Error;
};

// Line search could not find a descending step above the step floor.
struct NumericalBreakdown : Error {
    using Error::Error;
};

struct NotInKempfNessSet : Error {
    using Error::Error;
};

struct FlowNotConverged : Error {
    using Error::Error;
};

// Input file / JSON / config problems. Maps to CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

struct InvalidRepresentation : Error {
    using Error::Error;
};

}  // namespace knf
