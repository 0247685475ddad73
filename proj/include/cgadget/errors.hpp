#pragma once

#include <stdexcept>

namespace cgadget {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulusError : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct BadParametersError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct NotMdsError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct DistanceOrderViolatedError : Error { using Error::Error; };
struct NoCandidateError : Error { using Error::Error; };
struct EmptyGraphError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct TooFewPointsError : Error { using Error::Error; };
struct GadgetUnverifiedError : Error { using Error::Error; };
struct GapNonpositiveError : Error { using Error::Error; };
struct EmptyWindowError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace cgadget
