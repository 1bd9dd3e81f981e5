#pragma once

// Exception hierarchy shared by all kreinalg headers. Every error derives
// from krein::Error so callers can catch the whole family at once; the CLI
// maps any Error escaping a subcommand to exit code 3.

#include <stdexcept>
#include <string>

namespace krein {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteEntry : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotIndefinitePair : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct InvalidBasis : Error { using Error::Error; };
struct InvalidSymmetry : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotJSelfAdjoint : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };
struct SymmetryCommutatorViolated : Error { using Error::Error; };
struct InvalidCommutatorSpec : Error { using Error::Error; };
struct DegenerateReport : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct SingularBWithoutDegeneracy : Error { using Error::Error; };
struct GridTooNarrow : Error { using Error::Error; };
struct InvalidGrid : Error { using Error::Error; };
struct InvalidAlpha : Error { using Error::Error; };
struct DivergentIteration : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

}  // namespace krein
