#pragma once

// Exception hierarchy. ValidationError covers rejected inputs (CLI exit code 1);
// NumericalError covers quadrature/extrapolation breakdowns (CLI exit code 2).

#include <stdexcept>
#include <string>

namespace cpplate {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// geometry
struct CoincidentAtoms : ValidationError { using ValidationError::ValidationError; };
struct BelowPlate : ValidationError { using ValidationError::ValidationError; };

// atom model
struct InvalidAtomSpec : ValidationError { using ValidationError::ValidationError; };
struct PoleProximity : ValidationError { using ValidationError::ValidationError; };

// tensor kernels
struct DegenerateSeparation : ValidationError { using ValidationError::ValidationError; };
struct StepTooLarge : ValidationError { using ValidationError::ValidationError; };

// vacuum correlations
struct NonUnitDirection : ValidationError { using ValidationError::ValidationError; };
struct InvalidGrid : ValidationError { using ValidationError::ValidationError; };

// potential engine / quadrature
struct QuadratureFailure : NumericalError { using NumericalError::NumericalError; };
struct ExtrapolationUnstable : NumericalError { using NumericalError::NumericalError; };
struct EndpointSingularity : NumericalError { using NumericalError::NumericalError; };

}  // namespace cpplate
