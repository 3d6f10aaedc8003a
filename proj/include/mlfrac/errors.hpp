#pragma once

#include <stdexcept>
#include <string>

namespace mlfrac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MLFRAC_ERROR(Name) \
    struct Name : Error {  \
        using Error::Error; \
    }

MLFRAC_ERROR(PoleError);
MLFRAC_ERROR(DegenerateInput);
MLFRAC_ERROR(UnsupportedRegime);
MLFRAC_ERROR(DivergenceError);
MLFRAC_ERROR(ParameterError);
MLFRAC_ERROR(UnsupportedReduction);
MLFRAC_ERROR(SectorError);
MLFRAC_ERROR(DomainError);
MLFRAC_ERROR(QuadratureError);
MLFRAC_ERROR(ContourError);
MLFRAC_ERROR(PoleProximityError);
MLFRAC_ERROR(LogCaseError);
MLFRAC_ERROR(ConvergenceError);
MLFRAC_ERROR(StripError);
MLFRAC_ERROR(ConstraintError);
MLFRAC_ERROR(SingularityError);
MLFRAC_ERROR(StencilError);

#undef MLFRAC_ERROR

}  // namespace mlfrac
