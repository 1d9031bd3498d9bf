#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tscalc {

using Complex = std::complex<double>;

// Base class for every domain error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TSCALC_ERROR_TYPE(Name)                    \
    struct Name : Error {                          \
        using Error::Error;                        \
    }

TSCALC_ERROR_TYPE(EmptyScale);
TSCALC_ERROR_TYPE(NotInScale);
TSCALC_ERROR_TYPE(DegenerateAtMax);
TSCALC_ERROR_TYPE(QuadratureFailure);
TSCALC_ERROR_TYPE(NotRegressive);
TSCALC_ERROR_TYPE(SingularOplus);
TSCALC_ERROR_TYPE(OrderTooLarge);
TSCALC_ERROR_TYPE(NoConvergence);
TSCALC_ERROR_TYPE(PoleInProduct);
TSCALC_ERROR_TYPE(SolverDiverged);
TSCALC_ERROR_TYPE(SingularCayley);
TSCALC_ERROR_TYPE(AlgebraViolation);

#undef TSCALC_ERROR_TYPE

namespace tol {

// Membership tolerance: grids like q^k accumulate rounding, exact grid
// points must not be rejected.
inline double membership(double t) {
    return 1e-12 * std::max(1.0, std::abs(t));
}

inline constexpr double fd = 1e-8;          // dense-point finite differences (relative)
inline constexpr double quad = 1e-12;       // adaptive quadrature (absolute per interval)
inline constexpr double regressive = 1e-10; // singular-denominator guard
inline constexpr double solve = 1e-12;      // implicit-solver residual contract
inline constexpr double dense = 1e-12;      // dense-subinterval reference integration
inline constexpr double algebra = 1e-10;    // Lie-algebra membership check
inline constexpr double group = 1e-10;      // Lie-group membership check

inline double gap(double p) {
    return 1e-8 * (1.0 + std::abs(p));
}

} // namespace tol

} // namespace tscalc
