#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace mlfrac {

// All arithmetic runs in x87 extended precision; callers may pass doubles.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();
inline constexpr Real kPoleTol = 1e-12L;
inline constexpr Complex kI{0.0L, 1.0L};

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool near_integer(Real x, Real tol = kPoleTol) {
    return std::fabs(x - std::nearbyint(x)) < tol;
}

inline bool near_integer(const Complex& z, Real tol = kPoleTol) {
    return std::fabs(z.imag()) < tol && near_integer(z.real(), tol);
}

inline bool is_nonpositive_integer(const Complex& z, Real tol = kPoleTol) {
    return near_integer(z, tol) && std::nearbyint(z.real()) <= 0.0L;
}

inline Real rel_err(const Complex& a, const Complex& b) {
    const Real s = std::abs(b);
    return s == 0.0L ? std::abs(a) : std::abs(a - b) / s;
}

// Principal power z^p with arg z in (-pi, pi]; 0^p = 0 for Re p > 0.
inline Complex cpow(const Complex& z, const Complex& p) {
    if (z == Complex{0.0L, 0.0L}) {
        if (p == Complex{0.0L, 0.0L}) return 1.0L;
        return 0.0L;
    }
    return std::exp(p * std::log(z));
}

}  // namespace mlfrac
