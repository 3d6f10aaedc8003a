#pragma once

#include "mlfrac/fox_wright.hpp"

namespace mlfrac {

// Kummer's 1F1(a; b; z) by its series.
EvalResult kummer_1f1(Complex a, Complex b, Complex z, Real tol = kDefaultTol, long cap = kDefaultCap);

// Gauss 2F1 on the cut plane C minus [1, inf).
//   |1 - z| < 1/2          : 1 - z connection (c - a - b near an integer: averages over c +- h, Richardson in h)
//   |z| < 0.9              : series
//   0.9 <= |z| <= 1.1      : series with an extended cap; status conditional
//   |z| > 1.1              : two-term 1/z connection; LogCaseError when a - b is an integer
EvalResult gauss_2f1(Complex a, Complex b, Complex c, Complex z, Real tol = kDefaultTol);

// 2F1(a, b; c; 1 - w) from w itself, so w near 0 keeps full relative precision.
EvalResult gauss_2f1_near_one(Complex a, Complex b, Complex c, Complex w, Real tol = kDefaultTol);

// Right-hand side of the 1/z connection formula, each 2F1 evaluated by gauss_2f1 at 1/z.
Complex gauss_2f1_connection(Complex a, Complex b, Complex c, Complex z, Real tol = kDefaultTol);

struct AppellArgs {
    Complex alpha, alpha2, beta, beta2, gamma;
    Complex x, y;
};

enum class AppellOrder { anti_diagonal, row_major };

// F3(alpha, alpha', beta, beta'; gamma; x, y) = sum (alpha)_m (alpha')_n (beta)_m (beta')_n / (gamma)_{m+n} x^m y^n / (m! n!).
EvalResult appell_f3(const AppellArgs& args, Real tol = kDefaultTol, AppellOrder order = AppellOrder::anti_diagonal,
                     long cap = 4000);

}  // namespace mlfrac
