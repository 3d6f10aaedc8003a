#pragma once

#include "mlfrac/contour.hpp"

namespace mlfrac {

struct AsymptoticConfig {
    int m = 8;           // algebraic terms
    Real sector = -1;    // delta; negative: midpoint of (pi alpha/2, min(pi, pi alpha))
};

// Large-|z| expansion of E_{alpha,beta}(z), 0 < alpha < 2: exponential term when |arg z| <= delta,
// then - sum_{n=1}^m z^{-n} / Gamma(beta - alpha n).
Complex ml2_asymptotic(Real alpha, Complex beta, Complex z, const AsymptoticConfig& cfg = {});

// alpha >= 2: (1/alpha) sum over n with |arg z + 2 pi n| < 3 pi alpha / 4 of w^{1-beta} e^w,
// w = z^{1/alpha} e^{2 pi i n / alpha}, minus the same algebraic sum.
Complex ml2_asymptotic_large_alpha(Real alpha, Complex beta, Complex z, int m);

enum class NegativeAlphaForm { complement, recurrence, series };

// E_{-alpha,beta}(z), alpha > 0, z != 0:
//   complement: 1/Gamma(beta) - E_{alpha,beta}(1/z)
//   recurrence: -(1/z) E_{alpha,alpha+beta}(1/z)
//   series:     -sum_{n>=1} z^{-n} / Gamma(alpha n + beta)
Complex ml_negative_alpha(Real alpha, Real beta, Complex z, NegativeAlphaForm form = NegativeAlphaForm::complement);

// Printed large-beta form (1 + a (x/alpha)^gamma)^{-beta}, approximating Gamma(alpha) E^gamma_{alpha,beta}(a (alpha x)^gamma).
Real prabhakar_large_beta(Real alpha, Real beta, Real gamma, Real a, Real x);

struct PrabhakarAsymptotics {
    Complex leading;   // (gamma)_p / Gamma(alpha p + n)
    int p = 0;         // 1 for n = 0, else 0
    Complex theta;     // remainder, value = leading z^p (1 + theta)
    bool polynomial = false;
    long terms = 0;

    Complex value(const Complex& z) const;
};

// E^gamma_{alpha,n}(z) for integer n >= 0 split as leading term times (1 + theta).
PrabhakarAsymptotics prabhakar_integer_second(Complex alpha, int n, Complex gamma, Complex z);

// Leading behaviour of F^{(mu)}_{alpha,beta}(z):
// (1/(alpha sqrt mu)) (2 pi)^{(1-mu)/2} z^{(mu - 2 beta mu + 1)/(2 alpha mu)} e^{mu z^{1/(alpha mu)}}.
Complex multiple_ml_asymptotic(Real mu, Real alpha, Real beta, Complex z);

// lhs = \int_0^inf e^{-t/z} F^{(mu+1)}_{1,1}(t) dt, rhs = z F^{(mu)}_{1,1}(z); real z > 0.
TransformCheck multiple_ml_laplace_check(Real mu, Real z, Real tol = 1e-10L);

}  // namespace mlfrac
