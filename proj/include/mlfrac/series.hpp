#pragma once

#include "mlfrac/fox_wright.hpp"
#include "mlfrac/params.hpp"

namespace mlfrac {

EvalResult ml_eval(const MLParams& params, Complex z, Real tol = kDefaultTol, long cap = kDefaultCap);

EvalResult series_eval(const SeriesInstance& inst, Complex z, Real tol = kDefaultTol, long cap = kDefaultCap);

FoxWrightSpec reduce_to_fox_wright(const MLParams& params);
FoxWrightSpec reduce_to_fox_wright(const SeriesInstance& inst);

// Two-parameter function by plain series summation, no fallback.
EvalResult ml2_series(Complex alpha, Complex beta, Complex z, Real tol = kDefaultTol, long cap = kDefaultCap);

// Two-parameter function from the loop integral around the negative axis plus the
// residue at t = z^{1/alpha} when it lies outside the loop; 0 < alpha < 2.
EvalResult ml2_loop(Real alpha, Complex beta, Complex z, Real tol = 1e-17L);

// J_nu(z) and I_nu(z) summed from their own series; principal (z/2)^nu.
Complex bessel_j(Complex nu, Complex z, Real tol = kDefaultTol);
Complex bessel_i(Complex nu, Complex z, Real tol = kDefaultTol);

}  // namespace mlfrac
