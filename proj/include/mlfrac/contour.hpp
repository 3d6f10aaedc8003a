#pragma once

#include "mlfrac/fox_wright.hpp"

namespace mlfrac {

// Loop from -inf e^{-i delta} in to radius eps, counterclockwise arc, out to inf e^{+i delta}, truncated at length L.
struct HankelContour {
    Real eps = 0;      // 0: chosen from the problem
    Real delta = kPi;  // ray angle
    Real length = 40;  // truncation radius L
    int nodes = 512;   // minimum Gauss nodes per segment (32 per panel)
    Real tol = 1e-15L;
};

// 1/Gamma(z) = (1/2 pi i) \int e^s s^{-z} ds.
EvalResult hankel_reciprocal_gamma(Complex z, const HankelContour& contour = {});

// E_{alpha,beta}(z) = (1/2 pi i) \int t^{alpha-beta} e^t / (t^alpha - z) dt over a loop enclosing |t| <= |z|^{1/alpha}.
EvalResult ml2_hankel(Real alpha, Complex beta, Complex z, const HankelContour& contour = {});

struct MellinBarnesLine {
    Real c = -1;         // abscissa; negative: chosen from the problem
    Real half_height = 60;
    int nodes = 256;     // starting node count (32 per panel)
    Real tol = 1e-15L;
};

// E^gamma_{alpha,beta}(z) = (1/Gamma(gamma)) (1/2 pi i) \int Gamma(s) Gamma(gamma - s) / Gamma(beta - alpha s) (-z)^{-s} ds.
EvalResult mellin_barnes_prabhakar(Real alpha, Complex beta, Complex gamma, Complex z, const MellinBarnesLine& line = {});

// phi(alpha, beta; z) = (1/2 pi i) \int Gamma(s) / Gamma(beta - alpha s) (-z)^{-s} ds on Re s = c > 0.
EvalResult wright_phi_mellin_barnes(Real alpha, Complex beta, Complex z, const MellinBarnesLine& line = {});

struct TransformCheck {
    Complex lhs, rhs;
    Real quad_error = 0;
    bool converged = false;
};

// lhs = \int_0^inf e^{-st} t^{beta-1} E^gamma_{alpha,beta}(w t^alpha) dt, rhs = s^{-beta} (1 - w s^{-alpha})^{-gamma}.
TransformCheck laplace_prabhakar_check(Real alpha, Complex beta, Complex gamma, Complex w, Complex s, Real tol = 1e-10L);

// lhs = \int_0^inf t^{s-1} E^gamma_{alpha,beta}(-w t) dt, rhs = Gamma(s) Gamma(gamma-s) w^{-s} / (Gamma(gamma) Gamma(beta - alpha s)).
TransformCheck mellin_prabhakar_check(Real alpha, Complex beta, Complex gamma, Real w, Complex s, Real tol = 1e-9L);

}  // namespace mlfrac
