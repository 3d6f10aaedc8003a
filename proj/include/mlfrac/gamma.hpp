#pragma once

#include <variant>

#include "mlfrac/types.hpp"

namespace mlfrac {

// Principal-branch log Gamma, analytic on C minus (-inf, 0]; the cut takes the upper-side value.
Complex log_gamma(Complex z);

// log Gamma modulo 2*pi*i; cheaper, for use inside exp().
Complex log_gamma_mod(Complex z);

Complex gamma(Complex z);

// Entire; exactly 0 at z = 0, -1, -2, ...
Complex reciprocal_gamma(Complex z);

// Gamma(a) / Gamma(b) with pole handling: 0 when only b is a pole, PoleError when a is.
Complex gamma_ratio(Complex a, Complex b);

// Rising factorial by direct product.
Complex rising(Complex a, long n);

struct StandardStep {};
struct ExtendedStep {
    Real s;
};
struct KStep {
    Real k;
};
using PochhammerStep = std::variant<StandardStep, ExtendedStep, KStep>;

struct PochhammerSpec {
    Complex base;
    PochhammerStep step = StandardStep{};
    long n = 0;
};

Complex pochhammer(const PochhammerSpec& spec);

inline Complex pochhammer(Complex base, long n) { return pochhammer({base, StandardStep{}, n}); }

// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
Complex beta_fn(Complex a, Complex b);

}  // namespace mlfrac
