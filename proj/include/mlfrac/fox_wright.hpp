#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlfrac/types.hpp"

namespace mlfrac {

inline constexpr long kDefaultCap = 10000;
inline constexpr Real kDefaultTol = 1e-16L;

struct ParamPair {
    Complex value;
    Real weight = 1;
};

// Argument map z -> c * z^{sign * power}.
struct ArgumentMap {
    Complex coefficient{1.0L};
    Real power = 1;
    int sign = +1;

    Complex apply(const Complex& z) const;
};

struct FoxWrightSpec {
    std::vector<ParamPair> upper;
    std::vector<ParamPair> lower;
    bool normalized = false;
    Complex prefactor{1.0L};
    ArgumentMap argument;

    // Removes pairs present in both lists; the series is unchanged.
    FoxWrightSpec cancelled() const;
};

bool same_multiset(const std::vector<ParamPair>& a, const std::vector<ParamPair>& b, Real tol = 1e-12L);
bool same_parameters(const FoxWrightSpec& a, const FoxWrightSpec& b, Real tol = 1e-12L);

enum class Status { converged, conditional, truncated, polynomial, diverged };
const char* to_string(Status s);

struct EvalResult {
    Complex value;
    long terms_used = 0;
    Real tail_bound = 0;
    Status status = Status::converged;
};

// n-th series coefficient prod Gamma(a_i + alpha_i n) / prod Gamma(b_j + beta_j n) / n!.
Complex fox_wright_coefficient(const FoxWrightSpec& spec, long n);

// Evaluates prefactor * [Gamma(b)/Gamma(a) if normalized] * psi(c z^{+-mu}).
EvalResult fox_wright_eval(const FoxWrightSpec& spec, Complex z, Real tol = kDefaultTol, long cap = kDefaultCap);

struct PFQDescription {
    std::vector<Complex> a, b;
    Complex prefactor;  // Gamma(a_p) / Gamma(b_q)
};

std::optional<PFQDescription> hypergeometric_reduction_check(const FoxWrightSpec& spec);

// Plain pFq series sum_n (a)_n / (b)_n z^n / n!.
EvalResult pfq_series(const std::vector<Complex>& a, const std::vector<Complex>& b, Complex z,
                      Real tol = kDefaultTol, long cap = kDefaultCap);

std::string describe(const FoxWrightSpec& spec);

}  // namespace mlfrac
