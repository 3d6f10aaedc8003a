#pragma once

#include <optional>
#include <span>

#include "mlfrac/fox_wright.hpp"
#include "mlfrac/params.hpp"

namespace mlfrac {

enum class ConvergenceClass { entire, disk, boundary_conditional, divergent };
const char* to_string(ConvergenceClass c);

struct ConvergenceReport {
    Real Delta = 0;
    Real radius = 0;  // delta; +inf when entire, 0 when divergent
    Complex mu;
    ConvergenceClass cls = ConvergenceClass::entire;
};

ConvergenceReport classify_convergence(const FoxWrightSpec& spec);

struct OrderType {
    Real order = 0;  // may be +inf
    std::optional<Real> type;
};

OrderType order_and_type(const MLParams& params);
OrderType order_and_type(const SeriesInstance& inst);

// rho estimate from log|c_n| (n = 0..N-1); -inf entries mark zero coefficients.
Real empirical_order_log(std::span<const Real> log_abs);
Real empirical_order(std::span<const Complex> coefficients, long count);

// Raw last-quarter maximum of n log n / log(1/|c_n|).
Real empirical_order_tail_max(std::span<const Real> log_abs);

// Cross-check of the type: (1/(rho e)) * max over the last quarter of n |c_n|^{rho/n}.
Real empirical_type_log(std::span<const Real> log_abs, Real rho);

}  // namespace mlfrac
