#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mlfrac/fox_wright.hpp"
#include "mlfrac/params.hpp"

namespace mlfrac {

enum class OperatorKind { rl, saigo, saigo_maeda };
enum class Side { left, right };
enum class Mode { integral, derivative };

const char* to_string(OperatorKind k);
const char* to_string(Side s);
const char* to_string(Mode m);

struct OperatorParams {
    OperatorKind kind = OperatorKind::rl;
    Side side = Side::left;
    Mode mode = Mode::integral;
    Complex nu;                     // RL order
    Complex alpha, beta, gamma;     // Saigo (alpha, beta, gamma); Saigo-Maeda alpha, beta, gamma
    Complex alpha2, beta2;          // Saigo-Maeda alpha', beta'

    static OperatorParams rl(Complex nu, Mode mode = Mode::integral, Side side = Side::left);
    static OperatorParams saigo(Complex a, Complex b, Complex g, Side side = Side::left, Mode mode = Mode::integral);
    static OperatorParams saigo_maeda(Complex a, Complex a2, Complex b, Complex b2, Complex g, Side side = Side::left,
                                      Mode mode = Mode::integral);

    // n = floor(Re(order)) + 1 for the order that drives the derivative
    int derivative_index() const;
};

using InnerSeries = std::variant<MSeries, KFunction>;

// t^{sigma - 1} inner(c t^{sign mu}) for Saigo-Maeda and left Saigo;
// right Saigo uses the weight t^{-alpha - sigma} instead.
struct PowerWeightedOperand {
    Complex sigma;
    Real c = 1;
    Real mu = 1;
    int sign = +1;
    InnerSeries inner;

    // Series coefficient of c^n t^{sign mu n} in inner.
    Complex inner_coefficient(long n) const;
};

// value(z) = coefficient * z^exponent * psi(c z^{+-mu}), psi = fox_wright_eval(spec, .)
struct FracResult {
    Complex coefficient{1.0L};
    Complex exponent{0.0L};
    FoxWrightSpec spec;
    std::string provenance;
    std::optional<SeriesInstance> series;  // M/K form, RL results only

    EvalResult value(Complex z, Real tol = kDefaultTol, long cap = kDefaultCap) const;
    // coefficient of c^n z^{exponent + sign mu n}
    Complex term(long n) const;
};

// Action on a monomial: t^{rho - 1} -> coefficient * x^exponent.
struct PowerTerm {
    Complex coefficient;
    Complex exponent;
};

// Synthetic RL operator on z^mu: derivative of order a gives Gamma(mu + 1) / Gamma(mu + 1 - a) z^{mu - a};
// integral of order nu is the derivative of order -nu. Any complex order is accepted.
PowerTerm rl_power(const OperatorParams& op, Complex mu);

FracResult rl_series(const OperatorParams& op, const InnerSeries& inst);

// Saigo operator on t^{rho - 1}. Derivatives use D^{a,b,g} = I^{-a,-b,a+g}.
PowerTerm saigo_power(const OperatorParams& op, Complex rho);

FracResult saigo_apply(const OperatorParams& op, const PowerWeightedOperand& operand);

// Saigo-Maeda operator on t^{rho - 1}; derivatives use D = I^{-a',-a,-b',-b,-g}.
// ConstraintError when the admissibility condition on rho fails and `check` is set.
PowerTerm saigo_maeda_power(const OperatorParams& op, Complex rho, bool check = true);

FracResult saigo_maeda_apply(const OperatorParams& op, const PowerWeightedOperand& operand);

// Saigo parameters equivalent to a Saigo-Maeda operator with alpha' = 0 (integral)
// or alpha = 0 (derivative); UnsupportedReduction otherwise.
OperatorParams saigo_reduction(const OperatorParams& sm);

struct QuadValue {
    Complex value;
    Real error = 0;
    bool converged = false;
};

// Defining integral of the Saigo operator, evaluated after u = t/z (left) or u = z/t (right).
QuadValue saigo_quadrature(const OperatorParams& op, const PowerWeightedOperand& operand, Real z, Real tol = 1e-10L);

// RL integral by quadrature in u = t/z; derivative as the n-th central difference of I^{n - nu} f,
// step tol^{1/(n+2)} with one Richardson step.
QuadValue rl_quadrature(const OperatorParams& op, const std::function<Complex(Real)>& f, Real z, Real tol = 1e-8L);

struct BridgeTerm {
    long k = 0;
    Complex literal_coefficient, literal_exponent;  // (1/Gamma(g)) D^a applied to z^{g - 1 + k} / Gamma(a k + b)
    Complex target_coefficient;                     // (g)_k / (k! Gamma(a k + b)), exponent k
    Real residual = 0;
};

struct BridgeAudit {
    std::vector<BridgeTerm> terms;
    Real max_residual = 0;
    bool exponents_match = true;
};

// Termwise audit of the derivative route to the Prabhakar function; reports the residual.
BridgeAudit prabhakar_bridge_audit(Complex alpha, Complex beta, Complex gamma, long count = 20);

}  // namespace mlfrac
