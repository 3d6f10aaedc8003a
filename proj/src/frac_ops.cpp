#include "mlfrac/frac_ops.hpp"

#include <algorithm>
#include <cmath>

#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeometric.hpp"
#include "mlfrac/quadrature.hpp"
#include "mlfrac/series.hpp"

namespace mlfrac {

const char* to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::rl: return "rl";
        case OperatorKind::saigo: return "saigo";
        case OperatorKind::saigo_maeda: return "saigo-maeda";
    }
    return "?";
}

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }
const char* to_string(Mode m) { return m == Mode::integral ? "integral" : "derivative"; }

OperatorParams OperatorParams::rl(Complex nu, Mode mode, Side side) {
    OperatorParams p;
    p.kind = OperatorKind::rl;
    p.side = side;
    p.mode = mode;
    p.nu = nu;
    return p;
}

OperatorParams OperatorParams::saigo(Complex a, Complex b, Complex g, Side side, Mode mode) {
    OperatorParams p;
    p.kind = OperatorKind::saigo;
    p.side = side;
    p.mode = mode;
    p.alpha = a;
    p.beta = b;
    p.gamma = g;
    return p;
}

OperatorParams OperatorParams::saigo_maeda(Complex a, Complex a2, Complex b, Complex b2, Complex g, Side side, Mode mode) {
    OperatorParams p;
    p.kind = OperatorKind::saigo_maeda;
    p.side = side;
    p.mode = mode;
    p.alpha = a;
    p.alpha2 = a2;
    p.beta = b;
    p.beta2 = b2;
    p.gamma = g;
    return p;
}

int OperatorParams::derivative_index() const {
    const Complex order = kind == OperatorKind::rl ? nu : kind == OperatorKind::saigo ? alpha : gamma;
    return static_cast<int>(std::floor(order.real())) + 1;
}

Complex PowerWeightedOperand::inner_coefficient(long n) const {
    const SeriesInstance inst = std::visit([](const auto& s) -> SeriesInstance { return s; }, inner);
    const FoxWrightSpec spec = reduce_to_fox_wright(inst);
    return spec.prefactor * fox_wright_coefficient(spec, n);
}

EvalResult FracResult::value(Complex z, Real tol, long cap) const {
    EvalResult r = fox_wright_eval(spec, z, tol, cap);
    r.value *= coefficient * cpow(z, exponent);
    return r;
}

Complex FracResult::term(long n) const { return coefficient * spec.prefactor * fox_wright_coefficient(spec, n); }

namespace {

// t^{rho - 1} -> prod Gamma(up + s rho) / prod Gamma(lo + s rho) x^{rho + shift}
struct Action {
    std::vector<Complex> up, lo;
    int s = +1;
    Complex shift;

    PowerTerm apply(const Complex& rho) const {
        Complex log_num = 0;
        for (const Complex& u : up) {
            const Complex x = u + static_cast<Real>(s) * rho;
            if (is_nonpositive_integer(x)) throw PoleError("operator on a power: numerator Gamma at a pole");
            log_num += log_gamma_mod(x);
        }
        Complex den = 1;
        for (const Complex& l : lo) den *= reciprocal_gamma(l + static_cast<Real>(s) * rho);
        return {std::exp(log_num) * den, rho + shift};
    }
};

Action saigo_action(Complex a, Complex b, Complex g, Side side, Mode mode) {
    if (mode == Mode::derivative) {
        const Complex a0 = a;
        a = -a0;
        b = -b;
        g = a0 + g;
    }
    if (side == Side::left) return {{0.0L, g - b}, {-b, a + g}, +1, -b - 1.0L};
    // the right-sided operator carries the extra factor x^{-a-b}
    return {{b + 1.0L, g + 1.0L}, {1.0L, a + b + g + 1.0L}, -1, -a - 2.0L * b - 1.0L};
}

Action saigo_maeda_action(const OperatorParams& op) {
    Complex a = op.alpha, a2 = op.alpha2, b = op.beta, b2 = op.beta2, g = op.gamma;
    if (op.mode == Mode::derivative) {
        a = -op.alpha2;
        a2 = -op.alpha;
        b = -op.beta2;
        b2 = -op.beta;
        g = -op.gamma;
    }
    const Complex shift = g - a - a2 - 1.0L;
    if (op.side == Side::left) return {{0.0L, g - a - a2 - b, b2 - a2}, {g - a - a2, g - a2 - b, b2}, +1, shift};
    return {{1.0L + a + a2 - g, 1.0L + a + b2 - g, 1.0L - b}, {1.0L, 1.0L + a + a2 + b2 - g, 1.0L + a - b}, -1, shift};
}

void check_saigo_maeda(const OperatorParams& op, const Complex& rho) {
    if (!(op.gamma.real() > 0)) throw ConstraintError("Saigo-Maeda power: requires Re(gamma) > 0");
    Complex a = op.alpha, a2 = op.alpha2, b = op.beta, b2 = op.beta2, g = op.gamma;
    if (op.mode == Mode::derivative) {
        a = -op.alpha2;
        a2 = -op.alpha;
        b = -op.beta2;
        b2 = -op.beta;
        g = -op.gamma;
    }
    const Real r = rho.real();
    if (op.side == Side::left) {
        const Real lo = std::max({0.0L, (a + a2 + b - g).real(), (a2 - b2).real()});
        if (!(r > lo)) throw ConstraintError("Saigo-Maeda power: Re(rho) too small for the left-sided formula");
    } else {
        const Real hi = 1.0L + std::min({0.0L, -b.real(), (a + a2 - g).real(), (a + b2 - g).real()});
        if (!(r < hi)) throw ConstraintError("Saigo-Maeda power: Re(rho) too large for the right-sided formula");
    }
}

void require_kind(const OperatorParams& op, OperatorKind k, const char* who) {
    if (op.kind != k) throw ParameterError(std::string(who) + ": wrong operator kind");
}

struct InnerParts {
    std::vector<ParamPair> upper, lower;  // (a_i, 1)..., (b_j, 1)...
    ParamPair tail_upper, tail_lower;     // (1, 1) or (nu, 1); (eta, xi)
    Complex coefficient;                  // Gamma(b) / Gamma(a) [/ Gamma(nu)]
    bool k_function = false;
};

Real real_weight(const Complex& w, const char* who) {
    if (w.imag() != 0) throw ParameterError(std::string(who) + ": the series index must be real");
    if (!(w.real() > 0)) throw ParameterError(std::string(who) + ": requires Re(xi) > 0");
    return w.real();
}

InnerParts inner_parts(const InnerSeries& inner, const char* who) {
    InnerParts out;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            Complex coef = 1;
            for (const auto& a : s.a) {
                if (is_nonpositive_integer(a)) throw ParameterError(std::string(who) + ": terminating upper parameter");
                out.upper.push_back({a, 1});
                coef *= reciprocal_gamma(a);
            }
            for (const auto& b : s.b) {
                if (is_nonpositive_integer(b)) throw ParameterError(std::string(who) + ": lower parameter in Z_{<=0}");
                out.lower.push_back({b, 1});
                coef *= gamma(b);
            }
            out.tail_lower = {s.beta, real_weight(s.alpha, who)};
            if constexpr (std::is_same_v<T, KFunction>) {
                if (!(s.gamma.real() > 0)) throw ParameterError(std::string(who) + ": requires Re(nu) > 0");
                out.tail_upper = {s.gamma, 1};
                coef *= reciprocal_gamma(s.gamma);
                out.k_function = true;
            } else {
                out.tail_upper = {1.0L, 1};
            }
            out.coefficient = coef;
        },
        inner);
    return out;
}

void check_lower(const FoxWrightSpec& spec, const char* who) {
    for (const ParamPair& p : spec.lower)
        if (p.weight == 1 && is_nonpositive_integer(p.value))
            throw ParameterError(std::string(who) + ": lower parameter with unit weight in Z_{<=0}");
}

void check_operand(const PowerWeightedOperand& f, int sign, const char* who) {
    if (!(f.mu > 0)) throw ParameterError(std::string(who) + ": requires mu > 0");
    if (f.sign != sign) throw ParameterError(std::string(who) + ": argument sign does not match the side");
}

// Builds coefficient * z^{rho0 + shift} * psi(c z^{s mu}) from a power action.
FracResult build(const Action& act, const PowerWeightedOperand& f, const Complex& rho0, const char* who) {
    check_operand(f, act.s, who);
    const InnerParts in = inner_parts(f.inner, who);
    FracResult r;
    r.coefficient = in.coefficient;
    r.exponent = rho0 + act.shift;
    r.spec.upper = in.upper;
    r.spec.lower = in.lower;
    const Complex srho = static_cast<Real>(act.s) * rho0;
    for (const Complex& u : act.up) r.spec.upper.push_back({u + srho, f.mu});
    for (const Complex& l : act.lo) r.spec.lower.push_back({l + srho, f.mu});
    r.spec.upper.push_back(in.tail_upper);
    r.spec.lower.push_back(in.tail_lower);
    r.spec.argument = {Complex{f.c}, f.mu, act.s};
    check_lower(r.spec, who);
    return r;
}

const char* inner_tag(const PowerWeightedOperand& f) { return std::holds_alternative<KFunction>(f.inner) ? "K" : "M"; }

}  // namespace

PowerTerm rl_power(const OperatorParams& op, Complex mu) {
    require_kind(op, OperatorKind::rl, "rl_power");
    if (op.side != Side::left) throw UnsupportedRegime("rl_power: left-sided operator only");
    if (!(mu.real() > -1)) throw DomainError("rl_power: requires Re(mu) > -1");
    const Complex a = op.mode == Mode::derivative ? op.nu : -op.nu;
    return {gamma_ratio(mu + 1.0L, mu + 1.0L - a), mu - a};
}

FracResult rl_series(const OperatorParams& op, const InnerSeries& inst) {
    require_kind(op, OperatorKind::rl, "rl_series");
    if (op.side != Side::left) throw UnsupportedRegime("rl_series: left-sided operator only");
    if (!(op.nu.real() > 0)) throw ParameterError("rl_series: requires Re(nu) > 0");
    const bool integral = op.mode == Mode::integral;
    const Complex bottom = integral ? op.nu + 1.0L : 1.0L - op.nu;
    if (is_nonpositive_integer(bottom)) throw ParameterError("rl_series: appended lower parameter in Z_{<=0}");
    FracResult r;
    r.coefficient = reciprocal_gamma(bottom);
    r.exponent = integral ? op.nu : -op.nu;
    SeriesInstance out = std::visit(
        [&](auto s) -> SeriesInstance {
            s.a.push_back(1.0L);
            s.b.push_back(bottom);
            return s;
        },
        inst);
    r.spec = reduce_to_fox_wright(out);
    r.series = out;
    r.provenance = std::string("rl-") + to_string(op.mode) + "-" + (std::holds_alternative<KFunction>(inst) ? "K" : "M");
    return r;
}

PowerTerm saigo_power(const OperatorParams& op, Complex rho) {
    require_kind(op, OperatorKind::saigo, "saigo_power");
    return saigo_action(op.alpha, op.beta, op.gamma, op.side, op.mode).apply(rho);
}

FracResult saigo_apply(const OperatorParams& op, const PowerWeightedOperand& f) {
    require_kind(op, OperatorKind::saigo, "saigo_apply");
    if (!(op.alpha.real() > 0)) throw ParameterError("saigo_apply: requires Re(alpha) > 0");
    const Action act = saigo_action(op.alpha, op.beta, op.gamma, op.side, op.mode);
    // right-sided operands carry the weight t^{-alpha - sigma}
    const Complex rho0 = op.side == Side::left ? f.sigma : 1.0L - op.alpha - f.sigma;
    FracResult r = build(act, f, rho0, "saigo_apply");
    if (op.side == Side::right && !std::holds_alternative<KFunction>(f.inner)) {
        // M layout lists (eta, xi) first among the appended lower pairs
        auto& lo = r.spec.lower;
        const std::size_t q = lo.size() - 3;
        std::rotate(lo.begin() + static_cast<long>(q), lo.end() - 1, lo.end());
        std::swap(lo[q + 1], lo[q + 2]);
    }
    r.provenance = std::string("saigo-") + to_string(op.side) + "-" + to_string(op.mode) + "-" + inner_tag(f);
    return r;
}

PowerTerm saigo_maeda_power(const OperatorParams& op, Complex rho, bool check) {
    require_kind(op, OperatorKind::saigo_maeda, "saigo_maeda_power");
    if (check) check_saigo_maeda(op, rho);
    return saigo_maeda_action(op).apply(rho);
}

FracResult saigo_maeda_apply(const OperatorParams& op, const PowerWeightedOperand& f) {
    require_kind(op, OperatorKind::saigo_maeda, "saigo_maeda_apply");
    if (!(op.gamma.real() > 0)) throw ParameterError("saigo_maeda_apply: requires Re(gamma) > 0");
    FracResult r = build(saigo_maeda_action(op), f, f.sigma, "saigo_maeda_apply");
    r.provenance = std::string("saigo-maeda-") + to_string(op.side) + "-" + to_string(op.mode) + "-" + inner_tag(f);
    return r;
}

OperatorParams saigo_reduction(const OperatorParams& sm) {
    require_kind(sm, OperatorKind::saigo_maeda, "saigo_reduction");
    if (sm.mode == Mode::integral) {
        if (std::abs(sm.alpha2) != 0) throw UnsupportedReduction("saigo_reduction: integral needs alpha' = 0");
        return OperatorParams::saigo(sm.gamma, sm.alpha - sm.gamma, -sm.beta, sm.side, Mode::integral);
    }
    if (std::abs(sm.alpha) != 0) throw UnsupportedReduction("saigo_reduction: derivative needs alpha = 0");
    return OperatorParams::saigo(sm.gamma, sm.alpha2 - sm.gamma, sm.beta2 - sm.gamma, sm.side, Mode::derivative);
}

namespace {

Complex inner_value(const PowerWeightedOperand& f, const Complex& w) {
    const SeriesInstance inst = std::visit([](const auto& s) -> SeriesInstance { return s; }, f.inner);
    return series_eval(inst, w).value;
}

}  // namespace

QuadValue saigo_quadrature(const OperatorParams& op, const PowerWeightedOperand& f, Real z, Real tol) {
    require_kind(op, OperatorKind::saigo, "saigo_quadrature");
    if (op.mode != Mode::integral) throw UnsupportedRegime("saigo_quadrature: integral operator only");
    const Complex a = op.alpha, b = op.beta, g = op.gamma, s = f.sigma;
    if (!(a.real() > 0)) throw SingularityError("saigo_quadrature: requires Re(alpha) > 0");
    if (!(z > 0)) throw DomainError("saigo_quadrature: requires z > 0");
    check_operand(f, op.side == Side::left ? +1 : -1, "saigo_quadrature");
    // u^{p - 1} (1 - u)^{a - 1} 2F1(a + b, -g; a; 1 - u) inner(c z^{+-mu} u^mu);
    // near u = 0 the kernel adds a u^{g - b} branch
    const Complex p = op.side == Side::left ? s : a + b + s;
    if (!(p.real() > 0) || !((p + g - b).real() > 0))
        throw SingularityError("saigo_quadrature: endpoint exponent at u = 0 not above -1");
    const Real w = f.c * (op.side == Side::left ? std::pow(z, f.mu) : std::pow(z, -f.mu));
    auto integrand = [&](Real u, Real du, Real dv) -> Complex {
        const Complex k = gauss_2f1_near_one(a + b, -g, a, du).value;
        return cpow(du, p - 1.0L) * cpow(dv, a - 1.0L) * k * inner_value(f, w * std::pow(u, f.mu));
    };
    const QuadResult q = tanh_sinh(integrand, 0.0L, 1.0L, tol, 12);
    const Complex pre = op.side == Side::left ? cpow(z, s - b - 1.0L) : cpow(z, -2.0L * a - 2.0L * b - s);
    return {pre * reciprocal_gamma(a) * q.value, std::abs(pre * reciprocal_gamma(a)) * q.error, q.converged};
}

namespace {

QuadValue rl_integral(const Complex& nu, const std::function<Complex(Real)>& f, Real z, Real tol) {
    if (nu == Complex{0.0L}) return {f(z), 0, true};
    auto integrand = [&](Real u, Real, Real dv) -> Complex { return cpow(dv, nu - 1.0L) * f(z * u); };
    const QuadResult q = tanh_sinh(integrand, 0.0L, 1.0L, tol, 12);
    const Complex pre = cpow(z, nu) * reciprocal_gamma(nu);
    return {pre * q.value, std::abs(pre) * q.error, q.converged};
}

}  // namespace

QuadValue rl_quadrature(const OperatorParams& op, const std::function<Complex(Real)>& f, Real z, Real tol) {
    require_kind(op, OperatorKind::rl, "rl_quadrature");
    if (op.side != Side::left) throw UnsupportedRegime("rl_quadrature: left-sided operator only");
    if (!(op.nu.real() > 0)) throw ParameterError("rl_quadrature: requires Re(nu) > 0");
    if (!(z > 0)) throw DomainError("rl_quadrature: requires z > 0");
    if (op.mode == Mode::integral) return rl_integral(op.nu, f, z, tol);

    const int n = op.derivative_index();
    const Complex rest = static_cast<Real>(n) - op.nu;
    const Real qtol = tol * 1e-6L;
    auto g = [&](Real x) { return rl_integral(rest, f, x, qtol).value; };
    // n-th central difference, O(h^2)
    auto diff = [&](Real h) {
        Complex acc = 0;
        Real binom = 1;
        for (int k = 0; k <= n; ++k) {
            const Real x = z + (0.5L * n - k) * h;
            acc += ((k % 2) ? -binom : binom) * g(x);
            binom = binom * (n - k) / (k + 1);
        }
        return acc / std::pow(h, static_cast<Real>(n));
    };
    Real h = std::pow(tol, 1.0L / (n + 2));
    h = std::min(h, 2 * z / (n + 1));
    const Complex d1 = diff(h), d2 = diff(h / 2), d4 = diff(h / 4);
    const Complex r1 = (4.0L * d2 - d1) / 3.0L, r2 = (4.0L * d4 - d2) / 3.0L;
    const Real est = std::abs(r2 - r1);
    if (est > tol * std::max<Real>(1.0L, std::abs(r2)))
        throw StencilError("rl_quadrature: finite-difference error estimate exceeds tol");
    return {r2, est, true};
}

BridgeAudit prabhakar_bridge_audit(Complex alpha, Complex beta, Complex gam, long count) {
    if (!(gam.real() > 0)) throw ParameterError("prabhakar_bridge_audit: requires Re(gamma) > 0");
    BridgeAudit out;
    const OperatorParams d = OperatorParams::rl(alpha, Mode::derivative);
    for (long k = 0; k < count; ++k) {
        const Real kr = static_cast<Real>(k);
        BridgeTerm t;
        t.k = k;
        const Complex inv = reciprocal_gamma(alpha * kr + beta);
        const PowerTerm p = rl_power(d, gam - 1.0L + kr);
        t.literal_coefficient = p.coefficient * inv * reciprocal_gamma(gam);
        t.literal_exponent = p.exponent;
        t.target_coefficient = pochhammer(gam, k) * inv / std::tgamma(kr + 1);
        t.residual = rel_err(t.literal_coefficient, t.target_coefficient);
        if (std::abs(t.literal_exponent - kr) > 1e-12L) out.exponents_match = false;
        out.max_residual = std::max(out.max_residual, t.residual);
        out.terms.push_back(t);
    }
    return out;
}

}  // namespace mlfrac
