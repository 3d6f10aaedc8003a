#include "mlfrac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <type_traits>
#include <variant>
#include <functional>
#include <random>
#include <stdexcept>

#include "mlfrac/asymptotics.hpp"
#include "mlfrac/contour.hpp"
#include "mlfrac/errors.hpp"
#include "mlfrac/frac_ops.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeometric.hpp"
#include "mlfrac/series.hpp"

namespace mlfrac {

namespace {

long cap_of(const VerifyOptions& o) { return o.max_terms > 0 ? o.max_terms : kDefaultCap; }

Real rel_error(const Complex& got, const Complex& want) {
    const Real d = std::abs(got - want), w = std::abs(want);
    return w > 0 ? d / w : d;
}

std::string fmt(const Complex& z) {
    char buf[80];
    if (z.imag() == 0)
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(z.real()));
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", static_cast<double>(z.real()), static_cast<double>(z.imag()));
    return buf;
}

// accumulates one check; "name=value" pairs keep the records readable
class Recorder {
public:
    Recorder(std::string id, std::string claim, Real tol) {
        rep_.id = std::move(id);
        rep_.claim = std::move(claim);
        rep_.tolerance = tol;
    }
    void add(std::string inputs, const Complex& lhs, const Complex& rhs, Real err) {
        rep_.records.push_back({std::move(inputs), lhs, rhs, err});
        ++rep_.cases;
        // NaN counts as a failure
        if (!(err <= rep_.max_error)) rep_.max_error = std::isnan(err) ? std::numeric_limits<Real>::infinity() : err;
    }
    void rel(std::string inputs, const Complex& lhs, const Complex& rhs) {
        const Real e = rel_error(lhs, rhs);
        add(std::move(inputs), lhs, rhs, e);
    }
    void skip() { ++rep_.skipped; }
    VerifyReport done() {
        rep_.pass = rep_.cases > 0 && rep_.max_error <= rep_.tolerance;
        return std::move(rep_);
    }

private:
    VerifyReport rep_;
};

std::mt19937_64 rng_for(const VerifyOptions& o, std::uint64_t salt) {
    std::seed_seq s{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(s);
}

// uniform doubles; std::uniform_real_distribution is not specified bit-for-bit across libraries
struct Draw {
    std::mt19937_64 g;
    Real u(Real lo, Real hi) { return lo + (hi - lo) * static_cast<Real>(g() >> 11) * 0x1.0p-53L; }
    Complex c(Real lo = 0.1L, Real hi = 1.5L, Real im = 0.3L) { return {u(lo, hi), u(-im, im)}; }
    int i(int n) { return static_cast<int>(g() % static_cast<std::uint64_t>(n)); }
};

Complex ml2(Complex a, Complex b, Complex z, long cap) { return ml_eval(MLTwo{a, b}, z, kDefaultTol, cap).value; }

// ---- recurrence ----------------------------------------------------------------

VerifyReport check_recurrence(const VerifyOptions& o, Real tol) {
    Recorder r("recurrence/two-parameter", "E(a,b;z) = 1/Gamma(b) + z E(a,a+b;z), |z| <= 10", tol);
    Draw d{rng_for(o, 1)};
    for (Real a : {0.5L, 1.0L, 1.5L})
        for (Real b : {1.0L, 2.0L})
            for (int k = 0; k < 20; ++k) {
                const Complex z = std::polar(d.u(0, 10), d.u(-kPi, kPi));
                const Complex lhs = ml2(a, b, z, cap_of(o));
                const Complex rhs = reciprocal_gamma(b) + z * ml2(a, a + b, z, cap_of(o));
                r.rel("a=" + fmt(a) + " b=" + fmt(b) + " z=" + fmt(z), lhs, rhs);
            }
    return r.done();
}

// ---- reductions ------------------------------------------------------------------

VerifyReport check_elementary(const VerifyOptions& o, Real tol) {
    Recorder r("reductions/elementary", "E(1,1)=e^z, E(2,1)=cosh sqrt z, E(1,2)=(e^z-1)/z, E(2,2)=sinh sqrt z/sqrt z", tol);
    // 10 radii x 20 angles covering |z| <= 10
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 20; ++j) {
            const Complex z = std::polar(1.0L + i, -kPi + 2 * kPi * (j + 0.5L) / 20);
            const Complex s = std::sqrt(z);
            const std::string in = "z=" + fmt(z);
            r.rel("E(1,1) " + in, ml2(1, 1, z, cap_of(o)), std::exp(z));
            r.rel("E(2,1) " + in, ml2(2, 1, z, cap_of(o)), std::cosh(s));
            r.rel("E(1,2) " + in, ml2(1, 2, z, cap_of(o)), (std::exp(z) - 1.0L) / z);
            r.rel("E(2,2) " + in, ml2(2, 2, z, cap_of(o)), std::sinh(s) / s);
        }
    return r.done();
}

VerifyReport check_fox_wright(const VerifyOptions& o, Real tol) {
    Recorder r("reductions/fox-wright", "family evaluation equals the Fox-Wright form it reduces to", tol);
    Draw d{rng_for(o, 2)};
    const long cap = cap_of(o);
    // |z| <= 2 with first parameter >= 1/2 keeps the series cancellation below about e^8
    for (int k = 0; k < 500; ++k) {
        const Complex z = std::polar(d.u(0.1L, 2), d.u(-kPi, kPi));
        std::vector<Complex> a, b;
        const int q = d.i(3), p = d.i(q + 1);
        for (int i = 0; i < p; ++i) a.push_back(d.c());
        for (int i = 0; i < q; ++i) b.push_back(d.c());
        Complex direct, via;
        std::string in;
        switch (k % 5) {
            case 0: {
                const MLTwo m{d.u(0.5L, 2), d.c()};
                direct = ml_eval(m, z, kDefaultTol, cap).value;
                via = fox_wright_eval(reduce_to_fox_wright(MLParams{m}), z, kDefaultTol, cap).value;
                in = "two a=" + fmt(m.alpha) + " b=" + fmt(m.beta);
                break;
            }
            case 1: {
                const MLThree m{d.u(0.5L, 2), d.c(), d.c()};
                direct = ml_eval(m, z, kDefaultTol, cap).value;
                via = fox_wright_eval(reduce_to_fox_wright(MLParams{m}), z, kDefaultTol, cap).value;
                in = "three a=" + fmt(m.alpha) + " b=" + fmt(m.beta) + " g=" + fmt(m.gamma);
                break;
            }
            case 2: {
                const MSeries m{a, b, d.u(0.5L, 2), d.c()};
                direct = series_eval(m, z, kDefaultTol, cap).value;
                via = fox_wright_eval(reduce_to_fox_wright(SeriesInstance{m}), z, kDefaultTol, cap).value;
                in = "M p=" + std::to_string(p) + " q=" + std::to_string(q) + " a=" + fmt(m.alpha) + " b=" + fmt(m.beta);
                break;
            }
            case 3: {
                const KFunction m{a, b, d.u(0.5L, 2), d.c(), d.c()};
                direct = series_eval(m, z, kDefaultTol, cap).value;
                via = fox_wright_eval(reduce_to_fox_wright(SeriesInstance{m}), z, kDefaultTol, cap).value;
                in = "K p=" + std::to_string(p) + " q=" + std::to_string(q) + " a=" + fmt(m.alpha) + " b=" + fmt(m.beta) +
                     " g=" + fmt(m.gamma);
                break;
            }
            default: {
                MultiIndex m;
                const int n = 1 + d.i(3);
                for (int i = 0; i < n; ++i) m.pairs.emplace_back(d.u(0.5L, 1.5L), d.c());
                direct = ml_eval(m, z, kDefaultTol, cap).value;
                via = fox_wright_eval(reduce_to_fox_wright(MLParams{m}), z, kDefaultTol, cap).value;
                in = "multi m=" + std::to_string(n);
            }
        }
        r.rel(in + " z=" + fmt(z), via, direct);
    }
    return r.done();
}

VerifyReport check_kummer(const VerifyOptions& o, Real tol) {
    Recorder r("reductions/kummer", "Gamma(b) E^g_{1,b}(z) = 1F1(g; b; z)", tol);
    Draw d{rng_for(o, 3)};
    for (int k = 0; k < 100; ++k) {
        const Complex b = d.c(0.1L, 3), g = d.c(0.1L, 3);
        const Complex z = std::polar(d.u(0, 8), d.u(-kPi, kPi));
        const Complex lhs = gamma(b) * ml_eval(MLThree{1, b, g}, z, kDefaultTol, cap_of(o)).value;
        r.rel("b=" + fmt(b) + " g=" + fmt(g) + " z=" + fmt(z), lhs, kummer_1f1(g, b, z).value);
    }
    return r.done();
}

// ---- theorem-4x ------------------------------------------------------------------

InnerSeries draw_inner(Draw& d) {
    std::vector<Complex> a, b;
    const int q = d.i(3), p = d.i(q + 1);
    for (int i = 0; i < p; ++i) a.push_back(d.c());
    for (int i = 0; i < q; ++i) b.push_back(d.c());
    if (d.i(2) == 0) return MSeries{a, b, d.u(0.1L, 1.5L), d.c()};
    return KFunction{a, b, d.u(0.1L, 1.5L), d.c(), d.c()};
}

std::string inner_text(const InnerSeries& s) {
    return std::visit(
        [](const auto& v) {
            std::string t = std::is_same_v<std::decay_t<decltype(v)>, MSeries> ? "M[" : "K[";
            for (const auto& x : v.a) t += fmt(x) + ",";
            t += ";";
            for (const auto& x : v.b) t += fmt(x) + ",";
            t += " xi=" + fmt(v.alpha) + " eta=" + fmt(v.beta);
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, KFunction>) t += " nu=" + fmt(v.gamma);
            return t + "]";
        },
        s);
}

VerifyReport check_rl_termwise(const VerifyOptions& o, Real tol) {
    Recorder r("theorem-4x/rl-termwise",
               "RL closed form equals monomial-wise action on 25 coefficients; D^nu I^nu is the identity on 20", tol);
    Draw d{rng_for(o, 4)};
    for (int k = 0; k < 20; ++k) {
        const InnerSeries inst = draw_inner(d);
        const Complex nu = d.c(0.1L, 1.8L);
        PowerWeightedOperand f;
        f.sigma = 1;
        f.inner = inst;
        const std::string in = inner_text(inst) + " nu=" + fmt(nu);
        for (Mode mode : {Mode::integral, Mode::derivative}) {
            const OperatorParams op = OperatorParams::rl(nu, mode);
            FracResult res;
            try {
                res = rl_series(op, inst);
            } catch (const ParameterError&) {
                r.skip();
                continue;
            }
            for (long n = 0; n < 25; ++n) {
                const PowerTerm p = rl_power(op, static_cast<Real>(n));
                const Complex want = f.inner_coefficient(n) * p.coefficient;
                Real err = rel_error(res.term(n), want);
                err = std::max(err, std::abs(res.exponent + static_cast<Real>(n) - p.exponent));
                r.add(in + " " + to_string(mode) + " n=" + std::to_string(n), res.term(n), want, err);
            }
        }
        const OperatorParams I = OperatorParams::rl(nu), D = OperatorParams::rl(nu, Mode::derivative);
        const FracResult ri = rl_series(I, inst);
        for (long n = 0; n < 20; ++n) {
            const PowerTerm back = rl_power(D, ri.exponent + static_cast<Real>(n));
            const Complex got = ri.term(n) * back.coefficient, want = f.inner_coefficient(n);
            r.add(in + " D.I n=" + std::to_string(n), got, want,
                  std::max(rel_error(got, want), std::abs(back.exponent - static_cast<Real>(n))));
        }
    }
    return r.done();
}

// sum |t| / |sum t| of the psi series at w
Real series_condition(const FracResult& res, Real z) {
    const Complex w = res.spec.argument.apply(z);
    Complex sum = 0, wn = 1;
    Real abs = 0;
    for (long k = 0; k < 3000; ++k) {
        const Complex t = res.term(k) * wn;
        sum += t;
        abs += std::abs(t);
        wn *= w;
        if (k > 20 && std::abs(t) < 1e-20L * abs) break;
    }
    return abs / std::abs(sum);
}

VerifyReport check_saigo_quadrature(const VerifyOptions& o, Real tol) {
    Recorder r("theorem-4x/saigo-quadrature",
               "Saigo closed form equals the defining integral, 50 draws per side at z = 0.5, 1, 2", tol);
    Draw d{rng_for(o, 5)};
    for (Side side : {Side::left, Side::right}) {
        int done = 0;
        while (done < 50) {
            const OperatorParams op = OperatorParams::saigo(d.c(), d.c(), d.c(), side);
            PowerWeightedOperand f;
            f.sigma = d.c();
            f.c = d.u(-1, 1);
            f.mu = d.u(0.1L, 1.5L);
            f.sign = side == Side::left ? +1 : -1;
            f.inner = draw_inner(d);
            FracResult res;
            try {
                res = saigo_apply(op, f);
                // the quadrature checks integrability up front
                (void)saigo_quadrature(op, f, 1, 1e-3L);
            } catch (const Error&) {
                r.skip();
                continue;
            }
            bool conditioned = true;
            for (Real z : {0.5L, 1.0L, 2.0L}) conditioned = conditioned && series_condition(res, z) <= 1e4L;
            if (!conditioned) {
                r.skip();
                continue;
            }
            const std::string in = std::string(to_string(side)) + " a=" + fmt(op.alpha) + " b=" + fmt(op.beta) +
                                   " g=" + fmt(op.gamma) + " sigma=" + fmt(f.sigma) + " c=" + fmt(f.c) +
                                   " mu=" + fmt(f.mu) + " " + inner_text(f.inner);
            for (Real z : {0.5L, 1.0L, 2.0L}) {
                const QuadValue q = saigo_quadrature(op, f, z, 1e-10L);
                const Complex v = res.value(z).value;
                r.add(in + " z=" + fmt(z), v, q.value, q.converged ? rel_error(v, q.value) : 1);
            }
            ++done;
        }
    }
    return r.done();
}

// ---- theorem-5x-termwise ------------------------------------------------------------

VerifyReport check_saigo_maeda_termwise(const VerifyOptions& o, Real tol) {
    Recorder r("theorem-5x-termwise/coefficients",
               "Saigo-Maeda closed forms equal the monomial-wise power action, n <= 25", tol);
    Draw d{rng_for(o, 6)};
    for (int k = 0; k < 40; ++k) {
        const Side side = k % 2 ? Side::right : Side::left;
        const Mode mode = (k / 2) % 2 ? Mode::derivative : Mode::integral;
        const OperatorParams op = OperatorParams::saigo_maeda(d.c(), d.c(), d.c(), d.c(), d.c(), side, mode);
        Complex a = op.alpha, a2 = op.alpha2, b = op.beta, b2 = op.beta2, g = op.gamma;
        if (mode == Mode::derivative) {
            a = -op.alpha2, a2 = -op.alpha, b = -op.beta2, b2 = -op.beta, g = -op.gamma;
        }
        PowerWeightedOperand f;
        f.c = d.u(-1, 1);
        f.mu = d.u(0.1L, 1.5L);
        f.sign = side == Side::left ? +1 : -1;
        f.inner = draw_inner(d);
        const Real im = d.u(-0.3L, 0.3L);
        if (side == Side::left)
            f.sigma = {std::max({0.0L, (a + a2 + b - g).real(), (a2 - b2).real()}) + d.u(0.1L, 1.5L), im};
        else
            f.sigma = {1 + std::min({0.0L, -b.real(), (a + a2 - g).real(), (a + b2 - g).real()}) - d.u(0.1L, 1.5L), im};
        FracResult res;
        try {
            res = saigo_maeda_apply(op, f);
        } catch (const ParameterError&) {
            r.skip();
            continue;
        }
        const std::string in = std::string(to_string(side)) + " " + to_string(mode) + " a=" + fmt(op.alpha) +
                               " a'=" + fmt(op.alpha2) + " b=" + fmt(op.beta) + " b'=" + fmt(op.beta2) +
                               " g=" + fmt(op.gamma) + " sigma=" + fmt(f.sigma) + " " + inner_text(f.inner);
        for (long n = 0; n <= 25; ++n) {
            const Real step = static_cast<Real>(f.sign) * f.mu * static_cast<Real>(n);
            const PowerTerm p = saigo_maeda_power(op, f.sigma + step);
            const Complex want = f.inner_coefficient(n) * p.coefficient;
            const Real err = std::max(rel_error(res.term(n), want), std::abs(res.exponent + step - p.exponent));
            r.add(in + " n=" + std::to_string(n), res.term(n), want, err);
        }
    }
    return r.done();
}

VerifyReport check_reduction_chain(const VerifyOptions& o, Real tol) {
    Recorder r("theorem-5x-termwise/reduction-chain",
               "Saigo-Maeda with a'=0 (integral) or a=0 (derivative) has the Saigo psi parameters; "
               "beta=-alpha Saigo has the RL coefficients",
               tol);
    Draw d{rng_for(o, 7)};
    for (int k = 0; k < 30; ++k) {
        const Side side = k % 2 ? Side::right : Side::left;
        const Mode mode = (k / 2) % 2 ? Mode::derivative : Mode::integral;
        const Complex x = d.c(), y = d.c(), w = d.c(), g = d.c(0.6L, 1.5L);
        const OperatorParams sm = mode == Mode::integral ? OperatorParams::saigo_maeda(x, 0, y, w, g, side, mode)
                                                         : OperatorParams::saigo_maeda(0, x, y, w, g, side, mode);
        const OperatorParams sg = saigo_reduction(sm);
        PowerWeightedOperand f;
        f.sigma = side == Side::left ? d.c(2, 3) : d.c(-3, -2);
        f.c = d.u(-1, 1);
        f.mu = d.u(0.1L, 1.5L);
        f.sign = side == Side::left ? +1 : -1;
        f.inner = draw_inner(d);
        PowerWeightedOperand fs = f;
        // right-sided Saigo operands are weighted t^{-alpha - sigma}
        if (side == Side::right) fs.sigma = 1.0L - sg.alpha - f.sigma;
        FracResult a, b;
        try {
            a = saigo_maeda_apply(sm, f);
            b = saigo_apply(sg, fs);
        } catch (const ParameterError&) {
            r.skip();
            continue;
        }
        // the right-sided Saigo definition carries x^{-alpha-beta}; the derivative flips its sign
        Complex offset = 0;
        if (side == Side::right) offset = mode == Mode::integral ? sg.alpha + sg.beta : -(sg.alpha + sg.beta);
        const bool same = same_parameters(a.spec.cancelled(), b.spec.cancelled(), 1e-15L);
        const Real err = std::max<Real>(same ? 0 : 1, std::abs(a.exponent - (b.exponent + offset)));
        r.add(std::string(to_string(side)) + " " + to_string(mode) + " sm=(" + fmt(sm.alpha) + "," + fmt(sm.alpha2) +
                  "," + fmt(sm.beta) + "," + fmt(sm.beta2) + "," + fmt(sm.gamma) + ")",
              a.exponent, b.exponent + offset, err);
    }
    for (int k = 0; k < 10; ++k) {
        const Complex a = d.c(), g = d.c();
        const OperatorParams s = OperatorParams::saigo(a, -a, g), rl = OperatorParams::rl(a);
        for (int n = 0; n < 10; ++n) {
            const Complex rho = d.c(0.2L, 3);
            const PowerTerm x = saigo_power(s, rho), y = rl_power(rl, rho - 1.0L);
            r.add("beta=-alpha a=" + fmt(a) + " g=" + fmt(g) + " rho=" + fmt(rho), x.coefficient, y.coefficient,
                  std::max(rel_error(x.coefficient, y.coefficient), std::abs(x.exponent - y.exponent)));
        }
    }
    return r.done();
}

// ---- contour-agreement ---------------------------------------------------------------

VerifyReport check_hankel_gamma(const VerifyOptions&, Real tol) {
    Recorder r("contour-agreement/hankel-gamma", "loop integral for 1/Gamma equals the reciprocal gamma (absolute)", tol);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 5; ++j) {
            const Complex z{-3.3L + 1.1L * i, -2.0L + 1.0L * j};
            const Complex got = hankel_reciprocal_gamma(z).value, want = reciprocal_gamma(z);
            r.add("z=" + fmt(z), got, want, std::abs(got - want));
        }
    return r.done();
}

VerifyReport check_hankel_ml2(const VerifyOptions& o, Real tol) {
    Recorder r("contour-agreement/hankel-ml2", "loop integral for E(a,b) equals the series", tol);
    Draw d{rng_for(o, 8)};
    for (Real a : {0.5L, 1.0L, 1.5L})
        for (Real b : {1.0L, 2.0L})
            for (int i = 0; i < 5; ++i) {
                const Complex z = std::polar(d.u(0.5L, 5), d.u(-kPi, kPi));
                r.rel("a=" + fmt(a) + " b=" + fmt(b) + " z=" + fmt(z), ml2_hankel(a, b, z).value, ml2(a, b, z, cap_of(o)));
            }
    return r.done();
}

VerifyReport check_mellin_barnes(const VerifyOptions& o, Real tol) {
    Recorder r("contour-agreement/mellin-barnes", "Mellin-Barnes line for the Prabhakar function equals the series", tol);
    Draw d{rng_for(o, 9)};
    for (int i = 0; i < 30; ++i) {
        const Real a = d.u(0.3L, 1.5L);
        const Complex b = d.c(0.5L, 2), g = d.c(0.3L, 1.5L, 0.2L);
        // keep |arg(-z)| inside pi (1 - a/2) with margin
        const Real half = kPi * (1 - a / 2) * 0.6L;
        const Complex z = -std::polar(d.u(0.2L, 3), d.u(-half, half));
        r.rel("a=" + fmt(a) + " b=" + fmt(b) + " g=" + fmt(g) + " z=" + fmt(z), mellin_barnes_prabhakar(a, b, g, z).value,
              ml_eval(MLThree{a, b, g}, z, kDefaultTol, cap_of(o)).value);
    }
    return r.done();
}

// ---- transform-checks -----------------------------------------------------------------

VerifyReport check_laplace(const VerifyOptions& o, Real tol) {
    Recorder r("transform-checks/laplace", "Laplace transform of t^{b-1} E^g_{a,b}(w t^a) equals s^{-b}(1-w s^{-a})^{-g}",
               tol);
    Draw d{rng_for(o, 10)};
    for (int i = 0; i < 20; ++i) {
        const Real a = d.u(0.4L, 1.5L);
        const Complex b = d.c(0.5L, 1.5L), g = d.c(0.3L, 1.5L);
        const Complex w = std::polar(d.u(0, 1), d.u(-kPi, kPi));
        const Complex s{std::pow(std::abs(w), 1 / a) + d.u(0.5L, 2), d.u(-1, 1)};
        const TransformCheck t = laplace_prabhakar_check(a, b, g, w, s);
        r.add("a=" + fmt(a) + " b=" + fmt(b) + " g=" + fmt(g) + " w=" + fmt(w) + " s=" + fmt(s), t.lhs, t.rhs,
              t.converged ? rel_error(t.lhs, t.rhs) : 1);
    }
    return r.done();
}

VerifyReport check_mellin(const VerifyOptions& o, Real tol) {
    Recorder r("transform-checks/mellin", "Mellin transform of E^g_{a,b}(-w t) equals its gamma-ratio closed form", tol);
    Draw d{rng_for(o, 11)};
    for (int i = 0; i < 20; ++i) {
        const Real a = d.u(0.3L, 1.7L);
        const Complex b = d.c(0.5L, 2), g = d.c(0.5L, 2, 0.2L);
        const Real w = d.u(0.5L, 2);
        const Complex s{g.real() * d.u(0.2L, 0.8L), d.u(-0.5L, 0.5L)};
        const TransformCheck t = mellin_prabhakar_check(a, b, g, w, s, 1e-7L);
        r.add("a=" + fmt(a) + " b=" + fmt(b) + " g=" + fmt(g) + " w=" + fmt(w) + " s=" + fmt(s), t.lhs, t.rhs,
              t.converged ? rel_error(t.lhs, t.rhs) : 1);
    }
    return r.done();
}

// ---- asymptotic-crossover -------------------------------------------------------------

VerifyReport check_crossover(const VerifyOptions&, Real tol) {
    Recorder r("asymptotic-crossover/two-parameter", "large-z expansion (m = 8) matches the series for real z in [8, 30]",
               tol);
    for (Real a : {0.5L, 1.0L, 1.5L})
        for (Real b : {1.0L, 2.0L})
            for (int x = 8; x <= 30; x += 2) {
                const Complex series = ml_eval(MLTwo{a, b}, Complex(x), 1e-18L, 100000).value;
                r.rel("a=" + fmt(a) + " b=" + fmt(b) + " z=" + std::to_string(x), ml2_asymptotic(a, b, Complex(x)), series);
            }
    return r.done();
}

VerifyReport check_multiple_ratio(const VerifyOptions&, Real tol) {
    Recorder r("asymptotic-crossover/multiple-ratio", "series / leading asymptotic of F^(2)_{1,1} at z = 40 lies within 1%",
               tol);
    const Complex s = series_eval(MultipleML{1, 1, 2}, 40.0L).value;
    const Complex f = multiple_ml_asymptotic(2, 1, 1, 40.0L);
    const Real ratio = std::abs(s / f);
    r.add("mu=2 a=1 b=1 z=40", ratio, 1.0L, std::fabs(ratio - 1));
    return r.done();
}

VerifyReport check_prabhakar_polynomial(const VerifyOptions& o, Real tol) {
    Recorder r("asymptotic-crossover/prabhakar-polynomial",
               "non-positive integer gamma gives the terminating polynomial of the direct sum", tol);
    Draw d{rng_for(o, 12)};
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int i = 0; i < 2; ++i) {
                const Complex a = d.c(0.3L, 2);
                const Complex z = std::polar(d.u(0.1L, 6), d.u(-kPi, kPi));
                const PrabhakarAsymptotics p = prabhakar_integer_second(a, n, Complex(-m), z);
                const Complex direct = ml_eval(MLThree{a, Complex(n), Complex(-m)}, z, kDefaultTol, cap_of(o)).value;
                const Complex got = p.value(z);
                const Real err = std::abs(got - direct) / std::max<Real>(1, std::abs(direct));
                r.add("gamma=" + std::to_string(-m) + " n=" + std::to_string(n) + " a=" + fmt(a) + " z=" + fmt(z), got,
                      direct, p.polynomial ? err : 1);
            }
    return r.done();
}

VerifyReport check_sector(const VerifyOptions&, Real tol) {
    Recorder r("asymptotic-crossover/sector", "exponential term for a = 1/2 present iff |arg z| <= delta", tol);
    const Real delta = 3 * kPi / 8;
    for (Real off : {-0.3L, -0.05L, 0.0L, 0.05L, 0.3L}) {
        const Complex z = std::polar(20.0L, delta + off);
        const Complex with = ml2_asymptotic(0.5L, 1, z), without = ml2_asymptotic(0.5L, 1, z, {8, kPi / 4 + 1e-6L});
        const Complex want = off <= 0 ? 2.0L * std::exp(z * z) : Complex{0.0L};
        const Real err = std::abs(with - without - want) / (std::abs(want) + std::abs(without));
        r.add("arg offset=" + fmt(off), with - without, want, err);
    }
    return r.done();
}

// ---- negative-alpha -----------------------------------------------------------------

VerifyReport check_negative_alpha(const VerifyOptions& o, Real tol) {
    Recorder r("negative-alpha/forms", "1/Gamma(b) - E(a,b;1/z) = -(1/z) E(a,a+b;1/z) = -sum z^{-n}/Gamma(a n + b)", tol);
    Draw d{rng_for(o, 13)};
    for (int i = 0; i < 100; ++i) {
        const Real a = d.u(0.2L, 2.5L), b = d.u(-1.5L, 3);
        const Complex z = std::polar(d.u(1, 5), d.u(-kPi, kPi));
        const Complex c = ml_negative_alpha(a, b, z);
        const Complex rec = ml_negative_alpha(a, b, z, NegativeAlphaForm::recurrence);
        const Complex ser = ml_negative_alpha(a, b, z, NegativeAlphaForm::series);
        const std::string in = "a=" + fmt(a) + " b=" + fmt(b) + " z=" + fmt(z);
        r.rel(in + " recurrence", c, rec);
        r.rel(in + " series", ser, rec);
    }
    return r.done();
}

const std::vector<CheckInfo> kChecks = {
    {"recurrence", "two-parameter", 1e-11L, check_recurrence},
    {"reductions", "elementary", 1e-11L, check_elementary},
    {"reductions", "fox-wright", 1e-10L, check_fox_wright},
    {"reductions", "kummer", 1e-10L, check_kummer},
    {"theorem-4x", "rl-termwise", 1e-12L, check_rl_termwise},
    {"theorem-4x", "saigo-quadrature", 1e-5L, check_saigo_quadrature},
    {"theorem-5x-termwise", "coefficients", 1e-12L, check_saigo_maeda_termwise},
    {"theorem-5x-termwise", "reduction-chain", 1e-15L, check_reduction_chain},
    {"contour-agreement", "hankel-gamma", 1e-8L, check_hankel_gamma},
    {"contour-agreement", "hankel-ml2", 1e-8L, check_hankel_ml2},
    {"contour-agreement", "mellin-barnes", 1e-7L, check_mellin_barnes},
    {"transform-checks", "laplace", 1e-5L, check_laplace},
    {"transform-checks", "mellin", 1e-5L, check_mellin},
    {"asymptotic-crossover", "two-parameter", 1e-4L, check_crossover},
    {"asymptotic-crossover", "sector", 1e-12L, check_sector},
    {"asymptotic-crossover", "multiple-ratio", 1e-2L, check_multiple_ratio},
    {"asymptotic-crossover", "prabhakar-polynomial", 1e-15L, check_prabhakar_polynomial},
    {"negative-alpha", "forms", 1e-11L, check_negative_alpha},
};

VerifyReport run_one(const CheckInfo& c, const VerifyOptions& opts) {
    return c.run(opts, opts.tol > 0 ? opts.tol : c.default_tol);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"recurrence",        "reductions",       "theorem-4x",
                                                 "theorem-5x-termwise", "contour-agreement", "transform-checks",
                                                 "asymptotic-crossover", "negative-alpha"};
    return ids;
}

const std::vector<CheckInfo>& verify_checks() { return kChecks; }

std::vector<VerifyReport> run_suite(std::string_view id, const VerifyOptions& opts) {
    std::vector<VerifyReport> out;
    const bool all = id == "all";
    if (!all && std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
        throw std::invalid_argument("unknown verify suite: " + std::string(id));
    for (const std::string& s : suite_ids()) {
        if (!all && s != id) continue;
        for (const CheckInfo& c : kChecks)
            if (c.suite == s) out.push_back(run_one(c, opts));
    }
    return out;
}

VerifyReport run_check(std::string_view id, const VerifyOptions& opts) {
    for (const CheckInfo& c : kChecks)
        if (c.suite + "/" + c.name == id) return run_one(c, opts);
    throw std::invalid_argument("unknown verify check: " + std::string(id));
}

}  // namespace mlfrac
