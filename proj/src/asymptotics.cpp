#include "mlfrac/asymptotics.hpp"

#include <cmath>

#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"
#include "mlfrac/series.hpp"

namespace mlfrac {

namespace {

Complex algebraic_sum(Real alpha, const Complex& beta, const Complex& z, int m) {
    Complex sum = 0;
    const Complex iz = 1.0L / z;
    Complex zn = 1;
    for (int n = 1; n <= m; ++n) {
        zn *= iz;
        sum += zn * reciprocal_gamma(beta - alpha * static_cast<Real>(n));
    }
    return sum;
}

}  // namespace

Complex ml2_asymptotic(Real alpha, Complex beta, Complex z, const AsymptoticConfig& cfg) {
    if (!(alpha > 0 && alpha < 2)) throw SectorError("ml2_asymptotic: alpha must lie in (0, 2)");
    if (z == Complex{0.0L}) throw DomainError("ml2_asymptotic: z = 0");
    const Real lo = kPi * alpha / 2, hi = std::min(kPi, kPi * alpha);
    const Real delta = cfg.sector < 0 ? (lo + hi) / 2 : cfg.sector;
    if (!(delta > lo && delta < hi)) throw SectorError("ml2_asymptotic: sector angle outside (pi alpha/2, min(pi, pi alpha))");
    if (cfg.m < 0) throw ParameterError("ml2_asymptotic: negative term count");
    const Complex lz = std::log(z);
    Complex out = -algebraic_sum(alpha, beta, z, cfg.m);
    if (std::fabs(lz.imag()) <= delta) out += std::exp((1.0L - beta) * lz / alpha + std::exp(lz / alpha)) / alpha;
    return out;
}

Complex ml2_asymptotic_large_alpha(Real alpha, Complex beta, Complex z, int m) {
    if (!(alpha >= 2)) throw ParameterError("ml2_asymptotic_large_alpha: requires alpha >= 2");
    if (z == Complex{0.0L}) throw DomainError("ml2_asymptotic_large_alpha: z = 0");
    if (m < 0) throw ParameterError("ml2_asymptotic_large_alpha: negative term count");
    const Complex lz = std::log(z);
    const Real bound = 3 * kPi * alpha / 4;
    Complex out = -algebraic_sum(alpha, beta, z, m);
    const long n_lo = static_cast<long>(std::ceil((-bound - lz.imag()) / (2 * kPi)));
    const long n_hi = static_cast<long>(std::floor((bound - lz.imag()) / (2 * kPi)));
    for (long n = n_lo; n <= n_hi; ++n) {
        if (!(std::fabs(lz.imag() + 2 * kPi * n) < bound)) continue;
        const Complex lw = (lz + Complex{0.0L, 2 * kPi * n}) / alpha;
        out += std::exp((1.0L - beta) * lw + std::exp(lw)) / alpha;
    }
    return out;
}

Complex ml_negative_alpha(Real alpha, Real beta, Complex z, NegativeAlphaForm form) {
    if (!(alpha > 0)) throw ParameterError("ml_negative_alpha: requires alpha > 0");
    if (z == Complex{0.0L}) throw DomainError("ml_negative_alpha: z = 0");
    const Complex w = 1.0L / z;
    switch (form) {
        case NegativeAlphaForm::complement:
            return reciprocal_gamma(beta) - ml_eval(MLTwo{alpha, beta}, w).value;
        case NegativeAlphaForm::recurrence:
            return -w * ml_eval(MLTwo{alpha, alpha + beta}, w).value;
        case NegativeAlphaForm::series: {
            Complex sum = 0, wn = 1;
            int small = 0;
            for (long n = 1; n < kDefaultCap; ++n) {
                wn *= w;
                const Complex t = wn * reciprocal_gamma(alpha * n + beta);
                sum += t;
                if (std::abs(t) <= kDefaultTol * std::abs(sum) && n > 2) {
                    if (++small >= 2) return -sum;
                } else {
                    small = 0;
                }
            }
            return -sum;
        }
    }
    return 0;
}

Real prabhakar_large_beta(Real alpha, Real beta, Real gamma, Real a, Real x) {
    if (!(alpha > 0 && beta > 0 && gamma > 0) || a < 0)
        throw ParameterError("prabhakar_large_beta: requires alpha, beta, gamma > 0, a >= 0");
    return std::pow(1 + a * std::pow(x / alpha, gamma), -beta);
}

Complex PrabhakarAsymptotics::value(const Complex& z) const {
    return leading * (p == 0 ? Complex{1.0L} : z) * (1.0L + theta);
}

PrabhakarAsymptotics prabhakar_integer_second(Complex alpha, int n, Complex gamma, Complex z) {
    if (!(alpha.real() > 0)) throw ParameterError("prabhakar_integer_second: requires Re(alpha) > 0");
    if (n < 0) throw ParameterError("prabhakar_integer_second: n must be a nonnegative integer");
    PrabhakarAsymptotics out;
    out.p = n == 0 ? 1 : 0;
    if (std::abs(gamma) < kPoleTol) {
        out.p = 0;
        out.polynomial = true;
        out.leading = n > 0 ? reciprocal_gamma(static_cast<Real>(n)) : Complex{0.0L};
        return out;
    }
    const bool poly = is_nonpositive_integer(gamma);
    const long m = poly ? -std::lround(gamma.real()) : -1;
    out.polynomial = poly;
    const Real nr = static_cast<Real>(n);
    out.leading = pochhammer(gamma, out.p) * reciprocal_gamma(alpha * static_cast<Real>(out.p) + nr);
    if (poly && m < out.p) {
        out.leading = 0;
        return out;
    }
    // t_k / t_{k-1} = (gamma + k - 1) / k * z * Gamma(alpha (k-1) + n) / Gamma(alpha k + n)
    Complex t = 1, sum = 0;
    int small = 0;
    for (long k = out.p + 1; k < kDefaultCap; ++k) {
        if (poly && k > m) break;
        const Real kr = static_cast<Real>(k);
        t *= (gamma + (kr - 1)) / kr * z *
             std::exp(log_gamma_mod(alpha * (kr - 1) + nr) - log_gamma_mod(alpha * kr + nr));
        sum += t;
        out.terms = k - out.p;
        if (std::abs(t) <= kDefaultTol * std::abs(1.0L + sum)) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    out.theta = sum;
    return out;
}

Complex multiple_ml_asymptotic(Real mu, Real alpha, Real beta, Complex z) {
    if (!(mu > 0 && alpha > 0 && beta > 0)) throw ParameterError("multiple_ml_asymptotic: requires mu, alpha, beta > 0");
    if (z == Complex{0.0L}) throw DomainError("multiple_ml_asymptotic: z = 0");
    const Real am = alpha * mu;
    const Complex lz = std::log(z);
    const Real arg = std::fabs(lz.imag());
    const bool inside = am < 2 ? arg < am * kPi / 2 : am < 4 ? arg <= (2 - am / 2) * kPi : arg == 0;
    if (!inside) throw SectorError("multiple_ml_asymptotic: arg z outside the sector");
    const Real pre = std::pow(2 * kPi, (1 - mu) / 2) / (alpha * std::sqrt(mu));
    return pre * std::exp((mu - 2 * beta * mu + 1) / (2 * am) * lz + mu * std::exp(lz / am));
}

TransformCheck multiple_ml_laplace_check(Real mu, Real z, Real tol) {
    if (!(mu > 0) || !(z > 0)) throw ParameterError("multiple_ml_laplace_check: requires mu > 0, z > 0");
    const MultipleML upper{1, 1, mu + 1};
    auto f = [&](Real t) -> Complex {
        // F^{(mu+1)}(t) ~ exp((mu+1) t^{1/(mu+1)})
        if (t / z - (mu + 1) * std::pow(t, 1 / (mu + 1)) > 2000) return 0;
        return std::exp(-t / z) * series_eval(upper, t).value;
    };
    const QuadResult q = integrate_half_line(f, tol);
    TransformCheck out;
    out.lhs = q.value;
    out.rhs = z * series_eval(MultipleML{1, 1, mu}, z).value;
    out.quad_error = q.error;
    out.converged = q.converged;
    return out;
}

}  // namespace mlfrac
