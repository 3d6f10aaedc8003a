#include "mlfrac/series.hpp"

#include <vector>

#include "mlfrac/detail/summation.hpp"
#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"

namespace mlfrac {

std::string family_name(const MLParams& p) {
    static const char* names[] = {"ml1", "ml2", "ml3", "ml4", "ml6", "kilbas-saigo", "multi-index"};
    return names[p.index()];
}

std::string family_name(const SeriesInstance& s) {
    static const char* names[] = {"mseries", "kfunction", "wright-phi", "bessel-wright", "lommel-wright", "multiple-ml"};
    return names[s.index()];
}

namespace {

using detail::Term;

// z^n exp(-log Gamma(alpha n + beta)); structural zero at poles.
Term power_over_gamma(const Complex& logz, bool zero_z, long n, const Complex& alpha, const Complex& beta) {
    const Complex x = alpha * static_cast<Real>(n) + beta;
    if (is_nonpositive_integer(x)) return {0, true};
    if (zero_z) return {n == 0 ? std::exp(-log_gamma_mod(x)) : Complex{0.0L}};
    return {std::exp(static_cast<Real>(n) * logz - log_gamma_mod(x))};
}

Complex safe_log(const Complex& z) { return z == Complex{0.0L} ? Complex{0.0L} : std::log(z); }

bool is_real(const Complex& x) { return x.imag() == 0.0L; }

// Kummer transformation for alpha = 1: E^g_{1,b}(z) = e^z 1F1(b - g; b; -z) / Gamma(b).
EvalResult kummer_alpha_one(const Complex& beta, const Complex& gam, const Complex& z, Real tol, long cap) {
    EvalResult r = pfq_series({beta - gam}, {beta}, -z, tol, cap);
    r.value *= std::exp(z) * reciprocal_gamma(beta);
    return r;
}

bool kummer_applies(const Complex& alpha, const Complex& beta, const Complex& gam, const Complex& z) {
    return alpha == Complex{1.0L} && z.real() < 0 && !is_nonpositive_integer(beta) && !is_nonpositive_integer(gam);
}

void check_alpha_positive(const Complex& alpha, const char* who) {
    if (alpha.real() <= 0) throw ParameterError(std::string(who) + ": requires Re(alpha) > 0");
}

EvalResult eval_two(const Complex& alpha, const Complex& beta, const Complex& z, Real tol, long cap) {
    if (z == Complex{0.0L}) return {reciprocal_gamma(beta), 1, 0, Status::converged};
    if (alpha.real() < 0) throw DivergenceError("ml_eval: Re(alpha) < 0 diverges for z != 0");
    if (alpha.real() == 0) {
        const Real radius = std::exp(kPi / 2 * std::fabs(alpha.imag()));
        if (std::abs(z) >= radius) throw DivergenceError("ml_eval: Re(alpha) = 0 and |z| >= exp(pi |Im alpha| / 2)");
        return ml2_series(alpha, beta, z, tol, cap);
    }
    if (kummer_applies(alpha, beta, 1.0L, z)) return kummer_alpha_one(beta, 1.0L, z, tol, cap);
    const Complex logz = std::log(z);
    auto s = detail::sum_series([&](long n) { return power_over_gamma(logz, false, n, alpha, beta); }, tol, cap);
    // Severe cancellation: switch to the loop integral, which has none.
    const Real condition = s.abs_sum / std::max(std::abs(s.value), std::numeric_limits<Real>::min());
    if (condition > 1e5L && is_real(alpha) && alpha.real() > 0 && alpha.real() < 2 && alpha.real() != 1) {
        return ml2_loop(alpha.real(), beta, z);
    }
    return detail::to_result(s);
}

EvalResult eval_three(const Complex& alpha, const Complex& beta, const Complex& gam, const Complex& z, Real tol,
                      long cap) {
    check_alpha_positive(alpha, "ml_eval(Three)");
    if (kummer_applies(alpha, beta, gam, z)) return kummer_alpha_one(beta, gam, z, tol, cap);
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    const bool terminating = is_nonpositive_integer(gam);
    Complex ratio = 1;  // (gamma)_n / n!
    auto term = [&](long n) -> Term {
        if (n > 0) ratio *= (gam + static_cast<Real>(n - 1)) / static_cast<Real>(n);
        if (terminating && ratio == Complex{0.0L}) return {0, false, true};
        Term t = power_over_gamma(logz, zero_z, n, alpha, beta);
        t.value *= ratio;
        return t;
    };
    return detail::to_result(detail::sum_series(term, tol, cap));
}

EvalResult eval_four(const MLFour& p, const Complex& z, Real tol, long cap) {
    if (std::min({p.alpha.real(), p.beta.real(), p.gamma.real(), p.delta.real()}) <= 0)
        throw ParameterError("ml_eval(Four): requires min Re(alpha, beta, gamma, delta) > 0");
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    Complex ratio = 1;  // (gamma)_n / (delta)_n
    auto term = [&](long n) -> Term {
        if (n > 0) ratio *= (p.gamma + static_cast<Real>(n - 1)) / (p.delta + static_cast<Real>(n - 1));
        Term t = power_over_gamma(logz, zero_z, n, p.alpha, p.beta);
        t.value *= ratio;
        return t;
    };
    return detail::to_result(detail::sum_series(term, tol, cap));
}

EvalResult eval_six(const MLSix& p, const Complex& z, Real tol, long cap) {
    if (std::min({p.alpha.real(), p.beta.real(), p.gamma.real(), p.delta.real()}) <= 0)
        throw ParameterError("ml_eval(Six): requires min Re(alpha, beta, gamma, delta) > 0");
    if (!(p.r > 0) || !(p.s > 0)) throw ParameterError("ml_eval(Six): r, s must be positive reals");
    if (p.s > p.alpha.real() + p.r) throw ParameterError("ml_eval(Six): requires s <= Re(alpha) + r");
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    const Complex lg_gamma = log_gamma_mod(p.gamma);
    const Complex lg_delta = log_gamma_mod(p.delta);
    auto term = [&](long n) -> Term {
        const Real nn = static_cast<Real>(n);
        const Complex x = p.alpha * nn + p.beta;
        if (is_nonpositive_integer(x)) return {0, true};
        if (zero_z) return {n == 0 ? reciprocal_gamma(p.beta) : Complex{0.0L}};
        // (gamma)_{sn} / (delta)_{rn} through the Gamma-ratio form, all in the log domain
        const Complex lr = log_gamma_mod(p.gamma + p.s * nn) - lg_gamma - log_gamma_mod(p.delta + p.r * nn) + lg_delta;
        return {std::exp(lr + nn * logz - log_gamma_mod(x))};
    };
    return detail::to_result(detail::sum_series(term, tol, cap));
}

EvalResult eval_kilbas_saigo(const KilbasSaigo& p, const Complex& z, Real tol, long cap) {
    if (!(p.alpha > 0) || !(p.m > 0)) throw ParameterError("ml_eval(KilbasSaigo): requires alpha > 0, m > 0");
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    Complex logc = 0;
    bool vanished = false;
    auto term = [&](long k) -> Term {
        if (k > 0) {
            // c_k = c_{k-1} Gamma(alpha((k-1)m + l) + 1) / Gamma(alpha((k-1)m + l + 1) + 1)
            const Complex x = p.alpha * (static_cast<Real>(k - 1) * p.m + p.l) + 1.0L;
            if (is_nonpositive_integer(x)) throw ParameterError("ml_eval(KilbasSaigo): Gamma argument at a pole");
            const Complex y = x + p.alpha;
            if (is_nonpositive_integer(y)) vanished = true;
            if (vanished) return {0, false, true};
            logc += log_gamma_mod(x) - log_gamma_mod(y);
        }
        if (zero_z) return {k == 0 ? Complex{1.0L} : Complex{0.0L}};
        return {std::exp(logc + static_cast<Real>(k) * logz)};
    };
    return detail::to_result(detail::sum_series(term, tol, cap));
}

EvalResult eval_multi_index(const MultiIndex& p, const Complex& z, Real tol, long cap) {
    if (p.pairs.empty()) throw ParameterError("ml_eval(MultiIndex): no parameter pairs");
    Real sigma = 0, sq = 0;
    for (const auto& [a, b] : p.pairs) {
        sigma += a;
        sq += a * a;
    }
    if (sq == 0) throw ParameterError("ml_eval(MultiIndex): all alpha_j vanish");
    const bool zero_z = z == Complex{0.0L};
    if (sigma <= 0 && !zero_z) throw DivergenceError("ml_eval(MultiIndex): Sigma_n <= 0");
    const Complex logz = safe_log(z);
    auto term = [&](long k) -> Term {
        const Real kk = static_cast<Real>(k);
        Complex acc = zero_z ? Complex{0.0L} : kk * logz;
        for (const auto& [a, b] : p.pairs) {
            const Complex x = a * kk + b;
            if (is_nonpositive_integer(x)) return {0, true};
            acc -= log_gamma_mod(x);
        }
        if (zero_z && k > 0) return {0};
        return {std::exp(acc)};
    };
    return detail::to_result(detail::sum_series(term, tol, cap));
}

}  // namespace

EvalResult ml2_series(Complex alpha, Complex beta, Complex z, Real tol, long cap) {
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    return detail::to_result(
        detail::sum_series([&](long n) { return power_over_gamma(logz, zero_z, n, alpha, beta); }, tol, cap));
}

EvalResult ml2_loop(Real alpha, Complex beta, Complex z, Real tol) {
    if (!(alpha > 0 && alpha < 2)) throw SectorError("ml2_loop: alpha must lie in (0, 2)");
    if (z == Complex{0.0L}) return {reciprocal_gamma(beta), 0, 0, Status::converged};
    // poles of 1/(t^alpha - z) in the cut plane: |z|^{1/alpha} exp(i (arg z + 2 pi k) / alpha)
    const Real rstar = std::pow(std::abs(z), 1.0L / alpha);
    std::vector<Real> angles;
    for (int k = -2; k <= 2; ++k) {
        const Real th = (std::arg(z) + 2 * kPi * k) / alpha;
        if (std::fabs(th) < kPi) angles.push_back(th);
    }
    // ray angle in (pi/2, pi] as far as possible from every pole direction
    Real delta = kPi, best = -1;
    for (Real frac : {1.0L, 11.0L / 12, 5.0L / 6, 3.0L / 4, 2.0L / 3, 7.0L / 12}) {
        Real d = kPi;
        for (Real th : angles) d = std::min(d, std::fabs(frac * kPi - std::fabs(th)));
        if (d > best + 1e-12L) {
            best = d;
            delta = frac * kPi;
        }
    }
    const Real eps = std::min<Real>(1.0L, rstar / 2);
    const Complex a_minus_b = alpha - beta;
    auto f_polar = [&](Real r, Real phi) {
        const Real lr = std::log(r);
        const Complex tpow = std::exp(a_minus_b * Complex{lr, phi});
        const Complex ta = std::exp(alpha * Complex{lr, phi});
        const Complex t = std::polar(r, phi);
        return tpow * std::exp(t) / (ta - z);
    };
    auto rays = [&](Real r) {
        return f_polar(r, delta) * std::polar(1.0L, delta) - f_polar(r, -delta) * std::polar(1.0L, -delta);
    };
    auto arc = [&](Real phi) { return f_polar(eps, phi) * kI * std::polar(eps, phi); };
    const Real floor = 1e-30L;
    const QuadResult qa = gl_adaptive(arc, -delta, delta, tol, floor, 1 << 10);
    const QuadResult qr = integrate_ray(rays, eps, tol, floor, 1.0L);
    Complex value = (qa.value + qr.value) / (2.0L * kPi * kI);
    for (Real th : angles) {
        if (std::fabs(th) >= delta) continue;
        const Complex tk = std::polar(rstar, th);
        value += std::exp((1.0L - beta) * Complex{std::log(rstar), th} + tk) / alpha;
    }
    EvalResult r;
    r.value = value;
    r.terms_used = 0;
    r.tail_bound = (qa.error + qr.error) / (2 * kPi * std::max<Real>(1.0L, std::abs(value)));
    r.status = (qa.converged && qr.converged) ? Status::converged : Status::truncated;
    return r;
}

EvalResult ml_eval(const MLParams& params, Complex z, Real tol, long cap) {
    return std::visit(
        [&](const auto& p) -> EvalResult {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, MLOne>) {
                return eval_two(p.alpha, 1.0L, z, tol, cap);
            } else if constexpr (std::is_same_v<T, MLTwo>) {
                return eval_two(p.alpha, p.beta, z, tol, cap);
            } else if constexpr (std::is_same_v<T, MLThree>) {
                return eval_three(p.alpha, p.beta, p.gamma, z, tol, cap);
            } else if constexpr (std::is_same_v<T, MLFour>) {
                return eval_four(p, z, tol, cap);
            } else if constexpr (std::is_same_v<T, MLSix>) {
                return eval_six(p, z, tol, cap);
            } else if constexpr (std::is_same_v<T, KilbasSaigo>) {
                return eval_kilbas_saigo(p, z, tol, cap);
            } else {
                return eval_multi_index(p, z, tol, cap);
            }
        },
        params);
}

namespace {

// Growth of the k-th term is (k!)^{p-q} / Gamma(Re(alpha) k): entire when Re(alpha) > p - q, a disk of radius
// alpha^alpha when Re(alpha) = p - q (boundary rule as for Fox-Wright), divergent otherwise.
// Returns true when z sits on the boundary circle.
bool check_mk_domain(const std::vector<Complex>& a, const std::vector<Complex>& b, const Complex& alpha,
                     const Complex& beta, const Complex* gam, const Complex& z) {
    for (const auto& x : b)
        if (is_nonpositive_integer(x)) throw ParameterError("series_eval: bottom parameter in Z_{<=0}");
    for (const auto& x : a)
        if (is_nonpositive_integer(x)) return false;  // terminating
    if (gam && is_nonpositive_integer(*gam)) return false;
    if (z == Complex{0.0L}) return false;
    const Real excess = static_cast<Real>(a.size()) - static_cast<Real>(b.size());
    const Real ar = alpha.real();
    if (ar > excess + 1e-12L) return false;
    if (ar < excess - 1e-12L) throw DivergenceError("series_eval: Re(alpha) < p - q, series diverges for z != 0");
    const Real radius = std::pow(ar, ar);
    const Real r = std::abs(z);
    if (r > radius * (1.0L + 1e-12L)) throw DivergenceError("series_eval: |z| outside the disk of convergence");
    if (r < radius * (1.0L - 1e-12L)) return false;
    // Fox-Wright mu of the reduced series
    Complex mu = beta + (excess / 2.0L);
    for (const auto& x : b) mu += x;
    for (const auto& x : a) mu -= x;
    mu -= gam ? *gam : Complex{1.0L};
    if (mu.real() > 0.5L) return true;
    throw DivergenceError("series_eval: boundary point with Re(mu) <= 1/2");
}

EvalResult eval_mk(const std::vector<Complex>& a, const std::vector<Complex>& b, const Complex& alpha,
                   const Complex& beta, const Complex* gam, const Complex& z, Real tol, long cap) {
    check_alpha_positive(alpha, "series_eval");
    const bool boundary = check_mk_domain(a, b, alpha, beta, gam, z);
    const bool zero_z = z == Complex{0.0L};
    const Complex logz = safe_log(z);
    Complex log_ratio = 0;  // log of prod (a)_n / prod (b)_n [* (gamma)_n / n!], modulo 2 pi i
    auto term = [&](long n) -> Term {
        if (n > 0) {
            const Real k = static_cast<Real>(n - 1);
            for (const auto& x : a) {
                if (x + k == Complex{0.0L}) return {0, false, true};
                log_ratio += std::log(x + k);
            }
            for (const auto& x : b) log_ratio -= std::log(x + k);
            if (gam) {
                if (*gam + k == Complex{0.0L}) return {0, false, true};
                log_ratio += std::log(*gam + k) - std::log(static_cast<Real>(n));
            }
        }
        const Complex x = alpha * static_cast<Real>(n) + beta;
        if (is_nonpositive_integer(x)) return {0, true};
        if (zero_z) return {n == 0 ? reciprocal_gamma(beta) : Complex{0.0L}};
        return {std::exp(log_ratio + static_cast<Real>(n) * logz - log_gamma_mod(x))};
    };
    EvalResult r = detail::to_result(detail::sum_series(term, tol, cap));
    if (boundary) r.status = Status::conditional;
    return r;
}

}  // namespace

EvalResult series_eval(const SeriesInstance& inst, Complex z, Real tol, long cap) {
    return std::visit(
        [&](const auto& s) -> EvalResult {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MSeries>) {
                return eval_mk(s.a, s.b, s.alpha, s.beta, nullptr, z, tol, cap);
            } else if constexpr (std::is_same_v<T, KFunction>) {
                return eval_mk(s.a, s.b, s.alpha, s.beta, &s.gamma, z, tol, cap);
            } else if constexpr (std::is_same_v<T, WrightPhi> || std::is_same_v<T, BesselWright>) {
                Real alpha;
                Complex beta, w;
                if constexpr (std::is_same_v<T, WrightPhi>) {
                    alpha = s.alpha;
                    beta = s.beta;
                    w = z;
                } else {
                    alpha = s.mu;
                    beta = s.rho + 1.0L;
                    w = -z;
                }
                if (alpha < -1) throw DivergenceError("series_eval: Wright phi with alpha < -1");
                if (alpha == -1 && std::abs(w) > 1.0L) throw DivergenceError("series_eval: alpha = -1, |z| > 1");
                const bool zero_z = w == Complex{0.0L};
                const Complex logw = safe_log(w);
                auto term = [&](long n) -> Term {
                    Term t = power_over_gamma(logw, zero_z, n, alpha, beta);
                    t.value *= std::exp(-std::lgamma(static_cast<Real>(n) + 1.0L));
                    return t;
                };
                return detail::to_result(detail::sum_series(term, tol, cap));
            } else if constexpr (std::is_same_v<T, LommelWright>) {
                if (!(s.mu > 0) || s.nu < 1) throw ParameterError("series_eval: Lommel-Wright needs mu > 0, nu in N");
                const Complex w = -z * z / 4.0L;
                const bool zero_z = w == Complex{0.0L};
                const Complex logw = safe_log(w);
                auto term = [&](long n) -> Term {
                    const Real nn = static_cast<Real>(n);
                    const Complex x1 = s.lambda + nn + 1.0L;
                    const Complex x2 = s.rho + s.lambda + s.mu * nn + 1.0L;
                    if (is_nonpositive_integer(x1) || is_nonpositive_integer(x2)) return {0, true};
                    if (zero_z && n > 0) return {0};
                    const Complex acc = (zero_z ? Complex{0.0L} : nn * logw) -
                                        static_cast<Real>(s.nu) * log_gamma_mod(x1) - log_gamma_mod(x2);
                    return {std::exp(acc)};
                };
                EvalResult r = detail::to_result(detail::sum_series(term, tol, cap));
                r.value *= cpow(z / 2.0L, s.rho + 2.0L * s.lambda);
                return r;
            } else {
                if (!(s.mu > 0) || !(s.alpha > 0) || !(s.beta > 0))
                    throw ParameterError("series_eval: multiple M-L needs alpha, beta, mu > 0");
                const bool zero_z = z == Complex{0.0L};
                const Complex logz = safe_log(z);
                auto term = [&](long n) -> Term {
                    const Real x = s.alpha * static_cast<Real>(n) + s.beta;
                    if (zero_z) return {n == 0 ? std::exp(-s.mu * std::lgamma(x)) : Complex{0.0L}};
                    return {std::exp(static_cast<Real>(n) * logz - s.mu * std::lgamma(x))};
                };
                return detail::to_result(detail::sum_series(term, tol, cap));
            }
        },
        inst);
}

namespace {

Real real_weight(const Complex& alpha, const char* who) {
    if (alpha.imag() != 0) throw UnsupportedReduction(std::string(who) + ": Fox-Wright weights must be real");
    return alpha.real();
}

Complex gamma_quotient(const std::vector<Complex>& b, const std::vector<Complex>& a) {
    Complex f = 1;
    for (const auto& x : b) {
        if (is_nonpositive_integer(x)) throw UnsupportedReduction("reduce: Gamma(b_j) at a pole");
        f *= gamma(x);
    }
    for (const auto& x : a) {
        if (is_nonpositive_integer(x)) throw UnsupportedReduction("reduce: terminating series (a_i in Z_{<=0})");
        f *= reciprocal_gamma(x);
    }
    return f;
}

}  // namespace

FoxWrightSpec reduce_to_fox_wright(const MLParams& params) {
    return std::visit(
        [](const auto& p) -> FoxWrightSpec {
            using T = std::decay_t<decltype(p)>;
            FoxWrightSpec s;
            if constexpr (std::is_same_v<T, MLOne>) {
                s.upper = {{1.0L, 1}};
                s.lower = {{1.0L, real_weight(p.alpha, "reduce(One)")}};
            } else if constexpr (std::is_same_v<T, MLTwo>) {
                s.upper = {{1.0L, 1}};
                s.lower = {{p.beta, real_weight(p.alpha, "reduce(Two)")}};
            } else if constexpr (std::is_same_v<T, MLThree>) {
                if (is_nonpositive_integer(p.gamma)) throw UnsupportedReduction("reduce(Three): gamma in Z_{<=0}");
                s.prefactor = reciprocal_gamma(p.gamma);
                s.upper = {{p.gamma, 1}};
                s.lower = {{p.beta, real_weight(p.alpha, "reduce(Three)")}};
            } else if constexpr (std::is_same_v<T, MultiIndex>) {
                s.upper = {{1.0L, 1}};
                for (const auto& [a, b] : p.pairs) s.lower.push_back({b, a});
            } else {
                throw UnsupportedReduction("reduce: no Fox-Wright identity for this family");
            }
            return s;
        },
        params);
}

FoxWrightSpec reduce_to_fox_wright(const SeriesInstance& inst) {
    return std::visit(
        [](const auto& p) -> FoxWrightSpec {
            using T = std::decay_t<decltype(p)>;
            FoxWrightSpec s;
            if constexpr (std::is_same_v<T, MSeries> || std::is_same_v<T, KFunction>) {
                s.prefactor = gamma_quotient(p.b, p.a);
                for (const auto& x : p.a) s.upper.push_back({x, 1});
                for (const auto& x : p.b) s.lower.push_back({x, 1});
                if constexpr (std::is_same_v<T, KFunction>) {
                    if (is_nonpositive_integer(p.gamma)) throw UnsupportedReduction("reduce(K): gamma in Z_{<=0}");
                    s.prefactor *= reciprocal_gamma(p.gamma);
                    s.upper.push_back({p.gamma, 1});
                    s.upper.push_back({1.0L, 1});
                    s.lower.push_back({1.0L, 1});
                } else {
                    s.upper.push_back({1.0L, 1});
                }
                s.lower.push_back({p.beta, real_weight(p.alpha, "reduce(M/K)")});
            } else if constexpr (std::is_same_v<T, WrightPhi>) {
                s.lower = {{p.beta, p.alpha}};
            } else if constexpr (std::is_same_v<T, BesselWright>) {
                s.lower = {{p.rho + 1.0L, p.mu}};
                s.argument.coefficient = -1.0L;
            } else if constexpr (std::is_same_v<T, LommelWright>) {
                // the (z/2)^{rho + 2 lambda} factor is not a constant prefactor
                throw UnsupportedReduction("reduce(Lommel-Wright): z-dependent prefactor");
            } else {
                throw UnsupportedReduction("reduce(multiple M-L): Gamma powers are not Fox-Wright");
            }
            return s;
        },
        inst);
}

namespace {

// (z/2)^nu sum_k w^k / (k! Gamma(nu + k + 1)), w = -+ z^2/4
Complex bessel_series(const Complex& nu, const Complex& z, const Complex& w, Real tol) {
    Complex pw = 1;  // w^k / k!
    Complex sum = 0;
    Real largest = 0;
    for (long k = 0; k < 5000; ++k) {
        if (k > 0) pw *= w / static_cast<Real>(k);
        const Complex t = pw * reciprocal_gamma(nu + static_cast<Real>(k) + 1.0L);
        sum += t;
        largest = std::max(largest, std::abs(t));
        if (k > 2 && std::abs(t) < tol * std::max(largest, std::abs(sum)) &&
            std::abs(w) < static_cast<Real>(k)) break;
    }
    return cpow(z / 2.0L, nu) * sum;
}

}  // namespace

Complex bessel_j(Complex nu, Complex z, Real tol) { return bessel_series(nu, z, -z * z / 4.0L, tol); }

Complex bessel_i(Complex nu, Complex z, Real tol) { return bessel_series(nu, z, z * z / 4.0L, tol); }

}  // namespace mlfrac
