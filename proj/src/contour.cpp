#include "mlfrac/contour.hpp"

#include <quadmath.h>

#include <vector>

#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"
#include "mlfrac/series.hpp"

namespace mlfrac {

namespace {

struct LoopSum {
    Complex value;
    Real error = 0;
    bool converged = true;
};

// (1/2 pi i) over the loop, with f evaluated from the polar pair (r, phi) so the cut sides stay distinct.
template <class F>
LoopSum integrate_loop(F&& f, const HankelContour& c, Real floor) {
    const int start = std::max(1, c.nodes / 32);
    // cancellation on the arc limits attainable relative accuracy; measure it against the arc peak
    Real peak = 0;
    for (int i = 0; i <= 64; ++i) peak = std::max(peak, std::abs(f(c.eps, -c.delta + 2 * c.delta * i / 64)) * c.eps);
    floor = std::max(floor, peak * 1e-3L);
    auto rays = [&](Real r) {
        return f(r, c.delta) * std::polar(1.0L, c.delta) - f(r, -c.delta) * std::polar(1.0L, -c.delta);
    };
    auto arc = [&](Real phi) { return f(c.eps, phi) * kI * std::polar(c.eps, phi); };
    const QuadResult qa = gl_adaptive(arc, -c.delta, c.delta, c.tol, floor, 1 << 12, start);
    const QuadResult qr = gl_adaptive(rays, c.eps, c.length, c.tol, floor, 1 << 12, start);
    LoopSum out;
    out.value = (qa.value + qr.value) / (2.0L * kPi * kI);
    out.error = (qa.error + qr.error) / (2 * kPi);
    out.converged = qa.converged && qr.converged;
    return out;
}

EvalResult to_eval(const LoopSum& s, long evaluations) {
    return {s.value, evaluations, s.error / std::max<Real>(1.0L, std::abs(s.value)),
            s.converged ? Status::converged : Status::truncated};
}

}  // namespace

EvalResult hankel_reciprocal_gamma(Complex z, const HankelContour& contour) {
    HankelContour c = contour;
    if (c.eps <= 0) c.eps = 1;
    if (!(c.delta > kPi / 2 && c.delta <= kPi)) throw ContourError("hankel: ray angle must lie in (pi/2, pi]");
    auto f = [&](Real r, Real phi) { return std::exp(std::polar(r, phi) - z * Complex{std::log(r), phi}); };
    const LoopSum s = integrate_loop(f, c, 1e-3L);
    if (!s.converged) throw QuadratureError("hankel_reciprocal_gamma: segment quadrature did not converge");
    return to_eval(s, 0);
}

namespace {

using Quad = __float128;
using CQuad = __complex128;

CQuad cq(Quad re, Quad im) {
    CQuad z;
    __real__ z = re;
    __imag__ z = im;
    return z;
}

// 32-point Gauss-Legendre rule on [-1, 1] in quad precision
struct QuadRule {
    Quad x[32], w[32];
    QuadRule() {
        const int n = 32;
        for (int i = 0; i < n; ++i) {
            Quad t = cosq(acosq(-1) * (i + (Quad)0.75) / (n + (Quad)0.5)), dp = 0;
            for (int it = 0; it < 100; ++it) {
                Quad p0 = 1, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const Quad p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1);
                const Quad dt = p1 / dp;
                t -= dt;
                if (fabsq(dt) < (Quad)1e-33) break;
            }
            x[i] = t;
            w[i] = 2 / ((1 - t * t) * dp * dp);
        }
    }
};

// Arc part of the loop in quad precision; the long double arc loses ~e^eps / |result| to rounding.
Complex ml2_arc_quad(Real alpha, Complex beta, Complex z, Real eps, Real delta) {
    static const QuadRule rule;
    const Quad a = alpha, le = logq(eps);
    const CQuad b = cq(beta.real(), beta.imag()), zq = cq(z.real(), z.imag());
    auto f = [&](Quad phi) {
        const CQuad lt = cq(le, phi);
        const CQuad e = cq(eps * cosq(phi), eps * sinq(phi));
        return cexpq((a - b) * lt + e) / (cexpq(a * lt) - zq) * cq(0, 1) * e;
    };
    auto composite = [&](int panels) {
        CQuad sum = 0;
        const Quad h = 2 * (Quad)delta / panels;
        for (int p = 0; p < panels; ++p) {
            const Quad mid = -(Quad)delta + (p + (Quad)0.5) * h;
            for (int i = 0; i < 32; ++i) sum += rule.w[i] * f(mid + rule.x[i] * h / 2);
        }
        return sum * (h / 2);
    };
    CQuad prev = composite(4);
    Quad scale = 0;
    for (int panels = 8; panels <= 4096; panels *= 2) {
        const CQuad cur = composite(panels);
        scale = std::max(scale, cabsq(cur));
        if (cabsq(cur - prev) <= (Quad)1e-30 * std::max<Quad>(scale, expq((Quad)eps))) return {(Real)__real__ cur, (Real)__imag__ cur};
        prev = cur;
    }
    throw QuadratureError("ml2_hankel: quad-precision arc did not converge");
}

}  // namespace

EvalResult ml2_hankel(Real alpha, Complex beta, Complex z, const HankelContour& contour) {
    if (!(alpha > 0 && alpha < 2)) throw SectorError("ml2_hankel: alpha must lie in (0, 2)");
    HankelContour c = contour;
    const Real rstar = std::pow(std::abs(z), 1.0L / alpha);
    if (c.eps <= 0) c.eps = std::max<Real>(1.0L, 1.25L * rstar);
    if (c.eps <= rstar) throw ContourError("ml2_hankel: loop radius does not enclose |t| <= |z|^{1/alpha}");
    if (contour.eps <= 0) c.length = std::max(c.length, c.eps + 40);
    if (c.length <= c.eps) throw ContourError("ml2_hankel: truncation length inside the loop radius");
    bool near_pole = false;
    auto f = [&](Real r, Real phi) {
        const Complex lt{std::log(r), phi};
        const Complex ta = std::exp(alpha * lt);
        const Complex den = ta - z;
        if (std::abs(den) < 1e-10L) near_pole = true;
        return std::exp((alpha - beta) * lt + std::polar(r, phi)) / den;
    };
    LoopSum s = integrate_loop(f, c, 1e-3L);
    if (near_pole) throw PoleProximityError("ml2_hankel: contour node within 1e-10 of a pole");
    if (!s.converged) throw QuadratureError("ml2_hankel: segment quadrature did not converge");
    Real peak = 0;
    for (int i = 0; i <= 64; ++i) peak = std::max(peak, std::abs(f(c.eps, -c.delta + 2 * c.delta * i / 64)) * c.eps);
    if (peak * 1e-18L > 1e-12L * std::abs(s.value)) {
        auto ray_only = [&](Real r) {
            return f(r, c.delta) * std::polar(1.0L, c.delta) - f(r, -c.delta) * std::polar(1.0L, -c.delta);
        };
        const QuadResult qr = gl_adaptive(ray_only, c.eps, c.length, c.tol, 1e-30L, 1 << 12, std::max(1, c.nodes / 32));
        s.value = (ml2_arc_quad(alpha, beta, z, c.eps, c.delta) + qr.value) / (2.0L * kPi * kI);
        s.error = qr.error / (2 * kPi);
    }
    return to_eval(s, 0);
}

namespace {

// Two integration-by-parts terms for \int_T^inf h (sign = +1) or \int_-inf^-T h (sign = -1) of an
// oscillatory integrand h = e^{L}: -sign h v (1 - v') at the end point, v = 1/L'.
template <class H>
Complex oscillatory_tail(H&& h, Real T, int sign) {
    auto v = [&](Real t) {
        const Real d = 1e-5L * std::max<Real>(1, std::fabs(t));
        return 2 * d * h(t) / (h(t + d) - h(t - d));
    };
    const Real x = sign * T, d2 = 1e-2L;
    const Complex vx = v(x), dv = (v(x + d2) - v(x - d2)) / (2 * d2);
    return -static_cast<Real>(sign) * h(x) * vx * (1.0L - dv);
}

// (1/2 pi) \int_{-T}^{T} g(c + i tau) d tau with a truncation check at the ends; with algebraic decay the
// remaining tails are added by integration by parts.
template <class G>
EvalResult vertical_line(G&& g, const MellinBarnesLine& line, bool algebraic = false) {
    const Real T = line.half_height;
    const int start = std::max(1, line.nodes / 32);
    auto h = [&](Real tau) { return g(Complex{line.c, tau}); };
    const QuadResult q = gl_adaptive(h, -T, T, line.tol, 1e-30L, 1 << 12, start);
    EvalResult r;
    Complex total = q.value;
    Real edge = std::max(std::abs(h(T)), std::abs(h(-T)));
    if (algebraic) {
        const Complex up = oscillatory_tail(h, T, 1), down = oscillatory_tail(h, T, -1);
        total += up + down;
        edge = 1e-3L * (std::abs(up) + std::abs(down));
    }
    r.value = total / (2.0L * kPi);
    r.terms_used = q.evaluations;
    r.tail_bound = edge / std::max(std::abs(total), 1e-300L);
    r.status = q.converged && r.tail_bound <= 1e-12L ? Status::converged : Status::truncated;
    return r;
}

Complex log_minus(const Complex& z) {
    if (z == Complex{0.0L}) throw DomainError("Mellin-Barnes: z = 0");
    return std::log(-z);
}

}  // namespace

EvalResult mellin_barnes_prabhakar(Real alpha, Complex beta, Complex gamma, Complex z, const MellinBarnesLine& line) {
    if (!(alpha > 0)) throw ParameterError("mellin_barnes_prabhakar: requires alpha > 0");
    if (!(gamma.real() > 0)) throw ParameterError("mellin_barnes_prabhakar: requires Re(gamma) > 0");
    MellinBarnesLine l = line;
    if (l.c < 0) l.c = gamma.real() / 2;
    if (!(l.c > 0 && l.c < gamma.real())) throw ContourError("mellin_barnes_prabhakar: c must lie in (0, Re gamma)");
    const Complex lz = log_minus(z);
    // integrand decays like exp(-|tau| (pi (1 - alpha/2) - |arg(-z)|)) along the line
    if (std::fabs(lz.imag()) >= kPi * (1 - alpha / 2))
        throw ContourError("mellin_barnes_prabhakar: |arg(-z)| >= pi (1 - alpha/2), line integral diverges");
    // long enough for the exponential decay to pass e^{-40}
    l.half_height = std::max(l.half_height, 40 / (kPi * (1 - alpha / 2) - std::fabs(lz.imag())));
    const Complex lg = log_gamma_mod(gamma);
    auto g = [&](const Complex& s) -> Complex {
        const Complex d = beta - alpha * s;
        if (is_nonpositive_integer(d)) return 0;
        return std::exp(log_gamma_mod(s) + log_gamma_mod(gamma - s) - log_gamma_mod(d) - s * lz - lg);
    };
    return vertical_line(g, l);
}

EvalResult wright_phi_mellin_barnes(Real alpha, Complex beta, Complex z, const MellinBarnesLine& line) {
    if (z == Complex{0.0L}) return {reciprocal_gamma(beta), 0, 0, Status::converged};
    const Complex lz = log_minus(z);
    const bool case_i = alpha > 0 && alpha < 1 && std::fabs(lz.imag()) < (1 - alpha) * kPi / 2;
    MellinBarnesLine l = line;
    if (l.c < 0) l.c = 0.5L;
    const bool case_ii = alpha == 1 && lz.imag() == 0 && beta.real() > 1 + 2 * l.c;
    if (!case_i && !case_ii) throw SectorError("wright_phi_mellin_barnes: outside conditions (i)/(ii)");
    if (!(l.c > 0)) throw ContourError("wright_phi_mellin_barnes: line must pass right of s = 0");
    if (case_i) l.half_height = std::max(l.half_height, 40 / ((1 - alpha) * kPi / 2 - std::fabs(lz.imag())));
    auto g = [&](const Complex& s) -> Complex {
        const Complex d = beta - alpha * s;
        if (is_nonpositive_integer(d)) return 0;
        return std::exp(log_gamma_mod(s) - log_gamma_mod(d) - s * lz);
    };
    return vertical_line(g, l, !case_i);
}

TransformCheck laplace_prabhakar_check(Real alpha, Complex beta, Complex gamma, Complex w, Complex s, Real tol) {
    if (!(alpha > 0) || !(beta.real() > 0) || !(gamma.real() > 0))
        throw ParameterError("laplace_prabhakar_check: requires alpha, Re(beta), Re(gamma) > 0");
    if (!(s.real() > std::pow(std::abs(w), 1.0L / alpha)))
        throw ConvergenceError("laplace_prabhakar_check: requires Re(s) > |w|^{1/alpha}");
    const MLThree p{alpha, beta, gamma};
    const Real margin = s.real() - std::pow(std::abs(w), 1.0L / alpha);
    auto f = [&](Real t) -> Complex {
        if (margin * t > 2000) return 0;  // e^{-st} E(w t^alpha) below e^{-2000}
        const Complex lt = std::log(Complex{t});
        return std::exp(-s * t + (beta - 1.0L) * lt) * ml_eval(p, w * std::pow(t, alpha)).value;
    };
    const QuadResult q = integrate_half_line(f, tol);
    TransformCheck out;
    out.lhs = q.value;
    out.rhs = cpow(s, -beta) * cpow(1.0L - w * cpow(s, -alpha), -gamma);
    out.quad_error = q.error;
    out.converged = q.converged;
    return out;
}

namespace {

// Algebraic expansion of E^gamma_{alpha,beta}(-x) for large x > 0 (0 < alpha < 2, exponentially small terms dropped):
// sum_k (-1)^k Gamma(gamma+k) / (k! Gamma(gamma) Gamma(beta - alpha(gamma+k))) x^{-gamma-k}.
// Returns false when the smallest term is not negligible.
bool prabhakar_algebraic(Real alpha, const Complex& beta, const Complex& gamma, Real x, Complex& out) {
    if (alpha > 1 && std::pow(x, 1.0L / alpha) * std::cos(kPi / alpha) > -60) return false;
    const Complex lg = log_gamma_mod(gamma);
    const Real lx = std::log(x);
    Complex sum = 0;
    Real prev = std::numeric_limits<Real>::infinity();
    for (int k = 0; k < 40; ++k) {
        const Complex e = gamma + static_cast<Real>(k);
        const Complex d = beta - alpha * e;
        if (is_nonpositive_integer(d)) continue;
        const Complex t = (k % 2 ? -1.0L : 1.0L) *
                          std::exp(log_gamma_mod(e) - std::lgamma(static_cast<Real>(k) + 1) - lg - log_gamma_mod(d) - e * lx);
        const Real m = std::abs(t);
        if (m > prev) return false;
        sum += t;
        if (m < 1e-17L * std::abs(sum)) {
            out = sum;
            return true;
        }
        prev = m;
    }
    return false;
}

// E^gamma_{alpha,beta}(-x), x > 0: series while well conditioned, then the algebraic expansion or the Mellin-Barnes line.
Complex prabhakar_negative_axis(Real alpha, const Complex& beta, const Complex& gamma, Real x, Real tol) {
    if (std::pow(x, 1.0L / alpha) <= 12.0L || alpha == 1) return ml_eval(MLThree{alpha, beta, gamma}, -x).value;
    Complex v;
    if (prabhakar_algebraic(alpha, beta, gamma, x, v)) return v;
    return mellin_barnes_prabhakar(alpha, beta, gamma, -x, {-1, 60, 64, std::clamp(tol * 1e-3L, 1e-15L, 1e-10L)}).value;
}

}  // namespace

TransformCheck mellin_prabhakar_check(Real alpha, Complex beta, Complex gamma, Real w, Complex s, Real tol) {
    if (!(alpha > 0 && alpha < 2)) throw ParameterError("mellin_prabhakar_check: requires 0 < alpha < 2");
    if (!(w > 0)) throw ParameterError("mellin_prabhakar_check: requires w > 0");
    if (!(s.real() > 0 && s.real() < gamma.real())) throw StripError("mellin_prabhakar_check: requires 0 < Re(s) < Re(gamma)");
    auto f = [&](Real t) -> Complex {
        return std::exp((s - 1.0L) * std::log(Complex{t})) * prabhakar_negative_axis(alpha, beta, gamma, w * t, tol);
    };
    // [0, 1] by tanh-sinh, [1, T] by Gauss-Legendre in u = log t, [T, inf) from the algebraic expansion
    // E(-x) ~ sum_k (-1)^k Gamma(gamma+k) / (k! Gamma(gamma) Gamma(beta - alpha(gamma+k))) x^{-gamma-k}.
    const Real T = 2000.0L / w;
    const QuadResult head = tanh_sinh([&](Real t, Real, Real) { return f(t); }, 0.0L, 1.0L, tol);
    auto g = [&](Real u) {
        const Real t = std::exp(u);
        return f(t) * t;
    };
    QuadResult mid;
    mid.converged = true;
    const Real U = std::log(T);
    const int pieces = static_cast<int>(std::ceil(U));
    for (int i = 0; i < pieces; ++i) {
        const Real lo = U * i / pieces, hi = U * (i + 1) / pieces;
        const QuadResult p = gl_adaptive(g, lo, hi, tol * 0.1L, std::abs(head.value + mid.value), 1 << 8);
        mid.value += p.value;
        mid.error += p.error;
        mid.converged = mid.converged && p.converged;
    }
    Complex tail = 0;
    const Complex lg = log_gamma_mod(gamma);
    for (int k = 0; k < 12; ++k) {
        const Complex e = gamma + static_cast<Real>(k);
        const Complex d = beta - alpha * e;
        if (is_nonpositive_integer(d)) continue;
        const Complex ck = (k % 2 ? -1.0L : 1.0L) * std::exp(log_gamma_mod(e) - std::lgamma(static_cast<Real>(k) + 1) - lg - log_gamma_mod(d));
        // \int_T^inf t^{s-1} (w t)^{-e} dt = w^{-e} T^{s-e} / (e - s)
        tail += ck * std::exp(-e * std::log(w) + (s - e) * std::log(T)) / (e - s);
    }
    TransformCheck out;
    out.lhs = head.value + mid.value + tail;
    out.rhs = std::exp(log_gamma_mod(s) + log_gamma_mod(gamma - s) - lg - s * std::log(w)) * reciprocal_gamma(beta - alpha * s);
    out.quad_error = head.error + mid.error;
    out.converged = head.converged && mid.converged;
    return out;
}

}  // namespace mlfrac
