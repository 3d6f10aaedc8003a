#pragma once

#include <cmath>
#include <vector>

#include "mlfrac/errors.hpp"
#include "mlfrac/types.hpp"

namespace mlfrac {

struct GaussRule {
    std::vector<Real> x, w;  // nodes and weights on [-1, 1]
};

// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

// The 32-point rule used by every composite integrator.
const GaussRule& gl32();

struct QuadResult {
    Complex value;
    Real error = 0;
    long evaluations = 0;
    bool converged = false;
};

// Composite 32-point Gauss-Legendre on [a, b] with `panels` equal panels.
template <class F>
Complex gl_composite(F&& f, Real a, Real b, int panels) {
    const GaussRule& g = gl32();
    const Real h = (b - a) / static_cast<Real>(panels);
    Complex total = 0;
    for (int p = 0; p < panels; ++p) {
        const Real lo = a + h * static_cast<Real>(p);
        const Real c = lo + 0.5L * h;
        Complex s = 0;
        for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + 0.5L * h * g.x[i]);
        total += 0.5L * h * s;
    }
    return total;
}

// Panel doubling until successive estimates differ by < tol * max(|I|, floor).
template <class F>
QuadResult gl_adaptive(F&& f, Real a, Real b, Real tol, Real floor = 0, int max_panels = 1 << 12, int start = 1) {
    QuadResult r;
    int panels = start;
    Complex prev = gl_composite(f, a, b, panels);
    r.evaluations = 32L * panels;
    while (panels < max_panels) {
        panels *= 2;
        const Complex cur = gl_composite(f, a, b, panels);
        r.evaluations += 32L * panels;
        r.error = std::abs(cur - prev);
        r.value = cur;
        if (r.error <= tol * std::max(std::abs(cur), floor)) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    r.value = prev;
    return r;
}

// Tanh-sinh on [a, b]; f(x, da, db) receives the distances da = x - a and db = b - x
// computed without cancellation, so endpoint singularities can be evaluated accurately.
template <class F>
QuadResult tanh_sinh(F&& f, Real a, Real b, Real tol, int max_level = 10) {
    const Real len = b - a;
    const Real half_pi = kPi / 2;
    constexpr Real tmax = 6.0L;
    auto node = [&](Real t, Complex& acc) {
        const Real u = half_pi * std::sinh(t);
        const Real e2 = std::exp(-2.0L * std::fabs(u));
        // distance to the nearer endpoint is len * e2 / (1 + e2)
        const Real near = len * e2 / (1.0L + e2);
        const Real far = len - near;
        const Real da = u < 0 ? near : far;
        const Real db = u < 0 ? far : near;
        if (near <= 0) return;
        const Real ch = std::cosh(u);
        const Real w = half_pi * std::cosh(t) / (ch * ch) * 0.5L * len;
        acc += w * f(a + da, da, db);
    };
    QuadResult r;
    Real h = 0.5L;
    Complex sum = 0;
    node(0, sum);
    for (Real t = h; t <= tmax; t += h) {
        node(t, sum);
        node(-t, sum);
    }
    Complex prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5L;
        for (Real t = h; t <= tmax; t += 2 * h) {
            node(t, sum);
            node(-t, sum);
        }
        const Complex cur = sum * h;
        r.error = std::abs(cur - prev);
        r.value = cur;
        if (level >= 3 && r.error <= tol * std::abs(cur)) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    return r;
}

// Integral over [a, inf) of a decaying integrand: GL panels of doubling width.
template <class F>
QuadResult integrate_ray(F&& f, Real a, Real tol, Real floor, Real first_width = 1.0L, Real limit = 1e5L) {
    QuadResult total;
    total.converged = true;
    Real lo = a, width = first_width;
    int quiet = 0;
    while (lo < limit) {
        const QuadResult p = gl_adaptive(f, lo, lo + width, tol * 0.1L, floor, 1 << 9);
        total.value += p.value;
        total.error += p.error;
        total.evaluations += p.evaluations;
        total.converged = total.converged && p.converged;
        if (std::abs(p.value) <= tol * 1e-2L * std::max(std::abs(total.value), floor)) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
        lo += width;
        width *= 2;
    }
    total.converged = false;
    return total;
}

// Integral over [1, inf) via t = e^u, summing GL panels of doubling length until negligible.
template <class F>
QuadResult integrate_to_infinity(F&& f, Real tol, Real u_max = 200.0L, Real floor = 0) {
    auto g = [&](Real u) {
        const Real t = std::exp(u);
        return f(t) * t;
    };
    QuadResult total;
    total.converged = true;
    Real lo = 0, width = 1;
    int quiet = 0;
    while (lo < u_max) {
        // far panels are judged against the integral so far, not their own tiny size
        const QuadResult p = gl_adaptive(g, lo, lo + width, tol * 0.1L, std::max(floor, std::abs(total.value)), 1 << 9);
        total.value += p.value;
        total.error += p.error;
        total.evaluations += p.evaluations;
        total.converged = total.converged && p.converged;
        if (std::abs(p.value) <= tol * 1e-2L * std::abs(total.value)) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
        lo += width;
        width *= 2;
    }
    total.converged = false;
    return total;
}

// Integral over [0, inf): tanh-sinh on [0, 1] (endpoint singularities) plus the exponential map on [1, inf).
template <class F>
QuadResult integrate_half_line(F&& f, Real tol) {
    const QuadResult head = tanh_sinh([&](Real t, Real, Real) { return f(t); }, 0.0L, 1.0L, tol);
    const QuadResult tail = integrate_to_infinity(f, tol, 200.0L, std::abs(head.value));
    QuadResult r;
    r.value = head.value + tail.value;
    r.error = head.error + tail.error;
    r.evaluations = head.evaluations + tail.evaluations;
    r.converged = head.converged && tail.converged;
    return r;
}

}  // namespace mlfrac
