#include "mlfrac/convergence.hpp"

#include <algorithm>
#include <vector>

#include "mlfrac/errors.hpp"

namespace mlfrac {

const char* to_string(ConvergenceClass c) {
    switch (c) {
        case ConvergenceClass::entire: return "entire";
        case ConvergenceClass::disk: return "disk";
        case ConvergenceClass::boundary_conditional: return "boundary-conditional";
        case ConvergenceClass::divergent: return "divergent";
    }
    return "?";
}

ConvergenceReport classify_convergence(const FoxWrightSpec& spec) {
    ConvergenceReport r;
    Real log_delta = 0;
    Complex sum_a = 0, sum_b = 0;
    for (const auto& u : spec.upper) {
        r.Delta -= u.weight;
        if (u.weight != 0) log_delta -= u.weight * std::log(std::fabs(u.weight));
        sum_a += u.value;
    }
    for (const auto& l : spec.lower) {
        r.Delta += l.weight;
        if (l.weight != 0) log_delta += l.weight * std::log(std::fabs(l.weight));
        sum_b += l.value;
    }
    const auto p = static_cast<Real>(spec.upper.size());
    const auto q = static_cast<Real>(spec.lower.size());
    r.mu = sum_b - sum_a + (p - q) / 2.0L;
    constexpr Real tol = 1e-12L;
    if (r.Delta > -1.0L + tol) {
        r.cls = ConvergenceClass::entire;
        r.radius = std::numeric_limits<Real>::infinity();
    } else if (r.Delta >= -1.0L - tol) {
        r.radius = std::exp(log_delta);
        r.cls = r.mu.real() > 0.5L ? ConvergenceClass::boundary_conditional : ConvergenceClass::disk;
    } else {
        r.cls = ConvergenceClass::divergent;
        r.radius = 0;
    }
    return r;
}

namespace {

Real ml_order(const Complex& alpha) {
    if (alpha.real() <= 0) throw UnsupportedRegime("order_and_type: Re(alpha) <= 0");
    return 1.0L / alpha.real();
}

}  // namespace

OrderType order_and_type(const MLParams& params) {
    return std::visit(
        [](const auto& p) -> OrderType {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, MLOne> || std::is_same_v<T, MLTwo> || std::is_same_v<T, MLThree>) {
                return {ml_order(p.alpha), 1.0L};
            } else if constexpr (std::is_same_v<T, MLFour> || std::is_same_v<T, MLSix>) {
                const Real d = (p.alpha - p.delta + 1.0L).real();
                if (d <= 0) throw UnsupportedRegime("order_and_type: Re(alpha - delta + 1) <= 0");
                const Real rho = 1.0L / d;
                const Real ra = p.alpha.real(), rd = p.delta.real();
                if (ra <= 0 || rd <= 0) return {rho, std::nullopt};
                return {rho, (1.0L / rho) * std::pow(std::pow(rd, rd) / std::pow(ra, ra), rho)};
            } else if constexpr (std::is_same_v<T, KilbasSaigo>) {
                if (p.alpha <= 0 || p.m <= 0) throw UnsupportedRegime("order_and_type: alpha, m must be > 0");
                return {1.0L / p.alpha, 1.0L / p.m};
            } else {
                Real sigma_n = 0;
                for (const auto& [a, b] : p.pairs) sigma_n += a;
                if (sigma_n <= 0) throw UnsupportedRegime("order_and_type: Sigma_n <= 0");
                Real log_type = 0;
                for (const auto& [a, b] : p.pairs)
                    if (a != 0) log_type += (a / sigma_n) * std::log(sigma_n / std::fabs(a));
                return {1.0L / sigma_n, std::exp(log_type)};
            }
        },
        params);
}

OrderType order_and_type(const SeriesInstance& inst) {
    if (const auto* w = std::get_if<WrightPhi>(&inst)) {
        if (w->alpha <= -1) throw UnsupportedRegime("order_and_type: Wright phi needs alpha > -1");
        const Real rho = 1.0L / (w->alpha + 1.0L);
        if (w->alpha < 0) return {rho, std::nullopt};
        return {rho, std::pow(w->alpha, rho) / rho};
    }
    if (const auto* f = std::get_if<MultipleML>(&inst)) {
        if (f->alpha * f->mu <= 0) throw UnsupportedRegime("order_and_type: alpha*mu <= 0");
        return {1.0L / (f->alpha * f->mu), std::nullopt};
    }
    throw UnsupportedRegime("order_and_type: no closed form for this family");
}

namespace {

struct TailPoint {
    Real n, r;
};

std::vector<TailPoint> tail_points(std::span<const Real> log_abs) {
    const long count = static_cast<long>(log_abs.size());
    long nonzero = 0;
    for (long n = 1; n < count; ++n)
        if (std::isfinite(log_abs[n])) ++nonzero;
    if (nonzero == 0) throw DegenerateInput("empirical_order: all coefficients vanish beyond index 0");
    if (nonzero < 32) throw DegenerateInput("empirical_order: fewer than 32 nonzero coefficients");
    std::vector<TailPoint> pts;
    for (long n = std::max(2L, count - count / 4); n < count; ++n) {
        const Real la = log_abs[n];
        if (!std::isfinite(la) || la >= 0) continue;
        const Real nn = static_cast<Real>(n);
        pts.push_back({nn, nn * std::log(nn) / -la});
    }
    if (pts.size() < 2) throw DegenerateInput("empirical_order: tail has no usable coefficients");
    return pts;
}

}  // namespace

Real empirical_order_tail_max(std::span<const Real> log_abs) {
    Real best = 0;
    for (const auto& p : tail_points(log_abs)) best = std::max(best, p.r);
    return best;
}

// r_n = n log n / log(1/|c_n|) tends to rho like 1/r_n = 1/rho + B/log n;
// a least-squares fit in 1/log n over the tail removes the slow bias.
Real empirical_order_log(std::span<const Real> log_abs) {
    const auto pts = tail_points(log_abs);
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<Real>(pts.size());
    for (const auto& p : pts) {
        const Real x = 1.0L / std::log(p.n);
        const Real y = 1.0L / p.r;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const Real den = m * sxx - sx * sx;
    if (den == 0) return empirical_order_tail_max(log_abs);
    const Real slope = (m * sxy - sx * sy) / den;
    const Real intercept = (sy - slope * sx) / m;
    if (intercept <= 0) return std::numeric_limits<Real>::infinity();
    return 1.0L / intercept;
}

Real empirical_order(std::span<const Complex> coefficients, long count) {
    count = std::min<long>(count, static_cast<long>(coefficients.size()));
    std::vector<Real> la(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
        const Real a = std::abs(coefficients[n]);
        la[n] = a == 0 ? -std::numeric_limits<Real>::infinity() : std::log(a);
    }
    return empirical_order_log(la);
}

Real empirical_type_log(std::span<const Real> log_abs, Real rho) {
    const long count = static_cast<long>(log_abs.size());
    Real best = 0;
    for (long n = std::max(1L, count - count / 4); n < count; ++n) {
        if (!std::isfinite(log_abs[n])) continue;
        const Real nn = static_cast<Real>(n);
        best = std::max(best, nn * std::exp(rho * log_abs[n] / nn));
    }
    return best / (rho * std::exp(1.0L));
}

}  // namespace mlfrac
