#include "mlfrac/fox_wright.hpp"

#include <cstdio>

#include "mlfrac/convergence.hpp"
#include "mlfrac/detail/summation.hpp"
#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"

namespace mlfrac {

Complex ArgumentMap::apply(const Complex& z) const {
    if (sign < 0 && z == Complex{0.0L}) throw DomainError("argument map: z^{-mu} at z = 0");
    if (power == 1 && sign > 0) return coefficient * z;
    return coefficient * cpow(z, static_cast<Real>(sign) * power);
}

namespace {

bool pair_equal(const ParamPair& x, const ParamPair& y, Real tol) {
    return std::abs(x.value - y.value) <= tol * (1 + std::abs(x.value)) && std::fabs(x.weight - y.weight) <= tol;
}

}  // namespace

FoxWrightSpec FoxWrightSpec::cancelled() const {
    FoxWrightSpec out = *this;
    out.upper.clear();
    std::vector<ParamPair> low = lower;
    for (const auto& u : upper) {
        auto it = std::find_if(low.begin(), low.end(), [&](const ParamPair& l) { return pair_equal(u, l, 1e-14L); });
        if (it != low.end()) {
            low.erase(it);
        } else {
            out.upper.push_back(u);
        }
    }
    out.lower = low;
    return out;
}

bool same_multiset(const std::vector<ParamPair>& a, const std::vector<ParamPair>& b, Real tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && pair_equal(x, b[j], tol)) {
                used[j] = found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool same_parameters(const FoxWrightSpec& a, const FoxWrightSpec& b, Real tol) {
    return same_multiset(a.upper, b.upper, tol) && same_multiset(a.lower, b.lower, tol);
}

const char* to_string(Status s) {
    switch (s) {
        case Status::converged: return "converged";
        case Status::conditional: return "conditional";
        case Status::truncated: return "truncated-at-cap";
        case Status::polynomial: return "polynomial";
        case Status::diverged: return "diverged";
    }
    return "?";
}

namespace {

// log of the Gamma part of the n-th term; nullopt when a lower Gamma is at a pole.
std::optional<Complex> log_gamma_part(const FoxWrightSpec& spec, long n) {
    const Real nn = static_cast<Real>(n);
    Complex acc = 0;
    for (const auto& l : spec.lower) {
        const Complex x = l.value + l.weight * nn;
        if (is_nonpositive_integer(x)) return std::nullopt;
        acc -= log_gamma_mod(x);
    }
    for (const auto& u : spec.upper) {
        const Complex x = u.value + u.weight * nn;
        if (is_nonpositive_integer(x)) throw PoleError("fox_wright: upper Gamma at a pole");
        acc += log_gamma_mod(x);
    }
    return acc - std::lgamma(nn + 1.0L);
}

Complex normalization(const FoxWrightSpec& spec) {
    Complex f = 1;
    for (const auto& l : spec.lower) {
        if (is_nonpositive_integer(l.value)) throw ParameterError("normalized psi: Gamma(b_j) at a pole");
        f *= gamma(l.value);
    }
    for (const auto& u : spec.upper) f *= reciprocal_gamma(u.value);
    return f;
}

}  // namespace

Complex fox_wright_coefficient(const FoxWrightSpec& spec, long n) {
    const auto lg = log_gamma_part(spec, n);
    return lg ? std::exp(*lg) : Complex{0.0L};
}

EvalResult fox_wright_eval(const FoxWrightSpec& spec, Complex z, Real tol, long cap) {
    const ConvergenceReport rep = classify_convergence(spec);
    const Complex w = spec.argument.apply(z);
    Complex scale = spec.prefactor;
    if (spec.normalized) scale *= normalization(spec);

    if (w == Complex{0.0L}) {
        const Complex c0 = fox_wright_coefficient(spec, 0);
        return {scale * c0, 1, 0, Status::converged};
    }
    bool boundary = false;
    if (rep.cls == ConvergenceClass::divergent) throw DivergenceError("fox_wright_eval: series diverges for z != 0");
    if (rep.cls != ConvergenceClass::entire) {
        const Real r = std::abs(w);
        const Real edge = 1e-12L * rep.radius;
        if (r > rep.radius + edge) throw DivergenceError("fox_wright_eval: |argument| exceeds radius");
        if (r >= rep.radius - edge) {
            if (rep.cls != ConvergenceClass::boundary_conditional)
                throw DivergenceError("fox_wright_eval: boundary point with Re(mu) <= 1/2");
            boundary = true;
        }
    }
    const Complex logw = std::log(w);
    auto term = [&](long n) -> detail::Term {
        const auto lg = log_gamma_part(spec, n);
        if (!lg) return {0, true, false};
        return {std::exp(*lg + static_cast<Real>(n) * logw)};
    };
    auto s = detail::sum_series(term, tol, cap);
    s.value *= scale;
    EvalResult r = detail::to_result(s);
    if (boundary) r.status = Status::conditional;
    return r;
}

std::optional<PFQDescription> hypergeometric_reduction_check(const FoxWrightSpec& spec) {
    PFQDescription d;
    d.prefactor = 1;
    for (const auto& u : spec.upper) {
        if (u.weight != 1) return std::nullopt;
        if (is_nonpositive_integer(u.value)) return std::nullopt;
        d.a.push_back(u.value);
        d.prefactor *= gamma(u.value);
    }
    for (const auto& l : spec.lower) {
        if (l.weight != 1) return std::nullopt;
        if (is_nonpositive_integer(l.value)) return std::nullopt;
        d.b.push_back(l.value);
        d.prefactor *= reciprocal_gamma(l.value);
    }
    return d;
}

EvalResult pfq_series(const std::vector<Complex>& a, const std::vector<Complex>& b, Complex z, Real tol, long cap) {
    for (const auto& x : b)
        if (is_nonpositive_integer(x)) throw PoleError("pfq_series: lower parameter at a pole");
    bool terminates = false;
    for (const auto& x : a) terminates |= is_nonpositive_integer(x);
    const auto p = a.size(), q = b.size();
    bool boundary = false;
    if (!terminates && z != Complex{0.0L}) {
        if (p > q + 1) throw DivergenceError("pfq_series: p > q + 1");
        if (p == q + 1) {
            const Real r = std::abs(z);
            if (r > 1.0L + 1e-12L) throw DivergenceError("pfq_series: |z| > 1 with p = q + 1");
            boundary = r >= 1.0L - 1e-12L;
        }
    }
    Complex t = 1;
    auto term = [&](long n) -> detail::Term {
        if (n > 0) {
            const Real k = static_cast<Real>(n - 1);
            Complex num = z / static_cast<Real>(n);
            for (const auto& x : a) num *= x + k;
            for (const auto& x : b) num /= x + k;
            t *= num;
            if (t == Complex{0.0L} && terminates) return {0, false, true};
        }
        return {t};
    };
    EvalResult r = detail::to_result(detail::sum_series(term, tol, cap));
    if (boundary) r.status = Status::conditional;
    return r;
}

namespace {

std::string fmt_pair(const ParamPair& p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "(%.10Lg%+.10Lgi, %.10Lg)", p.value.real(), p.value.imag(), p.weight);
    return buf;
}

}  // namespace

std::string describe(const FoxWrightSpec& spec) {
    std::string s = "upper=[";
    for (std::size_t i = 0; i < spec.upper.size(); ++i) s += (i ? ", " : "") + fmt_pair(spec.upper[i]);
    s += "] lower=[";
    for (std::size_t i = 0; i < spec.lower.size(); ++i) s += (i ? ", " : "") + fmt_pair(spec.lower[i]);
    s += "]";
    return s;
}

}  // namespace mlfrac
