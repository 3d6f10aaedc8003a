#include "mlfrac/gamma.hpp"

#include <array>

#include "mlfrac/errors.hpp"

namespace mlfrac {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<Real, 10> kStirling = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

constexpr Real kShift = 16.0L;

Complex stirling(const Complex& w) {
    static const Real half_log_2pi = 0.5L * std::log(2.0L * kPi);
    const Complex inv = 1.0L / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0L;
    Complex p = inv;
    for (Real c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (w - 0.5L) * std::log(w) - w + half_log_2pi + series;
}

long shift_count(const Complex& z) {
    if (z.real() >= kShift) return 0;
    if (z.real() >= 0.0L && std::fabs(z.imag()) >= 2.0L * kShift) return 0;
    return static_cast<long>(std::ceil(kShift - z.real()));
}

Complex upper_side(Complex z) {
    if (z.imag() == 0.0L) z = Complex{z.real(), 0.0L};
    return z;
}

void check_pole(const Complex& z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
}

}  // namespace

Complex log_gamma(Complex z) {
    check_pole(z);
    z = upper_side(z);
    if (z.imag() == 0.0L && z.real() > 0.0L) return std::lgamma(z.real());
    const long n = shift_count(z);
    Complex acc = 0.0L;
    for (long k = 0; k < n; ++k) acc += std::log(z + static_cast<Real>(k));
    return stirling(z + static_cast<Real>(n)) - acc;
}

Complex log_gamma_mod(Complex z) {
    check_pole(z);
    z = upper_side(z);
    if (z.imag() == 0.0L && z.real() > 0.0L) return std::lgamma(z.real());
    const long n = shift_count(z);
    Complex acc = 0.0L;
    Complex prod = 1.0L;
    for (long k = 0; k < n; ++k) {
        prod *= z + static_cast<Real>(k);
        if ((k & 15) == 15) {
            acc += std::log(prod);
            prod = 1.0L;
        }
    }
    acc += std::log(prod);
    return stirling(z + static_cast<Real>(n)) - acc;
}

Complex gamma(Complex z) {
    if (z.imag() == 0.0L && z.real() > 0.0L && z.real() < 1700.0L) return std::tgamma(z.real());
    return std::exp(log_gamma_mod(z));
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0L;
    return std::exp(-log_gamma_mod(z));
}

Complex gamma_ratio(Complex a, Complex b) {
    const bool pa = is_nonpositive_integer(a);
    const bool pb = is_nonpositive_integer(b);
    if (pa && pb) {
        // Both poles: limit with a - b held fixed is (-1)^(m-k) k!/m!.
        const Real m = -std::nearbyint(a.real());
        const Real k = -std::nearbyint(b.real());
        const Real sign = std::fmod(std::fabs(m - k), 2.0L) == 0.0L ? 1.0L : -1.0L;
        return sign * std::exp(std::lgamma(k + 1.0L) - std::lgamma(m + 1.0L));
    }
    if (pa) throw PoleError("gamma_ratio: numerator pole");
    if (pb) return 0.0L;
    return std::exp(log_gamma_mod(a) - log_gamma_mod(b));
}

Complex rising(Complex a, long n) {
    Complex p = 1.0L;
    for (long k = 0; k < n; ++k) p *= a + static_cast<Real>(k);
    return p;
}

namespace {

Complex standard_pochhammer(const Complex& base, long n) {
    if (n <= 64) return rising(base, n);
    if (is_nonpositive_integer(base)) {
        const long m = -static_cast<long>(std::nearbyint(base.real()));
        return n > m ? Complex{0.0L} : rising(base, n);
    }
    return std::exp(log_gamma_mod(base + static_cast<Real>(n)) - log_gamma_mod(base));
}

}  // namespace

Complex pochhammer(const PochhammerSpec& spec) {
    if (spec.n < 0) throw ParameterError("pochhammer: negative count");
    if (spec.n == 0) return 1.0L;
    return std::visit(
        [&](const auto& step) -> Complex {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, StandardStep>) {
                return standard_pochhammer(spec.base, spec.n);
            } else if constexpr (std::is_same_v<T, ExtendedStep>) {
                if (step.s < 0.0L) throw ParameterError("pochhammer: extended step must be >= 0");
                const Real sn = step.s * static_cast<Real>(spec.n);
                if (near_integer(sn, 1e-14L)) return standard_pochhammer(spec.base, std::lround(sn));
                const Complex top = spec.base + sn;
                if (is_nonpositive_integer(top))
                    throw PoleError("pochhammer: Gamma(base + s n) at a pole");
                if (is_nonpositive_integer(spec.base)) return 0.0L;
                return std::exp(log_gamma_mod(top) - log_gamma_mod(spec.base));
            } else {
                if (step.k <= 0.0L) throw ParameterError("pochhammer: k must be > 0");
                if (spec.n <= 64) {
                    Complex p = 1.0L;
                    for (long j = 0; j < spec.n; ++j) p *= spec.base + static_cast<Real>(j) * step.k;
                    return p;
                }
                return std::pow(step.k, static_cast<Real>(spec.n)) *
                       standard_pochhammer(spec.base / step.k, spec.n);
            }
        },
        spec.step);
}

Complex beta_fn(Complex a, Complex b) {
    return gamma(a) * gamma(b) * reciprocal_gamma(a + b);
}

}  // namespace mlfrac
