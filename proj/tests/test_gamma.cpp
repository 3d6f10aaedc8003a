#include <random>

#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "test_util.hpp"

using namespace mlfrac;
using mlfrac::testing::C;
using mlfrac::testing::check_close;

TEST_CASE("log_gamma trivial values") {
    check_close(log_gamma(1.0L), 0.0L, 0, 1e-18L);
    check_close(log_gamma(0.5L), std::log(std::sqrt(kPi)), 1e-15L);
    CHECK_THROWS_AS(log_gamma(0.0L), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0L), PoleError);
}

TEST_CASE("log_gamma against frozen high-precision values") {
    // mpmath loggamma at 40 digits
    const struct {
        Complex z, want;
    } cases[] = {
        {C(3.7, 2.1), {0.7853469580738223887584001L, 2.583012925115262248591334L}},
        {C(-2.5, 0.3), {-0.4320888926132019205150334L, -9.093345421289741507309521L}},
        {C(100, 50), {347.0530499331724736313034L, 231.9697018464622097605798L}},
        {C(-50.5, 1e-3), {-149.2965038661430168281966L, -160.2172934914282646779652L}},
        {C(0.25, -7), {-10.56295333904000193272028L, -6.230160500529651312563406L}},
        {C(-900.3, 2), {-5232.959539602626285221455L, -2816.340097409707759094225L}},
        {C(12, -999), {-1488.878658483711616566323L, -5918.846033601515314266599L}},
        {C(1e-3, 0), {6.907178885383853661683681L, 0}},
        {C(-0.5, -4), {-6.758293228368867759409516L, 0.1395184420821477372826153L}},
    };
    for (const auto& c : cases) check_close(log_gamma(c.z), c.want, 1e-13L);
}

TEST_CASE("log_gamma recursion oracle from the strip 1 < Re < 2") {
    // Gamma(3.7+2.1i) = (2.7+2.1i)(1.7+2.1i)(0.7+2.1i)... built upward from Gamma(1.7+2.1i)
    const Complex base = C(1.7, 2.1);
    const Complex up = std::exp(log_gamma(base)) * base * (base + 1.0L);
    check_close(std::exp(log_gamma(C(3.7, 2.1))), up, 1e-13L);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-30, 30), im(-20, 20);
    for (int i = 0; i < 200; ++i) {
        const Complex z = C(re(rng), im(rng));
        const Complex lhs = log_gamma(z + 1.0L);
        const Complex rhs = log_gamma(z) + std::log(z);
        // equal modulo 2 pi i
        const Complex d = lhs - rhs;
        CHECK(std::fabs(d.real()) <= 1e-12L * std::max<Real>(1, std::abs(lhs)));
        const Real k = std::nearbyint(d.imag() / (2 * kPi));
        CHECK(std::fabs(d.imag() - 2 * kPi * k) <= 1e-11L * std::max<Real>(1, std::abs(lhs)));
    }
}

TEST_CASE("log_gamma is the analytic branch") {
    // continuity across the positive real axis and along a path into the left half plane
    Complex prev = log_gamma(C(5, 1e-3));
    for (int i = 1; i <= 400; ++i) {
        const Real t = i / 400.0L;
        const Complex z = Complex{5.0L - 12.0L * t, 1e-3L + 3.0L * std::sin(kPi * t)};
        if (is_nonpositive_integer(z, 1e-6L)) continue;
        const Complex cur = log_gamma(z);
        CHECK(std::fabs(cur.imag() - prev.imag()) < 1.0L);
        prev = cur;
    }
}

TEST_CASE("reciprocal_gamma") {
    CHECK(reciprocal_gamma(0.0L) == Complex{0.0L});
    CHECK(reciprocal_gamma(-3.0L) == Complex{0.0L});
    check_close(reciprocal_gamma(0.5L), 1.0L / std::sqrt(kPi), 1e-15L);
    const struct {
        Complex z, want;
    } cases[] = {
        {C(0.5, 3), {42.29498020969168067438639L, -13.53981770886549913713368L}},
        {C(-3.5, 0), {3.702494142032150633096771L, 0}},
        {C(-7.2, 1.5), {-74461.63256710951320384771L, 88806.32095362295715842074L}},
        {C(25, 0.5), {-4.634068808100873652551246e-26L, -1.619317075230182454411631e-24L}},
    };
    for (const auto& c : cases) check_close(reciprocal_gamma(c.z), c.want, 1e-13L);
}

TEST_CASE("reciprocal_gamma times exp(log_gamma) is one") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-70, 70);
    for (int i = 0; i < 500; ++i) {
        Complex z = C(u(rng), u(rng));
        if (std::abs(z) > 100) continue;
        check_close(reciprocal_gamma(z) * std::exp(log_gamma(z)), 1.0L, 1e-12L);
    }
}

TEST_CASE("reflection formula on a 1000-point grid") {
    int n = 0;
    for (int i = 0; i < 40 && n < 1000; ++i) {
        for (int j = 0; j < 25; ++j, ++n) {
            const Complex z = Complex{-9.87L + 0.5L * i, -3.0L + 0.25L * j};
            if (near_integer(z, 1e-3L)) continue;
            const Complex v = gamma(z) * gamma(1.0L - z) * std::sin(kPi * z) / kPi;
            CHECK(std::abs(v - 1.0L) <= 1e-11L);
        }
    }
    CHECK(n == 1000);
}

TEST_CASE("pochhammer standard form") {
    CHECK(pochhammer(-2.0L, 3) == Complex{0.0L});
    CHECK(pochhammer(C(1.3, 0.2), 0) == Complex{1.0L});
    check_close(pochhammer(2.0L, 4), 120.0L, 1e-18L);
    // product and Gamma-ratio forms agree
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const Complex lam = C(u(rng), u(rng));
        const long n = 1 + i % 60;
        const Complex ratio = std::exp(log_gamma(lam + static_cast<Real>(n)) - log_gamma(lam));
        check_close(pochhammer(lam, n), ratio, 1e-12L);
    }
    // large n through the Gamma ratio, terminating case still exact
    check_close(pochhammer(C(0.5), 100), std::exp(log_gamma(100.5L) - log_gamma(0.5L)), 1e-13L);
    CHECK(pochhammer(-70.0L, 100) == Complex{0.0L});
}

TEST_CASE("pochhammer extended and k-symbol forms") {
    // integer s: s^{sn} prod_{j=1}^{s} ((gamma + j - 1)/s)_n
    const Complex g = C(0.7, 0.4);
    for (int s = 1; s <= 3; ++s) {
        for (long n = 0; n <= 6; ++n) {
            Complex want = std::pow(static_cast<Real>(s), static_cast<Real>(s * n));
            for (int j = 1; j <= s; ++j) want *= pochhammer((g + static_cast<Real>(j - 1)) / static_cast<Real>(s), n);
            check_close(pochhammer({g, ExtendedStep{static_cast<Real>(s)}, n}), want, 1e-13L);
        }
    }
    check_close(pochhammer({g, ExtendedStep{0.5L}, 3}), gamma(g + 1.5L) / gamma(g), 1e-14L);
    CHECK_THROWS_AS(pochhammer({-0.5L, ExtendedStep{0.5L}, 1}), PoleError);
    check_close(pochhammer({2.0L, KStep{1.0L}, 4}), 120.0L, 1e-18L);
    // (x)_{n,k} = x (x+k) ... (x+(n-1)k)
    check_close(pochhammer({1.5L, KStep{2.0L}, 3}), 1.5L * 3.5L * 5.5L, 1e-18L);
}
