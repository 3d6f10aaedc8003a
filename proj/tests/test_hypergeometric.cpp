#include <random>

#include "mlfrac/errors.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeometric.hpp"
#include "test_util.hpp"

using namespace mlfrac;
using mlfrac::testing::C;
using mlfrac::testing::check_close;

namespace {
Complex f21(Complex a, Complex b, Complex c, Complex z) { return gauss_2f1(a, b, c, z).value; }
}  // namespace

TEST_CASE("2F1 against frozen high-precision values") {
    // mpmath hyp2f1 at 40 digits
    check_close(f21(1.0L / 3, 2.0L / 3, 1.5L, -50.0L), 0.4262665965324496358109074L, 1e-13L);
    check_close(f21(C(0.3, 0.2), 1.7L, 2.9L, C(0.95, 0.1)), {1.205436618399254878218958L, 0.3452107156232745809421177L},
                1e-13L);
    check_close(f21(0.8L, -0.4L, 0.6L, C(0.999)), -0.6716867132571472667683023L, 1e-12L);
    check_close(f21(1.25L, 0.5L, 2.75L, C(-3, 4)), {0.5929707420726934695208201L, 0.1680217900919308194481919L}, 1e-13L);
    check_close(f21(1.25L, 0.5L, 2.75L, C(0.93, -0.2)), {1.35197615706925010778236L, -0.1971177502923663144679301L},
                1e-12L);
    // c - a - b an integer near z = 1: averaged connection
    check_close(f21(0.5L, 1.5L, 2.0L, C(0.97)), 2.777405478538802599149579L, 1e-12L);
    check_close(f21(1.5L, 2.5L, 4.0L, C(0.99)), 14.52035806067133159408049L, 1e-12L);
    check_close(f21(0.3L, 0.9L, 1.2L, C(0.7)), 1.288909009475484825549925L, 1e-12L);
}

TEST_CASE("2F1 closed forms") {
    // (a, b; b; z) = (1 - z)^{-a}
    for (Complex z : {C(0.3, 0.2), C(-0.8), C(0.95, -0.1), C(-4, 1), C(2, 3)}) {
        const Complex a = C(0.7, 0.1);
        check_close(f21(a, 1.3L, 1.3L, z), std::pow(1.0L - z, -a), 1e-12L);
    }
    // (1, 1; 2; z) = -log(1 - z) / z
    check_close(f21(1, 1, 2, 0.5L), 2.0L * std::log(2.0L), 1e-15L);
    check_close(f21(1, 1, 2, C(0.2, -0.7)), -std::log(1.0L - C(0.2, -0.7)) / C(0.2, -0.7), 1e-14L);
    // Gauss sum at z = 1
    check_close(f21(0.3L, 0.4L, 1.5L, 1.0L), mlfrac::gamma(1.5L) * mlfrac::gamma(0.8L) / (mlfrac::gamma(1.2L) * mlfrac::gamma(1.1L)), 1e-14L);
    // polynomial
    check_close(f21(-2.0L, 0.5L, 1.5L, 7.0L), 1.0L - 2.0L * 0.5L / 1.5L * 7.0L + 0.5L * 1.5L / (1.5L * 2.5L) * 49.0L, 1e-15L);
}

TEST_CASE("2F1 error cases") {
    CHECK_THROWS_AS(f21(1, 2, -1.0L, 0.5L), PoleError);
    CHECK_THROWS_AS(f21(0.5L, 1.5L, 2.7L, -5.0L), LogCaseError);
    CHECK_THROWS_AS(f21(0.5L, 0.5L, 0.9L, 1.0L), DivergenceError);
}

TEST_CASE("2F1: continuation route agrees with the series where both converge") {
    // z = -2: the connection formula against its own right-hand series at 1/z
    const Complex a = 1.0L / 3, b = 2.0L / 3, c = 1.5L, z = -2.0L;
    const Complex w = 1.0L / z;
    auto rhs_series = [&](Complex p, Complex q, Complex r) { return pfq_series({p, q}, {r}, w).value; };
    const Complex rhs = mlfrac::gamma(c) * mlfrac::gamma(b - a) / (mlfrac::gamma(b) * mlfrac::gamma(c - a)) * std::pow(-z, -a) *
                            rhs_series(a, 1.0L + a - c, 1.0L + a - b) +
                        mlfrac::gamma(c) * mlfrac::gamma(a - b) / (mlfrac::gamma(a) * mlfrac::gamma(c - b)) * std::pow(-z, -b) *
                            rhs_series(b, 1.0L + b - c, 1.0L + b - a);
    check_close(f21(a, b, c, z), rhs, 1e-14L);
    // 0.5 < |z| < 0.9: series vs connection
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> r(0.5, 0.9), th(0.3, 3.0), p(0.1, 2.0);
    for (int i = 0; i < 50; ++i) {
        const Complex zz = std::polar<Real>(r(rng), (i % 2 ? 1 : -1) * th(rng));
        const Complex aa = C(p(rng), 0.2), bb = C(p(rng), -0.1), cc = C(p(rng) + 0.5, 0.0);
        const Complex s = pfq_series({aa, bb}, {cc}, zz).value;
        check_close(gauss_2f1_connection(aa, bb, cc, zz), s, 1e-8L);
    }
}

TEST_CASE("Kummer 1F1") {
    check_close(kummer_1f1(1, 1, C(1.5, -2)).value, std::exp(C(1.5, -2)), 1e-15L);
    // M(1; 2; z) = (e^z - 1) / z
    check_close(kummer_1f1(1, 2, 3.0L).value, (std::exp(3.0L) - 1) / 3.0L, 1e-15L);
}

TEST_CASE("Appell F3") {
    check_close(appell_f3({0.7L, 1.3L, 0.4L, 0.9L, 1.8L, 0.3L, 0.5L}).value, 1.616857519701734569345616L, 1e-14L);
    const AppellArgs g{C(0.7, 0.2), 1.3L, 0.4L, C(0.9, -0.1), C(1.8, 0.3), C(0.3, 0.4), C(-0.6, 0.2)};
    const Complex want{0.7589495593235544611759599L, 0.1933345994779975635688871L};
    check_close(appell_f3(g).value, want, 1e-14L);
    check_close(appell_f3(g, kDefaultTol, AppellOrder::row_major).value, want, 1e-14L);
    // y = 0 and alpha' = 0 collapse to 2F1(alpha, beta; gamma; x)
    check_close(appell_f3({0.7L, 1.3L, 0.4L, 0.9L, 1.8L, 0.3L, 0.0L}).value, f21(0.7L, 0.4L, 1.8L, 0.3L), 1e-15L);
    check_close(appell_f3({0.7L, 0.0L, 0.4L, 0.9L, 1.8L, 0.3L, 0.5L}).value, f21(0.7L, 0.4L, 1.8L, 0.3L), 1e-15L);
    check_close(appell_f3({0.0L, 1.3L, 0.4L, 0.9L, 1.8L, 0.3L, 0.5L}).value, f21(1.3L, 0.9L, 1.8L, 0.5L), 1e-15L);
    // F3(a, g - a, b, g - b; g; x, y) = (1 - y)^{a + b - g} 2F1(a, b; g; x + y - xy); the power drops when g = a + b
    const Real x = 0.2L, y = 0.3L;
    check_close(appell_f3({1, 1, 1, 1, 2, x, y}).value, f21(1, 1, 2, x + y - x * y), 1e-14L);
    check_close(appell_f3({0.6L, 1.1L, 0.8L, 0.9L, 1.7L, x, y}).value,
                std::pow(1 - y, -0.3L) * f21(0.6L, 0.8L, 1.7L, x + y - x * y), 1e-14L);
    CHECK(std::abs(appell_f3({0.6L, 1.1L, 0.8L, 0.9L, 1.7L, x, y}).value - f21(0.6L, 0.8L, 1.7L, x + y - x * y)) > 0.1L);
    CHECK_THROWS_AS(appell_f3({1, 1, 1, 1, 2, 1.0L, 0.1L}), DomainError);
}

TEST_CASE("Appell F3 summation order independence") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> p(-1.5, 2.5), r(0, 0.85), th(-3.1, 3.1);
    for (int i = 0; i < 40; ++i) {
        AppellArgs g{C(p(rng), p(rng) / 4), p(rng), p(rng), C(p(rng), 0.1), C(std::fabs(p(rng)) + 0.3, p(rng) / 4),
                     std::polar<Real>(r(rng), th(rng)), std::polar<Real>(r(rng), th(rng))};
        const Complex d = appell_f3(g).value;
        const Complex m = appell_f3(g, kDefaultTol, AppellOrder::row_major).value;
        CHECK(std::abs(d - m) <= 1e-12L * std::max<Real>(1, std::abs(d)));
    }
}

TEST_CASE("Gauss function close to one") {
    // mpmath hyp2f1(0.8, -0.4, 0.6, 1 - 1e-25)
    check_close(gauss_2f1_near_one(0.8L, -0.4L, 0.6L, 1e-25L).value, -1.17443016062058107897L, 1e-16L);
    check_close(gauss_2f1_near_one(0.8L, 0.4L, 0.6L, 1e-6L).value, 3418.97716886662869355L, 1e-16L);
    // beyond |w| = 1/2 it defers to the plain evaluator
    check_close(gauss_2f1_near_one(0.8L, 0.4L, 0.6L, 0.7L).value, gauss_2f1(0.8L, 0.4L, 0.6L, 0.3L).value, 1e-18L);
}
