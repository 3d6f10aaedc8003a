#include "mlfrac/quadrature.hpp"

namespace mlfrac {

GaussRule gauss_legendre(int n) {
    GaussRule g;
    g.x.resize(static_cast<std::size_t>(n));
    g.w.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        Real x = std::cos(kPi * (static_cast<Real>(i) + 0.75L) / (static_cast<Real>(n) + 0.5L));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const Real w = 2 / ((1 - x * x) * dp * dp);
        g.x[i] = -x;
        g.x[n - 1 - i] = x;
        g.w[i] = g.w[n - 1 - i] = w;
    }
    return g;
}

const GaussRule& gl32() {
    static const GaussRule rule = gauss_legendre(32);
    return rule;
}

}  // namespace mlfrac
