#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mlfrac/types.hpp"

namespace mlfrac {

struct MLOne {
    Complex alpha;
};
struct MLTwo {
    Complex alpha, beta;
};
struct MLThree {
    Complex alpha, beta, gamma;
};
// Salim: (gamma)_n z^n / (Gamma(alpha n + beta) (delta)_n)
struct MLFour {
    Complex alpha, beta, gamma, delta;
};
// (gamma)_{s n} z^n / (Gamma(alpha n + beta) (delta)_{r n})
struct MLSix {
    Complex alpha, beta, gamma, delta;
    Real r = 1, s = 1;
};
struct KilbasSaigo {
    Real alpha;
    Real m;
    Complex l;
};
struct MultiIndex {
    std::vector<std::pair<Real, Complex>> pairs;  // (alpha_j, beta_j)
};

using MLParams = std::variant<MLOne, MLTwo, MLThree, MLFour, MLSix, KilbasSaigo, MultiIndex>;

struct MSeries {
    std::vector<Complex> a, b;
    Complex alpha, beta;
};
struct KFunction {
    std::vector<Complex> a, b;
    Complex alpha, beta, gamma;
};
struct WrightPhi {
    Real alpha;
    Complex beta;
};
// J^mu_rho(z) = phi(mu, rho + 1; -z)
struct BesselWright {
    Complex rho;
    Real mu;
};
// J^{mu,nu}_{rho,lambda}(z)
struct LommelWright {
    Complex rho, lambda;
    Real mu;
    int nu;
};
// F^{(mu)}_{alpha,beta}(z) = sum z^n / Gamma(alpha n + beta)^mu
struct MultipleML {
    Real alpha, beta, mu;
};

using SeriesInstance = std::variant<MSeries, KFunction, WrightPhi, BesselWright, LommelWright, MultipleML>;

std::string family_name(const MLParams& p);
std::string family_name(const SeriesInstance& s);

}  // namespace mlfrac
