#include "mlfrac/catalog.hpp"

namespace mlfrac {

const char* to_string(Resolution r) {
    switch (r) {
        case Resolution::as_stated: return "as-stated";
        case Resolution::corrected: return "corrected";
        case Resolution::reading: return "reading";
        case Resolution::audited: return "audited";
    }
    return "?";
}

const std::vector<CatalogEntry>& identity_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"bessel-wright-normalization", "Wright function",
         "phi(1, nu+1; -z^2/4) = 2 z^{-nu} J_nu(z)",
         "phi(1, nu+1; -z^2/4) = (2/z)^nu J_nu(z)", Resolution::corrected,
         "direct series expansion of both sides"},
        {"saigo-left-intermediate-exponent", "Saigo left, M-series",
         "intermediate step carries z^{-sigma-beta-1}",
         "z^{sigma-beta-1}, as in the final formula", Resolution::corrected,
         "power action of the operator on t^{rho-1}; quadrature of the defining integral"},
        {"saigo-right-substituted-exponent", "Saigo right, M-series",
         "substituted integrand carries u^{alpha-beta-sigma-1}",
         "u^{alpha+beta+sigma-1}", Resolution::corrected,
         "change of variables u = z/t in the defining integral; quadrature agreement"},
        {"saigo-right-prefactor", "Saigo right",
         "right-sided integral defined with the extra factor x^{-alpha-beta}",
         "kept, so right-sided results carry z^{-2alpha-2beta-sigma}", Resolution::as_stated,
         "quadrature of the stated definition; the Saigo-Maeda reduction matches up to x^{alpha+beta}"},
        {"saigo-derivative", "Saigo derivative",
         "D^{alpha,beta,gamma} written through I^{-alpha,-beta,-gamma}",
         "D^{alpha,beta,gamma} = I^{-alpha,-beta,alpha+gamma}", Resolution::corrected,
         "only this form makes the alpha = 0 Saigo-Maeda derivative reduce to a Saigo derivative"},
        {"saigo-maeda-left-integral-lists", "Saigo-Maeda left integral",
         "upper (sigma+gamma-alpha, mu), lower (1-sigma, mu)",
         "upper (sigma+gamma-alpha-alpha'-beta, mu), lower (sigma+gamma-alpha-alpha', mu)", Resolution::corrected,
         "monomial-wise power formula, n <= 25"},
        {"saigo-maeda-right-integral-lists", "Saigo-Maeda right integral",
         "lower (1+alpha-alpha'-gamma-sigma, mu) and (1-alpha-beta-sigma, mu)",
         "lower (1+alpha+alpha'+beta'-gamma-sigma, mu) and (1+alpha-beta-sigma, mu)", Resolution::corrected,
         "monomial-wise power formula, n <= 25"},
        {"saigo-maeda-left-derivative", "Saigo-Maeda left derivative",
         "lower (sigma-gamma, mu); exponent sigma-alpha-alpha'+gamma-1",
         "lower (sigma-beta, mu); exponent sigma+alpha+alpha'-gamma-1", Resolution::corrected,
         "duality D = I^{-alpha',-alpha,-beta',-beta,-gamma} applied per monomial"},
        {"saigo-maeda-right-derivative", "Saigo-Maeda right derivative",
         "exponent sigma-alpha-alpha'+gamma-1",
         "exponent sigma+alpha+alpha'-gamma-1; parameter lists as stated", Resolution::corrected,
         "duality applied per monomial"},
        {"saigo-maeda-derivative-k", "Saigo-Maeda derivatives, K-function",
         "repeat the integral K-function formulas",
         "derivative M-function form with (nu, 1) on top and 1/Gamma(nu)", Resolution::corrected,
         "monomial-wise power formula, n <= 25"},
        {"saigo-maeda-exponent", "Saigo-Maeda, all eight formulas",
         "one z-exponent sigma-alpha-alpha'+gamma-1 for integrals and derivatives",
         "integrals sigma-alpha-alpha'+gamma-1, derivatives sigma+alpha+alpha'-gamma-1", Resolution::corrected,
         "termwise comparison of exponents"},
        {"prabhakar-derivative-bridge", "Prabhakar via RL derivative",
         "E^gamma_{alpha,beta}(z) = (1/Gamma(gamma)) D^alpha (z^{gamma-1} E_{alpha,beta}(z))",
         "termwise audit reporting the residual; exact only when gamma = alpha + 1", Resolution::audited,
         "monomial-wise RL action on 20 coefficients"},
        {"prabhakar-large-beta", "Prabhakar asymptotics",
         "Pochhammer carries beta, gamma appears as a power",
         "implemented literally, checked as a binomial series", Resolution::as_stated,
         "binomial closed form"},
        {"saigo-left-sigma-bound", "Saigo left",
         "no lower bound tying sigma to beta",
         "integrability at both endpoints enforced before quadrature", Resolution::reading,
         "SingularityError from the quadrature oracle"},
        {"laplace-mellin", "Prabhakar transforms",
         "Laplace and Mellin closed forms",
         "Laplace for Re s > |w|^{1/alpha}; Mellin of E(-w t) on 0 < Re s < Re gamma", Resolution::reading,
         "quadrature on admissible draws"},
    };
    return entries;
}

}  // namespace mlfrac
