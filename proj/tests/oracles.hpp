// Test-only reference constructions, derived independently of the library's
// recurrence/series implementations.

#ifndef RZM_TEST_ORACLES_HPP
#define RZM_TEST_ORACLES_HPP

#include <cmath>
#include <complex>

#include <rzm/gamma.hpp>

namespace rzmtest {

// (1/2) B(s/2, lambda - s/2): the gamma-only reduction of the Riesz-kernel
// Mellin transform on the axis xi = 0.
inline std::complex<double> beta_half(std::complex<double> lambda,
                                      std::complex<double> s) {
    return 0.5 * std::exp(rzm::log_gamma(0.5 * s) +
                          rzm::log_gamma(lambda - 0.5 * s) -
                          rzm::log_gamma(lambda));
}

// Gegenbauer coefficient from the binomial expansion of (1 + u(u + 2 xi))^-lambda:
// the u^j coefficient is sum_{m=ceil(j/2)}^{j} binom(-lambda,m) binom(m,j-m) (2 xi)^(2m-j),
// and C_j^lambda(xi) = (-1)^j [u^j].
inline std::complex<double> taylor_gegenbauer(int j, std::complex<double> lambda, double xi) {
    std::complex<double> acc(0.0, 0.0);
    for (int m = (j + 1) / 2; m <= j; ++m) {
        std::complex<double> bl(1.0, 0.0);
        for (int t = 0; t < m; ++t) bl *= (-lambda - double(t)) / double(t + 1);
        double bm = 1.0;
        for (int t = 0; t < j - m; ++t) bm = bm * double(m - t) / double(t + 1);
        int p = 2 * m - j;
        double xp = p == 0 ? 1.0 : std::pow(2.0 * xi, p);
        acc += bl * bm * xp;
    }
    return (j % 2) ? -acc : acc;
}

// tail series for the genus-corrected kernel, computed from scratch:
// h(u) = -sum_{j=q+1}^{q+terms} (-u)^j C_j^lambda(xi), accurate for small u
inline std::complex<double> h_tail_reference(std::complex<double> lambda, int q, double xi,
                                             double u, int terms = 40) {
    if (u == 0.0) return {0.0, 0.0};
    std::complex<double> acc(0.0, 0.0);
    double power = 1.0;
    for (int j = 1; j <= q; ++j) power *= -u;
    for (int j = q + 1; j <= q + terms; ++j) {
        power *= -u;
        acc -= power * taylor_gegenbauer(j, lambda, xi);
    }
    return acc;
}

}  // namespace rzmtest

#endif
