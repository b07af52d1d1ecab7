#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>

#include <rzm/core.hpp>
#include <rzm/error.hpp>
#include <rzm/gamma.hpp>
#include <rzm/kernels.hpp>

namespace rzm {

// Order/degree pair for the Ferrers function P^mu_nu.  No intrinsic
// restrictions: the function is entire in both parameters.
struct LegendreOrder {
    Complex mu;
    Complex nu;
};

// Argument bundle for the regularized Gauss hypergeometric function.
struct Hyp2F1Args {
    Complex a;
    Complex b;
    Complex c;
    Complex z;
};

namespace detail {

inline constexpr long hyp2f1_max_terms = 100000;

[[noreturn]] inline void hyp2f1_diverged() {
    throw convergence_error(
        "hyp2f1_regularized: series failed to reach a 1e-15 relative tail "
        "within 1e5 terms");
}

// sum_{n>=0} (a)_n (b)_n / (n! Gamma(c+n)) z^n for real z in [0,1).
// Entire in c: reciprocal-gamma factors are evaluated directly while
// Re(c+n) < 1/2 (where Gamma may have zeros of 1/Gamma nearby) and by the
// stable forward recurrence afterwards.  trunc >= 0 stops the sum after
// n = trunc (terminating series).
inline Complex gauss_series(Complex a, Complex b, Complex c, double z,
                            long trunc = -1) {
    const long n0 =
        std::max<long>(0, static_cast<long>(std::ceil(0.5 - c.real())));
    Complex acc(0.0, 0.0);
    Complex poch(1.0, 0.0);  // (a)_n (b)_n z^n / n!, tracked while n <= n0
    Complex term(0.0, 0.0);  // poch / Gamma(c+n), tracked once n >= n0
    int quiet = 0;
    for (long n = 0;; ++n) {
        const double nd = static_cast<double>(n);
        if (n <= n0) term = poch * reciprocal_gamma(c + nd);
        acc += term;
        if (trunc >= 0 && n >= trunc) break;
        if (trunc < 0 && n >= n0) {
            if (std::abs(term) <= 1e-17 * std::abs(acc)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        if (n >= hyp2f1_max_terms) hyp2f1_diverged();
        const Complex step = (a + nd) * (b + nd) * z / (nd + 1.0);
        if (n < n0) {
            poch *= step;
        } else {
            term *= step / (c + nd);
        }
    }
    return acc;
}

// Regularized F(a,b;a+b+m;z) for integer m >= 0 via the logarithmic
// connection to the 1-z variable (x = 1-z in (0,1/2]); psi values advance by
// recurrence so each term costs O(1).
inline Complex hyp2f1_log_branch(Complex a, Complex b, long m, double x) {
    const double md = static_cast<double>(m);
    Complex head(0.0, 0.0);
    if (m > 0) {
        Complex t(1.0, 0.0);  // (a)_k (b)_k x^k / (k! (1-m)_k)
        Complex s1(0.0, 0.0);
        for (long k = 0; k < m; ++k) {
            const double kd = static_cast<double>(k);
            s1 += t;
            if (k + 1 < m)
                t *= (a + kd) * (b + kd) * x / ((kd + 1.0) * (kd + 1.0 - md));
        }
        head = gamma(Complex(md, 0.0)) * reciprocal_gamma(a + md) *
               reciprocal_gamma(b + md) * s1;
    }

    const double lx = std::log(x);
    Complex psi_a = digamma(a + md);
    Complex psi_b = digamma(b + md);
    double psi_1 = digamma(Complex(1.0, 0.0)).real();
    double psi_m = digamma(Complex(md + 1.0, 0.0)).real();
    Complex w = reciprocal_gamma(Complex(md + 1.0, 0.0));  // 1/(k! (k+m)!)
    Complex s2(0.0, 0.0);
    int quiet = 0;
    for (long k = 0;; ++k) {
        const double kd = static_cast<double>(k);
        const Complex term = w * (lx + psi_a + psi_b - psi_1 - psi_m);
        s2 += term;
        if (std::abs(term) <= 1e-17 * std::abs(s2)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        if (k >= hyp2f1_max_terms) hyp2f1_diverged();
        w *= (a + md + kd) * (b + md + kd) * x /
             ((kd + 1.0) * (kd + md + 1.0));
        psi_a += 1.0 / (a + md + kd);
        psi_b += 1.0 / (b + md + kd);
        psi_1 += 1.0 / (kd + 1.0);
        psi_m += 1.0 / (kd + md + 1.0);
    }
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    return head -
           sgn * std::pow(x, md) * reciprocal_gamma(a) * reciprocal_gamma(b) * s2;
}

}  // namespace detail

// 2F1(a,b;c;z) / Gamma(c) for real z in [0,1); entire in c.
inline Complex hyp2f1_regularized(const Hyp2F1Args& args) {
    if (args.z.imag() != 0.0)
        throw precondition_error("hyp2f1_regularized: z must be real");
    const double z = args.z.real();
    if (!(z >= 0.0 && z < 1.0))
        throw precondition_error("hyp2f1_regularized: z must lie in [0, 1)");
    const Complex a = args.a;
    const Complex b = args.b;
    const Complex c = args.c;

    // Terminating series (a or b at a nonpositive integer): valid on all of
    // [0,1), so it is checked before any connection formula.
    const bool ta = near_nonpos_integer(a, 1e-13);
    const bool tb = near_nonpos_integer(b, 1e-13);
    if (ta || tb) {
        const long cap = std::numeric_limits<long>::max();
        const long na = ta ? std::llround(-a.real()) : cap;
        const long nb = tb ? std::llround(-b.real()) : cap;
        return detail::gauss_series(a, b, c, z, std::min(na, nb));
    }

    if (z <= 0.5) return detail::gauss_series(a, b, c, z);

    // z in (1/2, 1): connect to the x = 1-z variable.
    const double x = 1.0 - z;
    const Complex d = c - a - b;
    const double mr = std::round(d.real());
    if (std::abs(d.real() - mr) <= 1e-8 && std::abs(d.imag()) <= 1e-8) {
        const long m = static_cast<long>(mr);
        if (m >= 0) return detail::hyp2f1_log_branch(a, b, m, x);
        // Negative integer gap: the Euler transformation sends d -> -d > 0,
        // after which the logarithmic branch applies.
        return pow_pos(x, d) * hyp2f1_regularized({c - a, c - b, c, args.z});
    }
    return pi / sin_pi(d) *
           (reciprocal_gamma(c - a) * reciprocal_gamma(c - b) *
                detail::gauss_series(a, b, 1.0 - d, x) -
            pow_pos(x, d) * reciprocal_gamma(a) * reciprocal_gamma(b) *
                detail::gauss_series(c - a, c - b, 1.0 + d, x));
}

// Ferrers function of the first kind on the cut -1 < xi < 1:
//   P^mu_nu(xi) = ((1+xi)/(1-xi))^(mu/2) * 2F1(-nu, nu+1; 1-mu; (1-xi)/2)
//                 / Gamma(1-mu),
// entire in both mu and nu.
inline Complex ferrers_p(const LegendreOrder& order, const CutPoint& point) {
    const double xi = point.xi;
    if (1.0 - std::abs(xi) < 1e-10)
        throw precondition_error(
            "ferrers_p: |xi| within 1e-10 of 1 loses the prefactor's digits");
    const Complex pref =
        std::exp(0.5 * order.mu * (std::log1p(xi) - std::log1p(-xi)));
    const double z = 0.5 * (1.0 - xi);
    return pref * hyp2f1_regularized(
                      {-order.nu, order.nu + 1.0, 1.0 - order.mu, Complex(z, 0.0)});
}

// Relative residual of the order-raising recurrence
//   (nu-mu+1) P^mu_{nu+1}(cos t) - (nu+mu+1) cos t P^mu_nu(cos t)
//     = sin t P^{mu+1}_nu(cos t).
inline double remark_recurrence_residual(const LegendreOrder& order,
                                         double theta) {
    if (!(theta >= 1e-3 && theta <= pi - 1e-3))
        throw precondition_error(
            "remark_recurrence_residual: theta must lie in [1e-3, pi-1e-3]");
    // cos(theta), evaluated so the equator lands on exactly 0: the degenerate
    // residual there is 0/0 in exact arithmetic and must not be polluted by
    // the rounding of cos(pi/2).
    const double xi = std::sin(0.5 * pi - theta);
    const CutPoint point(xi);
    const Complex mu = order.mu;
    const Complex nu = order.nu;
    const Complex lhs = (nu - mu + 1.0) * ferrers_p({mu, nu + 1.0}, point) -
                        (nu + mu + 1.0) * xi * ferrers_p({mu, nu}, point);
    const Complex rhs = std::sin(theta) * ferrers_p({mu + 1.0, nu}, point);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

}  // namespace rzm
