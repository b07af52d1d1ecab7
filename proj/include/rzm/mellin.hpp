#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <rzm/core.hpp>
#include <rzm/error.hpp>
#include <rzm/gamma.hpp>
#include <rzm/kernels.hpp>
#include <rzm/legendre.hpp>
#include <rzm/quadrature.hpp>

namespace rzm {

// A Mellin variable together with the open strip of admissible real parts.
// When the point comes from the residue parameter rho, s = -rho exactly and
// the strip is (-q-1, -q).
struct MellinPoint {
    Complex s;
    double strip_lo;
    double strip_hi;
    std::optional<Complex> rho;

    MellinPoint(Complex s_, double strip_lo_, double strip_hi_)
        : s(s_), strip_lo(strip_lo_), strip_hi(strip_hi_) {
        if (!(strip_lo < s.real() && s.real() < strip_hi))
            throw strip_error(
                "MellinPoint: Re s must lie strictly inside (strip_lo, "
                "strip_hi)");
    }

    static MellinPoint from_rho(Complex rho_, int genus) {
        if (!(static_cast<double>(genus) < rho_.real() &&
              rho_.real() < static_cast<double>(genus) + 1.0))
            throw strip_error("MellinPoint: requires genus < Re rho < genus+1");
        MellinPoint p(-rho_, -static_cast<double>(genus) - 1.0,
                      -static_cast<double>(genus));
        p.rho = rho_;
        return p;
    }
};

namespace detail {

inline void require_tame_oscillation(Complex s) {
    if (std::abs(s.imag()) > 10.0)
        throw precondition_error(
            "mellin quadrature: |Im s| <= 10 is the supported oscillation "
            "range for the default rule");
}

}  // namespace detail

// Numerical Mellin transform int_0^inf f(u) u^{s-1} du.  The range is split
// at cfg.split_point; the tail is folded onto (0, split^{-1}) by u -> 1/v,
// and both pieces are mapped onto (0,1) by a quartic substitution that turns
// an endpoint exponent p into 4p+3, keeping the strip-interior integrands
// endpoint-regular for the Gauss-Kronrod panels.
inline MellinResult mellin_numeric(const std::function<Complex(double)>& f,
                                   const MellinPoint& point,
                                   const QuadratureConfig& cfg = {}) {
    const Complex s = point.s;
    if (!(point.strip_lo < s.real() && s.real() < point.strip_hi))
        throw strip_error("mellin_numeric: Re s outside the convergence strip");
    detail::require_tame_oscillation(s);

    const double head_scale = cfg.split_point;
    const double tail_scale = 1.0 / cfg.split_point;
    std::vector<std::function<Complex(double)>> pieces;
    pieces.emplace_back([&f, s, head_scale](double w) {
        const double w3 = w * w * w;
        const double u = head_scale * w3 * w;
        return f(u) * pow_pos(u, s - 1.0) * (4.0 * head_scale * w3);
    });
    pieces.emplace_back([&f, s, tail_scale](double w) {
        const double w3 = w * w * w;
        const double v = tail_scale * w3 * w;
        return f(1.0 / v) * pow_pos(v, -s - 1.0) * (4.0 * tail_scale * w3);
    });
    return detail::integrate_unit_pieces(pieces, cfg);
}

// Closed form of the Mellin transform of the Riesz kernel on the strip
// 0 < Re s < 2 Re lambda:
//   Gamma(1-mu) Gamma(s) Gamma(2 lambda - s) (1-xi^2)^{mu/2} P^mu_nu(xi)
//     / (2^mu Gamma(1-2mu)),   mu = 1/2 - lambda, nu = s - lambda - 1/2.
inline Complex mellin_riesz_closed(Complex lambda, const MellinPoint& point,
                                   const CutPoint& xi) {
    const Complex s = point.s;
    if (!(0.0 < s.real() && s.real() < 2.0 * lambda.real()))
        throw strip_error(
            "mellin_riesz_closed: requires 0 < Re s < 2 Re lambda");
    if (near_nonpos_integer(s, 1e-6) ||
        near_nonpos_integer(2.0 * lambda - s, 1e-6))
        throw pole_error(
            "mellin_riesz_closed: s within 1e-6 of a gamma pole");
    const Complex mu = 0.5 - lambda;
    const Complex nu = s - lambda - 0.5;
    const double one_minus_xi2 = (1.0 - xi.xi) * (1.0 + xi.xi);
    const Complex log_pref = log_gamma(1.0 - mu) + log_gamma(s) +
                             log_gamma(2.0 * lambda - s) - mu * ln_2 -
                             log_gamma(1.0 - 2.0 * mu) +
                             0.5 * mu * std::log(one_minus_xi2);
    return std::exp(log_pref) * ferrers_p({mu, nu}, xi);
}

// Closed form of the Mellin transform of h (genus-independent analytic
// continuation):
//   -sqrt(pi) Gamma(s) Gamma(2 lambda - s) (1-xi^2)^{(1-2 lambda)/4}
//     P^{1/2-lambda}_{s-lambda-1/2}(xi) / (2^{lambda-1/2} Gamma(lambda)).
inline Complex mellin_h_closed(const HKernelSpec& spec,
                               const MellinPoint& point) {
    const Complex lambda = spec.lambda;
    const Complex s = point.s;
    if (near_nonpos_integer(s, 1e-6) ||
        near_nonpos_integer(2.0 * lambda - s, 1e-6))
        throw pole_error("mellin_h_closed: s within 1e-6 of a gamma pole");
    const Complex mu = 0.5 - lambda;
    const Complex nu = s - lambda - 0.5;
    const double xi = spec.point.xi;
    const double one_minus_xi2 = (1.0 - xi) * (1.0 + xi);
    const Complex log_pref = 0.5 * ln_pi + log_gamma(s) +
                             log_gamma(2.0 * lambda - s) -
                             (lambda - 0.5) * ln_2 - log_gamma(lambda) +
                             0.25 * (1.0 - 2.0 * lambda) *
                                 std::log(one_minus_xi2);
    return -std::exp(log_pref) * ferrers_p({mu, nu}, spec.point);
}

// Integration-by-parts form of the transform of h, valid on the widened
// strip -q-1 < Re s < 2 Re lambda away from the prefactor poles
// {0,-1,...,-q}:
//   (-1)^q / prod_{k=0}^q (s+k) * int_0^inf u^{s+q} d^{q+1}k/du^{q+1} du.
inline MellinResult mellin_by_parts(const HKernelSpec& spec,
                                    const MellinPoint& point,
                                    const QuadratureConfig& cfg = {}) {
    const Complex s = point.s;
    const Complex lambda = spec.lambda;
    const int q = spec.genus;
    const double lo = -1.0 - static_cast<double>(q);
    const double hi = 2.0 * lambda.real();
    if (!(s.real() > lo + 1e-3 && s.real() < hi - 1e-3))
        throw strip_error(
            "mellin_by_parts: Re s must lie in (-q-1, 2 Re lambda) with a "
            "1e-3 margin");
    for (int k = 0; k <= q; ++k)
        if (std::abs(s + static_cast<double>(k)) < 1e-6)
            throw pole_error(
                "mellin_by_parts: s within 1e-6 of a prefactor pole");
    detail::require_tame_oscillation(s);

    const RieszDerivativeForm dk = riesz_derivative(q + 1, lambda, spec.point);
    Complex denominator(1.0, 0.0);
    for (int k = 0; k <= q; ++k) denominator *= s + static_cast<double>(k);
    const Complex prefactor = ((q % 2 == 0) ? 1.0 : -1.0) / denominator;

    // u^{s+q} = u^{(s+q+1)-1}: reuse the Mellin machinery at the shifted
    // variable, whose strip is the by-parts strip shifted by q+1.
    const MellinPoint shifted(s + static_cast<double>(q + 1), lo + q + 1.0,
                              hi + q + 1.0);
    MellinResult r = mellin_numeric([&dk](double u) { return dk(u); }, shifted,
                                    cfg);
    r.value *= prefactor;
    r.est_error *= std::abs(prefactor);
    return r;
}

// The two printed specializations of the closed form at s = -rho,
// lambda = (n-2)/2.  They differ by an overall sign; `second` is the one
// the quadrature oracle confirms, exposed as corollary_validated_form.
enum class CorollaryForm { first, second };

inline constexpr CorollaryForm corollary_validated_form =
    CorollaryForm::second;

inline Complex corollary_closed(DimensionSpec dim, int genus, Complex rho,
                                const CutPoint& xi, CorollaryForm form) {
    const int n = dim.n;
    if (!(static_cast<double>(genus) < rho.real() &&
          rho.real() < static_cast<double>(genus) + 1.0))
        throw precondition_error(
            "corollary_closed: requires genus < Re rho < genus+1");
    const double nearest = std::round(rho.real());
    if (std::hypot(rho.real() - nearest, rho.imag()) <= 1e-6)
        throw pole_error(
            "corollary_closed: rho within 1e-6 of an integer (sine pole)");

    const Complex order_mu(0.5 * (3.0 - n), 0.0);
    const Complex order_nu = -rho - 0.5 * (n - 1.0);
    const double one_minus_xi2 = (1.0 - xi.xi) * (1.0 + xi.xi);

    Complex log_pref = std::log(Complex(pi, 0.0)) - std::log(sin_pi(rho)) +
                       0.25 * (3.0 - n) * std::log(one_minus_xi2);
    for (int k = 1; k <= n - 3; ++k)
        log_pref += std::log(rho + static_cast<double>(k));
    double sign = 1.0;
    if (form == CorollaryForm::first) {
        // -pi sqrt(pi) 2^{(3-n)/2} prod (1-xi^2)^{(3-n)/4} P / (sin Gamma((n-2)/2))
        log_pref += 0.5 * ln_pi + 0.5 * (3.0 - n) * ln_2 -
                    log_gamma(Complex(0.5 * (n - 2.0), 0.0));
        sign = -1.0;
    } else {
        // +pi 2^{(n-3)/2} prod Gamma((n-1)/2) (1-xi^2)^{(3-n)/4} P / ((n-3)! sin)
        log_pref += 0.5 * (n - 3.0) * ln_2 +
                    log_gamma(Complex(0.5 * (n - 1.0), 0.0)) -
                    log_gamma(Complex(static_cast<double>(n - 2), 0.0));
    }
    return sign * std::exp(log_pref) * ferrers_p({order_mu, order_nu}, xi);
}

inline Complex corollary_closed_validated(DimensionSpec dim, int genus,
                                          Complex rho, const CutPoint& xi) {
    return corollary_closed(dim, genus, rho, xi, corollary_validated_form);
}

}  // namespace rzm
