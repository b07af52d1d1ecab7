#ifndef RZM_KERNELS_HPP
#define RZM_KERNELS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rzm/core.hpp"
#include "rzm/error.hpp"
#include "rzm/gegenbauer.hpp"

namespace rzm {

// point on the angular cut: xi = cos(psi), with the angle kept when known
struct CutPoint {
    double xi;
    std::optional<double> psi;

    explicit CutPoint(double xi_) : xi(xi_) {
        if (!(std::abs(xi) <= 1.0)) throw precondition_error("CutPoint: |xi| <= 1 required");
    }

    CutPoint(double xi_, double psi_) : xi(xi_), psi(psi_) {
        if (!(std::abs(xi) <= 1.0)) throw precondition_error("CutPoint: |xi| <= 1 required");
        if (!(psi_ >= -pi && psi_ <= pi))
            throw precondition_error("CutPoint: psi in [-pi, pi] required");
        if (std::abs(std::cos(psi_) - xi) >= 1e-12)
            throw precondition_error("CutPoint: cos(psi) must match xi");
    }

    static CutPoint from_angle(double psi_) {
        if (!(psi_ >= -pi && psi_ <= pi))
            throw precondition_error("CutPoint: psi in [-pi, pi] required");
        return CutPoint(std::cos(psi_), psi_);
    }
};

// (1 + t^2 + 2 t xi)^(-lambda), t >= 0
inline Complex riesz_kernel(double t, const CutPoint& point, Complex lambda) {
    if (!(t >= 0.0)) throw precondition_error("riesz_kernel: t >= 0 required");
    double base = 1.0 + t * t + 2.0 * t * point.xi;
    if (base <= 1e-300)
        throw singularity_error("riesz_kernel: singular at t = 1, xi = -1");
    return pow_pos(base, -lambda);
}

// kernel family (lambda, genus q, cut point) for the genus-corrected kernel
struct HKernelSpec {
    Complex lambda;
    int genus;
    CutPoint point;

    HKernelSpec(Complex lambda_, int genus_, CutPoint point_)
        : lambda(lambda_), genus(genus_), point(point_) {
        if (!(lambda.real() > 0.0)) throw precondition_error("HKernelSpec: Re lambda > 0 required");
        if (genus < 0) throw precondition_error("HKernelSpec: genus >= 0 required");
    }
};

// below this, h is evaluated by its tail series to avoid the O(1)-term
// cancellation that wipes out the u^(q+1) leading behaviour
inline constexpr double h_series_switch = 0.25;

// h(u) = -(1 + u^2 + 2u xi)^(-lambda) + sum_{j=0}^{q} (-u)^j C_j^lambda(xi)
//      = -sum_{j>q} (-u)^j C_j^lambda(xi)   (tail form, |u| < 1)
inline Complex h_kernel(const HKernelSpec& spec, double u) {
    if (!(u >= 0.0)) throw precondition_error("h_kernel: u >= 0 required");
    const int q = spec.genus;
    const Complex lambda = spec.lambda;
    const double xi = spec.point.xi;
    if (u > h_series_switch)
        return -riesz_kernel(u, spec.point, lambda) + gegenbauer_partial_sum(q, lambda, u, xi);
    if (u == 0.0) return Complex(0.0, 0.0);
    // tail series; odd-j terms vanish identically at xi = 0, so require three
    // consecutive negligible terms before stopping
    Complex cm2(1.0, 0.0);
    Complex cm1 = 2.0 * lambda * xi;
    double power = 1.0;
    for (int j = 1; j <= q; ++j) power *= -u;
    Complex acc(0.0, 0.0);
    int small_run = 0;
    for (int j = 1; j < 400; ++j) {
        Complex c;
        if (j == 1) {
            c = cm1;
        } else {
            c = (2.0 * (double(j) + lambda - 1.0) * xi * cm1 -
                 (double(j) + 2.0 * lambda - 2.0) * cm2) / double(j);
            cm2 = cm1;
            cm1 = c;
        }
        if (j > q) {
            power *= -u;
            Complex term = -power * c;
            acc += term;
            if (std::abs(term) <= 1e-17 * std::abs(acc)) {
                if (++small_run >= 3) return acc;
            } else {
                small_run = 0;
            }
        }
    }
    throw convergence_error("h_kernel: tail series did not converge");
}

struct HBoundCertificate {
    double c_estimate;       // sup |h(u)| / min(u^q, u^(q+1)) over the grid
    double slope_origin;     // log-log slope of |h| over the lowest decade
    double slope_infinity;   // log-log slope of |h| over the highest decade
};

// log-spaced grid covering [lo, hi]
inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
    if (!(lo > 0.0 && hi > lo && per_decade > 0))
        throw precondition_error("log_grid: need 0 < lo < hi, per_decade > 0");
    int count = int(std::lround(std::log10(hi / lo) * per_decade)) + 1;
    if (count < 2) count = 2;
    std::vector<double> g(count);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
        g[i] = std::exp(llo + (lhi - llo) * double(i) / double(count - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

namespace detail {

// least-squares slope of ln|y| against ln(x)
inline double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!(ys[i] > 0.0) || !std::isfinite(ys[i])) continue;
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++m;
    }
    if (m < 2) return std::numeric_limits<double>::quiet_NaN();
    double denom = m * sxx - sx * sx;
    return (m * sxy - sx * sy) / denom;
}

}  // namespace detail

// empirical certificate for |h| <= C min(u^q, u^(q+1)); real lambda only
inline HBoundCertificate h_bound_certificate(const HKernelSpec& spec,
                                             std::span<const double> u_grid) {
    if (spec.lambda.imag() != 0.0)
        throw precondition_error("h_bound_certificate: real lambda required");
    if (u_grid.size() < 4)
        throw precondition_error("h_bound_certificate: grid too small");
    const int q = spec.genus;
    std::vector<double> mags(u_grid.size());
    double c = 0.0;
    for (size_t i = 0; i < u_grid.size(); ++i) {
        double u = u_grid[i];
        if (!(u > 0.0)) throw precondition_error("h_bound_certificate: grid must be positive");
        mags[i] = std::abs(h_kernel(spec, u));
        double envelope = std::pow(u, q) * std::min(1.0, u);
        double ratio = mags[i] / envelope;
        if (!std::isfinite(ratio)) {
            c = std::numeric_limits<double>::infinity();
        } else {
            c = std::max(c, ratio);
        }
    }
    double lo_cut = u_grid.front() * 10.0 * (1.0 + 1e-9);
    double hi_cut = u_grid.back() / 10.0 * (1.0 - 1e-9);
    std::vector<double> xs0, ys0, xs1, ys1;
    for (size_t i = 0; i < u_grid.size(); ++i) {
        if (u_grid[i] <= lo_cut) { xs0.push_back(u_grid[i]); ys0.push_back(mags[i]); }
        if (u_grid[i] >= hi_cut) { xs1.push_back(u_grid[i]); ys1.push_back(mags[i]); }
    }
    return {c, detail::loglog_slope(xs0, ys0), detail::loglog_slope(xs1, ys1)};
}

inline HBoundCertificate h_bound_certificate(const HKernelSpec& spec) {
    auto grid = log_grid(1e-6, 1e6, 20);
    return h_bound_certificate(spec, grid);
}

// K_q(x,y) = -|x - y|^(2-n) + t^(2-n) sum_{j<=q} (r/t)^j C_j^((n-2)/2)(cos psi)
//          = t^(2-n) h(r/t) with the cut point flipped to -cos(psi).
// Delegating to h keeps full relative accuracy for r << t, where the two-term
// form cancels to nothing.
inline double weierstrass_kernel(double r, double t, double psi, DimensionSpec dim, int genus) {
    if (!(t > 0.0)) throw precondition_error("weierstrass_kernel: t > 0 required");
    if (!(r >= 0.0)) throw precondition_error("weierstrass_kernel: r >= 0 required");
    if (!(psi >= -pi && psi <= pi))
        throw precondition_error("weierstrass_kernel: psi in [-pi, pi] required");
    HKernelSpec spec(Complex(dim.lambda(), 0.0), genus, CutPoint(-std::cos(psi)));
    return std::pow(t, 2 - dim.n) * h_kernel(spec, r / t).real();
}

// d^m/du^m of the kernel, kept symbolically as sum_i p_i(u) k_(lambda+shift_i)(u)
struct RieszDerivativeForm {
    int order;
    Complex lambda;
    double xi;

    struct Term {
        std::vector<Complex> poly;  // ascending coefficients in u
        int shift;
    };
    std::vector<Term> terms;

    Complex operator()(double u) const {
        if (!(u >= 0.0)) throw precondition_error("RieszDerivativeForm: u >= 0 required");
        double base = 1.0 + u * u + 2.0 * u * xi;
        if (base <= 1e-300) throw singularity_error("RieszDerivativeForm: singular point");
        Complex k0 = pow_pos(base, -lambda);
        Complex acc(0.0, 0.0);
        double bpow = 1.0;
        int cur = 0;
        for (const Term& t : terms) {
            while (cur < t.shift) { bpow *= base; ++cur; }
            Complex p(0.0, 0.0);
            for (auto it = t.poly.rbegin(); it != t.poly.rend(); ++it) p = p * u + *it;
            acc += p * k0 / bpow;
        }
        return acc;
    }
};

// build d^m/du^m (1 + u^2 + 2u xi)^(-lambda) via
//   d/du [p(u) k_(lambda+s)] = p'(u) k_(lambda+s) - 2(lambda+s)(xi+u) p(u) k_(lambda+s+1)
inline RieszDerivativeForm riesz_derivative(int order, Complex lambda, const CutPoint& point) {
    if (order < 0 || order > 12)
        throw precondition_error("riesz_derivative: order in [0, 12] required (stability cap)");
    const double xi = point.xi;
    std::map<int, std::vector<Complex>> polys;
    polys[0] = {Complex(1.0, 0.0)};
    auto add_into = [](std::vector<Complex>& dst, const std::vector<Complex>& src) {
        if (dst.size() < src.size()) dst.resize(src.size(), Complex(0.0, 0.0));
        for (size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
    };
    for (int m = 0; m < order; ++m) {
        std::map<int, std::vector<Complex>> next;
        for (const auto& [shift, p] : polys) {
            if (p.size() > 1) {
                std::vector<Complex> dp(p.size() - 1);
                for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = double(i) * p[i];
                add_into(next[shift], dp);
            }
            Complex f = -2.0 * (lambda + double(shift));
            std::vector<Complex> prod(p.size() + 1, Complex(0.0, 0.0));
            for (size_t i = 0; i < p.size(); ++i) {
                prod[i] += f * xi * p[i];
                prod[i + 1] += f * p[i];
            }
            add_into(next[shift + 1], prod);
        }
        polys = std::move(next);
    }
    RieszDerivativeForm form{order, lambda, xi, {}};
    for (auto& [shift, p] : polys) form.terms.push_back({std::move(p), shift});
    return form;
}

}  // namespace rzm

#endif
