#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include <rzm/core.hpp>
#include <rzm/error.hpp>

namespace rzm {

// Tolerances and limits for the adaptive Mellin quadrature.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_depth = 60;
    double split_point = 1.0;
};

// Outcome of one transform: the value, the accumulated error estimate of the
// accepted panels, and the number of integrand evaluations spent.
struct MellinResult {
    Complex value;
    double est_error;
    long evaluations;
};

namespace detail {

// 21-point Gauss-Kronrod pair (QUADPACK dqk21 constants).  Positive
// abscissae; even indices are Kronrod-only, odd indices carry the embedded
// 10-point Gauss rule.
inline constexpr double gk21_x[11] = {
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

inline constexpr double gk21_wk[11] = {
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

inline constexpr double gk21_wg[5] = {
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct QuadPanel {
    int piece;
    double lo, hi;
    Complex value;
    double err;
    int depth;
};

template <class F>
QuadPanel gk21_panel(const F& f, int piece, double lo, double hi, int depth,
                     long& evaluations) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Complex kronrod = gk21_wk[10] * f(center);
    Complex gauss(0.0, 0.0);
    for (int j = 0; j < 10; ++j) {
        const double dx = half * gk21_x[j];
        const Complex pair = f(center - dx) + f(center + dx);
        kronrod += gk21_wk[j] * pair;
        if (j % 2 == 1) gauss += gk21_wg[j / 2] * pair;
    }
    evaluations += 21;
    return {piece,         lo, hi, kronrod * half, std::abs((kronrod - gauss) * half),
            depth};
}

inline constexpr long quadrature_max_evaluations = 20000000;

// Adaptive bisection over any number of unit-interval pieces sharing one
// global error budget: always split the panel with the largest estimate.
inline MellinResult integrate_unit_pieces(
    const std::vector<std::function<Complex(double)>>& pieces,
    const QuadratureConfig& cfg) {
    auto worse = [](const QuadPanel& a, const QuadPanel& b) {
        return a.err < b.err;
    };
    std::priority_queue<QuadPanel, std::vector<QuadPanel>, decltype(worse)>
        heap(worse);
    Complex total(0.0, 0.0);
    double err_sum = 0.0;
    long evaluations = 0;

    auto add = [&](int piece, double lo, double hi, int depth) {
        QuadPanel p =
            gk21_panel(pieces[piece], piece, lo, hi, depth, evaluations);
        total += p.value;
        err_sum += p.err;
        heap.push(p);
    };
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
        add(i, 0.0, 0.5, 0);
        add(i, 0.5, 1.0, 0);
    }
    while (err_sum > std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol)) {
        const QuadPanel worst = heap.top();
        heap.pop();
        if (worst.depth >= cfg.max_depth)
            throw convergence_error(
                "adaptive quadrature: bisection depth exhausted before the "
                "error target was met");
        if (evaluations > quadrature_max_evaluations)
            throw convergence_error(
                "adaptive quadrature: evaluation budget exhausted before the "
                "error target was met");
        total -= worst.value;
        err_sum = std::max(0.0, err_sum - worst.err);
        const double mid = 0.5 * (worst.lo + worst.hi);
        add(worst.piece, worst.lo, mid, worst.depth + 1);
        add(worst.piece, mid, worst.hi, worst.depth + 1);
    }
    return {total, err_sum, evaluations};
}

}  // namespace detail

}  // namespace rzm
