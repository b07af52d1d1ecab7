#ifndef RZM_VERIFY_HPP
#define RZM_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rzm/core.hpp"
#include "rzm/error.hpp"
#include "rzm/gamma.hpp"
#include "rzm/gegenbauer.hpp"
#include "rzm/kernels.hpp"
#include "rzm/legendre.hpp"
#include "rzm/mellin.hpp"

namespace rzm {

// Identities the sweep driver can check.  Each one compares an independent
// pair of evaluation paths over a parameter grid; none of them shares code
// with the path it is checking beyond the shared scalar primitives.
enum class Identity {
    eq1,            // k-transform quadrature vs. its closed form
    eq2,            // h-transform quadrature vs. the closed continuation
    by_parts,       // repeated-by-parts transform vs. quadrature / continuation
    corollary,      // dimension-indexed closed forms vs. quadrature (adjudicates the sign)
    gegenbauer_gf,  // generating-function partial sums vs. the kernel, plus parity
    duplication,    // gamma duplication product identity
    recurrence,     // Ferrers function three-term order-raising recurrence
    h_bound,        // two-sided power envelope of h (slopes and constant stability)
    kq_reduction,   // geometric kernel reduction onto h via the angle flip
};

inline constexpr int identity_count = 9;

inline const char* identity_name(Identity id) {
    switch (id) {
        case Identity::eq1: return "eq1";
        case Identity::eq2: return "eq2";
        case Identity::by_parts: return "by_parts";
        case Identity::corollary: return "corollary";
        case Identity::gegenbauer_gf: return "gegenbauer_gf";
        case Identity::duplication: return "duplication";
        case Identity::recurrence: return "recurrence";
        case Identity::h_bound: return "h_bound";
        case Identity::kq_reduction: return "kq_reduction";
    }
    return "unknown";
}

inline std::optional<Identity> identity_from_name(std::string_view name) {
    for (int i = 0; i < identity_count; ++i) {
        const Identity id = static_cast<Identity>(i);
        if (name == identity_name(id)) return id;
    }
    return std::nullopt;
}

inline std::vector<Identity> all_identities() {
    std::vector<Identity> ids;
    ids.reserve(identity_count);
    for (int i = 0; i < identity_count; ++i) ids.push_back(static_cast<Identity>(i));
    return ids;
}

// Randomized grids refuse to run without an explicit seed so that every
// reported number is reproducible from the command line alone.
inline bool identity_requires_seed(Identity id) {
    return id == Identity::recurrence || id == Identity::kq_reduction;
}

enum class Verbosity { silent, summary, per_point };

inline std::optional<Verbosity> verbosity_from_name(std::string_view name) {
    if (name == "silent") return Verbosity::silent;
    if (name == "summary") return Verbosity::summary;
    if (name == "per-point" || name == "per_point") return Verbosity::per_point;
    return std::nullopt;
}

// One grid point of one identity.  The scalar columns mirror the CSV schema;
// identities without a natural (s, xi, q) reuse the columns as documented in
// the README (e.g. duplication stores its argument z in the s columns).
struct VerificationRecord {
    Identity identity = Identity::eq1;
    std::string params;  // full parameter tuple, human readable
    double n_or_lambda = 0.0;
    int q = 0;
    double xi = 0.0;
    double re_s = 0.0;
    double im_s = 0.0;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::string oracle;
    bool pass = false;
};

// Grid description for one sweep.  Empty lists fall back to the compiled-in
// defaults for the identity; rel_tol <= 0 falls back to the identity default.
// The meaning of re_offsets depends on the identity:
//   eq1                fractions of the strip (0, 2 lambda)
//   eq2 / by_parts     offsets in (-1, 0) relative to -q (Re s = -q + offset)
//   corollary          offsets in (0, 1) relative to q (Re rho = q + offset)
//   duplication        real parts of the argument lattice (im_offsets: imaginary)
struct SweepSpec {
    Identity identity = Identity::eq1;
    double rel_tol = 0.0;
    bool has_seed = false;
    std::uint64_t seed = 0;
    int point_count = 0;  // randomized sweeps; <= 0 means default
    std::vector<double> lambdas;
    std::vector<int> dims;
    std::vector<int> genera;
    std::vector<double> xis;
    std::vector<double> re_offsets;
    std::vector<double> im_offsets;
    std::vector<double> cont_fracs;  // by_parts: continuation abscissae as fractions of 2 lambda
    std::vector<double> cont_ims;    // by_parts: imaginary offsets for continuation points
};

inline double default_rel_tol(Identity id) {
    switch (id) {
        case Identity::eq1: return 1e-7;
        case Identity::eq2: return 1e-7;
        case Identity::by_parts: return 1e-6;
        case Identity::corollary: return 1e-7;
        case Identity::gegenbauer_gf: return 1e-10;
        case Identity::duplication: return 1e-12;
        case Identity::recurrence: return 1e-9;
        case Identity::h_bound: return 0.05;
        case Identity::kq_reduction: return 1e-12;
    }
    return 1e-7;
}

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * double(i) / double(count - 1);
    return v;
}

}  // namespace detail

// Fill in the compiled-in default grid for every list the caller left empty.
inline SweepSpec resolved_sweep(SweepSpec s) {
    if (s.rel_tol <= 0.0) s.rel_tol = default_rel_tol(s.identity);
    auto def = [](auto& list, std::initializer_list<typename std::decay_t<decltype(list)>::value_type> values) {
        if (list.empty()) list.assign(values);
    };
    switch (s.identity) {
        case Identity::eq1:
            def(s.lambdas, {0.5, 0.75, 1.0, 1.5, 2.3});
            def(s.xis, {-0.9, -0.5, 0.0, 0.5, 0.9});
            def(s.re_offsets, {0.25, 0.5, 0.75});
            def(s.im_offsets, {-2.0, 0.0, 2.0});
            break;
        case Identity::eq2:
            def(s.lambdas, {0.5, 0.75, 1.0, 1.5, 2.3});
            def(s.genera, {0, 1, 2, 3});
            // xi = -0.45 rather than -0.5: at lambda = 1, xi = cos(2pi/3) the
            // transform vanishes identically for q in {0, 3} (the Ferrers
            // factor is sin((nu+1/2)theta) with (nu+1/2)theta a multiple of
            // pi), and a relative comparison is undefined at an exact zero.
            def(s.xis, {-0.9, -0.45, 0.0, 0.5, 0.9});
            def(s.re_offsets, {-0.5});
            def(s.im_offsets, {0.0, 1.0, 3.0});
            break;
        case Identity::by_parts:
            def(s.lambdas, {0.75, 1.25, 2.0});
            def(s.genera, {0, 1, 2});
            def(s.xis, {-0.5, 0.3});
            def(s.re_offsets, {-0.8, -0.5, -0.2});
            def(s.im_offsets, {0.0, 1.5});
            def(s.cont_fracs, {0.35, 0.7});
            def(s.cont_ims, {0.0, 1.0});
            break;
        case Identity::corollary:
            def(s.dims, {3, 4, 5, 6});
            def(s.genera, {0, 1, 2, 3});
            def(s.xis, {-0.8, 0.0, 0.8});
            def(s.re_offsets, {0.5});
            def(s.im_offsets, {0.0, 1.0});
            break;
        case Identity::gegenbauer_gf:
            def(s.lambdas, {0.5, 0.75, 1.0, 1.5, 2.3});
            def(s.xis, {-0.9, -0.5, 0.0, 0.5, 0.9});
            break;
        case Identity::duplication:
            if (s.re_offsets.empty()) s.re_offsets = detail::linspace(0.3, 6.0, 10);
            if (s.im_offsets.empty()) s.im_offsets = detail::linspace(-5.0, 5.0, 10);
            break;
        case Identity::recurrence:
            if (s.point_count <= 0) s.point_count = 100;
            break;
        case Identity::h_bound:
            def(s.lambdas, {0.5, 1.0, 2.0});
            def(s.genera, {0, 1, 2, 3});
            def(s.xis, {-0.8, 0.4, 0.8});
            break;
        case Identity::kq_reduction:
            if (s.point_count <= 0) s.point_count = 200;
            break;
    }
    return s;
}

namespace detail {

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt_c(Complex z) {
    return "(" + fmt17(z.real()) + "," + fmt17(z.imag()) + ")";
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

[[noreturn]] inline void reject_grid(const std::string& identity, const std::string& why) {
    throw precondition_error("grid rejected before evaluation [" + identity + "]: " + why);
}

}  // namespace detail

// Screen every grid point against the documented strip / domain conditions.
// A violating point is rejected here, by name, before anything is evaluated;
// no record is ever produced for it.
inline void validate_sweep(const SweepSpec& s) {
    const std::string name = identity_name(s.identity);
    auto reject = [&](const std::string& why) { detail::reject_grid(name, why); };

    if (!(s.rel_tol > 0.0) || s.rel_tol > 1.0)
        reject("rel_tol=" + detail::fmt17(s.rel_tol) + " must lie in (0, 1]");
    if (identity_requires_seed(s.identity)) {
        if (!s.has_seed) reject("randomized grid requires an explicit seed");
        if (s.point_count < 1 || s.point_count > 100000)
            reject("point_count=" + std::to_string(s.point_count) + " must lie in [1, 100000]");
    }

    auto check_lambdas = [&](double cap) {
        for (double lam : s.lambdas)
            if (!(lam > 0.0) || lam > cap)
                reject("lambda=" + detail::fmt17(lam) + " must lie in (0, " + detail::fmt17(cap) + "]");
    };
    auto check_genera = [&]() {
        for (int q : s.genera)
            if (q < 0 || q > 12) reject("genus=" + std::to_string(q) + " must lie in [0, 12]");
    };
    auto check_xis_interior = [&]() {
        for (double xi : s.xis)
            if (!(std::abs(xi) <= 1.0 - 1e-10))
                reject("xi=" + detail::fmt17(xi) + " too close to the cut endpoint (need |xi| <= 1 - 1e-10)");
    };
    auto check_xis_closed = [&]() {
        for (double xi : s.xis)
            if (!(std::abs(xi) <= 1.0)) reject("xi=" + detail::fmt17(xi) + " must satisfy |xi| <= 1");
    };
    auto check_ims = [&](const std::vector<double>& ims) {
        for (double im : ims)
            if (!(std::abs(im) <= 10.0))
                reject("|Im s|=" + detail::fmt17(std::abs(im)) + " exceeds the oscillation budget 10");
    };

    switch (s.identity) {
        case Identity::eq1:
            check_lambdas(100.0);
            check_xis_interior();
            for (double fr : s.re_offsets)
                if (!(fr >= 0.05 && fr <= 0.95))
                    reject("strip fraction=" + detail::fmt17(fr) +
                           " outside [0.05, 0.95] of the strip (0, 2 lambda)");
            check_ims(s.im_offsets);
            break;
        case Identity::eq2:
        case Identity::by_parts:
            check_lambdas(100.0);
            check_genera();
            check_xis_interior();
            for (double off : s.re_offsets)
                if (!(off >= -1.0 + 1e-3 && off <= -1e-3))
                    reject("re offset=" + detail::fmt17(off) +
                           " outside [-1+1e-3, -1e-3] relative to -q (strip interior)");
            check_ims(s.im_offsets);
            if (s.identity == Identity::by_parts) {
                for (double fr : s.cont_fracs)
                    if (!(fr >= 0.05 && fr <= 0.95))
                        reject("continuation fraction=" + detail::fmt17(fr) +
                               " outside [0.05, 0.95] of the strip (0, 2 lambda)");
                check_ims(s.cont_ims);
            }
            break;
        case Identity::corollary:
            for (int n : s.dims)
                if (n < 3 || n > 25) reject("n=" + std::to_string(n) + " must lie in [3, 25]");
            check_genera();
            check_xis_interior();
            for (double off : s.re_offsets)
                if (!(off >= 1e-3 && off <= 1.0 - 1e-3))
                    reject("rho offset=" + detail::fmt17(off) +
                           " outside [1e-3, 1-1e-3] relative to q (pole margin)");
            check_ims(s.im_offsets);
            break;
        case Identity::gegenbauer_gf:
            check_lambdas(100.0);
            check_xis_closed();
            break;
        case Identity::duplication:
            for (double re : s.re_offsets)
                if (!(re >= 0.05 && re <= 80.0))
                    reject("Re z=" + detail::fmt17(re) + " outside [0.05, 80] (pole and overflow margin)");
            for (double im : s.im_offsets)
                if (!(std::abs(im) <= 80.0))
                    reject("|Im z|=" + detail::fmt17(std::abs(im)) + " exceeds 80");
            break;
        case Identity::recurrence:
        case Identity::kq_reduction:
            break;  // seeded draws are range-limited by construction
        case Identity::h_bound:
            check_lambdas(50.0);
            check_genera();
            check_xis_closed();
            break;
    }
}

namespace detail {

inline VerificationRecord finish_record(Identity id, std::string params, double n_or_lambda,
                                        int q, double xi, double re_s, double im_s, Complex lhs,
                                        Complex rhs, const char* oracle, double rel_tol) {
    VerificationRecord r;
    r.identity = id;
    r.params = std::move(params);
    r.n_or_lambda = n_or_lambda;
    r.q = q;
    r.xi = xi;
    r.re_s = re_s;
    r.im_s = im_s;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.oracle = oracle;
    r.pass = r.rel_err <= rel_tol;
    return r;
}

// A module error at one grid point becomes a failed record carrying the
// message; it never aborts the rest of the sweep.
inline VerificationRecord error_record(Identity id, std::string params, double n_or_lambda,
                                       int q, double xi, double re_s, double im_s,
                                       const std::exception& e) {
    VerificationRecord r;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.identity = id;
    r.params = std::move(params) + " error=\"" + e.what() + "\"";
    r.n_or_lambda = n_or_lambda;
    r.q = q;
    r.xi = xi;
    r.re_s = re_s;
    r.im_s = im_s;
    r.lhs = Complex(nan, nan);
    r.rhs = Complex(nan, nan);
    r.abs_err = std::numeric_limits<double>::infinity();
    r.rel_err = std::numeric_limits<double>::infinity();
    r.oracle = "error";
    r.pass = false;
    return r;
}

using Emit = std::function<void(VerificationRecord&&)>;

inline void sweep_eq1(const SweepSpec& s, const Emit& emit) {
    for (double lam : s.lambdas)
        for (double xi : s.xis)
            for (double fr : s.re_offsets)
                for (double im : s.im_offsets) {
                    const Complex sv(2.0 * lam * fr, im);
                    std::string params =
                        "lambda=" + fmt17(lam) + " xi=" + fmt17(xi) + " s=" + fmt_c(sv);
                    try {
                        const Complex lamc(lam, 0.0);
                        const MellinPoint point(sv, 0.0, 2.0 * lam);
                        const CutPoint cut(xi);
                        const MellinResult numeric = mellin_numeric(
                            [&](double u) { return riesz_kernel(u, cut, lamc); }, point);
                        const Complex closed = mellin_riesz_closed(lamc, point, cut);
                        emit(finish_record(Identity::eq1, std::move(params), lam, 0, xi,
                                           sv.real(), sv.imag(), numeric.value, closed,
                                           "mellin_quadrature", s.rel_tol));
                    } catch (const std::exception& e) {
                        emit(error_record(Identity::eq1, std::move(params), lam, 0, xi,
                                          sv.real(), sv.imag(), e));
                    }
                }
}

inline void sweep_eq2(const SweepSpec& s, const Emit& emit) {
    for (double lam : s.lambdas)
        for (int q : s.genera)
            for (double xi : s.xis)
                for (double off : s.re_offsets)
                    for (double im : s.im_offsets) {
                        const Complex sv(-double(q) + off, im);
                        std::string params = "lambda=" + fmt17(lam) + " q=" + std::to_string(q) +
                                             " xi=" + fmt17(xi) + " s=" + fmt_c(sv);
                        try {
                            const HKernelSpec spec(Complex(lam, 0.0), q, CutPoint(xi));
                            const MellinPoint point(sv, -double(q) - 1.0, -double(q));
                            const MellinResult numeric = mellin_numeric(
                                [&](double u) { return h_kernel(spec, u); }, point);
                            const Complex closed = mellin_h_closed(spec, point);
                            emit(finish_record(Identity::eq2, std::move(params), lam, q, xi,
                                               sv.real(), sv.imag(), numeric.value, closed,
                                               "mellin_quadrature", s.rel_tol));
                        } catch (const std::exception& e) {
                            emit(error_record(Identity::eq2, std::move(params), lam, q, xi,
                                              sv.real(), sv.imag(), e));
                        }
                    }
}

inline void sweep_by_parts(const SweepSpec& s, const Emit& emit) {
    // Overlap phase: inside the original strip the by-parts value must agree
    // with the direct quadrature of h.
    for (double lam : s.lambdas)
        for (int q : s.genera)
            for (double xi : s.xis)
                for (double off : s.re_offsets)
                    for (double im : s.im_offsets) {
                        const Complex sv(-double(q) + off, im);
                        std::string params = "phase=overlap lambda=" + fmt17(lam) +
                                             " q=" + std::to_string(q) + " xi=" + fmt17(xi) +
                                             " s=" + fmt_c(sv);
                        try {
                            const HKernelSpec spec(Complex(lam, 0.0), q, CutPoint(xi));
                            const MellinPoint wide(sv, -double(q) - 1.0, 2.0 * lam);
                            const MellinResult bp = mellin_by_parts(spec, wide);
                            const MellinPoint narrow(sv, -double(q) - 1.0, -double(q));
                            const MellinResult direct = mellin_numeric(
                                [&](double u) { return h_kernel(spec, u); }, narrow);
                            emit(finish_record(Identity::by_parts, std::move(params), lam, q, xi,
                                               sv.real(), sv.imag(), bp.value, direct.value,
                                               "mellin_numeric", s.rel_tol));
                        } catch (const std::exception& e) {
                            emit(error_record(Identity::by_parts, std::move(params), lam, q, xi,
                                              sv.real(), sv.imag(), e));
                        }
                    }
    // Continuation phase: outside the original strip the by-parts value must
    // agree with the closed-form continuation.
    for (double lam : s.lambdas)
        for (int q : s.genera)
            for (double xi : s.xis)
                for (double fr : s.cont_fracs)
                    for (double im : s.cont_ims) {
                        const Complex sv(2.0 * lam * fr, im);
                        std::string params = "phase=continuation lambda=" + fmt17(lam) +
                                             " q=" + std::to_string(q) + " xi=" + fmt17(xi) +
                                             " s=" + fmt_c(sv);
                        try {
                            const HKernelSpec spec(Complex(lam, 0.0), q, CutPoint(xi));
                            const MellinPoint wide(sv, -double(q) - 1.0, 2.0 * lam);
                            const MellinResult bp = mellin_by_parts(spec, wide);
                            const Complex closed = mellin_h_closed(spec, wide);
                            emit(finish_record(Identity::by_parts, std::move(params), lam, q, xi,
                                               sv.real(), sv.imag(), bp.value, closed,
                                               "h_closed", s.rel_tol));
                        } catch (const std::exception& e) {
                            emit(error_record(Identity::by_parts, std::move(params), lam, q, xi,
                                              sv.real(), sv.imag(), e));
                        }
                    }
}

inline void sweep_corollary(const SweepSpec& s, const Emit& emit) {
    for (int n : s.dims)
        for (int q : s.genera)
            for (double off : s.re_offsets)
                for (double im : s.im_offsets)
                    for (double xi : s.xis) {
                        const Complex rho(double(q) + off, im);
                        const DimensionSpec dim(n);
                        const std::string base = "n=" + std::to_string(n) +
                                                 " q=" + std::to_string(q) +
                                                 " rho=" + fmt_c(rho) + " xi=" + fmt17(xi);
                        Complex numeric(0.0, 0.0);
                        bool numeric_ok = true;
                        try {
                            const HKernelSpec spec(Complex(dim.lambda(), 0.0), q, CutPoint(xi));
                            const MellinPoint point = MellinPoint::from_rho(rho, q);
                            numeric = mellin_numeric(
                                          [&](double u) { return h_kernel(spec, u); }, point)
                                          .value;
                        } catch (const std::exception& e) {
                            numeric_ok = false;
                            for (const char* form : {"first", "second"})
                                emit(error_record(Identity::corollary,
                                                  base + " form=" + form, double(n), q, xi,
                                                  -rho.real(), -rho.imag(), e));
                        }
                        if (!numeric_ok) continue;
                        for (CorollaryForm form : {CorollaryForm::first, CorollaryForm::second}) {
                            const bool is_first = form == CorollaryForm::first;
                            std::string params = base + (is_first ? " form=first" : " form=second");
                            try {
                                const Complex closed =
                                    corollary_closed(dim, q, rho, CutPoint(xi), form);
                                emit(finish_record(Identity::corollary, std::move(params),
                                                   double(n), q, xi, -rho.real(), -rho.imag(),
                                                   closed, numeric,
                                                   is_first ? "quadrature_vs_first"
                                                            : "quadrature_vs_second",
                                                   s.rel_tol));
                            } catch (const std::exception& e) {
                                emit(error_record(Identity::corollary, std::move(params),
                                                  double(n), q, xi, -rho.real(), -rho.imag(), e));
                            }
                        }
                    }
}

inline void sweep_gegenbauer_gf(const SweepSpec& s, const Emit& emit) {
    constexpr int sum_order = 80;
    constexpr double u = 0.5;
    for (double lam : s.lambdas)
        for (double xi : s.xis) {
            std::string params =
                "lambda=" + fmt17(lam) + " xi=" + fmt17(xi) + " u=" + fmt17(u) + " J=80";
            try {
                const Complex lamc(lam, 0.0);
                const Complex partial = gegenbauer_partial_sum(sum_order, lamc, u, xi);
                const Complex kernel = riesz_kernel(u, CutPoint(xi), lamc);
                emit(finish_record(Identity::gegenbauer_gf, std::move(params), lam, sum_order, xi,
                                   u, 0.0, partial, kernel, "riesz_kernel", s.rel_tol));
            } catch (const std::exception& e) {
                emit(error_record(Identity::gegenbauer_gf, std::move(params), lam, sum_order, xi,
                                  u, 0.0, e));
            }
        }
    // Parity rows: C_j(-xi) = (-1)^j C_j(xi) for the positive xi in the grid.
    for (double lam : s.lambdas)
        for (double xi : s.xis) {
            if (!(xi >= 0.05)) continue;
            for (int j : {5, 12}) {
                std::string params =
                    "lambda=" + fmt17(lam) + " xi=" + fmt17(xi) + " j=" + std::to_string(j);
                try {
                    const Complex lamc(lam, 0.0);
                    const Complex lhs = gegenbauer(j, lamc, -xi);
                    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                    const Complex rhs = sign * gegenbauer(j, lamc, xi);
                    emit(finish_record(Identity::gegenbauer_gf, std::move(params), lam, j, xi,
                                       0.0, 0.0, lhs, rhs, "parity", s.rel_tol));
                } catch (const std::exception& e) {
                    emit(error_record(Identity::gegenbauer_gf, std::move(params), lam, j, xi,
                                      0.0, 0.0, e));
                }
            }
        }
}

inline void sweep_duplication(const SweepSpec& s, const Emit& emit) {
    for (double re : s.re_offsets)
        for (double im : s.im_offsets) {
            const Complex z(re, im);
            std::string params = "z=" + fmt_c(z);
            try {
                const Complex lhs = gamma(2.0 * z);
                const Complex rhs = std::exp((2.0 * z - 1.0) * ln_2) * gamma(z) *
                                    gamma(z + 0.5) / sqrt_pi;
                emit(finish_record(Identity::duplication, std::move(params), 0.0, 0, 0.0, re, im,
                                   lhs, rhs, "gamma_product", s.rel_tol));
            } catch (const std::exception& e) {
                emit(error_record(Identity::duplication, std::move(params), 0.0, 0, 0.0, re, im, e));
            }
        }
}

inline void sweep_recurrence(const SweepSpec& s, const Emit& emit) {
    std::mt19937_64 rng(s.seed);
    for (int i = 0; i < s.point_count; ++i) {
        const Complex mu(uniform(rng, -2.0, 2.0), uniform(rng, -1.0, 1.0));
        const Complex nu(uniform(rng, -2.5, 2.5), uniform(rng, -1.0, 1.0));
        const double theta = uniform(rng, 1e-3, pi - 1e-3);
        // evaluated as sin(pi/2 - theta) so the equator lands on exactly 0
        const double xi = std::sin(0.5 * pi - theta);
        std::string params = "mu=" + fmt_c(mu) + " nu=" + fmt_c(nu) + " theta=" + fmt17(theta);
        try {
            const CutPoint cut(xi);
            const Complex p_up = ferrers_p({mu, nu + 1.0}, cut);
            const Complex p_mid = ferrers_p({mu, nu}, cut);
            const Complex p_raised = ferrers_p({mu + 1.0, nu}, cut);
            const Complex lhs = (nu - mu + 1.0) * p_up - (nu + mu + 1.0) * xi * p_mid;
            const Complex rhs = std::sin(theta) * p_raised;
            emit(finish_record(Identity::recurrence, std::move(params), mu.real(), 0, xi,
                               nu.real(), nu.imag(), lhs, rhs, "ferrers_shift", s.rel_tol));
        } catch (const std::exception& e) {
            emit(error_record(Identity::recurrence, std::move(params), mu.real(), 0, xi,
                              nu.real(), nu.imag(), e));
        }
    }
}

inline void sweep_h_bound(const SweepSpec& s, const Emit& emit) {
    for (double lam : s.lambdas)
        for (int q : s.genera)
            for (double xi : s.xis) {
                const std::string base =
                    "lambda=" + fmt17(lam) + " q=" + std::to_string(q) + " xi=" + fmt17(xi);
                try {
                    const HKernelSpec spec(Complex(lam, 0.0), q, CutPoint(xi));
                    const auto base_grid = log_grid(1e-6, 1e6, 20);
                    const auto wide_grid = log_grid(1e-12, 1e12, 20);
                    const HBoundCertificate cert = h_bound_certificate(spec, base_grid);
                    const HBoundCertificate wide = h_bound_certificate(spec, wide_grid);
                    emit(finish_record(Identity::h_bound,
                                       base + " kind=slopes range=[1e-6,1e6]", lam, q, xi, 0.0,
                                       0.0, Complex(cert.slope_origin, cert.slope_infinity),
                                       Complex(double(q) + 1.0, double(q)), "envelope_slopes",
                                       s.rel_tol));
                    emit(finish_record(Identity::h_bound,
                                       base + " kind=stability range=[1e-6,1e6]x[1e-12,1e12]",
                                       lam, q, xi, 0.0, 0.0, Complex(cert.c_estimate, 0.0),
                                       Complex(wide.c_estimate, 0.0), "envelope_stability",
                                       s.rel_tol));
                } catch (const std::exception& e) {
                    emit(error_record(Identity::h_bound, base, lam, q, xi, 0.0, 0.0, e));
                }
            }
}

inline void sweep_kq_reduction(const SweepSpec& s, const Emit& emit) {
    std::mt19937_64 rng(s.seed);
    for (int i = 0; i < s.point_count; ++i) {
        const int n = std::min(8, 3 + int(uniform(rng, 0.0, 6.0)));
        const int q = std::min(3, int(uniform(rng, 0.0, 4.0)));
        const double psi = uniform(rng, 0.1, pi - 0.1);
        const double t = uniform(rng, 0.5, 3.0);
        const double u = uniform(rng, 0.02, 2.5);
        const double r = u * t;
        std::string params = "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                             " r=" + fmt17(r) + " t=" + fmt17(t) + " psi=" + fmt17(psi);
        try {
            const DimensionSpec dim(n);
            const double lhs = weierstrass_kernel(r, t, psi, dim, q);
            // Independent route to the same point: flip the angle instead of
            // negating its cosine, and scale the h value directly.
            const HKernelSpec spec(Complex(dim.lambda(), 0.0), q, CutPoint::from_angle(pi - psi));
            const double rhs = std::pow(t, 2 - n) * h_kernel(spec, u).real();
            emit(finish_record(Identity::kq_reduction, std::move(params), double(n), q,
                               -std::cos(psi), r, t, Complex(lhs, 0.0), Complex(rhs, 0.0),
                               "h_composition", s.rel_tol));
        } catch (const std::exception& e) {
            emit(error_record(Identity::kq_reduction, std::move(params), double(n), q,
                              -std::cos(psi), r, t, e));
        }
    }
}

}  // namespace detail

struct SweepOutcome {
    SweepSpec spec;  // resolved spec the sweep actually ran
    std::vector<VerificationRecord> records;
    double wall_ms = 0.0;
    std::size_t passed_count = 0;
    double max_rel_err = 0.0;  // corollary: over validated-form rows only
    bool passed = false;
    std::string summary;
};

// Run one identity sweep over its (resolved) grid in deterministic
// lexicographic order.  Per-point module errors become failed records; the
// only exceptions that escape are grid-screening rejections.
inline SweepOutcome run_sweep(const SweepSpec& raw, std::ostream* log = nullptr,
                              Verbosity verbosity = Verbosity::summary) {
    SweepOutcome out;
    out.spec = resolved_sweep(raw);
    validate_sweep(out.spec);

    const auto t0 = std::chrono::steady_clock::now();
    detail::Emit emit = [&](VerificationRecord&& r) {
        if (log && verbosity == Verbosity::per_point) {
            (*log) << "  [" << (r.pass ? "pass" : "FAIL") << "] " << identity_name(r.identity)
                   << ' ' << r.params << " rel_err=" << detail::fmt17(r.rel_err) << '\n';
        }
        out.records.push_back(std::move(r));
    };
    switch (out.spec.identity) {
        case Identity::eq1: detail::sweep_eq1(out.spec, emit); break;
        case Identity::eq2: detail::sweep_eq2(out.spec, emit); break;
        case Identity::by_parts: detail::sweep_by_parts(out.spec, emit); break;
        case Identity::corollary: detail::sweep_corollary(out.spec, emit); break;
        case Identity::gegenbauer_gf: detail::sweep_gegenbauer_gf(out.spec, emit); break;
        case Identity::duplication: detail::sweep_duplication(out.spec, emit); break;
        case Identity::recurrence: detail::sweep_recurrence(out.spec, emit); break;
        case Identity::h_bound: detail::sweep_h_bound(out.spec, emit); break;
        case Identity::kq_reduction: detail::sweep_kq_reduction(out.spec, emit); break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    for (const auto& r : out.records)
        if (r.pass) ++out.passed_count;

    if (out.spec.identity == Identity::corollary) {
        // The sweep adjudicates which closed form carries the correct sign:
        // it passes when exactly the validated form agrees everywhere and the
        // other form agrees nowhere.
        std::size_t first_total = 0, first_pass = 0, second_total = 0, second_pass = 0;
        double max_second = 0.0, min_first = std::numeric_limits<double>::infinity();
        for (const auto& r : out.records) {
            const bool is_first = r.oracle == "quadrature_vs_first" ||
                                  r.params.find("form=first") != std::string::npos;
            if (is_first) {
                ++first_total;
                if (r.pass) ++first_pass;
                min_first = std::min(min_first, r.rel_err);
            } else {
                ++second_total;
                if (r.pass) ++second_pass;
                max_second = std::max(max_second, r.rel_err);
            }
        }
        out.max_rel_err = max_second;
        out.passed = second_total > 0 && second_pass == second_total && first_pass == 0;
        const char* verdict = out.passed                                      ? "second"
                              : (first_total > 0 && first_pass == first_total &&
                                 second_pass == 0)                            ? "first"
                                                                              : "ambiguous";
        out.summary = "verify corollary: points=" + std::to_string(out.records.size()) +
                      " validated_form=" + verdict + " second_pass=" +
                      std::to_string(second_pass) + "/" + std::to_string(second_total) +
                      " first_pass=" + std::to_string(first_pass) + "/" +
                      std::to_string(first_total) +
                      " max_rel_err[second]=" + detail::fmt17(max_second) +
                      " min_rel_err[first]=" + detail::fmt17(min_first) +
                      " rel_tol=" + detail::fmt17(out.spec.rel_tol) +
                      " wall_ms=" + detail::fmt17(out.wall_ms);
    } else {
        for (const auto& r : out.records) out.max_rel_err = std::max(out.max_rel_err, r.rel_err);
        out.passed = out.passed_count == out.records.size() && !out.records.empty();
        out.summary = std::string("verify ") + identity_name(out.spec.identity) +
                      ": points=" + std::to_string(out.records.size()) +
                      " passed=" + std::to_string(out.passed_count) +
                      " failed=" + std::to_string(out.records.size() - out.passed_count) +
                      " max_rel_err=" + detail::fmt17(out.max_rel_err) +
                      " rel_tol=" + detail::fmt17(out.spec.rel_tol) +
                      " wall_ms=" + detail::fmt17(out.wall_ms);
    }
    if (log && verbosity != Verbosity::silent) (*log) << out.summary << '\n';
    return out;
}

// Write records as CSV: fixed header, one row per record, every float with 17
// significant digits.  Overwrites the target; emitting the same records twice
// produces byte-identical files.
inline void emit_report(const std::vector<VerificationRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("emit_report: cannot open '" + path + "' for writing");
    out << "identity,n_or_lambda,q,xi,re_s,im_s,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
           "oracle,pass\n";
    for (const auto& r : records) {
        out << identity_name(r.identity) << ',' << detail::fmt17(r.n_or_lambda) << ',' << r.q
            << ',' << detail::fmt17(r.xi) << ',' << detail::fmt17(r.re_s) << ','
            << detail::fmt17(r.im_s) << ',' << detail::fmt17(r.lhs.real()) << ','
            << detail::fmt17(r.lhs.imag()) << ',' << detail::fmt17(r.rhs.real()) << ','
            << detail::fmt17(r.rhs.imag()) << ',' << detail::fmt17(r.abs_err) << ','
            << detail::fmt17(r.rel_err) << ',' << r.oracle << ','
            << (r.pass ? "true" : "false") << '\n';
    }
    out.flush();
    if (!out) throw error("emit_report: write failed for '" + path + "'");
}

}  // namespace rzm

#endif
