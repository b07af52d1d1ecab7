#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include <rzm/legendre.hpp>

#include "test_helpers.hpp"

using rzm::Complex;
using rzm::CutPoint;
using rzm::Hyp2F1Args;
using rzm::LegendreOrder;
using rzmtest::C;
using rzmtest::rel_err;

namespace {

Complex f21(Complex a, Complex b, Complex c, double z) {
    return rzm::hyp2f1_regularized({a, b, c, Complex(z, 0.0)});
}

// Legendre polynomial by the classical three-term recurrence.
double legendre_poly(int n, double x) {
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace

TEST_CASE("regularized 2F1 matches frozen references on every branch") {
    struct Row {
        Complex a, b, c;
        double z;
        Complex want;
    };
    const Row rows[] = {
        // direct series, z <= 1/2
        {C(0.5), C(1.3), C(2.2), 0.3, C(1.004339405987705345136)},
        // connection with noninteger gap c-a-b
        {C(0.5), C(1.3), C(2.2), 0.75, C(1.285027480673179276939)},
        {C(0.4, 1.1), C(0.6, -1.1), C(1.25), 0.8,
         C(3.872246596080181042558, 0.594457422251162239839)},
        // logarithmic branch, c-a-b = 0
        {C(0.4), C(0.8), C(1.2), 0.8, C(1.604168243506104243265)},
        // logarithmic branch, c-a-b = 2
        {C(0.4), C(0.8), C(3.2), 0.8, C(0.4585054634403841103682)},
        // Euler flip, c-a-b = -1
        {C(0.4), C(0.8), C(0.2), 0.8, C(1.700292770060292829706)},
        // terminating series, a = -3
        {C(-3.0), C(2.5), C(1.5), 0.9, C(-0.01918244584062370598917)},
        // nonpositive-integer c handled by the entire regularization
        {C(0.7), C(1.9), C(-2.0), 0.4, C(7.511144960580890993121)},
        // complex parameters on the logarithmic branch
        {C(0.4, 1.1), C(1.6, -1.1), C(2.0), 0.85,
         C(3.017118583503057791513, 2.858851184195370426044)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.a, r.b, r.c, r.z);
        CHECK(rel_err(f21(r.a, r.b, r.c, r.z), r.want) < 1e-13);
    }
}

TEST_CASE("regularized 2F1 closed-form special cases") {
    SECTION("a or b zero gives 1/Gamma(c)") {
        for (const Complex c : {C(2.2), C(0.5), C(-0.75), C(1.0, 2.0)}) {
            CHECK(rel_err(f21(C(0.0), C(1.3), c, 0.4), rzm::reciprocal_gamma(c)) <
                  1e-15);
            CHECK(rel_err(f21(C(0.7), C(0.0), c, 0.9), rzm::reciprocal_gamma(c)) <
                  1e-15);
        }
        // at a nonpositive integer c both sides vanish identically
        CHECK(f21(C(0.0), C(1.3), C(-2.0), 0.4) == C(0.0));
    }
    SECTION("(1,1;2;z) = -log(1-z)/z, both sides of the split") {
        for (const double z : {0.1, 0.45, 0.6, 0.9}) {
            const Complex want = C(-std::log1p(-z) / z);
            CHECK(rel_err(f21(C(1.0), C(1.0), C(2.0), z), want) < 1e-13);
        }
    }
    SECTION("terminating series equals direct arithmetic") {
        // F(-2,3;1.5;0.3)/Gamma(1.5): three explicit terms
        const double z = 0.3;
        const Complex want = rzm::reciprocal_gamma(C(1.5)) +
                             (-2.0) * 3.0 * z * rzm::reciprocal_gamma(C(2.5)) +
                             (-2.0) * (-1.0) * 3.0 * 4.0 * z * z / 2.0 *
                                 rzm::reciprocal_gamma(C(3.5));
        CHECK(rel_err(f21(C(-2.0), C(3.0), C(1.5), z), want) < 1e-14);
        CHECK(rel_err(f21(C(-2.0), C(3.0), C(1.5), z),
                      C(0.09929736670440513256011)) < 1e-14);
    }
}

TEST_CASE("connection formulas agree with the defining series past z = 1/2") {
    // The Gauss series still converges (slowly) for z in (1/2, 1); the
    // dispatched value must reproduce it on every z > 1/2 branch.
    struct Row {
        Complex a, b, c;
        double z;
    };
    const Row rows[] = {
        {C(0.5), C(1.3), C(2.2), 0.62},        // generic gap
        {C(0.4), C(0.8), C(1.2), 0.62},        // gap 0, log branch
        {C(0.4), C(0.8), C(3.2), 0.58},        // gap 2, log branch
        {C(0.4), C(0.8), C(0.2), 0.58},        // gap -1, Euler flip
        {C(0.4, 1.1), C(1.6, -1.1), C(2.0), 0.55},
        {C(-0.3, 0.4), C(0.9, -0.4), C(1.6), 0.65},
    };
    for (const auto& r : rows) {
        CAPTURE(r.a, r.b, r.c, r.z);
        const Complex via_series = rzm::detail::gauss_series(r.a, r.b, r.c, r.z);
        CHECK(rel_err(f21(r.a, r.b, r.c, r.z), via_series) < 1e-12);
    }
}

TEST_CASE("regularized 2F1 rejects out-of-range arguments") {
    CHECK_THROWS_AS(rzm::hyp2f1_regularized({C(1), C(1), C(2), C(0.3, 0.1)}),
                    rzm::precondition_error);
    CHECK_THROWS_AS(f21(C(1), C(1), C(2), -0.1), rzm::precondition_error);
    CHECK_THROWS_AS(f21(C(1), C(1), C(2), 1.0), rzm::precondition_error);
    CHECK_THROWS_AS(f21(C(1), C(1), C(2), 1.7), rzm::precondition_error);
}

TEST_CASE("Ferrers function matches frozen references") {
    struct Row {
        Complex mu, nu;
        double xi;
        Complex want;
    };
    const Row rows[] = {
        {C(0.3, 0.2), C(-0.7), 0.35,
         C(1.004030451106122531121, -0.131238758348504819668)},
        {C(-1.5), C(2.25, 0.5), -0.6,
         C(-0.2252858662422768360791, 0.009927863392744463993656)},
        {C(1.0), C(0.5, 0.5), -0.4,
         C(-1.157952593969704820331, -0.7722560701317603114249)},
        {C(2.0), C(1.3), -0.75, C(2.584561845657502683482)},
        {C(0.0), C(6.0), 0.9, C(-0.2411643125)},
        {C(-0.5), C(-0.75, 2.0), 0.98,
         C(0.3678288503482255772853, 0.002434900914121208937895)},
        {C(0.5), C(-0.5), -0.98, C(1.788612514172830253798)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.mu, r.nu, r.xi);
        const Complex got = rzm::ferrers_p({r.mu, r.nu}, CutPoint(r.xi));
        CHECK(rel_err(got, r.want) < 5e-13);
    }
}

TEST_CASE("Ferrers low-order closed forms") {
    for (const double xi : {-0.9, -0.25, 0.0, 0.25, 0.6}) {
        CHECK(rel_err(rzm::ferrers_p({C(0.0), C(0.0)}, CutPoint(xi)), C(1.0)) <
              1e-14);
        if (xi != 0.0)
            CHECK(rel_err(rzm::ferrers_p({C(0.0), C(1.0)}, CutPoint(xi)), C(xi)) <
                  1e-13);
    }
    CHECK(std::abs(rzm::ferrers_p({C(0.0), C(1.0)}, CutPoint(0.0))) < 1e-15);
    for (const double theta : {0.4, 1.1, 2.0, 2.9}) {
        const Complex got =
            rzm::ferrers_p({C(1.0), C(1.0)}, CutPoint(std::cos(theta)));
        CHECK(rel_err(got, C(-std::sin(theta))) < 1e-13);
    }
}

TEST_CASE("Ferrers at integer order 0 matches the Legendre recurrence") {
    for (int n = 0; n <= 6; ++n) {
        for (const double xi : {-0.85, -0.3, 0.2, 0.45, 0.95}) {
            CAPTURE(n, xi);
            const Complex got =
                rzm::ferrers_p({C(0.0), C(double(n))}, CutPoint(xi));
            const double want = legendre_poly(n, xi);
            CHECK(std::abs(got - C(want)) <=
                  1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("Ferrers degree symmetry nu <-> -nu-1") {
    struct Row {
        Complex mu, nu;
        double xi;
    };
    const Row rows[] = {
        {C(0.3, 0.2), C(-0.7), 0.35},   {C(-1.5), C(2.25, 0.5), -0.6},
        {C(0.5), C(1.75), 0.1},         {C(-0.5, 1.0), C(0.3, -0.8), 0.8},
        {C(2.0), C(0.9), -0.45},        {C(1.0, -0.3), C(-2.2, 0.4), 0.55},
        {C(-1.0), C(3.6), -0.9},
    };
    for (const auto& r : rows) {
        CAPTURE(r.mu, r.nu, r.xi);
        const Complex lhs = rzm::ferrers_p({r.mu, r.nu}, CutPoint(r.xi));
        const Complex rhs =
            rzm::ferrers_p({r.mu, -r.nu - 1.0}, CutPoint(r.xi));
        CHECK(std::abs(lhs - rhs) /
                  (std::abs(lhs) + std::abs(rhs) + 1e-300) <
              1e-11);
    }
}

TEST_CASE("Ferrers is continuous in mu across integer orders") {
    const double eps = 1e-4;
    for (const double k : {0.0, 1.0, 2.0}) {
        for (const Complex nu : {C(0.7), C(-0.4, 0.6), C(2.3)}) {
            for (const double xi : {-0.6, 0.15, 0.8}) {
                CAPTURE(k, nu, xi);
                const CutPoint pt(xi);
                const Complex mid = rzm::ferrers_p({C(k), nu}, pt);
                const Complex lo = rzm::ferrers_p({C(k - eps), nu}, pt);
                const Complex hi = rzm::ferrers_p({C(k + eps), nu}, pt);
                const Complex avg = 0.5 * (lo + hi);
                CHECK(std::abs(avg - mid) /
                          (std::abs(mid) + std::abs(avg) + 1e-300) <
                      1e-5);
            }
        }
    }
}

TEST_CASE("Ferrers rejects xi too close to the cut endpoints") {
    CHECK_THROWS_AS(rzm::ferrers_p({C(0.5), C(0.5)}, CutPoint(1.0 - 1e-12)),
                    rzm::precondition_error);
    CHECK_THROWS_AS(rzm::ferrers_p({C(0.5), C(0.5)}, CutPoint(-1.0 + 1e-12)),
                    rzm::precondition_error);
    CHECK_NOTHROW(rzm::ferrers_p({C(0.5), C(0.5)}, CutPoint(1.0 - 1e-9)));
}

TEST_CASE("order-raising recurrence holds at the documented spot checks") {
    CHECK(rzm::remark_recurrence_residual({C(0.0), C(1.0)}, rzm::pi / 3.0) <
          1e-10);
    CHECK(rzm::remark_recurrence_residual({C(0.3, 0.2), C(-0.7)}, 1.1) < 1e-9);
    CHECK(rzm::remark_recurrence_residual({C(0.0), C(0.0)}, rzm::pi / 2.0) <
          1e-12);
}

TEST_CASE("order-raising recurrence residual stays below 1e-9 on a random grid") {
    std::mt19937_64 rng(20260814u);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex mu(rzmtest::uniform(rng, -2.0, 2.0),
                         rzmtest::uniform(rng, -1.0, 1.0));
        const Complex nu(rzmtest::uniform(rng, -2.5, 2.5),
                         rzmtest::uniform(rng, -1.0, 1.0));
        const double theta = rzmtest::uniform(rng, 1e-3, rzm::pi - 1e-3);
        CAPTURE(i, mu, nu, theta);
        const double res = rzm::remark_recurrence_residual({mu, nu}, theta);
        worst = std::max(worst, res);
        CHECK(res < 1e-9);
    }
    INFO("worst residual " << worst);
    CHECK(worst < 1e-9);
}

TEST_CASE("order-raising recurrence rejects theta outside the open interval") {
    CHECK_THROWS_AS(rzm::remark_recurrence_residual({C(0.0), C(1.0)}, 1e-4),
                    rzm::precondition_error);
    CHECK_THROWS_AS(
        rzm::remark_recurrence_residual({C(0.0), C(1.0)}, rzm::pi - 1e-4),
        rzm::precondition_error);
    CHECK_THROWS_AS(rzm::remark_recurrence_residual({C(0.0), C(1.0)}, -0.5),
                    rzm::precondition_error);
}
