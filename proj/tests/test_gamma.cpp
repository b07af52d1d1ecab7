// Reference values below were computed with mpmath at 50 significant digits.

#include <catch2/catch_amalgamated.hpp>

#include "rzm/gamma.hpp"
#include "test_helpers.hpp"

using rzm::Complex;
using rzmtest::C;
using rzmtest::abs_err;
using rzmtest::rel_err;

TEST_CASE("log_gamma matches references on Re z >= 0.5", "[gamma]") {
    struct Row {
        Complex z, lg;
    };
    const Row rows[] = {
        {C(3.7, 2.1), C(0.7853469580738222014792, 2.583012925115262026572)},
        {C(0.5), C(0.5723649429247000870717, 0.0)},
        {C(10.0, -3.0), C(12.33611428522599607895, -6.803569659128617499325)},
        {C(0.5, 49.0), C(-76.05008147974526160055, 141.7000449682188623644)},
        {C(35.0, 35.0), C(73.04749029272335216987, 128.6623039891488554474)},
        {C(49.9), C(144.1756460537503385247, 0.0)},
        {C(1.5, -40.0), C(-58.22395696558013564124, -109.114516846984596178)},
        {C(2.5, 1.0), C(0.04810862962355502121959, 0.7401435969990889446995)},
        {C(8.0, 40.0), C(-34.20301790054286011831, 118.6380949406238960722)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.z);
        CHECK(rel_err(rzm::log_gamma(r.z), r.lg) < 1e-13);
    }
}

TEST_CASE("log_gamma reflection side through exp", "[gamma]") {
    // branch-immune comparison: exp(log_gamma) against exp of the reference
    struct Row {
        Complex z, lg;
    };
    const Row rows[] = {
        {C(1e-3), C(6.907178885383853682512, 0.0)},
        {C(0.1, 0.1), C(1.898991273675900220083, -0.8274647077730757440277)},
        {C(-4.3, 1.7), C(-6.848384786043473276733, -12.37602653047421680904)},
        {C(-0.5), C(1.265512123484645396489, -3.141592653589793238463)},
        {C(-6.1, -0.2), C(-5.316091724420867554707, 20.57087923113344435611)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.z);
        CHECK(rel_err(std::exp(rzm::log_gamma(r.z)), std::exp(r.lg)) < 5e-13);
        CHECK(rel_err(rzm::gamma(r.z), std::exp(r.lg)) < 5e-13);
    }
}

TEST_CASE("gamma spot values", "[gamma]") {
    CHECK(rel_err(rzm::gamma(C(3.0, 4.0)),
                  C(0.005225538471369214194732, -0.1725470792943001877191)) < 1e-13);
    CHECK(rel_err(rzm::gamma(C(-2.5)), C(-0.9453087204829418812257)) < 1e-13);
    CHECK(rel_err(rzm::gamma(C(5.0)), C(24.0)) < 1e-14);
    CHECK(rel_err(rzm::gamma(C(0.5)), C(rzm::sqrt_pi)) < 1e-14);
    CHECK(rzm::log_gamma(5.0) == Catch::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("gamma functional equations", "[gamma]") {
    const Complex zs[] = {C(0.7, 1.3),  C(3.2, -2.6), C(-1.3, 0.4),
                          C(0.51, 9.0), C(12.0, 5.0), C(-5.7, -2.2)};
    for (Complex z : zs) {
        CAPTURE(z);
        // recurrence
        CHECK(rel_err(rzm::gamma(z + 1.0), z * rzm::gamma(z)) < 1e-13);
        // conjugate symmetry
        CHECK(rel_err(rzm::gamma(std::conj(z)), std::conj(rzm::gamma(z))) < 1e-15);
        // reflection
        CHECK(rel_err(rzm::gamma(z) * rzm::gamma(1.0 - z), rzm::pi / rzm::sin_pi(z)) < 1e-13);
    }
}

TEST_CASE("reciprocal_gamma is entire with exact zeros", "[gamma]") {
    CHECK(rzm::reciprocal_gamma(C(0.0)) == C(0.0));
    CHECK(rzm::reciprocal_gamma(C(-3.0)) == C(0.0));
    CHECK(rzm::reciprocal_gamma(C(-7.0)) == C(0.0));
    CHECK(rel_err(rzm::reciprocal_gamma(C(-3.0, 1e-4)),
                  C(-7.53670610485017266376e-8, -6.000000042846407125262e-4)) < 1e-12);
    CHECK(rel_err(rzm::reciprocal_gamma(C(0.0, 0.5)),
                  C(-0.1462413371033718183917, 0.587261923809450364175)) < 1e-13);
    CHECK(rel_err(rzm::reciprocal_gamma(C(4.5)), 1.0 / rzm::gamma(C(4.5))) < 1e-14);
}

TEST_CASE("digamma spot values and reflection", "[gamma]") {
    CHECK(rel_err(rzm::digamma(C(3.7, 2.1)),
                  C(1.343374076398410259117, 0.5781722556465365613825)) < 1e-13);
    CHECK(rel_err(rzm::digamma(C(0.1, -0.3)),
                  C(-1.344904317726083580523, -3.410989719465070144716)) < 1e-13);
    CHECK(rel_err(rzm::digamma(C(-2.7, 0.4)),
                  C(0.7166244446346729467746, 2.83032920963218676407)) < 1e-13);
    CHECK(rel_err(rzm::digamma(C(25.0, 10.0)),
                  C(3.275761214651749452481, 0.3874821837185655756651)) < 1e-13);
    CHECK(rel_err(rzm::digamma(C(0.5)), C(-1.963510026021423479441)) < 1e-13);
    // psi(z+1) = psi(z) + 1/z
    Complex z = C(0.9, -1.7);
    CHECK(abs_err(rzm::digamma(z + 1.0), rzm::digamma(z) + 1.0 / z) < 1e-14);
}

TEST_CASE("poles throw", "[gamma]") {
    CHECK_THROWS_AS(rzm::gamma(C(0.0)), rzm::pole_error);
    CHECK_THROWS_AS(rzm::gamma(C(-4.0)), rzm::pole_error);
    CHECK_THROWS_AS(rzm::log_gamma(C(-1.0)), rzm::pole_error);
    CHECK_THROWS_AS(rzm::digamma(C(-2.0)), rzm::pole_error);
    CHECK_THROWS_AS(rzm::log_gamma(-3.0), rzm::precondition_error);
    CHECK_THROWS_AS(rzm::duplication_residual(C(-2.0000000001, 0.0)), rzm::pole_error);
}

TEST_CASE("duplication residual small on the verification lattice", "[gamma]") {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            double re = 0.3 + i * (6.0 - 0.3) / 9.0;
            double im = -5.0 + j * 10.0 / 9.0;
            worst = std::max(worst, rzm::duplication_residual(C(re, im)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("half-integer factorial identity residual", "[gamma]") {
    for (int n = 3; n <= 25; ++n) {
        CAPTURE(n);
        CHECK(rzm::half_integer_gamma_residual(rzm::DimensionSpec(n)) <= 1e-13);
    }
}
