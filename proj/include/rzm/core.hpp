#ifndef RZM_CORE_HPP
#define RZM_CORE_HPP

#include <cmath>
#include <complex>

#include "rzm/error.hpp"

namespace rzm {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;
inline constexpr double ln_pi = 1.14472988584940017414342735135305871;
inline constexpr double ln_2 = 0.69314718055994530941723212145817657;
inline constexpr double sqrt_2pi = 2.50662827463100050241576528481104525;

// base^w for real base > 0 with complex exponent, via the real logarithm
inline Complex pow_pos(double base, Complex w) {
    return std::exp(w * std::log(base));
}

// distance from z to the nearest nonpositive integer, complex metric
inline double nonpos_integer_distance(Complex z) {
    double n = std::min(0.0, std::round(z.real()));
    return std::hypot(z.real() - n, z.imag());
}

inline bool near_nonpos_integer(Complex z, double tol) {
    return nonpos_integer_distance(z) <= tol;
}

// sin(pi z) / cos(pi z) with the real part reduced to [-1/2, 1/2]; exact zeros
// at real integers and full relative accuracy next to them
inline Complex sin_pi(Complex z) {
    double m = std::round(z.real());
    Complex s = std::sin(pi * Complex(z.real() - m, z.imag()));
    return std::fmod(m, 2.0) == 0.0 ? s : -s;
}

inline Complex cos_pi(Complex z) {
    double m = std::round(z.real());
    Complex c = std::cos(pi * Complex(z.real() - m, z.imag()));
    return std::fmod(m, 2.0) == 0.0 ? c : -c;
}

// ambient dimension n >= 3; the induced kernel index is (n-2)/2
struct DimensionSpec {
    int n;

    explicit DimensionSpec(int n_) : n(n_) {
        if (n < 3) throw precondition_error("ambient dimension must be >= 3");
    }

    double lambda() const { return 0.5 * (n - 2); }
};

}  // namespace rzm

#endif
