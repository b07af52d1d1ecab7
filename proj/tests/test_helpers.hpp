#ifndef RZM_TEST_HELPERS_HPP
#define RZM_TEST_HELPERS_HPP

#include <cmath>
#include <complex>
#include <random>

namespace rzmtest {

inline std::complex<double> C(double re, double im = 0.0) { return {re, im}; }

// Deterministic uniform draw in [lo, hi): fixed mapping from the engine's
// raw 64-bit output so results are identical across standard libraries.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::abs(want);
}

inline double abs_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want);
}

}  // namespace rzmtest

#endif
