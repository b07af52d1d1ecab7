#ifndef RZM_GEGENBAUER_HPP
#define RZM_GEGENBAUER_HPP

#include <cmath>

#include "rzm/core.hpp"
#include "rzm/error.hpp"

namespace rzm {

// C_j^lambda(xi) by the ascending three-term recurrence
//   j C_j = 2 (j + lambda - 1) xi C_{j-1} - (j + 2 lambda - 2) C_{j-2},
// C_0 = 1, C_1 = 2 lambda xi; stable upward on |xi| <= 1.
inline Complex gegenbauer(int degree, Complex lambda, double xi) {
    if (degree < 0) throw precondition_error("gegenbauer: degree >= 0 required");
    if (!(std::abs(xi) <= 1.0)) throw precondition_error("gegenbauer: |xi| <= 1 required");
    if (degree == 0) return Complex(1.0, 0.0);
    Complex cm2(1.0, 0.0);
    Complex cm1 = 2.0 * lambda * xi;
    for (int j = 2; j <= degree; ++j) {
        Complex c = (2.0 * (double(j) + lambda - 1.0) * xi * cm1 -
                     (double(j) + 2.0 * lambda - 2.0) * cm2) / double(j);
        cm2 = cm1;
        cm1 = c;
    }
    return cm1;
}

// partial sum sum_{j=0}^{q} (-u)^j C_j^lambda(xi) of the generating function
// (1 + u^2 + 2 u xi)^(-lambda) = sum_{j>=0} (-u)^j C_j^lambda(xi)
inline Complex gegenbauer_partial_sum(int q, Complex lambda, double u, double xi) {
    if (q < 0) throw precondition_error("gegenbauer_partial_sum: q >= 0 required");
    if (!(std::abs(xi) <= 1.0))
        throw precondition_error("gegenbauer_partial_sum: |xi| <= 1 required");
    Complex acc(1.0, 0.0);
    if (q == 0) return acc;
    Complex cm2(1.0, 0.0);
    Complex cm1 = 2.0 * lambda * xi;
    double power = -u;  // (-u)^j
    acc += power * cm1;
    for (int j = 2; j <= q; ++j) {
        Complex c = (2.0 * (double(j) + lambda - 1.0) * xi * cm1 -
                     (double(j) + 2.0 * lambda - 2.0) * cm2) / double(j);
        cm2 = cm1;
        cm1 = c;
        power *= -u;
        acc += power * c;
    }
    return acc;
}

}  // namespace rzm

#endif
