#ifndef RZM_RZM_HPP
#define RZM_RZM_HPP

#include "rzm/core.hpp"
#include "rzm/error.hpp"
#include "rzm/gamma.hpp"
#include "rzm/gegenbauer.hpp"
#include "rzm/kernels.hpp"
#include "rzm/legendre.hpp"
#include "rzm/mellin.hpp"
#include "rzm/quadrature.hpp"
#include "rzm/verify.hpp"

#endif
