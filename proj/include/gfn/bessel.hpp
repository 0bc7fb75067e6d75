// bessel.hpp
//
// Modified Bessel function K1 for positive real argument, to near machine
// precision.  Power series below x = 2, Chebyshev expansion of
// exp(x) sqrt(x) K1(x) in 8/x - 2 above.

#pragma once

namespace gfn {

// throws std::domain_error for x <= 0
double bessel_k1(double x);

}  // namespace gfn
