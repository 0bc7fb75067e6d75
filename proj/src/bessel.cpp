// bessel.cpp

#include "gfn/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace gfn {
namespace {

// K1(x) = ln(x/2) I1(x) + 1/x - (x/4) sum_j [psi(j+1)+psi(j+2)] q^j / (j!(j+1)!)
// with q = x^2/4; converges fast for x <= 2
double k1_series(double x) {
  constexpr double kEulerGamma = 0.5772156649015328606;
  const double q = 0.25 * x * x;

  double i1 = 0.0;       // sum for I1(x)/(x/2)
  double ksum = 0.0;     // sum for the psi-weighted series
  double term = 1.0;     // q^j / (j!(j+1)!)
  double psi_a = -kEulerGamma;        // psi(j+1)
  double psi_b = 1.0 - kEulerGamma;   // psi(j+2)
  for (int j = 0; j < 40; ++j) {
    i1 += term;
    ksum += term * (psi_a + psi_b);
    const double next = term * q / ((j + 1.0) * (j + 2.0));
    if (next < 1e-20 * (std::abs(ksum) + 1.0) && j > 3) break;
    term = next;
    psi_a += 1.0 / (j + 1.0);
    psi_b += 1.0 / (j + 2.0);
  }
  i1 *= 0.5 * x;
  return std::log(0.5 * x) * i1 + 1.0 / x - 0.25 * x * ksum;
}

// Chebyshev coefficients of f(t) = exp(x) sqrt(x) K1(x), t = (8/x - 2)/2,
// valid on x in (2, inf); max relative error ~6e-17
constexpr double kChebK1[] = {
    2.72062619048444267,
    0.103923736576817238,
    -0.00285781685962277939,
    0.000195215518471351631,
    -0.0000193619797416608296,
    2.40648494783721712e-6,
    -3.50196060308781254e-7,
    5.74108412545004929e-8,
    -1.0345762465678097e-8,
    2.01504975519703462e-9,
    -4.19035475934192558e-10,
    9.21831518760531413e-11,
    -2.12996783842779102e-11,
    5.13963967348234354e-12,
    -1.28917396094982294e-12,
    3.34841966605224312e-13,
    -8.97670518201014607e-14,
    2.47715442421959868e-14,
    -7.01983708921476885e-15,
    2.03870316623986088e-15,
    -6.05704727064301782e-16,
    1.83809357524304543e-16,
};

double k1_asymptotic(double x) {
  const double t = 0.5 * (8.0 / x - 2.0);
  double b0 = 0.0, b1 = 0.0;
  for (int j = static_cast<int>(std::size(kChebK1)) - 1; j >= 1; --j) {
    const double tmp = 2.0 * t * b0 - b1 + kChebK1[j];
    b1 = b0;
    b0 = tmp;
  }
  const double f = t * b0 - b1 + 0.5 * kChebK1[0];
  return f * std::exp(-x) / std::sqrt(x);
}

}  // namespace

double bessel_k1(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k1: argument must be > 0");
  return x <= 2.0 ? k1_series(x) : k1_asymptotic(x);
}

}  // namespace gfn
