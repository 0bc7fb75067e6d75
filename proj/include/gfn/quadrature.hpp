// quadrature.hpp
//
// Panel quadrature helpers shared by the analytic and continuation modules:
// fixed-order Gauss-Legendre panels plus iterated averaging to sum the
// alternating panel series of oscillatory radial integrals.

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace gfn::quad {

// nodes and weights on [-1, 1], computed once by Newton iteration
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_legendre_15();

double panel(const std::function<double(double)>& f, double a, double b);
std::complex<double> panel_c(const std::function<std::complex<double>(double)>& f,
                             double a, double b);

// limit of a sequence of partial sums by repeated pairwise averaging;
// converges for alternating tails (Abel-summable oscillatory series) and is
// harmless for monotone convergent ones
double averaged_limit(std::span<const double> partial_sums);

}  // namespace gfn::quad
