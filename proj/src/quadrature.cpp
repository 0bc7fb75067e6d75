// quadrature.cpp

#include "gfn/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gfn::quad {

namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_n
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre_15() {
  static const GaussRule rule = make_rule(15);
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const auto& g = gauss_legendre_15();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + h * g.x[i]);
  return h * s;
}

std::complex<double> panel_c(const std::function<std::complex<double>(double)>& f,
                             double a, double b) {
  const auto& g = gauss_legendre_15();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + h * g.x[i]);
  return h * s;
}

double averaged_limit(std::span<const double> partial_sums) {
  if (partial_sums.empty()) throw std::invalid_argument("averaged_limit: empty input");
  std::vector<double> row(partial_sums.begin(), partial_sums.end());
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row[0];
}

}  // namespace gfn::quad
