// analytic.hpp
//
// Closed-form and quadrature evaluation of mode correlators, finite-volume
// and continuum two-point functions, and the Wick/Isserlis N-point expansion.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gfn/lattice.hpp"

namespace gfn {

struct SpacetimePoint {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  double t = 0.0;
};

// |x1 - x2| and the 4D Euclidean interval sqrt(|dx|^2 + dt^2)
double spatial_distance(const SpacetimePoint& a, const SpacetimePoint& b);
double euclidean_interval(const SpacetimePoint& a, const SpacetimePoint& b);

// stationary per-component autocorrelation exp(-lambda_k |dt|) hbar^2/(4 E_k);
// rejects the zero mode, whose variance is doubled (see field_mode_correlation)
double mode_correlation(const ModeIndex& n, double dt, const PhysicalParams& p);

// conjugate-pair correlator E(phi_n(t1) phi_n'(t2)): zero unless n' = -n,
// otherwise 2 exp(-lambda_k |dt|) hbar^2/(4 E_k); covers the zero mode
double field_mode_correlation(const ModeIndex& n, const ModeIndex& nprime,
                              double dt, const PhysicalParams& p);

// finite-volume two-point function of the stationary Markov field:
// (1/L^3) sum_k exp(i k.dx) exp(-omega_k (2 nu/hbar) |dt|) / (2 omega_k)
double schwinger2_modesum(const SpacetimePoint& p1, const SpacetimePoint& p2,
                          const ModeSet& modes);

// continuum two-point function mu K1(mu r)/(4 pi^2 r), mu = m/hbar;
// errors on r <= 0 (coincident points)
double schwinger2_continuum_r(double r, const PhysicalParams& p);
double schwinger2_continuum(const SpacetimePoint& dp, const PhysicalParams& p);

// independent radial-quadrature route to the same function: the k0 integral
// is done analytically, the remaining 1D integral over |k| is summed in
// half-oscillation panels with repeated-averaging acceleration
double schwinger2_quadrature(const SpacetimePoint& dp, const PhysicalParams& p);

// perfect matchings on {0..n-1}, "pair the smallest unpaired index first"
// order; odd n yields no matchings (mean-zero Gaussian), count is (n-1)!!
using Pairing = std::vector<std::pair<int, int>>;
using PairingList = std::vector<Pairing>;
inline constexpr int kDefaultMaxWickOrder = 12;
PairingList wick_pairings(int n, int max_n = kDefaultMaxWickOrder);

// continuum N-point function: Isserlis sum of schwinger2_continuum products
double schwingerN(const std::vector<SpacetimePoint>& points,
                  const PhysicalParams& p, int max_n = kDefaultMaxWickOrder);

// schwingerN with every time coordinate scaled by 2 nu/hbar: the analytic
// prediction for the infinite-volume Markov expectation
double scaled_time_expectation(const std::vector<SpacetimePoint>& points,
                               const PhysicalParams& p,
                               int max_n = kDefaultMaxWickOrder);

// finite-volume N-point expectation: Isserlis sum of schwinger2_modesum
// products, the exact Gaussian moment of the simulated field
double npoint_modesum(const std::vector<SpacetimePoint>& points,
                      const ModeSet& modes, int max_n = kDefaultMaxWickOrder);

}  // namespace gfn
