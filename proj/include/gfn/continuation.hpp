// continuation.hpp
//
// Analytic continuation of the Markov expectations in the diffusion
// parameter: complex mode correlators, the causal propagator at nu = +-i
// hbar/2 via an epsilon-damped radial integral extrapolated to epsilon = 0,
// and boost-invariance residual checks.

#pragma once

#include <complex>
#include <vector>

#include "gfn/analytic.hpp"
#include "gfn/lattice.hpp"

namespace gfn {

// Eq.-(22)-style conjugate-pair correlator with lambda(nu) = 4 nu E_k/hbar^2
// complex: 2 exp(-lambda |dt|) hbar^2/(4 E_k); covers the zero mode
std::complex<double> continued_mode_correlation(const ModeIndex& n, double dt,
                                                std::complex<double> nu,
                                                const PhysicalParams& p);

struct PropagatorValue {
  std::complex<double> value;
  double sys_err = 0.0;  // spread of the last extrapolation step
};

// time-ordered two-point function at nu = branch * i hbar/2:
// int d3k/(2pi)^3 exp(i k.dx) exp(-i omega |dt|)/(2 omega), omega =
// sqrt(k^2 + m^2/hbar^2); damping exp(-eps k) removed by extrapolation.
// branch -1 conjugates the phase (anti-time-ordering), nothing else
PropagatorValue feynman_propagator(const SpacetimePoint& dp,
                                   const PhysicalParams& p, int branch = +1);

// Wick sum of feynman_propagator products over pairings; odd N gives 0
PropagatorValue npoint_continued(const std::vector<SpacetimePoint>& points,
                                 int branch, const PhysicalParams& p,
                                 int max_n = kDefaultMaxWickOrder);

// two separations with equal Minkowski interval dt^2 - |dx|^2
struct BoostPair {
  SpacetimePoint a;
  SpacetimePoint b;
};

struct InvarianceRow {
  BoostPair pair;
  std::complex<double> value_a;
  std::complex<double> value_b;
  double residual = 0.0;  // |va - vb| / max(|va|, |vb|)
};

std::vector<InvarianceRow> lorentz_invariance_check(
    const std::vector<BoostPair>& pairs, const PhysicalParams& p);

// 5 spacelike and 5 timelike pairs at boosts beta in {5/13, 3/5, 4/5}
std::vector<BoostPair> standard_boost_pairs();

}  // namespace gfn
