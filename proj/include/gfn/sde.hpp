// sde.hpp
//
// Stationary Ornstein-Uhlenbeck simulation of every canonical mode, real-field
// reconstruction, and correlator estimation with trajectory-level batch errors.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gfn/analytic.hpp"
#include "gfn/lattice.hpp"
#include "gfn/rng.hpp"

namespace gfn {

enum class Scheme {
  kExact,          // exact Gaussian transition kernel, no time-step bias
  kEulerMaruyama,  // cross-validation only
};

struct ModeState {
  double r = 0.0;
  double i = 0.0;  // identically 0 for the self-conjugate zero mode
};

struct RngPolicy {
  std::uint64_t master_seed = 1;
};

struct EnsembleConfig {
  int n_trajectories = 64;
  double grid_dt = 0.05;
  int grid_len = 512;
  Scheme scheme = Scheme::kExact;
  int jobs = 1;
};

// independent normal streams for the two components of one canonical mode
struct ModeRng {
  rng::NormalStream r;
  rng::NormalStream i;
};
ModeRng mode_streams(const RngPolicy& policy, std::uint64_t traj_id,
                     std::size_t mode_ordinal);

struct FieldTrajectory {
  std::vector<double> grid;
  std::size_t n_modes = 0;
  std::vector<ModeState> states;  // [t_index * n_modes + mode_ordinal]
  std::uint64_t seed = 0;         // derived per-trajectory key

  const ModeState& state(std::size_t t_index, std::size_t ordinal) const {
    return states[t_index * n_modes + ordinal];
  }
};

// stationary variance of one real component: hbar^2/(4 E_k), doubled at k=0
double component_variance(const ModeIndex& n, const PhysicalParams& p);

// draw from the stationary Gaussian of mode n (draw indexes the stream)
ModeState stationary_sample(const ModeIndex& n, const PhysicalParams& p,
                            const ModeRng& g, std::uint64_t draw = 0);

// advance one mode by dt; kExact preserves stationarity exactly
ModeState ou_step(const ModeState& s, const ModeIndex& n, double dt,
                  const PhysicalParams& p, const ModeRng& g,
                  std::uint64_t draw, Scheme scheme = Scheme::kExact);

FieldTrajectory simulate_trajectory(const ModeSet& modes,
                                    const std::vector<double>& grid,
                                    const RngPolicy& policy,
                                    std::uint64_t traj_id,
                                    Scheme scheme = Scheme::kExact);

// real field at (x, grid[t_index]):
// (2 hbar L^3)^{-1/2} [R_0 + sum_reps 2 (R_k cos(k.x) - I_k sin(k.x))]
double field_value(const FieldTrajectory& traj, const ModeSet& modes,
                   const std::array<double, 3>& x, std::size_t t_index);

struct CorrelatorEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  long long n_samples = 0;  // number of independent-trajectory batches
};

struct AutocorrEstimate {
  double lag_requested = 0.0;
  double lag_snapped = 0.0;
  double snap_error = 0.0;
  CorrelatorEstimate r;
  CorrelatorEstimate i;  // n_samples 0 when the mode has no imaginary part
};

inline constexpr int kMinTrajectories = 8;

// Monte Carlo E(R_k(t) R_k(t+tau)) and the I-component analogue; lags are
// snapped to the grid, time origins averaged within each trajectory, errors
// from the between-trajectory spread only
std::vector<AutocorrEstimate> estimate_mode_autocorr(
    const ModeSet& modes, const ModeIndex& n, const std::vector<double>& lags,
    const EnsembleConfig& ens, const RngPolicy& policy);

// Monte Carlo N-point field expectation at points whose times lie on the grid
CorrelatorEstimate estimate_field_npoint(const ModeSet& modes,
                                         const std::vector<SpacetimePoint>& points,
                                         const EnsembleConfig& ens,
                                         const RngPolicy& policy);

// run fn(0..n-1) on up to `jobs` workers; callers store results by index and
// reduce in index order, so outputs never depend on the worker count
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace gfn
