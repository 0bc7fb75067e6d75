// sde.cpp

#include "gfn/sde.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace gfn {

namespace {

struct BatchStats {
  double mean = 0.0;
  double std_err = 0.0;
};

// sample mean and standard error of the per-trajectory batch values,
// accumulated in index order
BatchStats batch_stats(const std::vector<double>& batches) {
  const std::size_t b = batches.size();
  double mean = 0.0;
  for (double v : batches) mean += v;
  mean /= static_cast<double>(b);
  double ss = 0.0;
  for (double v : batches) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(b - 1);
  return {mean, std::sqrt(var / static_cast<double>(b))};
}

void validate_ensemble(const EnsembleConfig& ens) {
  if (ens.n_trajectories < kMinTrajectories)
    throw std::invalid_argument("n_trajectories must be >= " +
                                std::to_string(kMinTrajectories) +
                                " (trajectory batching needs degrees of freedom)");
  if (!(ens.grid_dt > 0.0)) throw std::invalid_argument("grid_dt must be > 0");
  if (ens.grid_len < 2) throw std::invalid_argument("grid_len must be >= 2");
}

std::vector<double> uniform_grid(const EnsembleConfig& ens) {
  std::vector<double> grid(ens.grid_len);
  for (int j = 0; j < ens.grid_len; ++j) grid[j] = j * ens.grid_dt;
  return grid;
}

}  // namespace

ModeRng mode_streams(const RngPolicy& policy, std::uint64_t traj_id,
                     std::size_t mode_ordinal) {
  const std::uint64_t traj_key = rng::derive(policy.master_seed, traj_id);
  const std::uint64_t mode_key = rng::derive(traj_key, mode_ordinal);
  return {{rng::derive(mode_key, 0)}, {rng::derive(mode_key, 1)}};
}

double component_variance(const ModeIndex& n, const PhysicalParams& p) {
  const double v = p.hbar * p.hbar / (4.0 * mode_energy(n, p));
  return n.is_zero() ? 2.0 * v : v;  // Wiener covariance doubles at k = 0
}

ModeState stationary_sample(const ModeIndex& n, const PhysicalParams& p,
                            const ModeRng& g, std::uint64_t draw) {
  const double sd = std::sqrt(component_variance(n, p));
  ModeState s;
  s.r = sd * g.r.normal(draw);
  s.i = n.is_zero() ? 0.0 : sd * g.i.normal(draw);
  return s;
}

ModeState ou_step(const ModeState& s, const ModeIndex& n, double dt,
                  const PhysicalParams& p, const ModeRng& g,
                  std::uint64_t draw, Scheme scheme) {
  if (!(dt > 0.0)) throw std::invalid_argument("ou_step: dt must be > 0");
  const double lambda = mode_rate(n, p);
  const double var = component_variance(n, p);
  double decay = 0.0, noise_sd = 0.0;
  if (scheme == Scheme::kExact) {
    decay = std::exp(-lambda * dt);
    noise_sd = std::sqrt(var * (1.0 - decay * decay));
  } else {
    decay = 1.0 - lambda * dt;
    noise_sd = std::sqrt(2.0 * lambda * var * dt);
  }
  ModeState out;
  out.r = decay * s.r + noise_sd * g.r.normal(draw);
  out.i = n.is_zero() ? 0.0 : decay * s.i + noise_sd * g.i.normal(draw);
  return out;
}

FieldTrajectory simulate_trajectory(const ModeSet& modes,
                                    const std::vector<double>& grid,
                                    const RngPolicy& policy,
                                    std::uint64_t traj_id, Scheme scheme) {
  if (grid.empty()) throw std::invalid_argument("simulate_trajectory: empty grid");
  for (std::size_t j = 1; j < grid.size(); ++j)
    if (!(grid[j] > grid[j - 1]))
      throw std::invalid_argument("simulate_trajectory: grid must increase strictly");

  FieldTrajectory traj;
  traj.grid = grid;
  traj.n_modes = modes.canonical_count();
  traj.states.resize(traj.n_modes * grid.size());
  traj.seed = rng::derive(policy.master_seed, traj_id);

  for (std::size_t ord = 0; ord < traj.n_modes; ++ord) {
    const ModeIndex n = canonical_mode(modes, ord);
    const ModeRng g = mode_streams(policy, traj_id, ord);
    ModeState s = stationary_sample(n, modes.params, g, 0);
    traj.states[ord] = s;
    for (std::size_t j = 1; j < grid.size(); ++j) {
      s = ou_step(s, n, grid[j] - grid[j - 1], modes.params, g, j, scheme);
      traj.states[j * traj.n_modes + ord] = s;
    }
  }
  return traj;
}

double field_value(const FieldTrajectory& traj, const ModeSet& modes,
                   const std::array<double, 3>& x, std::size_t t_index) {
  if (t_index >= traj.grid.size())
    throw std::out_of_range("field_value: t_index past the grid");
  const PhysicalParams& p = modes.params;
  double sum = 0.0;
  std::size_t ord = 0;
  if (modes.has_zero) sum += traj.state(t_index, ord++).r;
  for (const ModeIndex& n : modes.reps) {
    const auto k = n.wavevector(p.L);
    const double phase = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
    const ModeState& s = traj.state(t_index, ord++);
    sum += 2.0 * (s.r * std::cos(phase) - s.i * std::sin(phase));
  }
  return sum / std::sqrt(2.0 * p.hbar * p.L * p.L * p.L);
}

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs < 1) jobs = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    std::size_t i;
    while (!failed.load(std::memory_order_relaxed) &&
           (i = next.fetch_add(1)) < n) {
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<AutocorrEstimate> estimate_mode_autocorr(
    const ModeSet& modes, const ModeIndex& n, const std::vector<double>& lags,
    const EnsembleConfig& ens, const RngPolicy& policy) {
  validate_ensemble(ens);

  // mirrors share their representative's components up to the reality signs,
  // so fold them onto the representative
  ModeIndex target = n;
  if (classify_mode(n).tag == ConjugacyTag::Mirror)
    target = classify_mode(n).partner;
  std::size_t ordinal = 0;
  bool found = false;
  for (std::size_t ord = 0; ord < modes.canonical_count(); ++ord)
    if (canonical_mode(modes, ord) == target) {
      ordinal = ord;
      found = true;
      break;
    }
  if (!found)
    throw std::invalid_argument("estimate_mode_autocorr: mode outside the set");
  const bool has_imag = !target.is_zero();

  struct Snapped {
    double requested, snapped, error;
    int steps;
  };
  std::vector<Snapped> snapped;
  for (double lag : lags) {
    const int steps = static_cast<int>(std::llround(std::abs(lag) / ens.grid_dt));
    if (steps >= ens.grid_len)
      throw std::invalid_argument("estimate_mode_autocorr: lag past the grid");
    const double snap = std::copysign(steps * ens.grid_dt, lag);
    snapped.push_back({lag, snap, std::abs(std::abs(lag) - steps * ens.grid_dt), steps});
  }

  const std::vector<double> grid = uniform_grid(ens);
  const std::size_t b = static_cast<std::size_t>(ens.n_trajectories);
  const std::size_t nlags = snapped.size();
  std::vector<double> batch_r(b * nlags), batch_i(b * nlags);

  parallel_for(b, ens.jobs, [&](std::size_t traj_id) {
    const FieldTrajectory traj =
        simulate_trajectory(modes, grid, policy, traj_id, ens.scheme);
    for (std::size_t li = 0; li < nlags; ++li) {
      const int steps = snapped[li].steps;
      const std::size_t origins = grid.size() - static_cast<std::size_t>(steps);
      double acc_r = 0.0, acc_i = 0.0;
      for (std::size_t t = 0; t < origins; ++t) {
        const ModeState& a = traj.state(t, ordinal);
        const ModeState& c = traj.state(t + steps, ordinal);
        acc_r += a.r * c.r;
        acc_i += a.i * c.i;
      }
      batch_r[traj_id * nlags + li] = acc_r / static_cast<double>(origins);
      batch_i[traj_id * nlags + li] = acc_i / static_cast<double>(origins);
    }
  });

  std::vector<AutocorrEstimate> out(nlags);
  std::vector<double> col(b);
  for (std::size_t li = 0; li < nlags; ++li) {
    AutocorrEstimate& est = out[li];
    est.lag_requested = snapped[li].requested;
    est.lag_snapped = snapped[li].snapped;
    est.snap_error = snapped[li].error;
    for (std::size_t t = 0; t < b; ++t) col[t] = batch_r[t * nlags + li];
    const BatchStats sr = batch_stats(col);
    est.r = {sr.mean, sr.std_err, static_cast<long long>(b)};
    if (has_imag) {
      for (std::size_t t = 0; t < b; ++t) col[t] = batch_i[t * nlags + li];
      const BatchStats si = batch_stats(col);
      est.i = {si.mean, si.std_err, static_cast<long long>(b)};
    }
  }
  return out;
}

CorrelatorEstimate estimate_field_npoint(const ModeSet& modes,
                                         const std::vector<SpacetimePoint>& points,
                                         const EnsembleConfig& ens,
                                         const RngPolicy& policy) {
  validate_ensemble(ens);
  if (points.empty())
    throw std::invalid_argument("estimate_field_npoint: no points");

  std::vector<long long> idx(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    idx[i] = std::llround(points[i].t / ens.grid_dt);
    if (std::abs(points[i].t - idx[i] * ens.grid_dt) > 1e-9)
      throw std::invalid_argument(
          "estimate_field_npoint: point time is not on the simulation grid");
  }
  long long lo = idx[0], hi = idx[0];
  for (long long v : idx) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (long long& v : idx) v -= lo;  // only differences matter (stationarity)
  const long long span = hi - lo;
  if (span >= ens.grid_len)
    throw std::invalid_argument("estimate_field_npoint: grid too short for the "
                                "requested time spread");

  const PhysicalParams& p = modes.params;
  const double prefactor = 1.0 / std::sqrt(2.0 * p.hbar * p.L * p.L * p.L);

  // per-point phase tables over the representatives
  const std::size_t nreps = modes.reps.size();
  std::vector<double> cs(points.size() * nreps), sn(points.size() * nreps);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t m = 0; m < nreps; ++m) {
      const auto k = modes.reps[m].wavevector(p.L);
      const double phase =
          k[0] * points[i].x[0] + k[1] * points[i].x[1] + k[2] * points[i].x[2];
      cs[i * nreps + m] = std::cos(phase);
      sn[i * nreps + m] = std::sin(phase);
    }

  const std::vector<double> grid = uniform_grid(ens);
  const std::size_t b = static_cast<std::size_t>(ens.n_trajectories);
  std::vector<double> batches(b);

  parallel_for(b, ens.jobs, [&](std::size_t traj_id) {
    const FieldTrajectory traj =
        simulate_trajectory(modes, grid, policy, traj_id, ens.scheme);
    const std::size_t origins = grid.size() - static_cast<std::size_t>(span);
    double acc = 0.0;
    for (std::size_t o = 0; o < origins; ++o) {
      double prod = 1.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t t = o + static_cast<std::size_t>(idx[i]);
        std::size_t ord = 0;
        double sum = 0.0;
        if (modes.has_zero) sum += traj.state(t, ord++).r;
        for (std::size_t m = 0; m < nreps; ++m) {
          const ModeState& s = traj.state(t, ord++);
          sum += 2.0 * (s.r * cs[i * nreps + m] - s.i * sn[i * nreps + m]);
        }
        prod *= prefactor * sum;
      }
      acc += prod;
    }
    batches[traj_id] = acc / static_cast<double>(origins);
  });

  const BatchStats st = batch_stats(batches);
  return {st.mean, st.std_err, static_cast<long long>(b)};
}

}  // namespace gfn
