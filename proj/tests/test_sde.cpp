// test_sde.cpp

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gfn/sde.hpp"

using namespace gfn;

namespace {

std::vector<double> make_grid(double dt, int len) {
  std::vector<double> g(len);
  for (int i = 0; i < len; ++i) g[i] = i * dt;
  return g;
}

struct Moments {
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  double se1 = 0, se2 = 0, se3 = 0, se4 = 0;
};

Moments sample_moments(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  Moments m;
  std::array<double, 8> acc{};
  for (double x : xs) {
    double p = x;
    for (int k = 0; k < 8; ++k) {
      acc[k] += p;
      p *= x;
    }
  }
  for (double& a : acc) a /= n;
  m.m1 = acc[0];
  m.m2 = acc[1];
  m.m3 = acc[2];
  m.m4 = acc[3];
  m.se1 = std::sqrt((acc[1] - acc[0] * acc[0]) / n);
  m.se2 = std::sqrt((acc[3] - acc[1] * acc[1]) / n);
  m.se3 = std::sqrt((acc[5] - acc[2] * acc[2]) / n);
  m.se4 = std::sqrt((acc[7] - acc[3] * acc[3]) / n);
  return m;
}

double zdiff(double a, double sa, double b, double sb) {
  return (a - b) / std::sqrt(sa * sa + sb * sb);
}

}  // namespace

TEST_CASE("stationary samples have the exact Gaussian moments") {
  PhysicalParams p;
  const ModeIndex unit{{1, 0, 0}};
  const double var = component_variance(unit, p);
  CHECK(var == doctest::Approx(0.3535533905932737622).epsilon(1e-15));

  const RngPolicy policy{42};
  const std::size_t n = 1'000'000;
  std::vector<double> rs(n), is(n);
  double cross = 0.0;
  for (std::size_t id = 0; id < n; ++id) {
    const ModeRng g = mode_streams(policy, id, 1);
    const ModeState s = stationary_sample(unit, p, g);
    rs[id] = s.r;
    is[id] = s.i;
    cross += s.r * s.i;
  }
  const Moments mr = sample_moments(rs);
  const Moments mi = sample_moments(is);
  CHECK(std::abs(mr.m1) <= 4.0 * std::sqrt(var / n));
  CHECK(std::abs(mi.m1) <= 4.0 * std::sqrt(var / n));
  CHECK(mr.m2 == doctest::Approx(var).epsilon(0.01));
  CHECK(mi.m2 == doctest::Approx(var).epsilon(0.01));
  // kurtosis 3 for a Gaussian
  CHECK(mr.m4 / (mr.m2 * mr.m2) == doctest::Approx(3.0).epsilon(0.02));
  // components independent
  CHECK(std::abs(cross / n) <= 4.0 * var / std::sqrt(n));
}

TEST_CASE("zero-mode stationary variance is hbar^2/(2 E_0)") {
  PhysicalParams p;  // E_0 = m/2 = 1/2 -> variance 1
  const ModeIndex zero{{0, 0, 0}};
  CHECK(component_variance(zero, p) == doctest::Approx(1.0).epsilon(1e-15));
  const RngPolicy policy{7};
  const std::size_t n = 1'000'000;
  double s2 = 0.0;
  for (std::size_t id = 0; id < n; ++id) {
    const ModeState s = stationary_sample(zero, p, mode_streams(policy, id, 0));
    s2 += s.r * s.r;
    CHECK(s.i == 0.0);
  }
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("chapman-kolmogorov: two half steps match one full step in law") {
  PhysicalParams p;
  const ModeIndex unit{{1, 0, 0}};
  const double dt = 0.1;
  const std::size_t n = 200'000;
  std::vector<double> full(n), half(n);
  const RngPolicy pa{21}, pb{22};
  for (std::size_t id = 0; id < n; ++id) {
    const ModeRng ga = mode_streams(pa, id, 1);
    full[id] = ou_step(stationary_sample(unit, p, ga, 0), unit, dt, p, ga, 1).r;
    const ModeRng gb = mode_streams(pb, id, 1);
    ModeState s = stationary_sample(unit, p, gb, 0);
    s = ou_step(s, unit, dt / 2, p, gb, 1);
    s = ou_step(s, unit, dt / 2, p, gb, 2);
    half[id] = s.r;
  }
  const Moments mf = sample_moments(full);
  const Moments mh = sample_moments(half);
  CHECK(std::abs(zdiff(mf.m1, mf.se1, mh.m1, mh.se1)) <= 3.0);
  CHECK(std::abs(zdiff(mf.m2, mf.se2, mh.m2, mh.se2)) <= 3.0);
  CHECK(std::abs(zdiff(mf.m3, mf.se3, mh.m3, mh.se3)) <= 3.0);
  CHECK(std::abs(zdiff(mf.m4, mf.se4, mh.m4, mh.se4)) <= 3.0);
  // both remain stationary
  const double var = component_variance(unit, p);
  CHECK(std::abs(mf.m2 - var) <= 3.0 * mf.se2);
  CHECK(std::abs(mh.m2 - var) <= 3.0 * mh.se2);
}

TEST_CASE("nu = 0 freezes every trajectory") {
  PhysicalParams p;
  p.nu = 0.0;
  const ModeSet modes = build_mode_set(p);
  const FieldTrajectory traj =
      simulate_trajectory(modes, make_grid(0.05, 32), RngPolicy{3}, 0);
  for (std::size_t ord = 0; ord < traj.n_modes; ++ord)
    for (std::size_t t = 1; t < traj.grid.size(); ++t) {
      CHECK(traj.state(t, ord).r == traj.state(0, ord).r);
      CHECK(traj.state(t, ord).i == traj.state(0, ord).i);
    }
}

TEST_CASE("trajectories are deterministic in (seed, id) and differ across ids") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  const std::vector<double> grid = make_grid(0.05, 16);
  const RngPolicy policy{99};
  const FieldTrajectory a = simulate_trajectory(modes, grid, policy, 5);
  const FieldTrajectory b = simulate_trajectory(modes, grid, policy, 5);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    CHECK(a.states[i].r == b.states[i].r);
    CHECK(a.states[i].i == b.states[i].i);
  }
  CHECK(a.seed == rng::derive(policy.master_seed, 5));
  const FieldTrajectory c = simulate_trajectory(modes, grid, policy, 6);
  CHECK(a.states[0].r != c.states[0].r);
  const FieldTrajectory d = simulate_trajectory(modes, grid, RngPolicy{100}, 5);
  CHECK(a.states[0].r != d.states[0].r);
}

TEST_CASE("ou_step rejects nonpositive dt") {
  PhysicalParams p;
  const ModeIndex unit{{1, 0, 0}};
  const ModeRng g = mode_streams(RngPolicy{1}, 0, 1);
  const ModeState s = stationary_sample(unit, p, g, 0);
  CHECK_THROWS_AS(ou_step(s, unit, 0.0, p, g, 1), std::invalid_argument);
  CHECK_THROWS_AS(ou_step(s, unit, -0.1, p, g, 1), std::invalid_argument);
}

TEST_CASE("field with only the zero mode is uniform in space") {
  PhysicalParams p;
  p.lambda_cut = 0.5;  // below the first lattice shell
  const ModeSet modes = build_mode_set(p);
  REQUIRE(modes.reps.empty());
  REQUIRE(modes.has_zero);
  const FieldTrajectory traj =
      simulate_trajectory(modes, make_grid(0.1, 8), RngPolicy{17}, 2);
  const double norm = std::sqrt(2.0 * p.hbar * p.L * p.L * p.L);
  for (std::size_t t = 0; t < traj.grid.size(); ++t) {
    const double expected = traj.state(t, 0).r / norm;
    CHECK(field_value(traj, modes, {0.0, 0.0, 0.0}, t) == expected);
    CHECK(field_value(traj, modes, {1.7, -2.4, 0.9}, t) == expected);
  }
}

TEST_CASE("field is periodic over the box") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  const FieldTrajectory traj =
      simulate_trajectory(modes, make_grid(0.05, 8), RngPolicy{23}, 1);
  const std::array<double, 3> x{0.3, 1.2, -0.7};
  const double base = field_value(traj, modes, x, 3);
  for (int axis = 0; axis < 3; ++axis) {
    std::array<double, 3> shifted = x;
    shifted[axis] += p.L;
    CHECK(std::abs(field_value(traj, modes, shifted, 3) - base) <= 1e-13);
  }
}

TEST_CASE("field reconstruction matches the full-ball complex sum") {
  PhysicalParams p;
  p.lambda_cut = 4.0;
  const ModeSet modes = build_mode_set(p);
  REQUIRE(modes.lattice_count() == 33);
  const FieldTrajectory traj =
      simulate_trajectory(modes, make_grid(0.05, 4), RngPolicy{31}, 0);
  const std::array<double, 3> x{0.37, -1.1, 2.2};
  const std::size_t t = 2;
  std::complex<double> sum = traj.state(t, 0).r;  // zero mode
  for (std::size_t m = 0; m < modes.reps.size(); ++m) {
    const auto k = modes.reps[m].wavevector(p.L);
    const double phase = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
    const ModeState& s = traj.state(t, m + 1);
    const std::complex<double> amp{s.r, s.i};
    sum += amp * std::exp(std::complex<double>(0.0, phase)) +
           std::conj(amp) * std::exp(std::complex<double>(0.0, -phase));
  }
  sum /= std::sqrt(2.0 * p.hbar * p.L * p.L * p.L);
  CHECK(std::abs(sum.imag()) < 1e-12);
  CHECK(field_value(traj, modes, x, t) ==
        doctest::Approx(sum.real()).epsilon(1e-12));
}

TEST_CASE("mode autocorrelation matches the analytic decay") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  const ModeIndex unit{{1, 0, 0}};
  EnsembleConfig ens;  // 64 trajectories x 512 steps of 0.05
  const RngPolicy policy{1};
  const std::vector<AutocorrEstimate> est = estimate_mode_autocorr(
      modes, unit, {0.0, 1.0, -1.0, 0.26}, ens, policy);
  REQUIRE(est.size() == 4);

  const double var = component_variance(unit, p);
  const double rate = mode_rate(unit, p);
  CHECK(est[0].lag_snapped == 0.0);
  CHECK(std::abs(est[0].r.mean - var) <= 3.0 * est[0].r.std_err);
  CHECK(std::abs(est[0].i.mean - var) <= 3.0 * est[0].i.std_err);

  const double decayed = var * std::exp(-rate * 1.0);
  CHECK(est[1].lag_snapped == doctest::Approx(1.0));
  CHECK(est[1].snap_error <= 1e-12);
  CHECK(std::abs(est[1].r.mean - decayed) <= 3.0 * est[1].r.std_err);
  CHECK(std::abs(est[1].i.mean - decayed) <= 3.0 * est[1].i.std_err);

  // autocorrelation is even in the lag
  CHECK(est[2].lag_snapped == doctest::Approx(-1.0));
  CHECK(est[2].r.mean == est[1].r.mean);
  CHECK(est[2].i.std_err == est[1].i.std_err);

  // off-grid lag snaps to the nearest grid point
  CHECK(est[3].lag_snapped == doctest::Approx(0.25));
  CHECK(est[3].snap_error == doctest::Approx(0.01).epsilon(1e-9));
}

TEST_CASE("mirror modes fold onto their representative") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig ens;
  ens.n_trajectories = 16;
  ens.grid_len = 64;
  const RngPolicy policy{5};
  const auto rep = estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}}, {0.5},
                                          ens, policy);
  const auto mir = estimate_mode_autocorr(modes, ModeIndex{{-1, 0, 0}}, {0.5},
                                          ens, policy);
  CHECK(rep[0].r.mean == mir[0].r.mean);
  CHECK(rep[0].i.mean == mir[0].i.mean);
}

TEST_CASE("zero-mode estimate has no imaginary component") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig ens;
  ens.n_trajectories = 16;
  ens.grid_len = 64;
  const auto est = estimate_mode_autocorr(modes, ModeIndex{{0, 0, 0}}, {0.0},
                                          ens, RngPolicy{2});
  CHECK(est[0].i.n_samples == 0);
  CHECK(std::abs(est[0].r.mean - 1.0) <= 3.0 * est[0].r.std_err);
}

TEST_CASE("estimator input validation") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig ens;
  const RngPolicy policy{1};
  SUBCASE("too few trajectories") {
    ens.n_trajectories = 4;
    CHECK_THROWS_AS(estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}}, {0.0},
                                           ens, policy),
                    std::invalid_argument);
  }
  SUBCASE("lag past the grid") {
    CHECK_THROWS_AS(estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}},
                                           {512 * 0.05}, ens, policy),
                    std::invalid_argument);
  }
  SUBCASE("mode outside the cutoff") {
    CHECK_THROWS_AS(estimate_mode_autocorr(modes, ModeIndex{{2, 0, 0}}, {0.0},
                                           ens, policy),
                    std::invalid_argument);
  }
  SUBCASE("npoint time off the grid") {
    CHECK_THROWS_AS(
        estimate_field_npoint(modes, {SpacetimePoint{{0, 0, 0}, 0.033}}, ens,
                              policy),
        std::invalid_argument);
  }
  SUBCASE("npoint spread past the grid") {
    CHECK_THROWS_AS(
        estimate_field_npoint(modes,
                              {SpacetimePoint{}, SpacetimePoint{{0, 0, 0}, 26.0}},
                              ens, policy),
        std::invalid_argument);
  }
}

TEST_CASE("time-scaled ensembles agree: (nu, tau) vs (2nu, tau/2)") {
  PhysicalParams slow;
  slow.nu = 0.25;
  PhysicalParams fast;
  fast.nu = 0.5;
  const ModeSet ms = build_mode_set(slow);
  const ModeSet mf = build_mode_set(fast);
  EnsembleConfig ens;
  const auto a = estimate_mode_autocorr(ms, ModeIndex{{1, 0, 0}}, {1.0}, ens,
                                        RngPolicy{11});
  const auto b = estimate_mode_autocorr(mf, ModeIndex{{1, 0, 0}}, {0.5}, ens,
                                        RngPolicy{12});
  CHECK(std::abs(zdiff(a[0].r.mean, a[0].r.std_err, b[0].r.mean,
                       b[0].r.std_err)) <= 3.0);
  // and both match the shared analytic value
  const double expected = component_variance(ModeIndex{{1, 0, 0}}, slow) *
                          std::exp(-mode_rate(ModeIndex{{1, 0, 0}}, slow));
  CHECK(std::abs(a[0].r.mean - expected) <= 3.0 * a[0].r.std_err);
  CHECK(std::abs(b[0].r.mean - expected) <= 3.0 * b[0].r.std_err);
}

TEST_CASE("euler-maruyama at small dt reproduces the stationary law") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig ens;
  ens.scheme = Scheme::kEulerMaruyama;
  ens.grid_dt = 0.002;
  ens.grid_len = 512;
  const auto est = estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}},
                                          {0.0, 0.4}, ens, RngPolicy{8});
  const double var = component_variance(ModeIndex{{1, 0, 0}}, p);
  const double rate = mode_rate(ModeIndex{{1, 0, 0}}, p);
  CHECK(std::abs(est[0].r.mean - var) <= 3.0 * est[0].r.std_err);
  CHECK(std::abs(est[1].r.mean - var * std::exp(-rate * 0.4)) <=
        3.0 * est[1].r.std_err);
}

TEST_CASE("field n-point estimates match the finite-volume Gaussian moments") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig ens;
  const RngPolicy policy{1};
  SUBCASE("odd moments vanish") {
    const auto one = estimate_field_npoint(
        modes, {SpacetimePoint{{0.3, 0, 0}, 0.25}}, ens, policy);
    CHECK(std::abs(one.mean) <= 3.0 * one.std_err);
    const auto three = estimate_field_npoint(
        modes,
        {SpacetimePoint{}, SpacetimePoint{{1, 0, 0}, 0.25},
         SpacetimePoint{{0, 1, 0}, 0.5}},
        ens, policy);
    CHECK(std::abs(three.mean) <= 3.0 * three.std_err);
  }
  SUBCASE("two-point matches the mode sum") {
    const SpacetimePoint a{{1, 0, 0}, 0.0};
    const SpacetimePoint b{{0, 0, 0}, 0.5};
    const auto est = estimate_field_npoint(modes, {a, b}, ens, policy);
    CHECK(est.n_samples == ens.n_trajectories);
    CHECK(std::abs(est.mean - schwinger2_modesum(a, b, modes)) <=
          3.0 * est.std_err);
  }
  SUBCASE("four-point matches the Isserlis mode sum") {
    const std::vector<SpacetimePoint> pts = {
        SpacetimePoint{}, SpacetimePoint{{1, 0, 0}, 0.25},
        SpacetimePoint{{0, 1, 0}, 0.5}, SpacetimePoint{{1, 1, 0}, 0.75}};
    const auto est = estimate_field_npoint(modes, pts, ens, policy);
    CHECK(std::abs(est.mean - npoint_modesum(pts, modes)) <= 3.0 * est.std_err);
  }
}

TEST_CASE("estimates are bit-identical across worker counts") {
  PhysicalParams p;
  const ModeSet modes = build_mode_set(p);
  EnsembleConfig one;
  one.jobs = 1;
  EnsembleConfig eight = one;
  eight.jobs = 8;
  const RngPolicy policy{1};

  const auto a1 = estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}},
                                         {0.0, 0.25, 1.0}, one, policy);
  const auto a8 = estimate_mode_autocorr(modes, ModeIndex{{1, 0, 0}},
                                         {0.0, 0.25, 1.0}, eight, policy);
  for (std::size_t i = 0; i < a1.size(); ++i) {
    CHECK(a1[i].r.mean == a8[i].r.mean);
    CHECK(a1[i].r.std_err == a8[i].r.std_err);
    CHECK(a1[i].i.mean == a8[i].i.mean);
  }

  const std::vector<SpacetimePoint> pts = {SpacetimePoint{{1, 0, 0}, 0.0},
                                           SpacetimePoint{{0, 0, 0}, 0.5}};
  const auto n1 = estimate_field_npoint(modes, pts, one, policy);
  const auto n8 = estimate_field_npoint(modes, pts, eight, policy);
  CHECK(n1.mean == n8.mean);
  CHECK(n1.std_err == n8.std_err);
}

TEST_CASE("parallel_for covers every index once and propagates errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(16, 4,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
