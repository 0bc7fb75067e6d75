// continuation.cpp

#include "gfn/continuation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gfn/quadrature.hpp"

namespace gfn {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

// damping values whose Neville table is extrapolated to eps = 0
constexpr double kEpsLadder[] = {0.05, 0.025, 0.0125, 0.00625, 0.003125};

double sinc(double z) {
  return std::abs(z) > 1e-8 ? std::sin(z) / z : 1.0 - z * z / 6.0;
}

// (1/4pi^2) int_0^kmax k^2 j0(kR) exp(-i branch omega T) exp(-eps k)/omega dk
std::complex<double> damped_radial(double mu, double R, double T, int branch,
                                   double eps) {
  const auto f = [=](double k) -> std::complex<double> {
    const double w = std::sqrt(k * k + mu * mu);
    const double amp = k * k * sinc(k * R) * std::exp(-eps * k) / (w * kFourPiSq);
    const double phase = w * T;
    return {amp * std::cos(phase), -branch * amp * std::sin(phase)};
  };
  // panel narrow enough for one half-oscillation, the mass scale, and the
  // damping scale
  double h = 1.0;
  if (R + T > 0.0) h = std::min(h, std::numbers::pi / (R + T));
  if (mu > 2.0) h = std::min(h, 2.0 / mu);
  const double kmax = 40.0 / eps + 10.0 * h;
  const int npan = static_cast<int>(kmax / h) + 1;
  std::complex<double> s = 0.0;
  for (int j = 0; j < npan; ++j) s += quad::panel_c(f, j * h, (j + 1) * h);
  return s;
}

// polynomial extrapolation of (eps_i, v_i) to eps = 0; err is the change in
// the final Neville step
std::complex<double> neville_to_zero(const std::vector<double>& eps,
                                     const std::vector<std::complex<double>>& vals,
                                     double& err) {
  const std::size_t n = vals.size();
  std::vector<std::complex<double>> row = vals;
  std::complex<double> prev = row[0];
  for (std::size_t lev = 1; lev < n; ++lev) {
    for (std::size_t i = 0; i + lev < n; ++i)
      row[i] = (eps[i] * row[i + 1] - eps[i + lev] * row[i]) /
               (eps[i] - eps[i + lev]);
    prev = lev + 1 < n ? row[0] : prev;
  }
  err = std::abs(row[0] - prev);
  return row[0];
}

}  // namespace

std::complex<double> continued_mode_correlation(const ModeIndex& n, double dt,
                                                std::complex<double> nu,
                                                const PhysicalParams& p) {
  p.validate(false);
  if (n.k_squared(p.L) > p.lambda_cut)
    throw std::invalid_argument("continued_mode_correlation: mode outside cutoff");
  const double e = mode_energy(n, p);
  const std::complex<double> lambda = 4.0 * nu * e / (p.hbar * p.hbar);
  return 2.0 * std::exp(-lambda * std::abs(dt)) * p.hbar * p.hbar / (4.0 * e);
}

PropagatorValue feynman_propagator(const SpacetimePoint& dp,
                                   const PhysicalParams& p, int branch) {
  p.validate(false);
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("feynman_propagator: branch must be +1 or -1");
  const double mu = p.m / p.hbar;
  const double R = spatial_distance(dp, SpacetimePoint{});
  const double T = std::abs(dp.t);
  if (R <= 0.0 && T <= 0.0)
    throw std::domain_error("feynman_propagator: coincident points");

  std::vector<double> eps(std::begin(kEpsLadder), std::end(kEpsLadder));
  std::vector<std::complex<double>> vals;
  vals.reserve(eps.size());
  for (double e : eps) vals.push_back(damped_radial(mu, R, T, branch, e));
  PropagatorValue out;
  out.value = neville_to_zero(eps, vals, out.sys_err);
  return out;
}

PropagatorValue npoint_continued(const std::vector<SpacetimePoint>& points,
                                 int branch, const PhysicalParams& p,
                                 int max_n) {
  const PairingList pairings =
      wick_pairings(static_cast<int>(points.size()), max_n);
  PropagatorValue out;
  if (points.empty()) {
    out.value = 1.0;
    return out;
  }
  for (const Pairing& pairing : pairings) {
    std::complex<double> prod = 1.0;
    double rel_err = 0.0;
    for (const auto& [a, b] : pairing) {
      const SpacetimePoint dp{{points[a].x[0] - points[b].x[0],
                               points[a].x[1] - points[b].x[1],
                               points[a].x[2] - points[b].x[2]},
                              points[a].t - points[b].t};
      const PropagatorValue v = feynman_propagator(dp, p, branch);
      prod *= v.value;
      if (std::abs(v.value) > 0.0) rel_err += v.sys_err / std::abs(v.value);
    }
    out.value += prod;
    out.sys_err += std::abs(prod) * rel_err;
  }
  return out;
}

std::vector<InvarianceRow> lorentz_invariance_check(
    const std::vector<BoostPair>& pairs, const PhysicalParams& p) {
  std::vector<InvarianceRow> rows;
  rows.reserve(pairs.size());
  for (const BoostPair& pair : pairs) {
    InvarianceRow row;
    row.pair = pair;
    row.value_a = feynman_propagator(pair.a, p).value;
    row.value_b = feynman_propagator(pair.b, p).value;
    const double scale = std::max(std::abs(row.value_a), std::abs(row.value_b));
    row.residual = scale > 0.0 ? std::abs(row.value_a - row.value_b) / scale : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<BoostPair> standard_boost_pairs() {
  // boost of (x, t) along x with velocity beta: x' = gamma (x + beta t),
  // t' = gamma (t + beta x); rational betas keep the entries exact
  const auto boosted = [](double x, double t, double beta) {
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    return SpacetimePoint{{gamma * (x + beta * t), 0.0, 0.0},
                          gamma * (t + beta * x)};
  };
  std::vector<BoostPair> pairs;
  const double betas[] = {3.0 / 5.0, 5.0 / 13.0, 4.0 / 5.0};
  // spacelike: separation (r, 0, 0, 0)
  for (double r : {0.5, 1.0, 2.0})
    pairs.push_back({SpacetimePoint{{r, 0.0, 0.0}, 0.0}, boosted(r, 0.0, betas[0])});
  pairs.push_back({SpacetimePoint{{1.0, 0.0, 0.0}, 0.0}, boosted(1.0, 0.0, betas[1])});
  pairs.push_back({SpacetimePoint{{1.0, 0.0, 0.0}, 0.0}, boosted(1.0, 0.0, betas[2])});
  // timelike: separation (0, 0, 0, t)
  for (double t : {0.5, 1.0, 2.0})
    pairs.push_back({SpacetimePoint{{0.0, 0.0, 0.0}, t}, boosted(0.0, t, betas[0])});
  pairs.push_back({SpacetimePoint{{0.0, 0.0, 0.0}, 1.0}, boosted(0.0, 1.0, betas[1])});
  pairs.push_back({SpacetimePoint{{0.0, 0.0, 0.0}, 1.0}, boosted(0.0, 1.0, betas[2])});
  return pairs;
}

}  // namespace gfn
