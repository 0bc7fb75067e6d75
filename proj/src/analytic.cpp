// analytic.cpp

#include "gfn/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gfn/bessel.hpp"
#include "gfn/quadrature.hpp"

namespace gfn {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

double sinc(double z) {
  return std::abs(z) > 1e-8 ? std::sin(z) / z : 1.0 - z * z / 6.0;
}

// (1/4pi^2) k^2 j0(kR) exp(-omega T)/omega, the radial reduction of the
// 3D Fourier integral after the analytic k0 integration
double s2_radial_integrand(double k, double mu, double R, double T) {
  const double w = std::sqrt(k * k + mu * mu);
  return k * k * sinc(k * R) * std::exp(-w * T) / (w * kFourPiSq);
}

// integrate [a, b] in sub-panels narrow enough to resolve the mass scale
// and the exponential damping, whatever the oscillation-aligned width is
double integrate_smooth(double a, double b, const std::function<double(double)>& f) {
  const int nsub = std::max(1, static_cast<int>(std::ceil(b - a)));
  double s = 0.0;
  for (int i = 0; i < nsub; ++i) {
    const double lo = a + (b - a) * i / nsub;
    const double hi = a + (b - a) * (i + 1) / nsub;
    s += quad::panel(f, lo, hi);
  }
  return s;
}

}  // namespace

double spatial_distance(const SpacetimePoint& a, const SpacetimePoint& b) {
  const double dx = a.x[0] - b.x[0], dy = a.x[1] - b.x[1], dz = a.x[2] - b.x[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double euclidean_interval(const SpacetimePoint& a, const SpacetimePoint& b) {
  const double r = spatial_distance(a, b);
  const double dt = a.t - b.t;
  return std::sqrt(r * r + dt * dt);
}

double mode_correlation(const ModeIndex& n, double dt, const PhysicalParams& p) {
  p.validate();
  if (n.is_zero())
    throw std::invalid_argument(
        "mode_correlation: zero mode has doubled variance; use field_mode_correlation");
  const double e = mode_energy(n, p);
  return std::exp(-mode_rate(n, p) * std::abs(dt)) * p.hbar * p.hbar / (4.0 * e);
}

double field_mode_correlation(const ModeIndex& n, const ModeIndex& nprime,
                              double dt, const PhysicalParams& p) {
  p.validate();
  if (n.k_squared(p.L) > p.lambda_cut || nprime.k_squared(p.L) > p.lambda_cut)
    throw std::invalid_argument("field_mode_correlation: mode outside cutoff ball");
  if (nprime != n.negated()) return 0.0;
  const double e = mode_energy(n, p);
  return 2.0 * std::exp(-mode_rate(n, p) * std::abs(dt)) * p.hbar * p.hbar / (4.0 * e);
}

double schwinger2_modesum(const SpacetimePoint& p1, const SpacetimePoint& p2,
                          const ModeSet& modes) {
  const PhysicalParams& p = modes.params;
  const double scale = 2.0 * p.nu / p.hbar;
  const double st = scale * std::abs(p1.t - p2.t);
  const std::array<double, 3> dx{p1.x[0] - p2.x[0], p1.x[1] - p2.x[1],
                                 p1.x[2] - p2.x[2]};
  double sum = 0.0;
  if (modes.has_zero) {
    const double w0 = mode_omega(ModeIndex{{0, 0, 0}}, p);
    sum += std::exp(-w0 * st) / (2.0 * w0);
  }
  for (const ModeIndex& n : modes.reps) {
    const auto k = n.wavevector(p.L);
    const double w = mode_omega(n, p);
    const double kdx = k[0] * dx[0] + k[1] * dx[1] + k[2] * dx[2];
    // representative plus its mirror: 2 cos(k.dx) / (2 omega)
    sum += std::cos(kdx) * std::exp(-w * st) / w;
  }
  return sum / (p.L * p.L * p.L);
}

double schwinger2_continuum_r(double r, const PhysicalParams& p) {
  p.validate(false);
  if (!(r > 0.0))
    throw std::domain_error("schwinger2_continuum: coincident points (r = 0)");
  const double mu = p.m / p.hbar;
  return mu * bessel_k1(mu * r) / (kFourPiSq * r);
}

double schwinger2_continuum(const SpacetimePoint& dp, const PhysicalParams& p) {
  return schwinger2_continuum_r(euclidean_interval(dp, SpacetimePoint{}), p);
}

double schwinger2_quadrature(const SpacetimePoint& dp, const PhysicalParams& p) {
  p.validate(false);
  const double mu = p.m / p.hbar;
  const double R = spatial_distance(dp, SpacetimePoint{});
  const double T = std::abs(dp.t);
  if (R <= 0.0 && T <= 0.0)
    throw std::domain_error("schwinger2_quadrature: coincident points");
  const auto f = [=](double k) { return s2_radial_integrand(k, mu, R, T); };

  if (R < 1e-12) {
    // purely damped integrand: one pass to where exp(-omega T) is negligible
    return integrate_smooth(0.0, 45.0 / T + 10.0 * mu, f);
  }
  // half-oscillation panels of sin(kR); the partial sums alternate around the
  // limit, so repeated averaging converges even at T = 0
  const double h = std::numbers::pi / R;
  const double kstop = T > 1e-12 ? std::min(45.0 / T + 10.0 * mu, 6000.0) : 0.0;
  const int npan =
      std::min(std::max(96, static_cast<int>(std::ceil(kstop / h)) + 1), 20000);
  std::vector<double> partial(npan);
  double s = 0.0;
  for (int j = 0; j < npan; ++j) {
    s += integrate_smooth(j * h, (j + 1) * h, f);
    partial[j] = s;
  }
  const std::size_t window = std::min<std::size_t>(partial.size(), 64);
  return quad::averaged_limit(
      std::span<const double>(partial).last(window));
}

PairingList wick_pairings(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("wick_pairings: negative N");
  if (n > max_n)
    throw std::length_error("wick_pairings: N exceeds the configured maximum");
  if (n % 2 != 0) return {};  // odd moments of a mean-zero Gaussian vanish

  PairingList out;
  Pairing current;
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self) -> void {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      out.push_back(current);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(first, j);
      self(self);
      current.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  recurse(recurse);
  return out;
}

namespace {

template <typename Pair2>
double isserlis_sum(const std::vector<SpacetimePoint>& points, int max_n,
                    const Pair2& s2) {
  const int n = static_cast<int>(points.size());
  const PairingList pairings = wick_pairings(n, max_n);
  double total = 0.0;
  for (const Pairing& pairing : pairings) {
    double prod = 1.0;
    for (const auto& [a, b] : pairing) prod *= s2(points[a], points[b]);
    total += prod;
  }
  if (n == 0) return 1.0;  // empty product over the single empty matching
  return total;
}

}  // namespace

double schwingerN(const std::vector<SpacetimePoint>& points,
                  const PhysicalParams& p, int max_n) {
  return isserlis_sum(points, max_n,
                      [&](const SpacetimePoint& a, const SpacetimePoint& b) {
                        return schwinger2_continuum_r(euclidean_interval(a, b), p);
                      });
}

double scaled_time_expectation(const std::vector<SpacetimePoint>& points,
                               const PhysicalParams& p, int max_n) {
  p.validate();
  const double scale = 2.0 * p.nu / p.hbar;
  std::vector<SpacetimePoint> scaled = points;
  for (SpacetimePoint& pt : scaled) pt.t *= scale;
  return schwingerN(scaled, p, max_n);
}

double npoint_modesum(const std::vector<SpacetimePoint>& points,
                      const ModeSet& modes, int max_n) {
  return isserlis_sum(points, max_n,
                      [&](const SpacetimePoint& a, const SpacetimePoint& b) {
                        return schwinger2_modesum(a, b, modes);
                      });
}

}  // namespace gfn
