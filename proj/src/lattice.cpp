// lattice.cpp

#include "gfn/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gfn {

void PhysicalParams::validate(bool require_real_nu) const {
  if (!(m > 0.0)) throw std::invalid_argument("m must be > 0 (massless case excluded)");
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
  if (!(L > 0.0)) throw std::invalid_argument("L must be > 0");
  if (!(lambda_cut > 0.0)) throw std::invalid_argument("lambda_cut must be > 0");
  if (require_real_nu && !(nu >= 0.0))
    throw std::invalid_argument("nu must be >= 0 for simulation");
}

std::array<double, 3> ModeIndex::wavevector(double L) const {
  const double f = 2.0 * std::numbers::pi / L;
  return {f * n[0], f * n[1], f * n[2]};
}

double ModeIndex::k_squared(double L) const {
  const double f = 2.0 * std::numbers::pi / L;
  const double n2 = static_cast<double>(n[0]) * n[0] +
                    static_cast<double>(n[1]) * n[1] +
                    static_cast<double>(n[2]) * n[2];
  return f * f * n2;
}

ConjugacyClass classify_mode(const ModeIndex& n) {
  if (n.is_zero()) return {ConjugacyTag::SelfConjugate, n};
  for (int c : n.n) {
    if (c > 0) return {ConjugacyTag::Representative, n.negated()};
    if (c < 0) return {ConjugacyTag::Mirror, n.negated()};
  }
  return {ConjugacyTag::SelfConjugate, n};  // unreachable
}

ModeSet build_mode_set(const PhysicalParams& params, std::size_t max_modes) {
  params.validate(false);
  const double f = 2.0 * std::numbers::pi / params.L;
  const int nmax = static_cast<int>(std::floor(std::sqrt(params.lambda_cut) / f));

  // resource guard before enumeration: ball volume estimate, then exact below
  const double radius = nmax + 0.5;
  if (4.18879 * radius * radius * radius > 1.25 * static_cast<double>(max_modes))
    throw std::invalid_argument("mode count guard: lambda_cut = " +
                                std::to_string(params.lambda_cut) +
                                " with L = " + std::to_string(params.L) +
                                " exceeds the configured maximum of " +
                                std::to_string(max_modes) + " modes");

  ModeSet set;
  set.params = params;
  set.has_zero = true;
  for (int a = -nmax; a <= nmax; ++a)
    for (int b = -nmax; b <= nmax; ++b)
      for (int c = -nmax; c <= nmax; ++c) {
        const ModeIndex n{{a, b, c}};
        if (n.k_squared(params.L) > params.lambda_cut) continue;
        if (classify_mode(n).tag == ConjugacyTag::Representative)
          set.reps.push_back(n);
      }
  std::sort(set.reps.begin(), set.reps.end());
  if (set.lattice_count() > max_modes)
    throw std::invalid_argument("mode count guard: ball holds " +
                                std::to_string(set.lattice_count()) +
                                " modes, maximum is " + std::to_string(max_modes));
  return set;
}

ModeIndex canonical_mode(const ModeSet& modes, std::size_t ordinal) {
  if (ordinal >= modes.canonical_count())
    throw std::out_of_range("canonical_mode: ordinal past the canonical set");
  if (modes.has_zero) {
    if (ordinal == 0) return ModeIndex{{0, 0, 0}};
    return modes.reps[ordinal - 1];
  }
  return modes.reps[ordinal];
}

double mode_energy(const ModeIndex& n, const PhysicalParams& params) {
  const double mu = params.m / params.hbar;
  return 0.5 * params.hbar * std::sqrt(n.k_squared(params.L) + mu * mu);
}

double mode_omega(const ModeIndex& n, const PhysicalParams& params) {
  const double mu = params.m / params.hbar;
  return std::sqrt(n.k_squared(params.L) + mu * mu);
}

double mode_rate(const ModeIndex& n, const PhysicalParams& params) {
  return 4.0 * params.nu * mode_energy(n, params) / (params.hbar * params.hbar);
}

}  // namespace gfn
