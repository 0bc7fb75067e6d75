// lattice.hpp
//
// Physical parameters and the periodic momentum lattice of a free scalar
// field in a box of side L with a spherical cutoff on |k|^2.  Only one
// representative of each {k, -k} pair is an independent degree of freedom;
// the canonical set is the zero mode plus the lexicographically positive
// half-lattice.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gfn {

struct PhysicalParams {
  double m = 1.0;           // mass, energy units (c = 1)
  double hbar = 1.0;        // action units
  double nu = 0.5;          // diffusion parameter, action units
  double L = 6.283185307179586;  // box side length
  double lambda_cut = 1.0;  // cutoff on |k|^2

  // throws std::invalid_argument on violation; require_real_nu additionally
  // demands nu >= 0 (simulation contexts)
  void validate(bool require_real_nu = true) const;
};

struct ModeIndex {
  std::array<int, 3> n{0, 0, 0};

  bool is_zero() const { return n[0] == 0 && n[1] == 0 && n[2] == 0; }
  ModeIndex negated() const { return {{-n[0], -n[1], -n[2]}}; }

  // k = 2 pi n / L
  std::array<double, 3> wavevector(double L) const;
  double k_squared(double L) const;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
  friend auto operator<=>(const ModeIndex& a, const ModeIndex& b) {
    return a.n <=> b.n;
  }
};

enum class ConjugacyTag { SelfConjugate, Representative, Mirror };

struct ConjugacyClass {
  ConjugacyTag tag;
  ModeIndex partner;  // for Mirror: the representative it mirrors
};

// n = 0 is self conjugate; of each pair {n, -n} the member whose first
// nonzero component is positive is the representative
ConjugacyClass classify_mode(const ModeIndex& n);

struct ModeSet {
  PhysicalParams params;
  std::vector<ModeIndex> reps;  // lexicographically sorted representatives
  bool has_zero = true;

  // zero mode + representatives: the independent degrees of freedom
  std::size_t canonical_count() const { return (has_zero ? 1 : 0) + reps.size(); }
  // all lattice points inside the cutoff ball
  std::size_t lattice_count() const { return (has_zero ? 1 : 0) + 2 * reps.size(); }
};

// ordinal 0 is the zero mode when present, then the sorted representatives
ModeIndex canonical_mode(const ModeSet& modes, std::size_t ordinal);

inline constexpr std::size_t kDefaultMaxModes = 4'000'000;

// enumerate all modes with |k|^2 <= lambda_cut; throws if the lattice ball
// would exceed max_modes points
ModeSet build_mode_set(const PhysicalParams& params,
                       std::size_t max_modes = kDefaultMaxModes);

// E_k = (hbar/2) sqrt(|k|^2 + m^2/hbar^2)
double mode_energy(const ModeIndex& n, const PhysicalParams& params);

// omega_k = 2 E_k / hbar = sqrt(|k|^2 + m^2/hbar^2)
double mode_omega(const ModeIndex& n, const PhysicalParams& params);

// lambda_k = 4 nu E_k / hbar^2
double mode_rate(const ModeIndex& n, const PhysicalParams& params);

}  // namespace gfn
