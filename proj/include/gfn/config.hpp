// config.hpp
//
// Flat key=value run configuration with [section] headers.  Keys before the
// first header belong to [params].  Unknown keys and sections are hard
// errors with a nearest-match suggestion; repeated keys are allowed only for
// the list-valued ones (npoint, points, separation, boost_pair).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfn/analytic.hpp"
#include "gfn/continuation.hpp"
#include "gfn/lattice.hpp"
#include "gfn/sde.hpp"

namespace gfn {

struct SimulateConfig {
  ModeIndex mode{{1, 0, 0}};
  std::vector<double> lags{0.0, 0.25, 0.5, 1.0};
  std::vector<std::vector<SpacetimePoint>> npoint_sets;  // default: the
  // two-point separations x=(1,0,0), t in {0, 0.5, 1} against the origin
  double gate = 3.0;
};

struct AnalyticConfig {
  std::vector<double> r_grid{0.5, 1.0, 2.0};
  std::vector<std::vector<SpacetimePoint>> point_sets;
  double tol = 1e-6;  // closed form vs quadrature gate
};

struct PropagateConfig {
  std::vector<SpacetimePoint> separations;  // default: equal-time r in
  // {0.5, 1, 2} plus the timelike (0, 0, 0, 1)
  std::vector<BoostPair> boost_pairs;
  bool standard_boosts = true;  // append standard_boost_pairs()
  double residual_gate = 1e-4;
  double identity_tol = 1e-6;  // equal-time rows vs schwinger2_continuum
};

struct WickConfig {
  int n = 4;
  int max_n = kDefaultMaxWickOrder;
};

struct RunConfig {
  PhysicalParams params;
  std::size_t max_modes = kDefaultMaxModes;
  EnsembleConfig ensemble;
  RngPolicy policy;
  SimulateConfig simulate;
  AnalyticConfig analytic;
  PropagateConfig propagate;
  WickConfig wick;
};

// throws std::runtime_error with file:line diagnostics on parse or
// validation failure
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(std::string_view text,
                            std::string_view origin = "<config>");

}  // namespace gfn
