// commands.cpp

#include "gfn/commands.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gfn/analytic.hpp"
#include "gfn/continuation.hpp"
#include "gfn/lattice.hpp"
#include "gfn/report.hpp"
#include "gfn/sde.hpp"

#ifndef GFN_VERSION_STRING
#define GFN_VERSION_STRING "v0.0.0-unknown"
#endif

namespace gfn {

namespace {

using nlohmann::json;

std::string mode_label(const ModeIndex& n) {
  std::ostringstream os;
  os << n.n[0] << ":" << n.n[1] << ":" << n.n[2];
  return os.str();
}

std::string point_label(const SpacetimePoint& p) {
  std::ostringstream os;
  os << p.x[0] << ":" << p.x[1] << ":" << p.x[2] << ":" << p.t;
  return os.str();
}

std::string num_label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

json params_json(const RunConfig& cfg) {
  return {{"m", cfg.params.m},
          {"hbar", cfg.params.hbar},
          {"nu", cfg.params.nu},
          {"L", cfg.params.L},
          {"lambda_cut", cfg.params.lambda_cut},
          {"max_modes", cfg.max_modes}};
}

// jobs deliberately omitted: results are worker-count independent and the
// summary must be too
json ensemble_json(const RunConfig& cfg) {
  return {{"n_trajectories", cfg.ensemble.n_trajectories},
          {"grid_dt", cfg.ensemble.grid_dt},
          {"grid_len", cfg.ensemble.grid_len},
          {"scheme",
           cfg.ensemble.scheme == Scheme::kExact ? "exact" : "euler"}};
}

void write_summary(const std::string& out_dir, const std::string& command,
                   const json& config_echo, const json& rows, int n_pass,
                   int n_fail, double worst_z, int exit_code) {
  json j{{"version", version_string()},
         {"command", command},
         {"config", config_echo},
         {"rows", rows},
         {"summary",
          {{"n_pass", n_pass}, {"n_fail", n_fail}, {"worst_z", worst_z}}},
         {"exit_code", exit_code}};
  const std::string path =
      (std::filesystem::path(out_dir) / "summary.json").string();
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

void print_row(const ReportRow& r) {
  std::printf("[%s] %-40s value=%.8g std_err=%.3g analytic=%.8g z=%+.3f\n",
              r.pass ? "PASS" : "FAIL", r.label.c_str(), r.mc_mean,
              r.mc_std_err, r.analytic, r.z);
}

long long double_factorial_of_pred(int n) {  // (n-1)!! for even n >= 0
  long long v = 1;
  for (int j = n - 1; j > 1; j -= 2) v *= j;
  return v;
}

}  // namespace

std::string version_string() { return GFN_VERSION_STRING; }

int run_simulate(const RunConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ModeSet modes = build_mode_set(cfg.params, cfg.max_modes);
  ComparisonReport report;
  json rows = json::array();

  const std::vector<AutocorrEstimate> auto_est = estimate_mode_autocorr(
      modes, cfg.simulate.mode, cfg.simulate.lags, cfg.ensemble, cfg.policy);
  const double var = component_variance(cfg.simulate.mode, cfg.params);
  const double rate = mode_rate(cfg.simulate.mode, cfg.params);
  for (const AutocorrEstimate& est : auto_est) {
    const double analytic = var * std::exp(-rate * std::abs(est.lag_snapped));
    if (est.snap_error > 0.0)
      std::printf("note: lag %g snapped to %g (snap error %g)\n",
                  est.lag_requested, est.lag_snapped, est.snap_error);
    const std::string base =
        "autocorr[" + mode_label(cfg.simulate.mode) + "]";
    ReportRow row =
        make_row(base + "[R][tau=" + num_label(est.lag_snapped) + "]",
                 est.r.mean, est.r.std_err, analytic, cfg.simulate.gate);
    report.rows.push_back(row);
    if (est.i.n_samples > 0) {
      report.rows.push_back(
          make_row(base + "[I][tau=" + num_label(est.lag_snapped) + "]",
                   est.i.mean, est.i.std_err, analytic, cfg.simulate.gate));
    }
    rows.push_back({{"label", base},
                    {"lag_requested", est.lag_requested},
                    {"lag_snapped", est.lag_snapped},
                    {"snap_error", est.snap_error}});
  }

  for (std::size_t s = 0; s < cfg.simulate.npoint_sets.size(); ++s) {
    const std::vector<SpacetimePoint>& pts = cfg.simulate.npoint_sets[s];
    const CorrelatorEstimate est =
        estimate_field_npoint(modes, pts, cfg.ensemble, cfg.policy);
    const double analytic = npoint_modesum(pts, modes);
    report.rows.push_back(make_row(
        "npoint[" + std::to_string(s) + "][N=" + std::to_string(pts.size()) + "]",
        est.mean, est.std_err, analytic, cfg.simulate.gate));
  }

  for (const ReportRow& r : report.rows) {
    print_row(r);
    rows.push_back({{"label", r.label},
                    {"value", r.mc_mean},
                    {"std_err", r.mc_std_err},
                    {"analytic", r.analytic},
                    {"z", r.z},
                    {"pass", r.pass}});
  }
  write_comparison_csv(
      (std::filesystem::path(out_dir) / "report.csv").string(), report);

  const int exit_code = report.all_pass() ? 0 : 1;
  std::printf("simulate: %d/%zu gates passed (worst z = %+.3f)\n",
              report.n_pass(), report.rows.size(), report.worst_z());
  json echo{{"params", params_json(cfg)},
            {"ensemble", ensemble_json(cfg)},
            {"rng", {{"master_seed", cfg.policy.master_seed}}},
            {"simulate",
             {{"mode", cfg.simulate.mode.n},
              {"lags", cfg.simulate.lags},
              {"gate", cfg.simulate.gate}}}};
  write_summary(out_dir, "simulate", echo, rows, report.n_pass(),
                report.n_fail(), report.worst_z(), exit_code);
  return exit_code;
}

int run_analytic(const RunConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::vector<std::string>> csv;
  json rows = json::array();
  int n_pass = 0, n_fail = 0;

  for (double r : cfg.analytic.r_grid) {
    const double closed = schwinger2_continuum_r(r, cfg.params);
    const double quad =
        schwinger2_quadrature(SpacetimePoint{{r, 0.0, 0.0}, 0.0}, cfg.params);
    const double rel = std::abs(closed - quad) / std::abs(closed);
    const bool pass = rel <= cfg.analytic.tol;
    pass ? ++n_pass : ++n_fail;
    std::printf("[%s] s2[r=%g] closed=%.10g quadrature=%.10g rel=%.2e\n",
                pass ? "PASS" : "FAIL", r, closed, quad, rel);
    csv.push_back({"s2_closed[r=" + num_label(r) + "]", format_g17(closed)});
    csv.push_back({"s2_quadrature[r=" + num_label(r) + "]", format_g17(quad)});
    rows.push_back({{"label", "s2[r=" + num_label(r) + "]"},
                    {"closed_form", closed},
                    {"quadrature", quad},
                    {"rel_diff", rel},
                    {"pass", pass}});
  }

  for (std::size_t s = 0; s < cfg.analytic.point_sets.size(); ++s) {
    const std::vector<SpacetimePoint>& pts = cfg.analytic.point_sets[s];
    const double sn = schwingerN(pts, cfg.params);
    const double scaled = scaled_time_expectation(pts, cfg.params);
    if (pts.size() % 2 != 0)
      std::printf("note: schwingerN[%zu] has odd N=%zu, value is 0\n", s,
                  pts.size());
    std::printf("schwingerN[%zu][N=%zu] = %.10g, time-scaled = %.10g\n", s,
                pts.size(), sn, scaled);
    csv.push_back({"schwingerN[" + std::to_string(s) + "]", format_g17(sn)});
    csv.push_back(
        {"scaled_time[" + std::to_string(s) + "]", format_g17(scaled)});
    rows.push_back({{"label", "schwingerN[" + std::to_string(s) + "]"},
                    {"n_points", pts.size()},
                    {"value", sn},
                    {"scaled_time", scaled}});
  }

  write_csv((std::filesystem::path(out_dir) / "analytic.csv").string(),
            {"label", "value"}, csv);
  const int exit_code = n_fail == 0 ? 0 : 1;
  std::printf("analytic: %d/%d gates passed\n", n_pass, n_pass + n_fail);
  json echo{{"params", params_json(cfg)},
            {"analytic",
             {{"r_grid", cfg.analytic.r_grid}, {"tol", cfg.analytic.tol}}}};
  write_summary(out_dir, "analytic", echo, rows, n_pass, n_fail, 0.0,
                exit_code);
  return exit_code;
}

int run_propagate(const RunConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::vector<std::string>> prop_csv, res_csv;
  json rows = json::array();
  int n_pass = 0, n_fail = 0;
  const auto gate = [&](bool ok) { ok ? ++n_pass : ++n_fail; return ok; };

  for (const SpacetimePoint& dp : cfg.propagate.separations) {
    const PropagatorValue plus = feynman_propagator(dp, cfg.params, +1);
    const PropagatorValue minus = feynman_propagator(dp, cfg.params, -1);
    const std::string label = "prop[" + point_label(dp) + "]";
    prop_csv.push_back({label, format_g17(plus.value.real()),
                        format_g17(plus.value.imag()),
                        format_g17(plus.sys_err)});
    json row{{"label", label},
             {"re", plus.value.real()},
             {"im", plus.value.imag()},
             {"sys_err", plus.sys_err}};

    // anti-time-ordered branch must be the exact conjugate
    const double conj_defect = std::abs(std::imag(plus.value + minus.value));
    const bool conj_ok =
        gate(conj_defect <= 1e-15 * std::abs(plus.value) + 1e-300);
    row["conjugation_defect"] = conj_defect;
    row["conjugation_pass"] = conj_ok;

    bool identity_ok = true;
    if (dp.t == 0.0) {  // equal-time rows reduce to the Euclidean function
      const double target = schwinger2_continuum(dp, cfg.params);
      const double rel = std::abs(plus.value.real() - target) / std::abs(target);
      const double im_rel =
          std::abs(plus.value.imag()) / std::abs(plus.value.real());
      identity_ok = gate(rel <= cfg.propagate.identity_tol &&
                         im_rel <= cfg.propagate.identity_tol);
      row["equal_time_target"] = target;
      row["equal_time_rel"] = rel;
      row["equal_time_pass"] = identity_ok;
    }
    std::printf("[%s] %-26s re=%+.10e im=%+.10e sys_err=%.1e\n",
                conj_ok && identity_ok ? "PASS" : "FAIL", label.c_str(),
                plus.value.real(), plus.value.imag(), plus.sys_err);
    rows.push_back(row);
  }

  std::vector<BoostPair> pairs = cfg.propagate.boost_pairs;
  if (cfg.propagate.standard_boosts)
    for (const BoostPair& bp : standard_boost_pairs()) pairs.push_back(bp);
  const std::vector<InvarianceRow> inv = lorentz_invariance_check(pairs, cfg.params);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const bool ok = gate(inv[i].residual < cfg.propagate.residual_gate);
    const std::string label = "boost[" + std::to_string(i) + "][" +
                              point_label(inv[i].pair.a) + "=>" +
                              point_label(inv[i].pair.b) + "]";
    std::printf("[%s] %-58s residual=%.3e\n", ok ? "PASS" : "FAIL",
                label.c_str(), inv[i].residual);
    res_csv.push_back({label, format_g17(inv[i].residual),
                       format_g17(cfg.propagate.residual_gate), ok ? "1" : "0"});
    rows.push_back({{"label", label},
                    {"residual", inv[i].residual},
                    {"gate", cfg.propagate.residual_gate},
                    {"pass", ok}});
  }

  write_csv((std::filesystem::path(out_dir) / "propagator.csv").string(),
            {"label", "re", "im", "sys_err"}, prop_csv);
  write_csv((std::filesystem::path(out_dir) / "residuals.csv").string(),
            {"label", "residual", "gate", "pass"}, res_csv);
  const int exit_code = n_fail == 0 ? 0 : 1;
  std::printf("propagate: %d/%d gates passed\n", n_pass, n_pass + n_fail);
  json echo{{"params", params_json(cfg)},
            {"propagate",
             {{"standard_boosts", cfg.propagate.standard_boosts},
              {"residual_gate", cfg.propagate.residual_gate},
              {"identity_tol", cfg.propagate.identity_tol}}}};
  write_summary(out_dir, "propagate", echo, rows, n_pass, n_fail, 0.0,
                exit_code);
  return exit_code;
}

int run_wick(const RunConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const int n = cfg.wick.n;
  const PairingList pairings = wick_pairings(n, cfg.wick.max_n);
  std::vector<std::vector<std::string>> csv;
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    std::string text;
    for (const auto& [a, b] : pairings[i])
      text += "(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ")";
    std::printf("%s\n", text.c_str());
    csv.push_back({std::to_string(i), text});
  }
  const long long expected = n % 2 == 0 ? double_factorial_of_pred(n) : 0;
  if (n % 2 != 0) std::printf("odd N: no pairings (odd moments vanish)\n");
  const bool ok = static_cast<long long>(pairings.size()) == expected;
  std::printf("count %zu (expected (N-1)!! = %lld) %s\n", pairings.size(),
              expected, ok ? "[PASS]" : "[FAIL]");

  write_csv((std::filesystem::path(out_dir) / "wick.csv").string(),
            {"index", "pairing"}, csv);
  json rows = json::array();
  rows.push_back({{"label", "wick[N=" + std::to_string(n) + "]"},
                  {"count", pairings.size()},
                  {"expected", expected},
                  {"pass", ok}});
  const int exit_code = ok ? 0 : 1;
  json echo{{"wick", {{"n", n}, {"max_n", cfg.wick.max_n}}}};
  write_summary(out_dir, "wick", echo, rows, ok ? 1 : 0, ok ? 0 : 1, 0.0,
                exit_code);
  return exit_code;
}

}  // namespace gfn
