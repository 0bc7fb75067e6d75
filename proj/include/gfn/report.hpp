// report.hpp
//
// Comparison rows (Monte Carlo vs analytic with z-score gates), fixed-column
// CSV serialization at 17 significant digits, and the JSON run summary.

#pragma once

#include <string>
#include <vector>

namespace gfn {

struct ReportRow {
  std::string label;
  double mc_mean = 0.0;
  double mc_std_err = 0.0;
  double analytic = 0.0;
  double z = 0.0;
  bool pass = false;
};

struct ComparisonReport {
  std::vector<ReportRow> rows;

  int n_pass() const;
  int n_fail() const;
  double worst_z() const;
  bool all_pass() const { return n_fail() == 0; }
};

// z = (mean - analytic)/std_err; an exact match with zero error is z = 0
ReportRow make_row(const std::string& label, double mean, double std_err,
                   double analytic, double gate);

// 17 significant digits, enough to round-trip any double exactly
std::string format_g17(double v);

void write_comparison_csv(const std::string& path, const ComparisonReport& report);

// generic fixed-header tabular CSV; every cell already serialized
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace gfn
