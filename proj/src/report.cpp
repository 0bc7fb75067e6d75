// report.cpp

#include "gfn/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gfn {

int ComparisonReport::n_pass() const {
  int n = 0;
  for (const ReportRow& r : rows) n += r.pass ? 1 : 0;
  return n;
}

int ComparisonReport::n_fail() const {
  return static_cast<int>(rows.size()) - n_pass();
}

double ComparisonReport::worst_z() const {
  double worst = 0.0;
  for (const ReportRow& r : rows)
    if (std::abs(r.z) > std::abs(worst)) worst = r.z;
  return worst;
}

ReportRow make_row(const std::string& label, double mean, double std_err,
                   double analytic, double gate) {
  ReportRow row;
  row.label = label;
  row.mc_mean = mean;
  row.mc_std_err = std_err;
  row.analytic = analytic;
  if (std_err > 0.0) {
    row.z = (mean - analytic) / std_err;
  } else {
    row.z = mean == analytic ? 0.0
                             : std::copysign(INFINITY, mean - analytic);
  }
  row.pass = std::abs(row.z) <= gate;
  return row;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const std::vector<std::string>& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

void write_comparison_csv(const std::string& path, const ComparisonReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.rows.size());
  for (const ReportRow& r : report.rows)
    rows.push_back({r.label, format_g17(r.mc_mean), format_g17(r.mc_std_err),
                    format_g17(r.analytic), format_g17(r.z), r.pass ? "1" : "0"});
  write_csv(path, {"label", "value", "std_err", "analytic", "z", "pass"}, rows);
}

}  // namespace gfn
