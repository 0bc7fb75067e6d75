// config.cpp

#include "gfn/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gfn {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(std::string_view origin, int line, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << msg;
  throw std::runtime_error(os.str());
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest(const std::string& key, const std::vector<std::string>& known) {
  std::string best;
  std::size_t best_d = std::string::npos;
  for (const std::string& k : known) {
    const std::size_t d = edit_distance(key, k);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

double parse_double(std::string_view origin, int line, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (trim(value.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  fail(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
}

long long parse_int(std::string_view origin, int line, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (trim(value.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  fail(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
}

std::uint64_t parse_u64(std::string_view origin, int line, const std::string& key,
                        const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (trim(value.substr(pos)).empty() && value.find('-') == std::string::npos)
      return v;
  } catch (const std::exception&) {
  }
  fail(origin, line, "key '" + key + "': expected an unsigned integer, got '" +
                         value + "'");
}

bool parse_bool(std::string_view origin, int line, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(origin, line, "key '" + key + "': expected true or false, got '" + value + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<double> parse_double_list(std::string_view origin, int line,
                                      const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split(value, ','))
    out.push_back(parse_double(origin, line, key, item));
  return out;
}

SpacetimePoint parse_point(std::string_view origin, int line,
                           const std::string& key, const std::string& value) {
  const std::vector<double> v = parse_double_list(origin, line, key, value);
  if (v.size() != 4)
    fail(origin, line, "key '" + key + "': a point is 'x,y,z,t' (4 numbers), got '" +
                           value + "'");
  return {{v[0], v[1], v[2]}, v[3]};
}

std::vector<SpacetimePoint> parse_point_list(std::string_view origin, int line,
                                             const std::string& key,
                                             const std::string& value) {
  std::vector<SpacetimePoint> out;
  for (const std::string& item : split(value, ';'))
    out.push_back(parse_point(origin, line, key, item));
  return out;
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"params", {"m", "hbar", "nu", "L", "lambda_cut", "max_modes"}},
      {"ensemble", {"n_trajectories", "grid_dt", "grid_len", "scheme"}},
      {"rng", {"master_seed"}},
      {"simulate", {"mode", "lags", "npoint", "gate"}},
      {"analytic", {"r_grid", "points", "tol"}},
      {"propagate",
       {"separation", "boost_pair", "standard_boosts", "residual_gate",
        "identity_tol"}},
      {"wick", {"n", "max_n"}},
  };
  return keys;
}

bool is_list_key(const std::string& section, const std::string& key) {
  return (section == "simulate" && key == "npoint") ||
         (section == "analytic" && key == "points") ||
         (section == "propagate" && (key == "separation" || key == "boost_pair"));
}

}  // namespace

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
  RunConfig cfg;
  std::string section = "params";
  std::set<std::string> seen;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        fail(origin, lineno, "malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (!known_keys().contains(section))
        fail(origin, lineno, "unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(origin, lineno, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "empty key");

    const std::vector<std::string>& known = known_keys().at(section);
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail(origin, lineno,
           "unknown key '" + key + "' in [" + section + "]; did you mean '" +
               nearest(key, known) + "'?");
    if (!is_list_key(section, key) && !seen.insert(section + "." + key).second)
      fail(origin, lineno, "duplicate key '" + key + "' in [" + section + "]");

    if (section == "params") {
      if (key == "m") cfg.params.m = parse_double(origin, lineno, key, value);
      else if (key == "hbar") cfg.params.hbar = parse_double(origin, lineno, key, value);
      else if (key == "nu") cfg.params.nu = parse_double(origin, lineno, key, value);
      else if (key == "L") cfg.params.L = parse_double(origin, lineno, key, value);
      else if (key == "lambda_cut")
        cfg.params.lambda_cut = parse_double(origin, lineno, key, value);
      else if (key == "max_modes") {
        const long long v = parse_int(origin, lineno, key, value);
        if (v < 1) fail(origin, lineno, "max_modes must be >= 1");
        cfg.max_modes = static_cast<std::size_t>(v);
      }
    } else if (section == "ensemble") {
      if (key == "n_trajectories")
        cfg.ensemble.n_trajectories =
            static_cast<int>(parse_int(origin, lineno, key, value));
      else if (key == "grid_dt")
        cfg.ensemble.grid_dt = parse_double(origin, lineno, key, value);
      else if (key == "grid_len")
        cfg.ensemble.grid_len =
            static_cast<int>(parse_int(origin, lineno, key, value));
      else if (key == "scheme") {
        if (value == "exact") cfg.ensemble.scheme = Scheme::kExact;
        else if (value == "euler") cfg.ensemble.scheme = Scheme::kEulerMaruyama;
        else fail(origin, lineno, "scheme must be 'exact' or 'euler'");
      }
    } else if (section == "rng") {
      cfg.policy.master_seed = parse_u64(origin, lineno, key, value);
    } else if (section == "simulate") {
      if (key == "mode") {
        const std::vector<double> v = parse_double_list(origin, lineno, key, value);
        if (v.size() != 3)
          fail(origin, lineno, "mode is 'n1,n2,n3' (3 integers)");
        for (double c : v)
          if (c != std::floor(c))
            fail(origin, lineno, "mode components must be integers");
        cfg.simulate.mode = ModeIndex{{static_cast<int>(v[0]),
                                       static_cast<int>(v[1]),
                                       static_cast<int>(v[2])}};
      } else if (key == "lags") {
        cfg.simulate.lags = parse_double_list(origin, lineno, key, value);
      } else if (key == "npoint") {
        cfg.simulate.npoint_sets.push_back(
            parse_point_list(origin, lineno, key, value));
      } else if (key == "gate") {
        cfg.simulate.gate = parse_double(origin, lineno, key, value);
        if (!(cfg.simulate.gate > 0.0)) fail(origin, lineno, "gate must be > 0");
      }
    } else if (section == "analytic") {
      if (key == "r_grid")
        cfg.analytic.r_grid = parse_double_list(origin, lineno, key, value);
      else if (key == "points")
        cfg.analytic.point_sets.push_back(
            parse_point_list(origin, lineno, key, value));
      else if (key == "tol") {
        cfg.analytic.tol = parse_double(origin, lineno, key, value);
        if (!(cfg.analytic.tol > 0.0)) fail(origin, lineno, "tol must be > 0");
      }
    } else if (section == "propagate") {
      if (key == "separation") {
        cfg.propagate.separations.push_back(parse_point(origin, lineno, key, value));
      } else if (key == "boost_pair") {
        const std::vector<SpacetimePoint> pts =
            parse_point_list(origin, lineno, key, value);
        if (pts.size() != 2)
          fail(origin, lineno, "boost_pair is 'x,y,z,t ; x,y,z,t' (2 points)");
        cfg.propagate.boost_pairs.push_back({pts[0], pts[1]});
      } else if (key == "standard_boosts") {
        cfg.propagate.standard_boosts = parse_bool(origin, lineno, key, value);
      } else if (key == "residual_gate") {
        cfg.propagate.residual_gate = parse_double(origin, lineno, key, value);
        if (!(cfg.propagate.residual_gate > 0.0))
          fail(origin, lineno, "residual_gate must be > 0");
      } else if (key == "identity_tol") {
        cfg.propagate.identity_tol = parse_double(origin, lineno, key, value);
        if (!(cfg.propagate.identity_tol > 0.0))
          fail(origin, lineno, "identity_tol must be > 0");
      }
    } else if (section == "wick") {
      const long long v = parse_int(origin, lineno, key, value);
      if (v < 0) fail(origin, lineno, "'" + key + "' must be >= 0");
      if (key == "n") cfg.wick.n = static_cast<int>(v);
      else cfg.wick.max_n = static_cast<int>(v);
    }
  }

  // defaults that need construction
  if (cfg.simulate.npoint_sets.empty())
    for (double t : {0.0, 0.5, 1.0})
      cfg.simulate.npoint_sets.push_back(
          {SpacetimePoint{{1.0, 0.0, 0.0}, t}, SpacetimePoint{}});
  if (cfg.propagate.separations.empty())
    cfg.propagate.separations = {SpacetimePoint{{0.5, 0.0, 0.0}, 0.0},
                                 SpacetimePoint{{1.0, 0.0, 0.0}, 0.0},
                                 SpacetimePoint{{2.0, 0.0, 0.0}, 0.0},
                                 SpacetimePoint{{0.0, 0.0, 0.0}, 1.0}};

  // cross-field validation before anything runs
  try {
    cfg.params.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string(origin) + ": " + e.what());
  }
  const auto check = [&](bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(std::string(origin) + ": " + msg);
  };
  check(cfg.ensemble.n_trajectories >= kMinTrajectories,
        "n_trajectories must be >= " + std::to_string(kMinTrajectories) +
            " (trajectory batching needs degrees of freedom)");
  check(cfg.ensemble.grid_dt > 0.0, "grid_dt must be > 0");
  check(cfg.ensemble.grid_len >= 2, "grid_len must be >= 2");
  for (double r : cfg.analytic.r_grid) check(r > 0.0, "r_grid entries must be > 0");
  for (double lag : cfg.simulate.lags)
    check(std::abs(lag) < cfg.ensemble.grid_dt * cfg.ensemble.grid_len,
          "lag exceeds the simulated time span");
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace gfn
