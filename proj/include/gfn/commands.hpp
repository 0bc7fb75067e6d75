// commands.hpp
//
// Command entry points shared by the CLI and the tests: each runs one
// subcommand against a parsed config, writes CSV artifacts plus a JSON
// summary into out_dir, prints a human-readable report, and returns the
// process exit code (0 iff every gate passed).

#pragma once

#include <string>

#include "gfn/config.hpp"

namespace gfn {

std::string version_string();

int run_simulate(const RunConfig& cfg, const std::string& out_dir);
int run_analytic(const RunConfig& cfg, const std::string& out_dir);
int run_propagate(const RunConfig& cfg, const std::string& out_dir);
int run_wick(const RunConfig& cfg, const std::string& out_dir);

}  // namespace gfn
