#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "npspec/profile.hpp"

namespace npspec {

struct Preset {
  std::string name;
  DilationGraph graph = DilationGraph::one_sided(PeriodicProfile::flat(0.5));
  double c = 0.0;
  int N = 0;
  int m = 0;
  int M = 0;
  // numerical-range parameters
  int p = 10;
  int n = 100;
  double t = 0.0;
  int numrange_N = 0;
  int numrange_M = 0;
  std::vector<int> schedule;
  bool heavy = false;  // subsampled in t unless --full
};

// example1, example2 (alias cone), example3, example4, flat.
Preset make_preset(const std::string& name, std::optional<double> alpha = std::nullopt,
                   std::optional<double> mu = std::nullopt);

struct RunConfig {
  std::string command;
  std::vector<std::string> presets;
  std::string profile_file;
  std::optional<double> alpha, mu, c, t;
  std::optional<int> N, m, M, p, n, stride;
  double rho0 = 0.5;
  std::vector<int> schedule;
  std::string output;
  std::string format;
  int threads = 1;
  bool full = false;
  bool keep_phase = false;
  bool certify = false;
};

// Exit status: 0 success or CERTIFIED, 2 INCONCLUSIVE, 1 error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace npspec
