#pragma once

#include <optional>
#include <string>
#include <utility>

#include "jcsim/dynamics.hpp"

namespace jcsim {

struct GridConfig {
  int n = 100;
  std::optional<double> center;  // default: the pulse carrier
  std::optional<double> span;    // absolute half-width; overrides span_in_gamma0
  double span_in_gamma0 = 25.0;
};

struct AnalysisConfig {
  std::optional<double> gamma_reg;  // default: pulse gamma0
  int n_modes = 5;
  std::optional<std::pair<double, double>> omega0_scan;  // carrier sweep for spectrum
  int scan_points = 25;
};

struct RunConfig {
  SystemParams system;
  PulseSpec pulse;
  GridConfig gridc;
  EvolveOptions run;
  AnalysisConfig analysis;
  std::string omega0_raw = "0";  // as written in the config (number or "E1+"/"E1-")

  FrequencyGrid grid() const;
  double gamma_reg() const { return analysis.gamma_reg.value_or(pulse.gamma0); }
};

// Strict parse: unknown keys are configuration errors naming the key.
// Accepts both flat keys (g, gamma0, omega0, ...) and nested sections
// (system/pulse/grid/run/analysis).
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Canonical single-line JSON of the fully resolved configuration.
std::string resolved_json(const RunConfig& cfg);

}  // namespace jcsim
