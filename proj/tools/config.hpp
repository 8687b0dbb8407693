#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sheetcrystal/electrostatics.hpp"
#include "sheetcrystal/units.hpp"

namespace sheetcrystal::cli {

/// Bad user input; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Mode { canonical, sheets, quantum };

struct ScenarioConfig {
  Mode mode = Mode::canonical;
  // canonical
  int N = 0;
  double alpha = 1.0;
  double a = 1.0;
  // sheets
  std::vector<Sheet> sheets;
  // quantum
  std::vector<double> positions;
  std::vector<double> strengths;
  std::vector<double> offsets;

  std::string units = "atomic";
  std::optional<std::string> out;
  std::optional<std::pair<double, double>> window;
  int points = 2001;

  /// Throws ConfigError unless exactly the fields of the selected mode are
  /// populated, points >= 2 and the window is ordered.
  void validate() const;

  // Which keys were present, for the one-mode rule.
  std::vector<std::string> keys_seen;
};

/// Flat `key = value` lines; `#` starts a comment. Keys: mode, N, alpha, a,
/// sheets (z:sigma list), deltas (z:g list), offsets, units, out, window
/// (lo,hi), points. Unknown keys are rejected.
ScenarioConfig parse_config(std::string_view text);

/// Keys hbar, mass, eps0, a0 and optionally V0 (derived when absent).
UnitSystem parse_units(std::string_view text);

UnitSystem units_preset(const std::string& name);

std::pair<double, double> parse_window(std::string_view text);

/// "0:4" (inclusive) or "0,2,5".
std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

std::string read_file(const std::string& path);

} // namespace sheetcrystal::cli
