#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace sheetcrystal::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_real(const std::string& text, const std::string& field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("field '" + field + "': '" + text + "' is not a finite number");
  }
  return v;
}

int to_int(const std::string& text, const std::string& field) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("field '" + field + "': '" + text + "' is not an integer");
  }
  return v;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text,
                                                   const std::string& field) {
  std::vector<std::pair<double, double>> out;
  for (const std::string& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) {
      throw ConfigError("field '" + field + "': expected position:value, got '" + item + "'");
    }
    out.emplace_back(to_real(parts[0], field), to_real(parts[1], field));
  }
  return out;
}

std::map<std::string, std::string> parse_lines(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("field '" + key + "' given twice");
    kv[key] = value;
  }
  return kv;
}

} // namespace

std::pair<double, double> parse_window(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ConfigError("field 'window': expected lo,hi");
  return {to_real(parts[0], "window"), to_real(parts[1], "window")};
}

std::vector<int> parse_int_list(std::string_view text) {
  const std::string t = trim(text);
  if (const auto colon = t.find(':'); colon != std::string::npos) {
    const int lo = to_int(trim(std::string_view(t).substr(0, colon)), "range");
    const int hi = to_int(trim(std::string_view(t).substr(colon + 1)), "range");
    if (hi < lo) throw ConfigError("range '" + t + "' is empty");
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  std::vector<int> out;
  for (const std::string& item : split(t, ',')) out.push_back(to_int(item, "list"));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) out.push_back(to_real(item, "list"));
  return out;
}

void ScenarioConfig::validate() const {
  auto seen = [&](const char* key) {
    return std::find(keys_seen.begin(), keys_seen.end(), key) != keys_seen.end();
  };
  const std::vector<const char*> canonical_keys{"N", "alpha", "a"};
  const std::vector<const char*> sheet_keys{"sheets"};
  const std::vector<const char*> quantum_keys{"deltas", "offsets"};
  auto forbid = [&](const std::vector<const char*>& keys, const char* mode_name) {
    for (const char* k : keys) {
      if (seen(k)) {
        throw ConfigError(std::string("field '") + k + "' is not allowed in " + mode_name +
                          " mode");
      }
    }
  };
  switch (mode) {
  case Mode::canonical:
    forbid(sheet_keys, "canonical");
    forbid(quantum_keys, "canonical");
    if (N < 0) throw ConfigError("field 'N' must be >= 0");
    if (!(alpha > 0.0)) throw ConfigError("field 'alpha' must be > 0");
    if (!(a > 0.0)) throw ConfigError("field 'a' must be > 0");
    break;
  case Mode::sheets:
    forbid(canonical_keys, "sheets");
    forbid(quantum_keys, "sheets");
    if (sheets.empty()) throw ConfigError("field 'sheets' is required in sheets mode");
    break;
  case Mode::quantum:
    forbid(canonical_keys, "quantum");
    forbid(sheet_keys, "quantum");
    if (positions.empty()) throw ConfigError("field 'deltas' is required in quantum mode");
    if (!offsets.empty() && offsets.size() != positions.size() + 1) {
      throw ConfigError("field 'offsets' needs one value per region (deltas + 1)");
    }
    break;
  }
  if (points < 2) throw ConfigError("field 'points' must be >= 2");
  if (window && !(window->first < window->second)) {
    throw ConfigError("field 'window' must satisfy lo < hi");
  }
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  for (const auto& [key, value] : parse_lines(text)) {
    cfg.keys_seen.push_back(key);
    if (key == "mode") {
      if (value == "canonical") cfg.mode = Mode::canonical;
      else if (value == "sheets") cfg.mode = Mode::sheets;
      else if (value == "quantum") cfg.mode = Mode::quantum;
      else throw ConfigError("field 'mode': expected canonical, sheets or quantum");
    } else if (key == "N") {
      cfg.N = to_int(value, key);
    } else if (key == "alpha") {
      cfg.alpha = to_real(value, key);
    } else if (key == "a") {
      cfg.a = to_real(value, key);
    } else if (key == "sheets") {
      for (const auto& [z, s] : parse_pairs(value, key)) cfg.sheets.push_back({z, s});
    } else if (key == "deltas") {
      for (const auto& [z, g] : parse_pairs(value, key)) {
        cfg.positions.push_back(z);
        cfg.strengths.push_back(g);
      }
    } else if (key == "offsets") {
      for (const std::string& item : split(value, ',')) cfg.offsets.push_back(to_real(item, key));
    } else if (key == "units") {
      cfg.units = value;
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "window") {
      cfg.window = parse_window(value);
    } else if (key == "points") {
      cfg.points = to_int(value, key);
    } else {
      throw ConfigError("unknown field '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

UnitSystem parse_units(std::string_view text) {
  std::map<std::string, double> values;
  for (const auto& [key, value] : parse_lines(text)) {
    if (key != "hbar" && key != "mass" && key != "eps0" && key != "V0" && key != "a0") {
      throw ConfigError("unknown unit field '" + key + "'");
    }
    values[key] = to_real(value, key);
  }
  for (const char* k : {"hbar", "mass", "eps0", "a0"}) {
    if (!values.count(k)) throw ConfigError(std::string("unit field '") + k + "' is required");
  }
  try {
    if (values.count("V0")) {
      return UnitSystem(values["hbar"], values["mass"], values["eps0"], values["V0"],
                        values["a0"]);
    }
    return UnitSystem::with_derived_V0(values["hbar"], values["mass"], values["eps0"],
                                       values["a0"]);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("units: ") + e.what());
  }
}

UnitSystem units_preset(const std::string& name) {
  if (name == "atomic") return UnitSystem::atomic();
  throw ConfigError("field 'units': unknown preset '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace sheetcrystal::cli
