#include "report/run_config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace grunwald {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config: '" + key + "' needs a number, got '" +
                               value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config: '" + key + "' needs an integer, got '" +
                               value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on") return true;
  if (value == "0" || value == "false" || value == "off") return false;
  throw InvalidArgumentError("config: '" + key + "' needs 0/1, got '" + value +
                             "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::validate() const {
  if (!(grid_step > 0.0) || grid_step > 0.5) {
    throw InvalidArgumentError("config: grid_step must be in (0, 0.5]");
  }
  if (!(quad_tol > 0.0)) {
    throw InvalidArgumentError("config: quad_tol must be positive");
  }
  if (l_trunc < -1) {
    throw InvalidArgumentError("config: l_trunc must be >= 0, or -1 for auto");
  }
  if (!(convention.forward_scale > 0.0) ||
      !(convention.inverse_scale > 0.0)) {
    throw InvalidArgumentError("config: scales must be positive");
  }
  if (threads < 0) {
    throw InvalidArgumentError("config: threads must be >= 0");
  }
  if (out_dir.empty()) {
    throw InvalidArgumentError("config: out_dir must be nonempty");
  }
}

std::string phase_mode_name(PhaseMode mode) {
  return mode == PhaseMode::kAlternating ? "alternating" : "exact";
}

PhaseMode parse_phase_mode(const std::string& name) {
  if (name == "alternating") return PhaseMode::kAlternating;
  if (name == "exact") return PhaseMode::kExact;
  throw InvalidArgumentError(
      "config: phase_mode must be 'alternating' or 'exact', got '" + name +
      "'");
}

void apply_config_entry(RunConfig* cfg, const std::string& key,
                        const std::string& value) {
  if (key == "grid_step") cfg->grid_step = parse_double(key, value);
  else if (key == "quad_tol") cfg->quad_tol = parse_double(key, value);
  else if (key == "l_trunc") cfg->l_trunc = parse_int(key, value);
  else if (key == "phase_mode") cfg->phase_mode = parse_phase_mode(value);
  else if (key == "forward_scale")
    cfg->convention.forward_scale = parse_double(key, value);
  else if (key == "inverse_scale")
    cfg->convention.inverse_scale = parse_double(key, value);
  else if (key == "out_dir") cfg->out_dir = value;
  else if (key == "svg") cfg->emit_svg = parse_bool(key, value);
  else if (key == "threads") cfg->threads = parse_int(key, value);
  else
    throw InvalidArgumentError("config: unknown key '" + key + "'");
}

void apply_config_file(RunConfig* cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw InvalidArgumentError("config: cannot open file '" + path + "'");
  }
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("config: '" + path + "' line " +
                                 std::to_string(lineno) +
                                 ": expected key=value");
    }
    apply_config_entry(cfg, trim(line.substr(0, eq)),
                       trim(line.substr(eq + 1)));
  }
}

void apply_environment(RunConfig* cfg) {
  static constexpr const char* keys[] = {
      "grid_step", "quad_tol", "l_trunc",  "phase_mode", "forward_scale",
      "inverse_scale", "out_dir", "svg", "threads"};
  for (const char* key : keys) {
    std::string env_name = "GRUNWALD_";
    for (const char* p = key; *p; ++p) {
      env_name += static_cast<char>(std::toupper(*p));
    }
    if (const char* value = std::getenv(env_name.c_str())) {
      apply_config_entry(cfg, key, value);
    }
  }
}

}  // namespace grunwald
