#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fracaim/harness.hpp"

namespace fracaim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + message);
}

double parse_double(const std::string& value, std::size_t line_no, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    parse_fail(line_no, "key '" + key + "' expects a number, got '" + value + "'");
  }
}

std::size_t parse_count(const std::string& value, std::size_t line_no,
                        const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size() || v < 1) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    parse_fail(line_no, "key '" + key + "' expects a positive integer, got '" + value + "'");
  }
}

Waveform::Shape parse_shape(const std::string& value, std::size_t line_no,
                            const std::string& key) {
  if (value == "constant") return Waveform::Shape::kConstant;
  if (value == "sine") return Waveform::Shape::kSine;
  if (value == "cosine") return Waveform::Shape::kCosine;
  parse_fail(line_no, "key '" + key + "' expects constant|sine|cosine, got '" + value + "'");
}

// Section each key belongs to; keys may also appear before any section header.
const std::map<std::string, std::string>& key_sections() {
  static const std::map<std::string, std::string> sections = {
      {"scenario", "scenario"},          {"alpha_override", "scenario"},
      {"euler_step", "numerics"},        {"h", "numerics"},
      {"delta", "numerics"},             {"p_grid_points", "controls"},
      {"q_grid_points", "controls"},     {"v_shape", "controls"},
      {"v_amplitude", "controls"},       {"v_frequency", "controls"},
      {"v_offset", "controls"},          {"u_tilde_shape", "controls"},
      {"u_tilde_amplitude", "controls"}, {"u_tilde_frequency", "controls"},
      {"u_tilde_offset", "controls"},    {"out_dir", "output"},
  };
  return sections;
}

Waveform& ensure_wave(std::optional<Waveform>& slot) {
  if (!slot) slot = Waveform{Waveform::Shape::kConstant, 1.0, 1.0, 0.0};
  return *slot;
}

bool multiple_of(double value, double base) {
  if (!(value > 0.0) || !(base > 0.0)) return false;
  const double ratio = value / base;
  return std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio) &&
         std::llround(ratio) >= 1;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "numerics" && section != "controls" &&
          section != "output")
        parse_fail(line_no, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(line_no, "empty key");
    if (value.empty()) parse_fail(line_no, "key '" + key + "' has no value");

    const auto it = key_sections().find(key);
    if (it == key_sections().end()) parse_fail(line_no, "unknown key '" + key + "'");
    if (!section.empty() && section != it->second)
      parse_fail(line_no, "key '" + key + "' belongs in section [" + it->second + "]");

    if (key == "scenario") {
      config.scenario = value;
    } else if (key == "alpha_override") {
      config.alpha_override = parse_double(value, line_no, key);
    } else if (key == "euler_step") {
      config.euler_step = parse_double(value, line_no, key);
    } else if (key == "h") {
      config.h_values.push_back(parse_double(value, line_no, key));
    } else if (key == "delta") {
      config.deltas.push_back(parse_double(value, line_no, key));
    } else if (key == "p_grid_points") {
      config.p_grid_points = parse_count(value, line_no, key);
    } else if (key == "q_grid_points") {
      config.q_grid_points = parse_count(value, line_no, key);
    } else if (key == "v_shape") {
      ensure_wave(config.v_wave).shape = parse_shape(value, line_no, key);
    } else if (key == "v_amplitude") {
      ensure_wave(config.v_wave).amplitude = parse_double(value, line_no, key);
    } else if (key == "v_frequency") {
      ensure_wave(config.v_wave).frequency = parse_double(value, line_no, key);
    } else if (key == "v_offset") {
      ensure_wave(config.v_wave).offset = parse_double(value, line_no, key);
    } else if (key == "u_tilde_shape") {
      ensure_wave(config.u_tilde_wave).shape = parse_shape(value, line_no, key);
    } else if (key == "u_tilde_amplitude") {
      ensure_wave(config.u_tilde_wave).amplitude = parse_double(value, line_no, key);
    } else if (key == "u_tilde_frequency") {
      ensure_wave(config.u_tilde_wave).frequency = parse_double(value, line_no, key);
    } else if (key == "u_tilde_offset") {
      ensure_wave(config.u_tilde_wave).offset = parse_double(value, line_no, key);
    } else if (key == "out_dir") {
      config.out_dir = value;
    }
  }

  validate_config(config);
  return config;
}

void validate_config(const RunConfig& config) {
  if (config.scenario.empty())
    throw std::invalid_argument("config: key 'scenario' is required");
  find_scenario(config.scenario);  // throws for unknown names
  if (!(config.euler_step > 0.0))
    throw std::invalid_argument("config: key 'euler_step' must be positive");
  if (config.alpha_override &&
      (!(*config.alpha_override > 0.0) || !(*config.alpha_override < 1.0)))
    throw std::invalid_argument("config: key 'alpha_override' must lie in (0,1)");
  for (double h : config.h_values)
    if (!multiple_of(h, config.euler_step))
      throw std::invalid_argument(
          "config: key 'h' must be an integer multiple of euler_step");
  for (double delta : config.deltas)
    if (!multiple_of(delta, config.euler_step))
      throw std::invalid_argument(
          "config: key 'delta' must be an integer multiple of euler_step");
}

}  // namespace fracaim
