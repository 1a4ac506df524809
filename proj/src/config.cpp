#include "hysa/config.hpp"

#include <sstream>
#include <stdexcept>

namespace hysa {

void TargetBufferBands::validate() const {
  if (!(b_min0 < b_min1 && b_min1 < b_target0 && b_target0 < b_target1 && b_target1 < b_max0 &&
        b_max0 < b_max1))
    throw std::runtime_error(
        "target buffer bands must satisfy b_min0 < b_min1 < b_target0 < b_target1 < b_max0 < b_max1");
  if (b_min0 < 0) throw std::runtime_error("buffer thresholds must be non-negative");
}

void SchemeConfig::validate() const {
  weights.validate();
  bands.validate();
  ladder.validate();
  if (kama_l_min < 1) throw std::runtime_error("kama_l_min must be >= 1");
  if (kama_l_max <= kama_l_min) throw std::runtime_error("kama_l_max must exceed kama_l_min");
  if (kama_n1 < 1) throw std::runtime_error("kama_n1 must be >= 1");
  if (wma_window < 1) throw std::runtime_error("wma_window must be >= 1");
  if (skip_lambda <= 0) throw std::runtime_error("skip_lambda must be positive");
  if (beta <= 0) throw std::runtime_error("beta must be positive");
  if (stall_threshold() < 0) throw std::runtime_error("stall_threshold_s must be >= 0");
  if (frame_duration_s <= 0 || gop_duration_s <= 0)
    throw std::runtime_error("durations must be positive");
  if (lookahead_horizon < 1) throw std::runtime_error("lookahead_horizon must be >= 1");
  if (buffer_threshold_scale <= 0) throw std::runtime_error("buffer_threshold_scale must be positive");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw std::runtime_error("bad value for config key '" + key + "': '" + v + "'");
  }
}

int to_int(const std::string& v, const std::string& key) {
  double d = to_double(v, key);
  int i = static_cast<int>(d);
  if (i != d) throw std::runtime_error("config key '" + key + "' expects an integer");
  return i;
}

std::vector<double> to_list(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), key));
  return out;
}

} // namespace

SchemeConfig parse_config(std::istream& in) {
  SchemeConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "p_q") cfg.weights.p_q = to_double(value, key);
    else if (key == "p_r") cfg.weights.p_r = to_double(value, key);
    else if (key == "p_l") cfg.weights.p_l = to_double(value, key);
    else if (key == "p_s") cfg.weights.p_s = to_double(value, key);
    else if (key == "p_w") cfg.weights.p_w = to_double(value, key);
    else if (key == "p_d") cfg.weights.p_d = to_double(value, key);
    else if (key == "b_min0") cfg.bands.b_min0 = to_double(value, key);
    else if (key == "b_target0") cfg.bands.b_target0 = to_double(value, key);
    else if (key == "b_max0") cfg.bands.b_max0 = to_double(value, key);
    else if (key == "b_min1") cfg.bands.b_min1 = to_double(value, key);
    else if (key == "b_target1") cfg.bands.b_target1 = to_double(value, key);
    else if (key == "b_max1") cfg.bands.b_max1 = to_double(value, key);
    else if (key == "kama_l_max") cfg.kama_l_max = to_int(value, key);
    else if (key == "kama_l_min") cfg.kama_l_min = to_int(value, key);
    else if (key == "kama_n1") cfg.kama_n1 = to_int(value, key);
    else if (key == "wma_window") cfg.wma_window = to_int(value, key);
    else if (key == "beta") cfg.beta = to_double(value, key);
    else if (key == "stall_threshold_s") cfg.stall_threshold_s = to_double(value, key);
    else if (key == "skip_lambda") cfg.skip_lambda = to_double(value, key);
    else if (key == "frame_duration_s") cfg.frame_duration_s = to_double(value, key);
    else if (key == "gop_duration_s") cfg.gop_duration_s = to_double(value, key);
    else if (key == "ladder_kbps") {
      auto kbps = to_list(value, key);
      cfg.ladder.levels_bps.clear();
      for (double k : kbps) cfg.ladder.levels_bps.push_back(k * 1e3);
    } else if (key == "scheme") cfg.scheme = value;
    else if (key == "lookahead_horizon") cfg.lookahead_horizon = to_int(value, key);
    else if (key == "buffer_threshold_scale") cfg.buffer_threshold_scale = to_double(value, key);
    else throw std::runtime_error("unknown config key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

} // namespace hysa
