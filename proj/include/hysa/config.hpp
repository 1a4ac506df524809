#ifndef HYSA_CONFIG_HPP
#define HYSA_CONFIG_HPP

#include <istream>
#include <optional>
#include <string>

#include "hysa/qoe.hpp"
#include "hysa/trace.hpp"

namespace hysa {

// The two selectable target-buffer tuples [B_min, B_target, B_max], seconds.
struct TargetBufferBands {
  double b_min0 = 0.5;
  double b_target0 = 1.5;
  double b_max0 = 2.5;
  double b_min1 = 1.0;
  double b_target1 = 2.0;
  double b_max1 = 3.5;

  void validate() const;
};

struct SchemeConfig {
  QoeWeights weights;
  TargetBufferBands bands;

  // KAMA / throughput estimation
  int kama_l_max = 30;
  int kama_l_min = 2;
  int kama_n1 = 10;
  int wma_window = 5;

  // bitrate control
  double beta = 1.0;
  std::optional<double> stall_threshold_s; // defaults to bands.b_min0

  // frame dropping
  double skip_lambda = 1.5;

  // content geometry
  double frame_duration_s = 0.04;
  double gop_duration_s = 1.0;
  BitrateLadder ladder{{500e3, 850e3, 1200e3, 1850e3}};

  // scheme selection
  std::string scheme = "HYSA";
  int lookahead_horizon = 5;
  double buffer_threshold_scale = 1.5;

  double stall_threshold() const { return stall_threshold_s.value_or(bands.b_min0); }
  void validate() const;
};

// `key = value` lines; '#' starts a comment; unknown keys are an error.
// An empty stream yields the defaults.
SchemeConfig parse_config(std::istream& in);

} // namespace hysa

#endif
