#include "hysa/framedrop.hpp"

#include <stdexcept>

namespace hysa {

double compute_skip_threshold(double coding_bitrate_bps, double frame_duration_s,
                              const QoeWeights& weights, double lambda) {
  if (frame_duration_s <= 0) throw std::invalid_argument("frame duration must be positive");
  double divisor = weights.p_d * lambda;
  if (divisor <= 0) throw std::runtime_error("skip disabled divisor: p_d * lambda must be positive");
  return (weights.p_q * coding_bitrate_bps * 1e-3 + weights.p_s) * frame_duration_s / divisor;
}

bool should_skip(double current_latency_s, const SkipPolicy& policy) {
  return current_latency_s > policy.latency_limit_s;
}

} // namespace hysa
