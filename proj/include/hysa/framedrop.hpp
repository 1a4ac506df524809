#ifndef HYSA_FRAMEDROP_HPP
#define HYSA_FRAMEDROP_HPP

#include "hysa/qoe.hpp"

namespace hysa {

struct SkipPolicy {
  double latency_limit_s = 0;
};

// Break-even latency above which skipping frames pays off:
//   (p_q * V_kbps + p_s) * d_f / (p_d * lambda)
// V is taken in bits/second and scored in kbps, matching the QoE scorer.
double compute_skip_threshold(double coding_bitrate_bps, double frame_duration_s,
                              const QoeWeights& weights, double lambda);

bool should_skip(double current_latency_s, const SkipPolicy& policy);

} // namespace hysa

#endif
