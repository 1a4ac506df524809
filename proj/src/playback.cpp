#include "hysa/playback.hpp"

#include <stdexcept>

namespace hysa {

PlaybackDecision decide_playback(const TargetBufferBands& bands, double buffer_s) {
  if (buffer_s < 0) throw std::invalid_argument("buffer occupancy must be >= 0");
  PlaybackDecision d;
  d.target_buffer = (buffer_s >= bands.b_min0 && buffer_s < bands.b_max0) ? 1 : 0;
  if (buffer_s < bands.b_min1)
    d.gamma = 0.95;
  else if (buffer_s < bands.b_max0)
    d.gamma = 1.0;
  else
    d.gamma = 1.05;
  d.resume_threshold_s = d.target_buffer == 1 ? bands.b_target1 : bands.b_target0;
  return d;
}

double playback_rate_during_segment(const PlaybackDecision& decision, bool buffer_nonempty) {
  return buffer_nonempty ? decision.gamma : 0.0;
}

} // namespace hysa
