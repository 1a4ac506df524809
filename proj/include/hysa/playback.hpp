#ifndef HYSA_PLAYBACK_HPP
#define HYSA_PLAYBACK_HPP

#include "hysa/config.hpp"

namespace hysa {

struct PlaybackDecision {
  int target_buffer = 0;          // which tuple the next segment uses
  double gamma = 1.0;             // playback rate: 0.95, 1.0 or 1.05
  double resume_threshold_s = 0;  // B_target of the chosen tuple
};

// Buffer-driven target-buffer and playback-rate choice:
//   target_buffer = 1 iff B in [b_min0, b_max0)
//   gamma = 0.95 on [0, b_min1), 1.0 on [b_min1, b_max0), 1.05 above
PlaybackDecision decide_playback(const TargetBufferBands& bands, double buffer_s);

// Rate actually applied while a segment downloads: gamma while the buffer
// holds video, 0 once it drains.
double playback_rate_during_segment(const PlaybackDecision& decision, bool buffer_nonempty);

} // namespace hysa

#endif
