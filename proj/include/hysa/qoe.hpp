#ifndef HYSA_QOE_HPP
#define HYSA_QOE_HPP

#include "hysa/log.hpp"

namespace hysa {

// Weights of the five-term QoE model. The quality and switch terms score
// bitrates in kbps (conversion from bits/second happens inside the scorer);
// all time quantities are seconds. p_d weighs latency in the frame-dropping
// trade-off and is kept distinct from p_l.
struct QoeWeights {
  double p_q = 1.0;
  double p_r = 1.5;
  double p_l = 0.005;
  double p_s = 1.0;
  double p_w = 0.02;
  double p_d = 0.005;

  void validate() const;
};

// Observed quantities for one frame. Bitrates in bits/second.
struct FrameOutcome {
  double coding_bitrate_bps = 0;
  double rebuffer_s = 0;
  double latency_s = 0;
  double skipped_s = 0;
  double prev_coding_bitrate_bps = 0;
};

struct QoeBreakdown {
  double quality = 0;
  double rebuf = 0;
  double latency = 0;
  double skip = 0;
  double switching = 0;

  double overall() const { return quality + rebuf + latency + skip + switching; }
  QoeBreakdown& operator+=(const QoeBreakdown& o);
};

QoeBreakdown score_frame(const QoeWeights& w, const FrameOutcome& o, double frame_duration_s);

// Sums score_frame over every played or skipped frame of the run. Skipped
// frames contribute a skip penalty of one frame duration and nothing else;
// the switch term compares consecutive *played* frames.
QoeBreakdown score_run(const QoeWeights& w, const SimulationLog& log);

} // namespace hysa

#endif
