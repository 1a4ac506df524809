#ifndef HYSA_LOG_HPP
#define HYSA_LOG_HPP

#include <string>
#include <utility>
#include <vector>

namespace hysa {

// One row per frame. Skipped frames carry level -1, the skip time in both
// dl_start/dl_end, and zero latency/rebuffer.
struct FrameLogRecord {
  long frame = 0;
  int level = 0;
  double dl_start_s = 0;
  double dl_end_s = 0;
  double buffer_s = 0;  // buffer right after the download completed
  double latency_s = 0; // live-edge gap at the moment the frame started playing
  double rebuf_s = 0;   // stall time charged to this frame
  bool skipped = false;
};

// One row per controller decision; `segment` is the GOP the decision applies to.
struct SegmentLogRecord {
  long segment = 0;
  int quality = 0;
  int target_buffer = 0;
  double latency_limit_s = 0;
  double pred_bitrate_bps = 0;
  double est_download_s = 0;
  double est_latency_s = 0;
};

struct SimulationLog {
  double frame_duration_s = 0;
  std::vector<double> ladder_bps;
  std::vector<FrameLogRecord> frames;
  std::vector<SegmentLogRecord> segments;
  // (predicted, actual) bitrate per downloaded segment, decision order
  std::vector<std::pair<double, double>> predictions;

  // run totals
  double played_s = 0;
  double skipped_s = 0;
  double downloaded_s = 0; // video duration actually fetched
  double final_buffer_s = 0;
  double wall_time_s = 0;
  double total_rebuf_s = 0;
  long stall_events = 0;
  long skip_events = 0;

  std::string frames_csv() const;
  std::string segments_csv() const;
};

} // namespace hysa

#endif
