#ifndef HYSA_SIMULATOR_HPP
#define HYSA_SIMULATOR_HPP

#include <deque>
#include <optional>

#include "hysa/config.hpp"
#include "hysa/log.hpp"
#include "hysa/trace.hpp"

namespace hysa {

// What the controller sees after a complete GOP download.
struct Observation {
  long segment = 0;
  int level = 0;
  double actual_bitrate_bps = 0;      // R of the segment just downloaded
  double measured_throughput_bps = 0; // segment bits / active transfer time
  double buffer_s = 0;
  double latency_s = 0;               // live-edge gap at decision time
  long n_nst = 0;                     // newest frame at the CDN
  long n_dld = 0;                     // most recently downloaded frame
  double download_time_s = 0;         // active transfer time of the segment
};

struct ControllerDecision {
  int quality = 0;
  int target_buffer = 0;
  double latency_limit_s = 0;
  // diagnostics carried into the per-segment log
  double pred_bitrate_bps = 0;
  double est_download_s = 0;
  double est_latency_s = 0;
};

class Controller {
 public:
  virtual ~Controller() = default;
  // nullopt before the first segment
  virtual ControllerDecision decide(const std::optional<Observation>& obs) = 0;
};

// Client/player state during a run. The buffer is the queue of downloaded,
// not-yet-played frames; occupancy derives from it so media cannot drift.
struct PlayerState {
  const VideoTrace* video = nullptr;
  double t = 0; // wall clock
  bool started = false;
  bool stalled = false;
  double gamma = 1.0;
  double resume_threshold_s = 0; // also gates startup
  int quality = 0;
  double latency_limit_s = 0;
  long next_download = 0;
  std::deque<long> play_queue;
  double frame_progress_s = 0; // played portion of the queue front
  bool front_started = false;
  double pending_rebuf_s = 0; // stall time awaiting attribution to a frame
  double played_s = 0;
  double skipped_s = 0;
  double downloaded_s = 0;
  double total_rebuf_s = 0;

  double buffer_s() const;
  // media-timeline position of the playhead, seconds
  double playhead_media_s() const;
};

// Index of the newest frame available at the CDN at wall time t, -1 if none.
long live_edge_frame(const VideoTrace& video, double t);

// Live-edge gap: media generated at the CDN minus the playhead position.
double current_latency(const PlayerState& state);

// Advances the wall clock by `elapsed`, consuming buffer at rate gamma while
// playing. Stall time accrues once the buffer drains (after startup) and is
// charged to the next frame that starts playing. Play events are recorded
// into `log` when given.
void advance_playback(PlayerState& state, double elapsed, SimulationLog* log = nullptr);

// Waits for the frame's CDN arrival if needed, then transfers it across the
// piecewise-constant bandwidth. Playback runs concurrently. Returns the
// active transfer time (idle wait excluded).
double download_frame(PlayerState& state, long frame, int level, const NetworkTrace& net,
                      SimulationLog* log = nullptr);

// Replays the network trace against the video trace under the given
// controller. Deterministic; every frame ends up played or skipped exactly
// once and the buffer fully drains before the run ends.
SimulationLog run(const VideoTrace& video, const NetworkTrace& net, const SchemeConfig& cfg,
                  Controller& controller);

} // namespace hysa

#endif
