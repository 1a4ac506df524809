#include "hysa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hysa/playback.hpp"

namespace hysa {

double PlayerState::buffer_s() const {
  return static_cast<double>(play_queue.size()) * video->frame_duration_s - frame_progress_s;
}

double PlayerState::playhead_media_s() const {
  const double d_f = video->frame_duration_s;
  if (!play_queue.empty())
    return static_cast<double>(play_queue.front()) * d_f + frame_progress_s;
  return static_cast<double>(next_download) * d_f;
}

long live_edge_frame(const VideoTrace& video, double t) {
  auto it = std::upper_bound(video.frames.begin(), video.frames.end(), t,
                             [](double v, const FrameRecord& f) { return v < f.arrival_time_s; });
  return static_cast<long>(it - video.frames.begin()) - 1;
}

double current_latency(const PlayerState& state) {
  const double d_f = state.video->frame_duration_s;
  double live_media = static_cast<double>(live_edge_frame(*state.video, state.t) + 1) * d_f;
  return std::max(live_media - state.playhead_media_s(), 0.0);
}

void advance_playback(PlayerState& state, double elapsed, SimulationLog* log) {
  if (elapsed < 0) throw std::invalid_argument("elapsed must be >= 0");
  const double d_f = state.video->frame_duration_s;
  double rem = elapsed;
  while (rem > 0) {
    if (!state.started) { // startup wait: clock moves, nothing plays, no rebuffer charged
      state.t += rem;
      return;
    }
    if (state.play_queue.empty()) state.stalled = true;
    if (state.stalled) {
      state.t += rem;
      state.pending_rebuf_s += rem;
      state.total_rebuf_s += rem;
      return;
    }
    long frame = state.play_queue.front();
    if (!state.front_started) {
      state.front_started = true;
      if (log) {
        auto& rec = log->frames[frame];
        rec.latency_s = current_latency(state);
        rec.rebuf_s = state.pending_rebuf_s;
      }
      state.pending_rebuf_s = 0;
    }
    double media_left = d_f - state.frame_progress_s;
    double dt_needed = media_left / state.gamma;
    double dt = std::min(rem, dt_needed);
    state.t += dt;
    rem -= dt;
    if (dt == dt_needed) {
      state.play_queue.pop_front();
      state.frame_progress_s = 0;
      state.front_started = false;
      state.played_s += d_f;
    } else {
      state.frame_progress_s += dt * state.gamma;
    }
  }
}

double download_frame(PlayerState& state, long frame, int level, const NetworkTrace& net,
                      SimulationLog* log) {
  const auto& rec = state.video->frames[frame];
  if (rec.arrival_time_s > state.t)
    advance_playback(state, rec.arrival_time_s - state.t, log); // CDN idle wait
  double dl_start = state.t;
  double duration = transfer_time(net, state.t, static_cast<double>(rec.sizes_bits[level]));
  advance_playback(state, duration, log);
  state.play_queue.push_back(frame);
  state.downloaded_s += state.video->frame_duration_s;
  state.next_download = frame + 1;
  if (!state.started && state.buffer_s() >= state.resume_threshold_s) state.started = true;
  if (state.stalled && state.buffer_s() >= state.resume_threshold_s) state.stalled = false;
  if (log) {
    auto& f = log->frames[frame];
    f.frame = frame;
    f.level = level;
    f.dl_start_s = dl_start;
    f.dl_end_s = state.t;
    f.buffer_s = state.buffer_s();
  }
  return duration;
}

SimulationLog run(const VideoTrace& video, const NetworkTrace& net, const SchemeConfig& cfg,
                  Controller& controller) {
  video.validate();
  net.validate();
  cfg.validate();
  const int fpg = video.frames_per_gop();
  const long total_frames = video.frame_count();
  const double d_f = video.frame_duration_s;
  const int levels = video.ladder.count();

  SimulationLog log;
  log.frame_duration_s = d_f;
  log.ladder_bps = video.ladder.levels_bps;
  log.frames.resize(total_frames);
  for (long i = 0; i < total_frames; ++i) log.frames[i].frame = i;

  PlayerState state;
  state.video = &video;

  auto apply_decision = [&](const ControllerDecision& dec) {
    if (dec.quality < 0 || dec.quality >= levels)
      throw std::runtime_error("controller returned out-of-range quality level " +
                               std::to_string(dec.quality));
    auto pb = decide_playback(cfg.bands, state.buffer_s());
    state.gamma = pb.gamma;
    state.resume_threshold_s =
        dec.target_buffer == 1 ? cfg.bands.b_target1 : cfg.bands.b_target0;
    state.quality = dec.quality;
    state.latency_limit_s = dec.latency_limit_s;
    log.segments.push_back({state.next_download / fpg, dec.quality, dec.target_buffer,
                            dec.latency_limit_s, dec.pred_bitrate_bps, dec.est_download_s,
                            dec.est_latency_s});
  };

  ControllerDecision decision = controller.decide(std::nullopt);
  apply_decision(decision);

  while (state.next_download < total_frames) {
    // frame skipping executes at GOP boundaries only
    if (state.started && current_latency(state) > state.latency_limit_s) {
      long live = live_edge_frame(video, state.t);
      long target = (live / fpg) * fpg; // start of the newest CDN GOP
      if (target > state.next_download) {
        for (long i = state.next_download; i < target; ++i) {
          auto& f = log.frames[i];
          f.level = -1;
          f.dl_start_s = f.dl_end_s = state.t;
          f.skipped = true;
        }
        state.skipped_s += static_cast<double>(target - state.next_download) * d_f;
        state.next_download = target;
        ++log.skip_events;
      }
    }

    long segment = state.next_download / fpg;
    double active_s = 0;
    double bits = 0;
    for (long i = segment * fpg; i < (segment + 1) * fpg; ++i) {
      active_s += download_frame(state, i, state.quality, net, &log);
      bits += static_cast<double>(video.frames[i].sizes_bits[state.quality]);
    }

    Observation obs;
    obs.segment = segment;
    obs.level = state.quality;
    obs.actual_bitrate_bps = bits / video.gop_duration_s;
    obs.measured_throughput_bps = active_s > 0 ? bits / active_s : 1e15;
    obs.buffer_s = state.buffer_s();
    obs.latency_s = current_latency(state);
    obs.n_nst = live_edge_frame(video, state.t);
    obs.n_dld = state.next_download - 1;
    obs.download_time_s = active_s;
    log.predictions.emplace_back(decision.pred_bitrate_bps, obs.actual_bitrate_bps);

    if (state.next_download < total_frames) {
      decision = controller.decide(obs);
      apply_decision(decision);
    }
  }

  // play out whatever is buffered; a pending stall cannot resolve anymore
  if (!state.started) state.started = true;
  state.stalled = false;
  while (!state.play_queue.empty()) {
    advance_playback(state, (d_f - state.frame_progress_s) / state.gamma, &log);
    state.stalled = false;
  }

  log.played_s = state.played_s;
  log.skipped_s = state.skipped_s;
  log.downloaded_s = state.downloaded_s;
  log.final_buffer_s = state.buffer_s();
  log.wall_time_s = state.t;
  log.total_rebuf_s = state.total_rebuf_s;
  for (const auto& f : log.frames)
    if (!f.skipped && f.rebuf_s > 0) ++log.stall_events;
  return log;
}

} // namespace hysa
