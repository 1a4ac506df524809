#include "hysa/controllers.hpp"

#include <cmath>
#include <stdexcept>

#include "hysa/framedrop.hpp"
#include "hysa/playback.hpp"

namespace hysa {

namespace {

ControllerDecision first_segment_decision(const SchemeConfig& cfg) {
  // cold start: lowest level, playback decision at empty buffer
  auto pb = decide_playback(cfg.bands, 0.0);
  ControllerDecision dec;
  dec.quality = 0;
  dec.target_buffer = pb.target_buffer;
  dec.latency_limit_s =
      compute_skip_threshold(cfg.ladder.levels_bps[0], cfg.frame_duration_s, cfg.weights,
                             cfg.skip_lambda);
  dec.pred_bitrate_bps = cfg.ladder.levels_bps[0];
  return dec;
}

} // namespace

HysaController::HysaController(const SchemeConfig& cfg, bool use_prediction)
    : cfg_(cfg),
      use_prediction_(use_prediction),
      predictor_(cfg.ladder, cfg.kama_l_max, cfg.kama_l_min, cfg.kama_n1),
      throughput_(cfg.wma_window) {
  cfg_.validate();
}

ControllerDecision HysaController::decide(const std::optional<Observation>& obs) {
  if (!obs) return first_segment_decision(cfg_);

  CdnState next;
  next.n_nst = obs->n_nst;
  next.n_dld = obs->n_dld;
  if (have_history_) {
    next.n_nst_prev = cdn_.n_nst;
    next.last_download_s = obs->download_time_s;
    next.prev_speed = cdn_accumulation_speed(cdn_, 1.0, cfg_.frame_duration_s);
  } else {
    // no previous segment: assume the source generates in real time
    next.n_nst_prev = obs->n_nst;
    next.last_download_s = 0;
    next.prev_speed = 1.0;
  }
  cdn_ = next;
  have_history_ = true;

  predictor_.observe(obs->level, obs->actual_bitrate_bps);
  throughput_.add(obs->measured_throughput_bps);

  auto pb = decide_playback(cfg_.bands, obs->buffer_s);
  const std::vector<double>& preds =
      use_prediction_ ? predictor_.predictions_bps() : cfg_.ladder.levels_bps;
  double c_hat = *throughput_.estimate_bps();
  auto choice = select_quality(preds, c_hat, obs->buffer_s, pb.gamma, cdn_,
                               cfg_.stall_threshold(), cfg_.beta, cfg_.frame_duration_s,
                               cfg_.gop_duration_s);

  ControllerDecision dec;
  dec.quality = choice.level;
  dec.target_buffer = pb.target_buffer;
  dec.latency_limit_s =
      compute_skip_threshold(cfg_.ladder.levels_bps[choice.level], cfg_.frame_duration_s,
                             cfg_.weights, cfg_.skip_lambda);
  dec.pred_bitrate_bps = preds[choice.level];
  dec.est_download_s = choice.est_download_s;
  dec.est_latency_s = choice.est_latency_s;
  return dec;
}

LookaheadController::LookaheadController(const SchemeConfig& cfg)
    : cfg_(cfg), throughput_(cfg.wma_window) {
  cfg_.validate();
}

ControllerDecision LookaheadController::decide(const std::optional<Observation>& obs) {
  if (!obs) return first_segment_decision(cfg_);
  throughput_.add(obs->measured_throughput_bps);
  double c_hat = *throughput_.estimate_bps();
  auto pb = decide_playback(cfg_.bands, obs->buffer_s);

  const auto& ladder = cfg_.ladder.levels_bps;
  const int m = static_cast<int>(ladder.size());
  const int horizon = cfg_.lookahead_horizon;
  const double d = cfg_.gop_duration_s;
  const auto& w = cfg_.weights;

  std::vector<int> seq(horizon, 0);
  double best_score = 0;
  int best_first = -1;
  for (;;) {
    double buffer = obs->buffer_s;
    double prev = ladder[obs->level];
    double score = 0;
    for (int i = 0; i < horizon; ++i) {
      double v = ladder[seq[i]];
      double t = v * d / c_hat;
      double stall = std::max(t - buffer / pb.gamma, 0.0);
      buffer = std::max(buffer - pb.gamma * t, 0.0) + d;
      score += w.p_q * v * 1e-3 * d - w.p_r * stall - w.p_w * std::abs(v - prev) * 1e-3;
      prev = v;
    }
    if (best_first < 0 || score > best_score ||
        (score == best_score && seq[0] > best_first)) {
      best_score = score;
      best_first = seq[0];
    }
    int i = 0;
    while (i < horizon && ++seq[i] == m) seq[i++] = 0;
    if (i == horizon) break;
  }

  ControllerDecision dec;
  dec.quality = best_first;
  dec.target_buffer = pb.target_buffer;
  dec.latency_limit_s = compute_skip_threshold(ladder[best_first], cfg_.frame_duration_s,
                                               cfg_.weights, cfg_.skip_lambda);
  dec.pred_bitrate_bps = ladder[best_first];
  dec.est_download_s = ladder[best_first] * d / c_hat;
  return dec;
}

BufferThresholdController::BufferThresholdController(const SchemeConfig& cfg)
    : cfg_(cfg), throughput_(cfg.wma_window) {
  cfg_.validate();
}

ControllerDecision BufferThresholdController::decide(const std::optional<Observation>& obs) {
  if (!obs) return first_segment_decision(cfg_);
  throughput_.add(obs->measured_throughput_bps);
  double c_hat = *throughput_.estimate_bps();
  auto pb = decide_playback(cfg_.bands, obs->buffer_s);

  const auto& ladder = cfg_.ladder.levels_bps;
  int level = 0;
  for (int i = static_cast<int>(ladder.size()) - 1; i >= 1; --i) {
    double threshold = cfg_.buffer_threshold_scale * ladder[i] * cfg_.gop_duration_s / c_hat;
    if (obs->buffer_s >= threshold) {
      level = i;
      break;
    }
  }

  ControllerDecision dec;
  dec.quality = level;
  dec.target_buffer = pb.target_buffer;
  dec.latency_limit_s = compute_skip_threshold(ladder[level], cfg_.frame_duration_s,
                                               cfg_.weights, cfg_.skip_lambda);
  dec.pred_bitrate_bps = ladder[level];
  dec.est_download_s = ladder[level] * cfg_.gop_duration_s / c_hat;
  return dec;
}

FixedController::FixedController(const SchemeConfig& cfg, int level) : cfg_(cfg), level_(level) {
  cfg_.validate();
  if (level < 0 || level >= cfg_.ladder.count())
    throw std::invalid_argument("fixed level out of range");
}

ControllerDecision FixedController::decide(const std::optional<Observation>& obs) {
  auto pb = decide_playback(cfg_.bands, obs ? obs->buffer_s : 0.0);
  ControllerDecision dec;
  dec.quality = level_;
  dec.target_buffer = pb.target_buffer;
  dec.latency_limit_s = compute_skip_threshold(cfg_.ladder.levels_bps[level_],
                                               cfg_.frame_duration_s, cfg_.weights,
                                               cfg_.skip_lambda);
  dec.pred_bitrate_bps = cfg_.ladder.levels_bps[level_];
  return dec;
}

std::unique_ptr<Controller> make_controller(const std::string& scheme, const SchemeConfig& cfg) {
  if (scheme == "HYSA") return std::make_unique<HysaController>(cfg, true);
  if (scheme == "HYSA-N") return std::make_unique<HysaController>(cfg, false);
  if (scheme == "LOOKAHEAD") return std::make_unique<LookaheadController>(cfg);
  if (scheme == "BUFFER-THRESHOLD") return std::make_unique<BufferThresholdController>(cfg);
  if (scheme.rfind("FIXED(", 0) == 0 && scheme.back() == ')') {
    int level = std::stoi(scheme.substr(6, scheme.size() - 7));
    return std::make_unique<FixedController>(cfg, level);
  }
  throw std::runtime_error("unknown scheme '" + scheme + "'");
}

} // namespace hysa
