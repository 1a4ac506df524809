#include "hysa/bitrate.hpp"

#include <algorithm>
#include <stdexcept>

namespace hysa {

double estimate_download_time(double pred_bitrate_bps, double gop_duration_s,
                              double throughput_bps) {
  if (pred_bitrate_bps <= 0 || gop_duration_s <= 0 || throughput_bps <= 0)
    throw std::invalid_argument("download-time inputs must be positive");
  return pred_bitrate_bps * gop_duration_s / throughput_bps;
}

double estimate_buffer_after(double buffer_s, double gop_duration_s, double gamma,
                             double download_s) {
  if (buffer_s < 0 || gop_duration_s < 0 || gamma < 0 || download_s < 0)
    throw std::invalid_argument("buffer-estimate inputs must be >= 0");
  return std::max(buffer_s + gop_duration_s - gamma * download_s, 0.0);
}

double cdn_accumulation_speed(const CdnState& state, double beta, double frame_duration_s) {
  double v = state.last_download_s > 0
                 ? static_cast<double>(state.n_nst - state.n_nst_prev) * frame_duration_s /
                       state.last_download_s
                 : state.prev_speed;
  return beta * v;
}

double estimate_cdn_latency(const CdnState& state, double beta, double frame_duration_s,
                            double download_s, double gop_duration_s) {
  double v_hat = cdn_accumulation_speed(state, beta, frame_duration_s);
  double backlog = static_cast<double>(state.n_nst - state.n_dld) * frame_duration_s;
  return std::max(backlog + v_hat * download_s - gop_duration_s, 0.0);
}

QualityChoice select_quality(std::span<const double> predictions_bps, double throughput_bps,
                             double buffer_s, double gamma, const CdnState& state,
                             double stall_threshold_s, double beta, double frame_duration_s,
                             double gop_duration_s) {
  if (predictions_bps.empty()) throw std::invalid_argument("need at least one quality level");
  QualityChoice best;
  bool have_feasible = false;
  for (int m = 0; m < static_cast<int>(predictions_bps.size()); ++m) {
    double t = estimate_download_time(predictions_bps[m], gop_duration_s, throughput_bps);
    double b = estimate_buffer_after(buffer_s, gop_duration_s, gamma, t);
    double d_cdn = estimate_cdn_latency(state, beta, frame_duration_s, t, gop_duration_s);
    double d = b + d_cdn;
    if (b <= stall_threshold_s) continue;
    if (!have_feasible || d <= best.est_latency_s) {
      // <= keeps the highest level among ties
      best = {m, t, b, d, true};
      have_feasible = true;
    }
  }
  if (!have_feasible) {
    double t = estimate_download_time(predictions_bps[0], gop_duration_s, throughput_bps);
    double b = estimate_buffer_after(buffer_s, gop_duration_s, gamma, t);
    double d_cdn = estimate_cdn_latency(state, beta, frame_duration_s, t, gop_duration_s);
    best = {0, t, b, b + d_cdn, false};
  }
  return best;
}

} // namespace hysa
