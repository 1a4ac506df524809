#ifndef HYSA_BITRATE_HPP
#define HYSA_BITRATE_HPP

#include <span>

namespace hysa {

// CDN-side observations after downloading segment n.
struct CdnState {
  long n_nst = 0;        // index of the latest frame at the CDN after segment n
  long n_nst_prev = 0;   // same, after segment n-1
  long n_dld = 0;        // index of the most recently downloaded frame
  double last_download_s = 0; // T_n, download-active time of segment n
  double prev_speed = 1.0;    // fallback accumulation speed when T_n == 0
};

// T_{n+1} = R_hat * d / C_hat
double estimate_download_time(double pred_bitrate_bps, double gop_duration_s,
                              double throughput_bps);

// B_{n+1} = max(B_n + d - gamma * T_{n+1}, 0)
double estimate_buffer_after(double buffer_s, double gop_duration_s, double gamma,
                             double download_s);

// v_hat = beta * (n_nst - n_nst_prev) * d_f / T_n, falling back to prev_speed
// when the last download took no time.
double cdn_accumulation_speed(const CdnState& state, double beta, double frame_duration_s);

// D_cdn = max((n_nst - n_dld) * d_f + v_hat * T_{n+1} - d, 0)
double estimate_cdn_latency(const CdnState& state, double beta, double frame_duration_s,
                            double download_s, double gop_duration_s);

struct QualityChoice {
  int level = 0;
  double est_download_s = 0;
  double est_buffer_s = 0;
  double est_latency_s = 0; // D = B + D_cdn of the chosen level
  bool feasible = false;    // whether the stall constraint held for the choice
};

// Enumerates every level, estimates the post-download latency D = B + D_cdn,
// and returns the feasible (B > stall threshold) level with the lowest D,
// ties broken toward higher quality. Falls back to the lowest level when no
// level is feasible.
QualityChoice select_quality(std::span<const double> predictions_bps, double throughput_bps,
                             double buffer_s, double gamma, const CdnState& state,
                             double stall_threshold_s, double beta, double frame_duration_s,
                             double gop_duration_s);

} // namespace hysa

#endif
