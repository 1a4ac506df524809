#ifndef HYSA_PREDICTOR_HPP
#define HYSA_PREDICTOR_HPP

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "hysa/trace.hpp"

namespace hysa {

// Cross-level scaling: from the actual bitrate observed at the downloaded
// level, estimate the actual bitrate of every level via the coding-bitrate
// ratios. Element `downloaded_level` equals the observation exactly.
std::vector<double> scale_actual_bitrates(const BitrateLadder& ladder, int downloaded_level,
                                          double observed_bps);

// Net change over path length of a window of n1+1 samples, in [0, 1].
// A flat window (zero path length) maps to 1.
double efficiency_ratio(std::span<const double> history);

double sc_slowest(int l_max);
double sc_fastest(int l_min);

// Adaptive smoothing factor, squared interpolation between the EMA boundaries.
double smoothing_factor(double er, int l_max, int l_min);

// Single-level KAMA state: current prediction plus a ring of the most recent
// n1+1 samples.
struct KamaState {
  double prediction = 0;
  std::deque<double> history;
  int l_max = 30;
  int l_min = 2;
  int n1 = 10;
};

// Pushes a sample and folds it into the prediction. Until the history holds
// n1+1 samples the smoothing factor pins to sc_fastest^2.
double kama_update(KamaState& state, double sample);

// One KamaState per ladder level. Predictions start at the coding bitrates;
// each observation is scaled to all levels so every level sees a full sample
// stream.
class KamaPredictor {
 public:
  KamaPredictor(const BitrateLadder& ladder, int l_max, int l_min, int n1);

  void observe(int downloaded_level, double actual_bitrate_bps);
  const std::vector<double>& predictions_bps() const { return predictions_; }

 private:
  BitrateLadder ladder_;
  std::vector<KamaState> levels_;
  std::vector<double> predictions_;
};

// Weighted moving average over the last `window` per-segment throughputs,
// weights rising linearly toward the newest sample.
class ThroughputEstimator {
 public:
  explicit ThroughputEstimator(int window);

  void add(double throughput_bps);
  std::optional<double> estimate_bps() const; // nullopt before the first sample

 private:
  int window_;
  std::deque<double> samples_;
};

// |predicted - actual| / actual
double prediction_error(double predicted, double actual);

} // namespace hysa

#endif
