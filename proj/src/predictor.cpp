#include "hysa/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hysa {

std::vector<double> scale_actual_bitrates(const BitrateLadder& ladder, int downloaded_level,
                                          double observed_bps) {
  if (downloaded_level < 0 || downloaded_level >= ladder.count())
    throw std::out_of_range("downloaded level out of range");
  if (observed_bps <= 0) throw std::invalid_argument("observed bitrate must be positive");
  std::vector<double> out(ladder.levels_bps.size());
  // ratio first: an observation equal to the coding bitrate scales exactly
  const double ratio = observed_bps / ladder.levels_bps[downloaded_level];
  for (size_t m = 0; m < out.size(); ++m) {
    out[m] = static_cast<int>(m) == downloaded_level ? observed_bps
                                                     : ladder.levels_bps[m] * ratio;
  }
  return out;
}

double efficiency_ratio(std::span<const double> history) {
  if (history.size() < 2) throw std::invalid_argument("efficiency ratio needs >= 2 samples");
  double net = std::abs(history.back() - history.front());
  double path = 0;
  for (size_t i = 1; i < history.size(); ++i) path += std::abs(history[i] - history[i - 1]);
  if (path == 0) return 1.0;
  return std::min(net / path, 1.0); // guard rounding in the path sum
}

double sc_slowest(int l_max) { return 2.0 / (l_max + 1); }
double sc_fastest(int l_min) { return 2.0 / (l_min + 1); }

double smoothing_factor(double er, int l_max, int l_min) {
  double lo = sc_slowest(l_max);
  double hi = sc_fastest(l_min);
  double sc = std::clamp(er * hi + (1.0 - er) * lo, lo, hi);
  return sc * sc;
}

double kama_update(KamaState& state, double sample) {
  state.history.push_back(sample);
  while (state.history.size() > static_cast<size_t>(state.n1 + 1)) state.history.pop_front();
  double sc;
  if (state.history.size() == static_cast<size_t>(state.n1 + 1)) {
    std::vector<double> window(state.history.begin(), state.history.end());
    sc = smoothing_factor(efficiency_ratio(window), state.l_max, state.l_min);
  } else {
    double fast = sc_fastest(state.l_min);
    sc = fast * fast;
  }
  state.prediction = (1.0 - sc) * state.prediction + sc * sample;
  return state.prediction;
}

KamaPredictor::KamaPredictor(const BitrateLadder& ladder, int l_max, int l_min, int n1)
    : ladder_(ladder) {
  ladder_.validate();
  for (double v : ladder_.levels_bps) {
    KamaState s;
    s.prediction = v;
    s.l_max = l_max;
    s.l_min = l_min;
    s.n1 = n1;
    levels_.push_back(std::move(s));
    predictions_.push_back(v);
  }
}

void KamaPredictor::observe(int downloaded_level, double actual_bitrate_bps) {
  auto scaled = scale_actual_bitrates(ladder_, downloaded_level, actual_bitrate_bps);
  for (size_t m = 0; m < levels_.size(); ++m)
    predictions_[m] = kama_update(levels_[m], scaled[m]);
}

ThroughputEstimator::ThroughputEstimator(int window) : window_(window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
}

void ThroughputEstimator::add(double throughput_bps) {
  if (throughput_bps <= 0) throw std::invalid_argument("throughput must be positive");
  samples_.push_back(throughput_bps);
  while (samples_.size() > static_cast<size_t>(window_)) samples_.pop_front();
}

std::optional<double> ThroughputEstimator::estimate_bps() const {
  if (samples_.empty()) return std::nullopt;
  double num = 0, den = 0;
  for (size_t i = 0; i < samples_.size(); ++i) {
    double w = static_cast<double>(i + 1);
    num += w * samples_[i];
    den += w;
  }
  return num / den;
}

double prediction_error(double predicted, double actual) {
  if (actual <= 0) throw std::invalid_argument("actual bitrate must be positive");
  return std::abs(predicted - actual) / actual;
}

} // namespace hysa
