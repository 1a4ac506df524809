#ifndef HYSA_CONTROLLERS_HPP
#define HYSA_CONTROLLERS_HPP

#include <memory>
#include <string>

#include "hysa/bitrate.hpp"
#include "hysa/predictor.hpp"
#include "hysa/simulator.hpp"

namespace hysa {

// The hybrid scheme: KAMA segment-bitrate prediction, buffer-driven playback
// decision, latency-minimizing quality selection and adaptive skip threshold.
// With use_prediction = false the coding bitrates stand in for the predictions
// (the HYSA-N ablation); everything else is unchanged.
class HysaController : public Controller {
 public:
  HysaController(const SchemeConfig& cfg, bool use_prediction);
  ControllerDecision decide(const std::optional<Observation>& obs) override;

 private:
  SchemeConfig cfg_;
  bool use_prediction_;
  KamaPredictor predictor_;
  ThroughputEstimator throughput_;
  CdnState cdn_;
  bool have_history_ = false;
};

// Short-horizon baseline: enumerates level sequences over the next H segments
// using coding bitrates and the WMA throughput, scores the quality, rebuffer
// and switch terms of each, and takes the first level of the best sequence.
// Playback and frame-drop decisions are shared with HYSA.
class LookaheadController : public Controller {
 public:
  explicit LookaheadController(const SchemeConfig& cfg);
  ControllerDecision decide(const std::optional<Observation>& obs) override;

 private:
  SchemeConfig cfg_;
  ThroughputEstimator throughput_;
};

// Dynamic-threshold baseline: level m requires buffer >= scale * V_m * d / C,
// i.e. thresholds stretch as throughput drops; picks the highest level whose
// threshold the current buffer clears.
class BufferThresholdController : public Controller {
 public:
  explicit BufferThresholdController(const SchemeConfig& cfg);
  ControllerDecision decide(const std::optional<Observation>& obs) override;

 private:
  SchemeConfig cfg_;
  ThroughputEstimator throughput_;
};

class FixedController : public Controller {
 public:
  FixedController(const SchemeConfig& cfg, int level);
  ControllerDecision decide(const std::optional<Observation>& obs) override;

 private:
  SchemeConfig cfg_;
  int level_;
};

// Scheme names: HYSA, HYSA-N, LOOKAHEAD, BUFFER-THRESHOLD, FIXED(<level>).
std::unique_ptr<Controller> make_controller(const std::string& scheme, const SchemeConfig& cfg);

} // namespace hysa

#endif
