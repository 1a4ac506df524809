#ifndef HYSA_HARNESS_HPP
#define HYSA_HARNESS_HPP

#include <span>
#include <string>
#include <vector>

#include "hysa/controllers.hpp"
#include "hysa/qoe.hpp"

namespace hysa {

struct NamedVideo {
  std::string name;
  VideoTrace trace;
};

struct NamedNetwork {
  std::string name;
  NetworkTrace trace;
};

struct RunSummary {
  std::string video;
  std::string network;
  std::string scheme;
  QoeBreakdown qoe;
  double pred_error = 0; // mean relative prediction error over segments
  long stalls = 0;
  long skips = 0;
};

RunSummary summarize_run(const std::string& video_name, const std::string& network_name,
                         const std::string& scheme, const SimulationLog& log,
                         const QoeWeights& weights);

// One run per (video, network, scheme) triple, in that nesting order.
std::vector<RunSummary> run_matrix(std::span<const NamedVideo> videos,
                                   std::span<const NamedNetwork> networks,
                                   std::span<const std::string> schemes,
                                   const SchemeConfig& cfg);

// Empirical CDF: one row per distinct value, cumulative fraction ending at 1.
std::vector<std::pair<double, double>> emit_cdf(std::span<const double> values);

std::string summary_csv(std::span<const RunSummary> summaries);
std::string cdf_csv(std::span<const std::pair<double, double>> cdf, const std::string& metric);

// Metric columns of summary.csv that a CDF can be emitted over.
std::vector<std::string> summary_metrics();
double summary_metric(const RunSummary& s, const std::string& metric);

struct PredictionErrors {
  double kama = 0;   // mean error of KAMA-predicted actual bitrates
  double coding = 0; // mean error of using coding bitrates as the prediction
};

// Walks the trace GOP by GOP (downloaded level rotating through the ladder),
// feeds the predictor and measures the relative error of next-segment
// predictions over all segments and all levels.
PredictionErrors prediction_experiment(const VideoTrace& video, const SchemeConfig& cfg);

} // namespace hysa

#endif
